#pragma once

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>

#include "symrange/norms.hpp"
#include "symrange/operators.hpp"
#include "symrange/optrange.hpp"
#include "symrange/report.hpp"
#include "symrange/sequence.hpp"

namespace symrange {

/// Raised for malformed input documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequence documents:
///   {"domain": "half_line"|"line", "kind": "finite", "offset": int, "values": [...]}
///   {"kind": "power_log", "alpha": a, "beta": b}
/// "domain" defaults to "half_line".  power_log documents also accept
/// "scale" (default 1) and "head" (explicit leading values).  Unknown fields
/// are rejected.
Sequence sequence_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Sequence& x);

/// {"space": "lp"|"weak_l1"|"llog"|"lorentz_phi"|"m1inf"|"sum_weakl1_linf",
///  "p": real (lp only), "phi": "log1p" | {"power": theta} (lorentz_phi only)}
SpaceSpec space_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SpaceSpec& s);

nlohmann::ordered_json to_json(const NormValue& v);
nlohmann::ordered_json to_json(const DominationCertificate& c);
/// {"upper": real, "lower": real|null, "witness": {...}}
nlohmann::ordered_json to_json(const FNormEstimate& e);
nlohmann::ordered_json to_json(const OperatorOutput& o);

nlohmann::json read_json_file(const std::filesystem::path& path);

/// 17 significant digits ("%.17g"); non-finite values as inf, -inf, nan.
std::string format_double(double v);

/// index,value,tail_halfwidth
void emit_csv(const OperatorOutput& out, std::ostream& os);
/// suite,name,status,observed_constant,detail,witness
void emit_csv(const VerificationReport& report, std::ostream& os);
/// File variants; I/O failures raise std::runtime_error naming the path.
void emit_csv(const OperatorOutput& out, const std::filesystem::path& path);
void emit_csv(const VerificationReport& report, const std::filesystem::path& path);

}  // namespace symrange
