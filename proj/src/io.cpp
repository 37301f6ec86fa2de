#include "symrange/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>

namespace symrange {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw FormatError(std::string("unknown field '") + key + "' in " + what);
  }
}

const json& require(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "' in " + what);
  return *it;
}

double number(const json& j, const char* key) {
  if (!j.is_number()) throw FormatError(std::string("field '") + key + "' must be a number");
  return j.get<double>();
}

std::vector<double> number_list(const json& j, const char* key) {
  if (!j.is_array()) throw FormatError(std::string("field '") + key + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(number(e, key));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
void emit_to_file(const T& value, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  emit_csv(value, f);
  f.flush();
  if (!f) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace

Sequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("sequence document must be a JSON object");
  const auto& kind = require(j, "kind", "sequence");
  if (!kind.is_string()) throw FormatError("field 'kind' must be a string");
  IndexDomain domain = IndexDomain::HalfLine;
  if (auto it = j.find("domain"); it != j.end()) {
    if (*it == "half_line") {
      domain = IndexDomain::HalfLine;
    } else if (*it == "line") {
      domain = IndexDomain::Line;
    } else {
      throw FormatError("field 'domain' must be \"half_line\" or \"line\"");
    }
  }
  if (kind == "finite") {
    reject_unknown(j, {"domain", "kind", "offset", "values"}, "finite sequence");
    const auto& off = require(j, "offset", "finite sequence");
    if (!off.is_number_integer()) throw FormatError("field 'offset' must be an integer");
    try {
      return Sequence::finite(number_list(require(j, "values", "finite sequence"), "values"), off.get<Index>(),
                              domain);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (kind == "power_log") {
    reject_unknown(j, {"domain", "kind", "alpha", "beta", "scale", "head"}, "power_log sequence");
    if (domain != IndexDomain::HalfLine) throw FormatError("power_log sequences live on the half line");
    PowerLog g;
    g.alpha = number(require(j, "alpha", "power_log sequence"), "alpha");
    g.beta = number(require(j, "beta", "power_log sequence"), "beta");
    if (auto it = j.find("scale"); it != j.end()) g.scale = number(*it, "scale");
    std::vector<double> head;
    if (auto it = j.find("head"); it != j.end()) head = number_list(*it, "head");
    try {
      return Sequence::analytic(std::move(head), g);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("field 'kind' must be \"finite\" or \"power_log\"");
}

ordered_json to_json(const Sequence& x) {
  ordered_json j;
  if (x.is_finite()) {
    j["domain"] = x.domain() == IndexDomain::Line ? "line" : "half_line";
    j["kind"] = "finite";
    j["offset"] = x.finite_body().offset;
    auto& v = j["values"] = ordered_json::array();
    for (double e : x.finite_body().values) v.push_back(e);
    return j;
  }
  const auto& a = x.analytic_body();
  j["kind"] = "power_log";
  j["alpha"] = a.tail.alpha;
  j["beta"] = a.tail.beta;
  if (a.tail.scale != 1.0) j["scale"] = a.tail.scale;
  if (!a.head.empty()) j["head"] = a.head;
  return j;
}

SpaceSpec space_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("space document must be a JSON object");
  reject_unknown(j, {"space", "p", "phi"}, "space");
  const auto& name = require(j, "space", "space");
  if (!name.is_string()) throw FormatError("field 'space' must be a string");
  const auto forbid = [&](const char* key) {
    if (j.contains(key)) throw FormatError(std::string("field '") + key + "' does not apply to space " + name.get<std::string>());
  };
  try {
    if (name == "lp") {
      forbid("phi");
      return SpaceSpec::lp(number(require(j, "p", "lp space"), "p"));
    }
    forbid("p");
    if (name == "lorentz_phi") {
      const auto& phi = require(j, "phi", "lorentz_phi space");
      if (phi == "log1p") return SpaceSpec::lorentz(Log1pPhi{});
      if (phi.is_object()) {
        reject_unknown(phi, {"power"}, "phi");
        return SpaceSpec::lorentz(PowerPhi{number(require(phi, "power", "phi"), "power")});
      }
      throw FormatError("field 'phi' must be \"log1p\" or {\"power\": theta}");
    }
    forbid("phi");
    if (name == "weak_l1") return SpaceSpec::weak_l1();
    if (name == "llog") return SpaceSpec::llog();
    if (name == "m1inf") return SpaceSpec::marcinkiewicz();
    if (name == "sum_weakl1_linf") return SpaceSpec::sum_weak_l1_linf();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown space '" + name.get<std::string>() + "'");
}

ordered_json to_json(const SpaceSpec& s) {
  ordered_json j;
  switch (s.kind) {
    case SpaceKind::Lp:
      j["space"] = "lp";
      j["p"] = s.p;
      break;
    case SpaceKind::WeakL1: j["space"] = "weak_l1"; break;
    case SpaceKind::LLog: j["space"] = "llog"; break;
    case SpaceKind::LorentzPhi:
      j["space"] = "lorentz_phi";
      if (std::holds_alternative<Log1pPhi>(s.phi)) {
        j["phi"] = "log1p";
      } else {
        j["phi"] = {{"power", std::get<PowerPhi>(s.phi).theta}};
      }
      break;
    case SpaceKind::Marcinkiewicz1Inf: j["space"] = "m1inf"; break;
    case SpaceKind::SumWeakL1LInf: j["space"] = "sum_weakl1_linf"; break;
  }
  return j;
}

ordered_json to_json(const NormValue& v) {
  ordered_json j;
  j["value"] = json_number(v.value);
  j["tail_halfwidth"] = json_number(v.tail_halfwidth);
  j["window"] = v.window;
  return j;
}

ordered_json to_json(const DominationCertificate& c) {
  ordered_json j;
  j["x"] = to_json(c.x);
  j["y"] = to_json(c.y);
  j["window"] = c.window;
  j["window_verified"] = c.window_verified;
  j["tail_argument"] = to_string(c.tail_argument);
  j["verified"] = c.verified();
  j["first_violation"] = c.first_violation < 0 ? ordered_json() : ordered_json(c.first_violation);
  j["max_ratio"] = json_number(c.max_ratio);
  j["detail"] = c.detail;
  return j;
}

ordered_json to_json(const FNormEstimate& e) {
  ordered_json j;
  j["upper"] = json_number(e.upper);
  j["lower"] = e.lower ? json_number(*e.lower) : ordered_json();
  j["witness"] = to_json(e.witness);
  j["shape"] = e.shape;
  j["scale"] = json_number(e.scale);
  return j;
}

ordered_json to_json(const OperatorOutput& o) {
  ordered_json j;
  j["first_index"] = o.first_index;
  j["method"] = to_string(o.method);
  auto& v = j["values"] = ordered_json::array();
  for (double e : o.values) v.push_back(json_number(e));
  auto& h = j["tail_halfwidth"] = ordered_json::array();
  for (double e : o.tail_halfwidth) h.push_back(json_number(e));
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_csv(const OperatorOutput& out, std::ostream& os) {
  os << "index,value,tail_halfwidth\n";
  for (Index i = 0; i < out.size(); ++i) {
    os << out.first_index + i << ',' << format_double(out.values[static_cast<std::size_t>(i)]) << ','
       << format_double(out.tail_halfwidth[static_cast<std::size_t>(i)]) << '\n';
  }
}

void emit_csv(const VerificationReport& report, std::ostream& os) {
  os << "suite,name,status,observed_constant,detail,witness\n";
  for (const auto& c : report.cases) {
    os << csv_field(report.suite) << ',' << csv_field(c.name) << ',' << to_string(c.status) << ','
       << (c.observed_constant ? format_double(*c.observed_constant) : std::string()) << ','
       << csv_field(c.detail) << ',' << csv_field(c.witness) << '\n';
  }
}

void emit_csv(const OperatorOutput& out, const std::filesystem::path& path) { emit_to_file(out, path); }
void emit_csv(const VerificationReport& report, const std::filesystem::path& path) { emit_to_file(report, path); }

}  // namespace symrange
