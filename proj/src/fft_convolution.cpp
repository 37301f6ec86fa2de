#include "fft_convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <new>
#include <stdexcept>
#include <string>

namespace symrange::detail {

namespace {

// The FFTW planner is not thread safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(Index n) {
  void* p = fftw_malloc(sizeof(T) * static_cast<std::size_t>(n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(static_cast<T*>(p));
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::runtime_error("FFTW plan creation failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

Index transform_length(Index n) {
  Index p = 1;
  while (p < n) {
    p <<= 1;
    if (p > kMaxTransformLength) break;
  }
  if (p > kMaxTransformLength) {
    throw std::length_error("convolution needs a transform of length >= " + std::to_string(n) +
                            ", above the limit " + std::to_string(kMaxTransformLength));
  }
  return p;
}

std::vector<double> linear_convolution_segment(std::span<const double> a, std::span<const double> g, Index first,
                                               Index count) {
  std::vector<double> out(static_cast<std::size_t>(std::max<Index>(count, 0)), 0.0);
  if (a.empty() || g.empty() || count <= 0) return out;
  const Index na = static_cast<Index>(a.size());
  const Index ng = static_cast<Index>(g.size());
  const Index p = transform_length(na + ng);
  const Index nc = p / 2 + 1;

  auto ra = fftw_buffer<double>(p);
  auto rg = fftw_buffer<double>(p);
  auto ca = fftw_buffer<fftw_complex>(nc);
  auto cg = fftw_buffer<fftw_complex>(nc);

  std::unique_ptr<Plan> fa, fg, back;
  {
    std::lock_guard lock(planner_mutex());
    const int n = static_cast<int>(p);
    fa = std::make_unique<Plan>(fftw_plan_dft_r2c_1d(n, ra.get(), ca.get(), FFTW_ESTIMATE));
    fg = std::make_unique<Plan>(fftw_plan_dft_r2c_1d(n, rg.get(), cg.get(), FFTW_ESTIMATE));
    back = std::make_unique<Plan>(fftw_plan_dft_c2r_1d(n, ca.get(), ra.get(), FFTW_ESTIMATE));
  }

  std::fill(ra.get(), ra.get() + p, 0.0);
  std::fill(rg.get(), rg.get() + p, 0.0);
  std::copy(a.begin(), a.end(), ra.get());
  std::copy(g.begin(), g.end(), rg.get());
  fa->execute();
  fg->execute();
  for (Index i = 0; i < nc; ++i) {
    const double re = ca[i][0] * cg[i][0] - ca[i][1] * cg[i][1];
    const double im = ca[i][0] * cg[i][1] + ca[i][1] * cg[i][0];
    ca[i][0] = re;
    ca[i][1] = im;
  }
  back->execute();

  const double inv = 1.0 / static_cast<double>(p);
  const Index linear_len = na + ng - 1;
  for (Index i = 0; i < count; ++i) {
    const Index j = first + i;
    if (j >= 0 && j < linear_len) out[static_cast<std::size_t>(i)] = ra[j] * inv;
  }
  return out;
}

}  // namespace symrange::detail
