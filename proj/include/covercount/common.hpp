#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace covercount {

using cplx = std::complex<double>;

// Default tolerances used across the numerical pipeline.
namespace tol {
inline constexpr double projective_eps = 1e-10; // cross-product modulus for projective equality
inline constexpr double incidence_eps = 1e-10;  // point-on-line residual
inline constexpr double cluster_eps = 1e-6;     // default root-cluster radius
inline constexpr double rank_eps = 1e-8;        // SVD rank threshold, relative to largest sigma
inline constexpr double on_branch_eps = 1e-8;   // |F(P)| below this * scale counts as "on B"
inline constexpr double track_residual = 1e-9;  // accepted-step residual bound
inline constexpr double chart_param_cap = 1e6;  // charts are redrawn past this parameter modulus
} // namespace tol

enum class errc {
  coincident_points,
  coincident_lines,
  point_off_line,
  root_finding_diverged,
  config_invalid,
  not_a_divisor,
  numerical_rank_ambiguous,
  line_inside_branch_divisor,
  degenerate_geometry,
  step_underflow,
  sheet_collision,
  monodromy_mismatch,
  intersection_on_branch_locus,
  matching_ambiguous,
  component_inside_branch,
  curve_minus_branch_disconnected,
  not_completely_split,
  method_disagreement,
  bad_input,
};

const char* errc_name(errc c);

// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Deterministic 64-bit generator. mt19937_64 is bit-specified by the standard,
// and the double conversion below avoids std::uniform_real_distribution, whose
// output is implementation-defined. Reports seeded through this class reproduce
// across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL) {}

  std::uint64_t next_u64() {
    // xorshift* keeps the generator self-contained and platform-stable.
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [-1, 1)
  double next_sym() { return 2.0 * next_unit() - 1.0; }

  // uniform on the closed complex unit disk, by rejection
  cplx next_unit_disk() {
    for (;;) {
      const double re = next_sym();
      const double im = next_sym();
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

private:
  std::uint64_t state_;
};

} // namespace covercount
