#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace isolab {

/// How ω(n) is chosen.
///  - LogLogR:    ω = ln ln r, the largest value the threshold functions allow.
///  - LogLogLogN: ω = ln ln ln n, the constant-d rule.
///  - Explicit:   caller-supplied value.
struct OmegaRule {
  enum class Kind { LogLogR, LogLogLogN, Explicit };
  Kind kind = Kind::LogLogR;
  double value = 0.0;  // Explicit only

  /// "loglogr", "logloglogn" or "explicit:<value>". Throws ConfigError.
  static OmegaRule parse(std::string_view text);
  std::string to_string() const;
};

/// Parameters of the minimum-degree threshold functions. All logs natural.
struct ThresholdParams {
  std::uint64_t n = 0;
  std::uint32_t d = 1;
  double omega = 0.0;

  /// ln(n) / d.
  double r() const;

  /// Validated construction: n >= 2, d >= 1, omega > 0, and when r > e also
  /// omega <= ln ln r. Throws DomainError.
  static ThresholdParams make(std::uint64_t n, std::uint32_t d, double omega);
  static ThresholdParams make(std::uint64_t n, std::uint32_t d, const OmegaRule& rule);
};

/// ln ln r, defined for r = ln(n)/d > e. Otherwise throws DomainError asking
/// for an explicit omega.
double default_omega(std::uint64_t n, std::uint32_t d);

/// ln ln ln n, defined for n > e^e.
double omega_logloglog(std::uint64_t n);

/// Edge count m_d below which min degree is still at most d-1:
/// round(N (ln n + (d-1) ln r - (2d + ω)) / n), clamped to [0, N].
/// Throws DomainError if the bracket is not positive.
std::uint64_t lower_threshold(const ThresholdParams& params);

/// Edge count M_d by which min degree has reached d:
/// round(N (ln n + (d-1) ln r + (2d + ω)) / n), clamped to [0, N].
std::uint64_t upper_threshold(const ThresholdParams& params);

/// Unrounded threshold values, before clamping.
double lower_threshold_real(const ThresholdParams& params);
double upper_threshold_real(const ThresholdParams& params);

/// (1 + 2ε) / (2ε - ln(1 + 2ε)): any C strictly above it makes
/// p = C ln(n)/n graphs have all bisection ratios below (1/2 + ε)δ w.h.p.
/// Accepts 0 < eps <= 1/2; eps = 1/2 gives 2/(1 - ln 2).
double c_epsilon(double eps);

/// The ε₁ = ε₂ split with ε = (ε₁ + ε₂/2)/(1 - ε₂), i.e. ε/(3/2 + ε).
double split_epsilon(double eps);

/// p = C ln(n) / n.
double theorem2_edge_probability(std::uint64_t n, double c);

/// Edge-count analogue of p = C ln(n)/n. PerPair uses M = p N ≈ C n ln(n)/2;
/// Literal uses M = C n ln(n). Both are clamped to N.
enum class EdgeCountConvention { PerPair, Literal };
std::uint64_t theorem2_edge_count(std::uint64_t n, double c, EdgeCountConvention convention);

}  // namespace isolab
