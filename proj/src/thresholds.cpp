#include "isolab/thresholds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "isolab/error.hpp"

namespace isolab {

namespace {

double pairs(std::uint64_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

std::uint64_t round_clamped(double value, std::uint64_t n) {
  const double total = pairs(n);
  const double rounded = std::nearbyint(std::clamp(value, 0.0, total));
  return static_cast<std::uint64_t>(rounded);
}

}  // namespace

OmegaRule OmegaRule::parse(std::string_view text) {
  if (text == "loglogr") return {Kind::LogLogR, 0.0};
  if (text == "logloglogn") return {Kind::LogLogLogN, 0.0};
  constexpr std::string_view prefix = "explicit:";
  if (text.starts_with(prefix)) {
    const std::string number(text.substr(prefix.size()));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != number.size()) throw ConfigError("malformed omega value '" + number + "'");
    return {Kind::Explicit, value};
  }
  throw ConfigError("unknown omega rule '" + std::string(text) +
                    "' (expected loglogr, logloglogn or explicit:<value>)");
}

std::string OmegaRule::to_string() const {
  switch (kind) {
    case Kind::LogLogR:
      return "loglogr";
    case Kind::LogLogLogN:
      return "logloglogn";
    case Kind::Explicit:
      break;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return "explicit:" + std::string(buf, end);
}

double ThresholdParams::r() const { return std::log(static_cast<double>(n)) / d; }

ThresholdParams ThresholdParams::make(std::uint64_t n, std::uint32_t d, double omega) {
  if (n < 2) throw DomainError("threshold functions need n >= 2");
  if (d < 1) throw DomainError("threshold functions need d >= 1");
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  ThresholdParams p{n, d, omega};
  const double r = p.r();
  if (r > std::numbers::e) {
    const double cap = std::log(std::log(r));
    if (omega > cap * (1.0 + 1e-12)) {
      throw DomainError("omega = " + std::to_string(omega) + " exceeds ln ln r = " + std::to_string(cap));
    }
  }
  return p;
}

ThresholdParams ThresholdParams::make(std::uint64_t n, std::uint32_t d, const OmegaRule& rule) {
  switch (rule.kind) {
    case OmegaRule::Kind::LogLogR:
      return make(n, d, default_omega(n, d));
    case OmegaRule::Kind::LogLogLogN:
      return make(n, d, omega_logloglog(n));
    case OmegaRule::Kind::Explicit:
      break;
  }
  return make(n, d, rule.value);
}

double default_omega(std::uint64_t n, std::uint32_t d) {
  if (n < 2 || d < 1) throw DomainError("default omega needs n >= 2 and d >= 1");
  const double r = std::log(static_cast<double>(n)) / d;
  if (!(r > std::numbers::e)) {
    throw DomainError("r = ln(n)/d = " + std::to_string(r) +
                      " is not above e; ln ln r is not a valid slack here, supply omega explicitly");
  }
  return std::log(std::log(r));
}

double omega_logloglog(std::uint64_t n) {
  const double ll = std::log(std::log(static_cast<double>(n)));
  if (!(ll > 1.0)) throw DomainError("ln ln ln n is not positive for n <= e^e; supply omega explicitly");
  return std::log(ll);
}

double lower_threshold_real(const ThresholdParams& p) {
  const double ln_n = std::log(static_cast<double>(p.n));
  const double bracket = ln_n + (p.d - 1.0) * std::log(p.r()) - (2.0 * p.d + p.omega);
  if (!(bracket > 0.0)) {
    throw DomainError("lower threshold bracket ln n + (d-1) ln r - (2d + omega) = " + std::to_string(bracket) +
                      " is not positive: n is too small for d = " + std::to_string(p.d));
  }
  return pairs(p.n) * bracket / static_cast<double>(p.n);
}

double upper_threshold_real(const ThresholdParams& p) {
  const double ln_n = std::log(static_cast<double>(p.n));
  const double bracket = ln_n + (p.d - 1.0) * std::log(p.r()) + (2.0 * p.d + p.omega);
  if (!(bracket > 0.0)) {
    throw DomainError("upper threshold bracket is not positive for d = " + std::to_string(p.d));
  }
  return pairs(p.n) * bracket / static_cast<double>(p.n);
}

std::uint64_t lower_threshold(const ThresholdParams& p) { return round_clamped(lower_threshold_real(p), p.n); }

std::uint64_t upper_threshold(const ThresholdParams& p) { return round_clamped(upper_threshold_real(p), p.n); }

double c_epsilon(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw DomainError("epsilon must lie in (0, 1/2]");
  const double x = 2.0 * eps;
  return (1.0 + x) / (x - std::log1p(x));
}

double split_epsilon(double eps) {
  if (!(eps > 0.0)) throw DomainError("epsilon must be positive");
  return eps / (1.5 + eps);
}

double theorem2_edge_probability(std::uint64_t n, double c) {
  if (n < 2) throw DomainError("need n >= 2");
  const double p = c * std::log(static_cast<double>(n)) / static_cast<double>(n);
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("C ln(n)/n = " + std::to_string(p) + " is not a probability");
  return p;
}

std::uint64_t theorem2_edge_count(std::uint64_t n, double c, EdgeCountConvention convention) {
  if (n < 2) throw DomainError("need n >= 2");
  const double base = c * static_cast<double>(n) * std::log(static_cast<double>(n));
  const double m = convention == EdgeCountConvention::Literal ? base : base / 2.0 * (n - 1.0) / n;
  return round_clamped(m, n);
}

}  // namespace isolab
