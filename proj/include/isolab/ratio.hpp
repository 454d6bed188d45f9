#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace isolab {

/// Nonnegative rational with exact, cross-multiplied comparison.
/// Not normalized: 7/4 and 14/8 are distinct representations that compare equal.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) {}

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=>
           static_cast<unsigned __int128>(b.num) * a.den;
  }

  constexpr Ratio reduced() const {
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? *this : Ratio{num / g, den / g};
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const {
    const Ratio r = reduced();
    return std::to_string(r.num) + "/" + std::to_string(r.den);
  }
};

}  // namespace isolab
