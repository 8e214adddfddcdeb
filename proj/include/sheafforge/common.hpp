#ifndef SHEAFFORGE_COMMON_HPP
#define SHEAFFORGE_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sheafforge {

// Error classes map onto process exit codes: spec -> 2, budget -> 3.
enum class ErrorKind { invalid, spec, budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(ErrorKind::invalid, msg); }
[[noreturn]] inline void fail_spec(const std::string& msg) { throw Error(ErrorKind::spec, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw Error(ErrorKind::budget, msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// Exact non-negative rational with an explicit infinity, used for expansion
// ratios and Cheeger constants. Denominator is kept positive and reduced.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool infinite = false;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  static Rational infinity() {
    Rational r;
    r.infinite = true;
    return r;
  }
  static Rational integer(long long n) { return Rational(n, 1); }

  bool operator==(const Rational& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return num == o.num && den == o.den;
  }
  bool operator<(const Rational& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    if (infinite) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rational rational_div(long long num, const Rational& den) {
  if (den.infinite) return Rational(0, 1);
  if (den.num == 0) return Rational::infinity();
  return Rational(num * den.den, den.num);
}

// Ratio a/b of two finite rationals; b must be nonzero.
inline Rational rational_ratio(const Rational& a, const Rational& b) {
  if (b.num == 0) return Rational::infinity();
  return Rational(a.num * b.den, a.den * b.num);
}

// Deterministic seed derivation for independent trials.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform draw in [0, bound) that does not depend on the standard library's
// distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail("uniform_below: empty range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

// p^e with overflow saturation to UINT64_MAX.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Binomial coefficient with saturation, used for search budgets.
inline std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace sheafforge

#endif
