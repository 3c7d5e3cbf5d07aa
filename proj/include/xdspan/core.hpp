#pragma once

// Shared scalar types, exact rational arithmetic for stretch factors, and the
// seeded RNG used by every randomized routine in the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace xds {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Dist = std::int64_t;    // distances are exact 64-bit integers
using Weight = std::int64_t;  // edge weights are non-negative integers

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
// Large enough to mean "unreachable", small enough that kInf + weight never
// overflows in relaxation code.
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max() / 4;

// Raised by operations whose preconditions require every vertex to be
// reachable (in the relevant direction) and the input graph is not.
class NotStronglyConnectedError : public std::runtime_error {
 public:
  explicit NotStronglyConnectedError(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when a resampling loop exceeds its configured attempt budget.
class ResampleLimitError : public std::runtime_error {
 public:
  explicit ResampleLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// ceil(log2(n)) for n >= 1, with ceil_log2(0) == ceil_log2(1) == 0.
inline int ceil_log2(std::int64_t n) {
  if (n <= 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

// Non-negative rational with a positive denominator. All stretch factors and
// slack parameters are rationals so certificate inequalities evaluate in
// exact integer arithmetic, never in floating point.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Frac() = default;
  constexpr Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0 || n < 0) throw std::invalid_argument("Frac: need num>=0, den>0");
  }

  // floor(num*x/den); x must be finite and non-negative.
  Dist mul_floor(Dist x) const {
    if (x < 0 || x >= kInfDist) throw std::invalid_argument("Frac::mul_floor: bad x");
    return num * x / den;
  }
  // ceil(num*x/den)
  Dist mul_ceil(Dist x) const {
    if (x < 0 || x >= kInfDist) throw std::invalid_argument("Frac::mul_ceil: bad x");
    return (num * x + den - 1) / den;
  }
  // exact comparisons against num/den * x
  bool lt(Dist lhs, Dist x) const { return lhs * den < num * x; }   // lhs < f*x
  bool gt(Dist lhs, Dist x) const { return lhs * den > num * x; }   // lhs > f*x
  bool le(Dist lhs, Dist x) const { return lhs * den <= num * x; }  // lhs <= f*x

  Frac plus(const Frac& o) const {
    std::int64_t g = std::gcd(den, o.den);
    std::int64_t d = den / g * o.den;
    return Frac(num * (d / den) + o.num * (d / o.den), d);
  }
  Frac times(std::int64_t k) const { return Frac(num * k, den); }
  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Parses "a/b" or a plain integer "a".
  static Frac parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Frac(std::stoll(text), 1);
    return Frac(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Deterministic RNG facade. Distribution helpers are written out by hand so
// sequences depend only on the seed, not on the standard library's
// unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // k distinct values from [0, n), returned sorted ascending.
  std::vector<Vertex> sample_vertices(Vertex n, std::int64_t k) {
    if (k >= n) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) {
      std::uint64_t j = i + below(static_cast<std::uint64_t>(n - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Derives an independent child seed; used to decorrelate nested samplers.
  std::uint64_t fork() { return engine_() ^ 0x9e3779b97f4a7c15ULL; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xds
