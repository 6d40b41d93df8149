#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

#include "persistd/interval.hpp"
#include "persistd/pmodule.hpp"

// Seeded generators for property checks. Only std::mt19937_64 and
// std::seed_seq are used (both fully specified by the standard) and all
// range reduction is done here, so streams are identical across standard
// libraries.

namespace persistd {

class Rng {
 public:
  explicit Rng(std::initializer_list<std::uint64_t> seeds) {
    std::vector<std::uint32_t> words;
    for (std::uint64_t s : seeds) {
      words.push_back(static_cast<std::uint32_t>(s));
      words.push_back(static_cast<std::uint32_t>(s >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  /// True with probability 1/n.
  bool one_in(std::int64_t n) { return uniform(1, n) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// The documented test distribution: endpoints are rationals p/q with
/// q uniform in [1, max_denominator] and p uniform over the multiples of 1/q
/// in [lo, hi]; decorations are fair coins; each side is infinite with
/// probability 1/infinite_one_in when allowed.
struct GridOptions {
  Rational lo{-4};
  Rational hi{4};
  std::int64_t max_denominator = 16;
  std::size_t max_summands = 6;
  bool allow_infinite = true;
  std::int64_t infinite_one_in = 8;
};

inline Rational random_rational(Rng& rng, const GridOptions& opt) {
  using boost::multiprecision::cpp_int;
  const std::int64_t q = rng.uniform(1, opt.max_denominator);
  // ceil(lo*q) .. floor(hi*q)
  const Rational lo_scaled = opt.lo * q;
  const Rational hi_scaled = opt.hi * q;
  cpp_int first = numerator(lo_scaled) / denominator(lo_scaled);
  if (Rational(first) < lo_scaled) ++first;
  cpp_int last = numerator(hi_scaled) / denominator(hi_scaled);
  if (Rational(last) > hi_scaled) --last;
  const auto p = rng.uniform(first.convert_to<std::int64_t>(), last.convert_to<std::int64_t>());
  return Rational(p, q);
}

/// A nonempty interval on the grid.
inline Interval random_interval(Rng& rng, const GridOptions& opt) {
  for (;;) {
    Rational x = random_rational(rng, opt);
    Rational y = random_rational(rng, opt);
    if (y < x) std::swap(x, y);
    Endpoint lo{ExtRational(x), rng.coin()};
    Endpoint hi{ExtRational(y), rng.coin()};
    if (opt.allow_infinite && rng.one_in(opt.infinite_one_in)) lo = Endpoint::neg_inf();
    if (opt.allow_infinite && rng.one_in(opt.infinite_one_in)) hi = Endpoint::pos_inf();
    Interval out = make_interval(lo, hi);
    if (!out.is_empty()) return out;
  }
}

/// Summand count uniform in [0, max_summands], summands from random_interval.
inline PModule random_module(Rng& rng, const GridOptions& opt) {
  const auto count = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(opt.max_summands)));
  std::vector<Interval> summands;
  summands.reserve(count);
  for (std::size_t k = 0; k < count; ++k) summands.push_back(random_interval(rng, opt));
  return PModule(summands);
}

}  // namespace persistd
