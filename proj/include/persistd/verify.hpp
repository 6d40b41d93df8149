#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "persistd/bottleneck.hpp"
#include "persistd/error.hpp"
#include "persistd/families.hpp"
#include "persistd/interleaving.hpp"
#include "persistd/io.hpp"
#include "persistd/oracles.hpp"
#include "persistd/pmodule.hpp"
#include "persistd/random.hpp"

// Seeded property suites. Each property draws an input from its own random
// stream (derived from seed, property position and trial index), stores it
// as JSON, and checks it through `check(input)`. A failing input is reported
// verbatim, so replaying it through the same check reproduces the failure.

namespace persistd::verify {

using Params = std::map<std::string, std::string>;

struct CheckOutcome {
  bool ok = true;
  json values;
};

struct PropertyResult {
  std::string id;
  bool passed = true;
  std::size_t checks = 0;
  /// {"suite", "property", "trial", "input", "values"} of the first failure.
  std::optional<json> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Params params;
  std::vector<PropertyResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
  }
};

struct Property {
  std::string id;
  std::function<json(Rng&)> generate;
  std::function<CheckOutcome(const json&)> check;
};

namespace detail {

// ---- parameter access ------------------------------------------------------

class ParamReader {
 public:
  explicit ParamReader(const Params& params) : params_(params) {}

  Rational rational(const std::string& key, const Rational& fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      return parse_rational(it->second);
    } catch (const ParseError&) {
      throw DomainError("parameter '" + key + "' must be a rational, got '" + it->second + "'");
    }
  }

  std::size_t count(const std::string& key, std::size_t fallback, std::size_t min_value,
                    std::size_t max_value) {
    const Rational r = rational(key, Rational(static_cast<long>(fallback)));
    if (denominator(r) != 1 || r < static_cast<long>(min_value) || r > static_cast<long>(max_value)) {
      throw DomainError("parameter '" + key + "' must be an integer in [" +
                        std::to_string(min_value) + ", " + std::to_string(max_value) + "]");
    }
    return numerator(r).convert_to<std::size_t>();
  }

  std::optional<Rational> optional_rational(const std::string& key) {
    if (params_.find(key) == params_.end()) {
      used_.push_back(key);
      return std::nullopt;
    }
    return rational(key, 0);
  }

  /// Rejects keys no property asked for.
  void finish() const {
    for (const auto& [key, value] : params_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw DomainError("unknown parameter '" + key + "'");
      }
    }
  }

 private:
  const Params& params_;
  std::vector<std::string> used_;
};

// ---- JSON helpers ------------------------------------------------------------

inline json rat(const Rational& r) { return to_string(r); }
inline json dist(const Distance& d) { return to_string(d); }
inline Rational get_rat(const json& j, const char* key) {
  return parse_rational(j.at(key).get<std::string>());
}
inline PModule get_mod(const json& j, const char* key) { return module_from_json(j.at(key)); }
inline Interval get_interval(const json& j, const char* key) {
  return parse_interval(j.at(key).get<std::string>());
}
inline json mod(const PModule& m) { return module_to_json(m); }

inline std::vector<bool> get_bits(const json& j, const char* key) {
  std::vector<bool> bits;
  for (const auto& b : j.at(key)) bits.push_back(b.get<int>() != 0);
  return bits;
}

inline Interval flip_lower(const Interval& i) {
  if (i.is_empty() || !i.lo().value.is_finite()) return i;
  return make_interval(Endpoint{i.lo().value, !i.lo().closed}, i.hi());
}
inline Interval flip_upper(const Interval& i) {
  if (i.is_empty() || !i.hi().value.is_finite()) return i;
  return make_interval(i.lo(), Endpoint{i.hi().value, !i.hi().closed});
}

// Interval drawn on the grid, Empty with probability 1/16.
inline Interval maybe_empty_interval(Rng& rng, const GridOptions& opt) {
  if (rng.one_in(16)) return Interval::empty();
  return random_interval(rng, opt);
}

// Random bounded module inside [c, d].
inline PModule module_in_box(Rng& rng, const Rational& c, const Rational& d, std::size_t max_summands) {
  GridOptions opt;
  opt.lo = c;
  opt.hi = d;
  opt.allow_infinite = false;
  opt.max_summands = max_summands;
  return random_module(rng, opt);
}

// ---- suites --------------------------------------------------------------------

inline std::vector<Property> pseudometric(ParamReader& p) {
  GridOptions opt;
  opt.lo = p.rational("lo", opt.lo);
  opt.hi = p.rational("hi", opt.hi);
  if (!(opt.lo < opt.hi)) throw DomainError("need lo < hi");
  auto gen = [opt](std::size_t k) {
    return [opt, k](Rng& rng) {
      json in;
      const char* names[] = {"m", "n", "p"};
      for (std::size_t i = 0; i < k; ++i) in[names[i]] = mod(random_module(rng, opt));
      return in;
    };
  };
  return {
      {"M1-self-distance", gen(1),
       [](const json& in) {
         const Distance d = module_distance(get_mod(in, "m"), get_mod(in, "m"));
         return CheckOutcome{d == Distance::zero(), {{"d_mm", dist(d)}}};
       }},
      {"M2-symmetry", gen(2),
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const auto n = get_mod(in, "n");
         const Distance mn = module_distance(m, n);
         const Distance nm = module_distance(n, m);
         return CheckOutcome{mn == nm, {{"d_mn", dist(mn)}, {"d_nm", dist(nm)}}};
       }},
      {"M3-triangle", gen(3),
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const auto n = get_mod(in, "n");
         const auto q = get_mod(in, "p");
         const Distance mp = module_distance(m, q);
         const Distance mn = module_distance(m, n);
         const Distance np = module_distance(n, q);
         return CheckOutcome{mp <= mn + np,
                             {{"d_mp", dist(mp)}, {"d_mn", dist(mn)}, {"d_np", dist(np)}}};
       }},
  };
}

inline std::vector<Property> interval_closed_form(ParamReader& p) {
  GridOptions opt;
  opt.lo = p.rational("lo", opt.lo);
  opt.hi = p.rational("hi", opt.hi);
  if (!(opt.lo < opt.hi)) throw DomainError("need lo < hi");
  auto pair_gen = [opt](Rng& rng) {
    return json{{"i", to_string(maybe_empty_interval(rng, opt))},
                {"j", to_string(maybe_empty_interval(rng, opt))}};
  };
  return {
      {"closed-form-vs-oracle", pair_gen,
       [](const json& in) {
         const auto i = get_interval(in, "i");
         const auto j = get_interval(in, "j");
         const Distance closed_form = interval_distance(i, j);
         const Distance scan = oracle::interval_distance_scan(i, j);
         return CheckOutcome{closed_form == scan,
                             {{"closed_form", dist(closed_form)}, {"oracle", dist(scan)}}};
       }},
      {"decoration-insensitive",
       [opt](Rng& rng) {
         json in{{"i", to_string(random_interval(rng, opt))},
                 {"j", to_string(maybe_empty_interval(rng, opt))}};
         in["flip"] = rng.uniform(1, 3);
         return in;
       },
       [](const json& in) {
         const auto i = get_interval(in, "i");
         const auto j = get_interval(in, "j");
         const int flip = in.at("flip").get<int>();
         Interval flipped = i;
         if (flip & 1) flipped = flip_lower(flipped);
         if (flip & 2) flipped = flip_upper(flipped);
         const Distance before = interval_distance(i, j);
         // Flipping a singleton's decoration empties it; that changes the module.
         if (flipped.is_empty()) return CheckOutcome{true, {{"skipped", "flip emptied a singleton"}}};
         const Distance after = interval_distance(flipped, j);
         return CheckOutcome{before == after,
                             {{"flipped", to_string(flipped)}, {"before", dist(before)},
                              {"after", dist(after)}}};
       }},
      {"decision-monotone",
       [opt](Rng& rng) {
         GridOptions eps_opt;
         eps_opt.lo = 0;
         eps_opt.hi = 4;
         Rational e1 = random_rational(rng, eps_opt);
         Rational e2 = random_rational(rng, eps_opt);
         if (e2 < e1) std::swap(e1, e2);
         return json{{"i", to_string(maybe_empty_interval(rng, opt))},
                     {"j", to_string(maybe_empty_interval(rng, opt))},
                     {"eps", rat(e1)},
                     {"eps2", rat(e2)}};
       },
       [](const json& in) {
         const auto i = get_interval(in, "i");
         const auto j = get_interval(in, "j");
         const bool at_small = are_eps_interleaved(i, j, get_rat(in, "eps"));
         const bool at_large = are_eps_interleaved(i, j, get_rat(in, "eps2"));
         const bool symmetric = at_small == are_eps_interleaved(j, i, get_rat(in, "eps"));
         return CheckOutcome{(!at_small || at_large) && symmetric,
                             {{"at_eps", at_small}, {"at_eps2", at_large}, {"symmetric", symmetric}}};
       }},
  };
}

inline std::vector<Property> matching_oracle(ParamReader& p) {
  const std::size_t grid = p.count("grid", 5, 1, 1000);
  const std::size_t max_summands = p.count("max_summands", 4, 0, 5);
  GridOptions opt;
  opt.lo = 0;
  opt.hi = Rational(static_cast<long>(grid));
  opt.max_denominator = 2;
  opt.max_summands = max_summands;
  auto gen = [opt](Rng& rng) {
    return json{{"m", mod(random_module(rng, opt))}, {"n", mod(random_module(rng, opt))}};
  };
  return {
      {"bottleneck-vs-exhaustive", gen,
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const auto n = get_mod(in, "n");
         const Distance fast = module_distance(m, n);
         const Distance slow = oracle::module_distance_exhaustive(m, n);
         return CheckOutcome{fast == slow, {{"matcher", dist(fast)}, {"exhaustive", dist(slow)}}};
       }},
      {"certificate-valid", gen,
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const auto n = get_mod(in, "n");
         const Distance d = module_distance(m, n);
         if (d.is_infinite()) return CheckOutcome{true, {{"distance", "inf"}}};
         const auto cert = distance_certificate(m, n);
         const bool ok = verify_certificate(m, n, cert) && cert.threshold == d;
         return CheckOutcome{ok, {{"distance", dist(d)}, {"certificate", certificate_to_json(cert)}}};
       }},
  };
}

inline std::vector<Property> cube_isometry(ParamReader& p) {
  const std::size_t dim = p.count("N", 3, 1, 64);
  auto point = [dim](Rng& rng) {
    // x_i = u / (100 N D) with u in [0, D): strictly inside [0, 1/(100N)).
    constexpr std::int64_t kSteps = 64;
    json xs = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
      xs.push_back(rat(Rational(rng.uniform(0, kSteps - 1), 100 * static_cast<long>(dim) * kSteps)));
    }
    return xs;
  };
  auto read = [](const json& xs) {
    std::vector<Rational> out;
    for (const auto& v : xs) out.push_back(parse_rational(v.get<std::string>()));
    return out;
  };
  return {
      {"isometry",
       [dim, point](Rng& rng) {
         return json{{"N", dim}, {"x", point(rng)}, {"y", point(rng)}};
       },
       [read](const json& in) {
         const auto n = in.at("N").get<std::size_t>();
         const auto x = read(in.at("x"));
         const auto y = read(in.at("y"));
         Rational sup(0);
         for (std::size_t i = 0; i < n; ++i) sup = std::max(sup, Rational(abs(x[i] - y[i])));
         const Distance d = module_distance(cube_point_module(n, x), cube_point_module(n, y));
         return CheckOutcome{d == Distance(sup), {{"distance", dist(d)}, {"sup_norm", rat(sup)}}};
       }},
  };
}

inline std::vector<Property> binary_discrete(ParamReader& p) {
  const std::size_t length = p.count("length", 8, 1, 64);
  auto bits = [length](Rng& rng) {
    json out = json::array();
    for (std::size_t k = 0; k < length; ++k) out.push_back(rng.coin() ? 1 : 0);
    return out;
  };
  return {
      {"distinct-at-one",
       [bits](Rng& rng) {
         json a = bits(rng);
         json b = bits(rng);
         if (a == b) {
           const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(a.size()) - 1));
           b[k] = 1 - b[k].get<int>();
         }
         return json{{"alpha", a}, {"beta", b}};
       },
       [](const json& in) {
         const Distance d = module_distance(binary_sequence_module(get_bits(in, "alpha")),
                                            binary_sequence_module(get_bits(in, "beta")));
         return CheckOutcome{d == Distance(Rational(1)), {{"distance", dist(d)}}};
       }},
      {"identical-at-zero", [bits](Rng& rng) { return json{{"alpha", bits(rng)}}; },
       [](const json& in) {
         const auto m = binary_sequence_module(get_bits(in, "alpha"));
         const Distance d = module_distance(m, m);
         return CheckOutcome{d == Distance::zero(), {{"distance", dist(d)}}};
       }},
  };
}

inline std::vector<Property> not_totally_bounded(ParamReader& p) {
  const Rational c = p.rational("c", 0);
  const Rational d = p.rational("d", 1);
  const std::size_t k = p.count("k", 10, 1, 1000);
  if (!(c < d)) throw DomainError("need c < d");
  return {
      {"pairwise-half-width",
       [c, d, k](Rng& rng) {
         const auto top = static_cast<std::int64_t>(k);
         const std::int64_t m = rng.uniform(0, top);
         std::int64_t n = rng.uniform(0, top - 1);
         if (n >= m) ++n;
         return json{{"c", rat(c)}, {"d", rat(d)}, {"m", m}, {"n", n}};
       },
       [](const json& in) {
         const Rational c = get_rat(in, "c");
         const Rational d = get_rat(in, "d");
         const Interval box = closed_open(c, d);
         const Distance dist_mn = module_distance(replicate(box, in.at("m").get<std::size_t>()),
                                                  replicate(box, in.at("n").get<std::size_t>()));
         const Distance expected(Rational((d - c) / 2));
         return CheckOutcome{dist_mn == expected,
                             {{"distance", dist(dist_mn)}, {"expected", dist(expected)}}};
       }},
  };
}

inline std::vector<Property> radical_zero(ParamReader& p) {
  GridOptions opt;
  opt.lo = p.rational("lo", opt.lo);
  opt.hi = p.rational("hi", opt.hi);
  if (!(opt.lo < opt.hi)) throw DomainError("need lo < hi");
  auto gen = [opt](Rng& rng) { return json{{"m", mod(random_module(rng, opt))}}; };
  return {
      {"distance-zero", gen,
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const auto r = radical(m);
         const Distance d = module_distance(m, r);
         return CheckOutcome{d == Distance::zero(), {{"radical", mod(r)}, {"distance", dist(d)}}};
       }},
      {"idempotent", gen,
       [](const json& in) {
         const auto r = radical(get_mod(in, "m"));
         return CheckOutcome{radical(r) == r, {{"radical", mod(r)}}};
       }},
  };
}

inline std::vector<Property> p_persistent(ParamReader& p) {
  GridOptions opt;
  const std::optional<Rational> fixed_p = p.optional_rational("p");
  if (fixed_p && *fixed_p < 0) throw DomainError("p must be nonnegative");
  return {
      {"within-p",
       [opt, fixed_p](Rng& rng) {
         static const Rational choices[] = {Rational(1, 4), Rational(1), Rational(3)};
         const Rational pp = fixed_p ? *fixed_p : choices[rng.uniform(0, 2)];
         return json{{"m", mod(random_module(rng, opt))}, {"p", rat(pp)}};
       },
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const Rational pp = get_rat(in, "p");
         const auto sub = persistent_submodule(m, pp);
         const Distance d = module_distance(m, sub);
         return CheckOutcome{d <= Distance(pp), {{"submodule", mod(sub)}, {"distance", dist(d)}}};
       }},
      {"zero-is-identity", [opt](Rng& rng) { return json{{"m", mod(random_module(rng, opt))}}; },
       [](const json& in) {
         const auto m = get_mod(in, "m");
         return CheckOutcome{persistent_submodule(m, 0) == m, json::object()};
       }},
  };
}

inline std::vector<Property> contraction_lipschitz(ParamReader& p) {
  GridOptions opt;
  opt.lo = p.rational("lo", opt.lo);
  opt.hi = p.rational("hi", opt.hi);
  if (!(opt.lo < opt.hi)) throw DomainError("need lo < hi");
  opt.allow_infinite = false;
  auto unit = [](Rng& rng) { return Rational(rng.uniform(0, 32), 32); };
  return {
      {"lipschitz",
       [opt, unit](Rng& rng) {
         return json{{"m", mod(random_module(rng, opt))}, {"s", rat(unit(rng))}, {"t", rat(unit(rng))}};
       },
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const Rational s = get_rat(in, "s");
         const Rational t = get_rat(in, "t");
         Distance widest;
         for (const auto& x : m.summands()) widest = max(widest, diameter(x.interval).half());
         const Distance d = module_distance(contraction_path(m, s), contraction_path(m, t));
         const Distance bound = Rational(abs(t - s)) * widest;
         return CheckOutcome{d <= bound, {{"distance", dist(d)}, {"bound", dist(bound)}}};
       }},
      {"endpoints", [opt](Rng& rng) { return json{{"m", mod(random_module(rng, opt))}}; },
       [](const json& in) {
         const auto m = get_mod(in, "m");
         return CheckOutcome{contraction_path(m, 0) == m && contraction_path(m, 1).is_zero(),
                             json::object()};
       }},
  };
}

/// Source modules are drawn on [lo, hi] (default [-6, -1]). Equality
/// d(M, N) = ε needs M to keep clear of the added summands near [0, 2ε) and
/// [k, k + 2ε), k >= 1; with ε <= 1/2 the default window guarantees that.
inline std::vector<Property> open_witness(ParamReader& p) {
  const Rational eps = p.rational("eps", Rational(1, 8));
  const std::size_t trunc = p.count("trunc", 3, 1, 1000);
  GridOptions opt;
  opt.lo = p.rational("lo", -6);
  opt.hi = p.rational("hi", -1);
  if (eps <= 0) throw DomainError("eps must be positive");
  if (!(opt.lo < opt.hi)) throw DomainError("need lo < hi");
  std::vector<Property> out;
  for (Inclusion inc : kAllInclusions) {
    const bool bounded = inc == Inclusion::FfidCdInFfid || inc == Inclusion::FfidInCfid;
    GridOptions src = opt;
    src.allow_infinite = !bounded;
    out.push_back(
        {std::string(inclusion_name(inc)),
         [src, eps, trunc, inc](Rng& rng) {
           return json{{"inclusion", inclusion_name(inc)}, {"m", mod(random_module(rng, src))},
                       {"eps", rat(eps)},  {"trunc", trunc},
                       {"c", rat(src.lo)}, {"d", rat(src.hi)}};
         },
         [](const json& in) {
           const auto m = get_mod(in, "m");
           const Rational e = get_rat(in, "eps");
           const Bounds box{get_rat(in, "c"), get_rat(in, "d")};
           const auto n = open_subset_witness(m, parse_inclusion(in.at("inclusion").get<std::string>()),
                                              e, in.at("trunc").get<std::size_t>(), box);
           const Distance d = module_distance(m, n);
           return CheckOutcome{d == Distance(e), {{"witness", mod(n)}, {"distance", dist(d)}}};
         }});
  }
  return out;
}

inline std::vector<Property> enveloping(ParamReader& p) {
  const Rational c = p.rational("c", 0);
  const Rational d = p.rational("d", 1);
  const Rational z = p.rational("z", Rational(1, 2));
  if (!(c < d)) throw DomainError("need c < d");
  if (z <= 0) throw DomainError("z must be positive");
  auto gen = [c, d, z](Rng& rng) {
    return json{{"m", mod(module_in_box(rng, c, d, 6))}, {"c", rat(c)}, {"d", rat(d)}, {"z", rat(z)}};
  };
  return {
      {"half-width-bound", gen,
       [](const json& in) {
         const Rational c = get_rat(in, "c");
         const Rational d = get_rat(in, "d");
         const Distance to_zero = module_distance(get_mod(in, "m"), PModule());
         const Distance bound(Rational((d - c) / 2));
         const Distance full = module_distance(PModule({closed(c, d)}), PModule());
         return CheckOutcome{to_zero <= bound && full == bound,
                             {{"d_m0", dist(to_zero)}, {"d_cd0", dist(full)}, {"bound", dist(bound)}}};
       }},
      {"far-from-right-neighbour", gen,
       [](const json& in) {
         const Rational d = get_rat(in, "d");
         const Rational z = get_rat(in, "z");
         const PModule right({open_closed(d, Rational(d + 2 * z))});
         const Distance dist_m = module_distance(get_mod(in, "m"), right);
         return CheckOutcome{dist_m >= Distance(z), {{"distance", dist(dist_m)}}};
       }},
  };
}

inline std::vector<Property> cauchy_incomplete(ParamReader& p) {
  const std::size_t n_max = p.count("n_max", 12, 1, 40);
  auto count_containing_zero = [](const PModule& m) {
    std::size_t count = 0;
    for (const auto& s : m.summands()) {
      if (s.interval.contains(0)) count += s.multiplicity;
    }
    return count;
  };
  return {
      {"distance-law",
       [n_max](Rng& rng) {
         const auto top = static_cast<std::int64_t>(n_max);
         const std::int64_t n = rng.uniform(0, top - 1);
         return json{{"n", n}, {"m", rng.uniform(n + 1, top)}};
       },
       [](const json& in) {
         const auto n = in.at("n").get<std::size_t>();
         const auto m = in.at("m").get<std::size_t>();
         const Distance d = module_distance(cauchy_witness(n), cauchy_witness(m));
         const Distance expected(Rational(1, boost::multiprecision::cpp_int(1) << (std::min(n, m) + 1)));
         return CheckOutcome{d == expected, {{"distance", dist(d)}, {"expected", dist(expected)}}};
       }},
      {"rank-at-zero-grows",
       [n_max](Rng& rng) { return json{{"n", rng.uniform(1, static_cast<std::int64_t>(n_max))}}; },
       [count_containing_zero](const json& in) {
         const auto n = in.at("n").get<std::size_t>();
         const std::size_t now = count_containing_zero(cauchy_witness(n));
         const std::size_t before = count_containing_zero(cauchy_witness(n - 1));
         return CheckOutcome{now == n + 1 && now > before, {{"rank", now}, {"previous", before}}};
       }},
  };
}

inline std::vector<Property> non_t0(ParamReader& p) {
  GridOptions opt;
  opt.lo = p.rational("lo", opt.lo);
  opt.hi = p.rational("hi", opt.hi);
  if (!(opt.lo < opt.hi)) throw DomainError("need lo < hi");
  return {
      {"singleton-zero-distance",
       [opt](Rng& rng) {
         return json{{"m", mod(random_module(rng, opt))}, {"r", rat(random_rational(rng, opt))}};
       },
       [](const json& in) {
         const auto m = get_mod(in, "m");
         const auto n = direct_sum(m, PModule({singleton(get_rat(in, "r"))}));
         const Distance d = module_distance(m, n);
         return CheckOutcome{d == Distance::zero() && !(m == n), {{"distance", dist(d)}}};
       }},
  };
}

using SuiteFactory = std::vector<Property> (*)(ParamReader&);

inline const std::vector<std::pair<std::string, SuiteFactory>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFactory>> suites = {
      {"pseudometric", &pseudometric},
      {"interval-closed-form", &interval_closed_form},
      {"matching-oracle", &matching_oracle},
      {"cube-isometry", &cube_isometry},
      {"binary-discrete", &binary_discrete},
      {"not-totally-bounded", &not_totally_bounded},
      {"radical-zero", &radical_zero},
      {"p-persistent", &p_persistent},
      {"contraction-lipschitz", &contraction_lipschitz},
      {"open-witness", &open_witness},
      {"enveloping", &enveloping},
      {"cauchy-incomplete", &cauchy_incomplete},
      {"non-t0", &non_t0},
  };
  return suites;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, factory] : detail::registry()) out.push_back(name);
  return out;
}

/// The properties of a suite configured by `params`. Throws DomainError for
/// an unknown suite, an unknown parameter or an invalid value.
inline std::vector<Property> suite_properties(const std::string& name, const Params& params) {
  for (const auto& [suite, factory] : detail::registry()) {
    if (suite != name) continue;
    detail::ParamReader reader(params);
    auto props = factory(reader);
    reader.finish();
    return props;
  }
  throw DomainError("unknown suite '" + name + "'");
}

/// Runs `trials` seeded trials of every property of suite `name`.
/// Deterministic in (name, seed, trials, params).
inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t trials,
                             const Params& params = {}) {
  if (trials == 0) throw DomainError("trials must be positive");
  const auto props = suite_properties(name, params);
  SuiteReport report{name, seed, trials, params, {}};
  for (std::size_t k = 0; k < props.size(); ++k) {
    PropertyResult result{props[k].id, true, 0, std::nullopt};
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng({seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t)});
      const json input = props[k].generate(rng);
      const CheckOutcome outcome = props[k].check(input);
      ++result.checks;
      if (!outcome.ok) {
        result.passed = false;
        result.counterexample = json{{"suite", name},        {"property", props[k].id},
                                     {"trial", t},           {"input", input},
                                     {"values", outcome.values}};
        break;
      }
    }
    report.results.push_back(std::move(result));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.id < b.id; });
  return report;
}

/// Re-evaluates a counterexample payload produced by run_suite. The
/// returned outcome has ok == false when the failure reproduces.
inline CheckOutcome replay(const json& counterexample, const Params& params = {}) {
  const auto suite = counterexample.at("suite").get<std::string>();
  const auto property = counterexample.at("property").get<std::string>();
  for (const auto& prop : suite_properties(suite, params)) {
    if (prop.id == property) return prop.check(counterexample.at("input"));
  }
  throw DomainError("suite '" + suite + "' has no property '" + property + "'");
}

inline json report_to_json(const SuiteReport& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    json entry{{"property", r.id}, {"status", r.passed ? "pass" : "fail"}, {"checks", r.checks}};
    if (r.counterexample) entry["counterexample"] = *r.counterexample;
    results.push_back(std::move(entry));
  }
  return {{"suite", report.suite},     {"seed", report.seed},       {"trials", report.trials},
          {"params", report.params},   {"results", std::move(results)},
          {"passed", report.all_passed()}};
}

inline std::string report_to_table(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "  seed " << report.seed << "  trials " << report.trials;
  for (const auto& [k, v] : report.params) out << "  " << k << "=" << v;
  out << "\n";
  std::size_t width = 8;
  for (const auto& r : report.results) width = std::max(width, r.id.size());
  for (const auto& r : report.results) {
    out << "  " << r.id << std::string(width - r.id.size() + 2, ' ') << (r.passed ? "PASS" : "FAIL")
        << "  " << r.checks << " checks\n";
    if (r.counterexample) out << "    counterexample: " << r.counterexample->dump() << "\n";
  }
  out << (report.all_passed() ? "all properties pass" : "FAILED") << "\n";
  return out.str();
}

}  // namespace persistd::verify
