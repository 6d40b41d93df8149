// Acceptance runner: one exact check per criterion, one PASS/FAIL line each.
//
//   acceptance                 run every criterion
//   acceptance --criterion k   run criterion k only
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "persistd/bottleneck.hpp"
#include "persistd/families.hpp"
#include "persistd/interleaving.hpp"
#include "persistd/io.hpp"
#include "persistd/oracles.hpp"
#include "persistd/random.hpp"

namespace {

using namespace persistd;

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

PModule single(const char* text) { return PModule(std::vector<Interval>{parse_interval(text)}); }

// 1. closed form vs candidate-scan oracle on 1000 random pairs, < 5 s
Verdict interval_distance_exactness() {
  Rng rng{20240001};
  const GridOptions grid;
  const auto start = Clock::now();
  for (int k = 0; k < 1000; ++k) {
    const Interval a = random_interval(rng, grid);
    const Interval b = random_interval(rng, grid);
    const Distance fast = interval_distance(a, b);
    const Distance slow = oracle::interval_distance_scan(a, b);
    if (fast != slow) {
      return {false, "pair " + std::to_string(k) + ": " + to_string(a) + " vs " + to_string(b) +
                         " closed form " + to_string(fast) + ", oracle " + to_string(slow)};
    }
  }
  const double elapsed = seconds_since(start);
  return {elapsed < 5.0, "1000 pairs agree in " + fmt_seconds(elapsed) + " (limit 5 s)"};
}

// 2. [0,2] vs (0,2): not 0-interleaved, 1/1000-interleaved, distance 0
Verdict decision_sharpness() {
  const Interval a = parse_interval("[0,2]");
  const Interval b = parse_interval("(0,2)");
  const bool at_zero = are_eps_interleaved(a, b, 0);
  const bool at_small = are_eps_interleaved(a, b, Rational(1, 1000));
  const Distance d = interval_distance(a, b);
  const bool ok = !at_zero && at_small && d == Distance::zero();
  return {ok, std::string("eps=0 ") + (at_zero ? "true" : "false") + ", eps=1/1000 " +
                  (at_small ? "true" : "false") + ", distance " + to_string(d)};
}

// 3. [0,1) vs [0,inf) at infinite distance, as intervals and as modules
Verdict infinite_distance() {
  const Distance di = interval_distance(parse_interval("[0,1)"), parse_interval("[0,inf)"));
  const Distance dm = module_distance(single("[0,1)"), single("[0,inf)"));
  return {di == Distance::infinity() && dm == Distance::infinity(),
          "interval " + to_string(di) + ", module " + to_string(dm)};
}

// 4. bottleneck vs exhaustive matching on 200 pairs with <= 4 summands, < 30 s
Verdict matching_oracle() {
  Rng rng{20240004};
  GridOptions grid;
  grid.max_summands = 4;
  const auto start = Clock::now();
  for (int k = 0; k < 200; ++k) {
    const PModule m = random_module(rng, grid);
    const PModule n = random_module(rng, grid);
    const Distance fast = module_distance(m, n);
    const Distance slow = oracle::module_distance_exhaustive(m, n);
    if (fast != slow) {
      return {false, "pair " + std::to_string(k) + ": " + serialize_module(m) + " vs " +
                         serialize_module(n) + " matcher " + to_string(fast) + ", oracle " +
                         to_string(slow)};
    }
  }
  const double elapsed = seconds_since(start);
  return {elapsed < 30.0, "200 pairs agree in " + fmt_seconds(elapsed) + " (limit 30 s)"};
}

// 5. cube isometry for N = 1..6, 100 pairs each
Verdict cube_isometry() {
  Rng rng{20240005};
  for (std::size_t n = 1; n <= 6; ++n) {
    const Rational step = cube_side_limit(n) / 64;
    for (int k = 0; k < 100; ++k) {
      std::vector<Rational> x(n);
      std::vector<Rational> y(n);
      Rational sup(0);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = step * rng.uniform(0, 63);
        y[i] = step * rng.uniform(0, 63);
        const Rational gap = abs(x[i] - y[i]);
        if (gap > sup) sup = gap;
      }
      const Distance d = module_distance(cube_point_module(n, x), cube_point_module(n, y));
      if (d != Distance(sup)) {
        return {false, "N=" + std::to_string(n) + " pair " + std::to_string(k) + ": distance " +
                           to_string(d) + ", sup-norm " + to_string(sup)};
      }
    }
  }
  return {true, "600 pairs, distance equals sup-norm"};
}

// 6. 8 distinct length-8 bit lists, all 28 pairs at distance 1
Verdict binary_family() {
  Rng rng{20240006};
  std::vector<std::vector<bool>> lists;
  while (lists.size() < 8) {
    std::vector<bool> bits(8);
    for (std::size_t k = 0; k < 8; ++k) bits[k] = rng.coin();
    if (std::find(lists.begin(), lists.end(), bits) == lists.end()) lists.push_back(bits);
  }
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < lists.size(); ++a) {
    for (std::size_t b = a + 1; b < lists.size(); ++b) {
      const Distance d = module_distance(binary_sequence_module(lists[a]), binary_sequence_module(lists[b]));
      if (d != Distance(Rational(1))) {
        return {false, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") at distance " + to_string(d)};
      }
      ++pairs;
    }
  }
  return {pairs == 28, std::to_string(pairs) + " pairs at distance 1"};
}

// 7. replicate([0,1), n), n = 0..10, pairwise 1/2 apart
Verdict not_totally_bounded() {
  const Interval unit = parse_interval("[0,1)");
  std::size_t pairs = 0;
  for (std::size_t m = 0; m <= 10; ++m) {
    for (std::size_t n = m + 1; n <= 10; ++n) {
      const Distance d = module_distance(replicate(unit, m), replicate(unit, n));
      if (d != Distance(Rational(1, 2))) {
        return {false, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " at distance " + to_string(d)};
      }
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs at distance 1/2"};
}

// 8. d(M, rad M) = 0 and d(M, M^(p)) <= p on 200 modules
Verdict radical_and_persistence() {
  Rng rng{20240008};
  const GridOptions grid;
  const std::vector<Rational> ps{Rational(1, 4), Rational(1), Rational(3)};
  for (int k = 0; k < 200; ++k) {
    const PModule m = random_module(rng, grid);
    const Distance dr = module_distance(m, radical(m));
    if (dr != Distance::zero()) {
      return {false, "module " + serialize_module(m) + ": d(M, rad M) = " + to_string(dr)};
    }
    for (const auto& p : ps) {
      const Distance dp = module_distance(m, persistent_submodule(m, p));
      if (dp > Distance(p)) {
        return {false, "module " + serialize_module(m) + " p=" + to_string(p) + ": distance " + to_string(dp)};
      }
    }
  }
  return {true, "200 modules, p in {1/4, 1, 3}"};
}

// 9. path bound d(M^(s), M^(t)) <= |t - s| max (d_k - c_k)/2
Verdict contraction_lipschitz() {
  Rng rng{20240009};
  GridOptions grid;
  grid.allow_infinite = false;
  GridOptions unit;
  unit.lo = 0;
  unit.hi = 1;
  for (int k = 0; k < 100; ++k) {
    const PModule m = random_module(rng, grid);
    Distance widest = Distance::zero();
    for (const auto& s : m.summands()) widest = max(widest, distance_to_zero(s.interval));
    for (int j = 0; j < 10; ++j) {
      const Rational s = random_rational(rng, unit);
      const Rational t = random_rational(rng, unit);
      const Distance d = module_distance(contraction_path(m, s), contraction_path(m, t));
      const Distance bound = Rational(abs(t - s)) * widest;
      if (d > bound) {
        return {false, "module " + serialize_module(m) + " s=" + to_string(s) + " t=" + to_string(t) +
                           ": distance " + to_string(d) + " > bound " + to_string(bound)};
      }
    }
  }
  return {true, "100 modules x 10 (s,t) pairs within the bound"};
}

// 10. pseudometric axioms on 500 triples
Verdict pseudometric() {
  Rng rng{20240010};
  const GridOptions grid;
  for (int k = 0; k < 500; ++k) {
    const PModule a = random_module(rng, grid);
    const PModule b = random_module(rng, grid);
    const PModule c = random_module(rng, grid);
    const Distance ab = module_distance(a, b);
    const Distance ba = module_distance(b, a);
    const Distance bc = module_distance(b, c);
    const Distance ac = module_distance(a, c);
    if (module_distance(a, a) != Distance::zero() || ab != ba || ac > ab + bc) {
      return {false, "triple " + std::to_string(k) + ": " + serialize_module(a) + ", " + serialize_module(b) +
                         ", " + serialize_module(c)};
    }
  }
  return {true, "500 triples"};
}

// 11. Cauchy distance law, and the count of summands of cauchy_witness(n)
// containing [-1/16, 1/16] equal to n - 2 and strictly increasing for n >= 4
Verdict cauchy_witness_law() {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t m = n + 1; m <= 12; ++m) {
      const Distance d = module_distance(cauchy_witness(n), cauchy_witness(m));
      const Distance expected(Rational(1, 2 << n));
      if (d != expected) {
        return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": distance " + to_string(d) +
                           ", expected " + to_string(expected)};
      }
    }
  }
  const Interval window = closed(Rational(-1, 16), Rational(1, 16));
  auto count = [&](std::size_t n) {
    std::size_t c = 0;
    const PModule m = cauchy_witness(n);
    for (const auto& s : m.summands()) {
      if (is_subset(window, s.interval)) c += s.multiplicity;
    }
    return c;
  };
  std::string counts;
  bool ok = true;
  for (std::size_t n = 4; n <= 12; ++n) {
    const std::size_t c = count(n);
    counts += (counts.empty() ? "" : ",") + std::to_string(c);
    ok = ok && c == n - 2 && c > count(n - 1);
  }
  return {ok, "distance law holds for 0 <= n < m <= 12; counts containing [-1/16,1/16] for n=4..12: " + counts +
                  " (required n-2, strictly increasing)"};
}

// 12. every open-subset witness at distance exactly eps, eps in {1/8, 1/2},
// 20 source modules each, sources drawn on [-6, -1]
Verdict open_subset_witnesses() {
  Rng rng{20240012};
  const Rational lo(-6);
  const Rational hi(-1);
  std::size_t checks = 0;
  for (Inclusion inc : kAllInclusions) {
    const bool bounded = inc == Inclusion::FfidCdInFfid || inc == Inclusion::FfidInCfid;
    GridOptions grid;
    grid.lo = lo;
    grid.hi = hi;
    grid.allow_infinite = !bounded;
    const std::optional<Bounds> box =
        inc == Inclusion::FfidCdInFfid ? std::optional<Bounds>(Bounds{lo, hi}) : std::nullopt;
    for (const Rational& eps : {Rational(1, 8), Rational(1, 2)}) {
      for (int k = 0; k < 20; ++k) {
        const PModule m = random_module(rng, grid);
        const PModule n = open_subset_witness(m, inc, eps, 3, box);
        const Distance d = module_distance(m, n);
        if (d != Distance(eps)) {
          return {false, std::string(inclusion_name(inc)) + " eps=" + to_string(eps) + " M=" +
                             serialize_module(m) + ": distance " + to_string(d)};
        }
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " witnesses at distance eps"};
}

const std::vector<std::function<Verdict()>>& criteria() {
  static const std::vector<std::function<Verdict()>> all = {
      interval_distance_exactness, decision_sharpness,     infinite_distance,
      matching_oracle,             cube_isometry,          binary_family,
      not_totally_bounded,         radical_and_persistence, contraction_lipschitz,
      pseudometric,                cauchy_witness_law,     open_subset_witnesses,
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::optional<std::size_t> only;
  app.add_option("--criterion", only, "run one criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t k = 1; k <= criteria().size(); ++k) {
    if (only && *only != k) continue;
    Verdict v{false, ""};
    try {
      v = criteria()[k - 1]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}
