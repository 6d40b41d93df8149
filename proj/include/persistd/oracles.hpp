#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "persistd/interleaving.hpp"
#include "persistd/pmodule.hpp"

// Slow reference computations. They deliberately avoid the code paths they
// are used to check: the interval oracle never evaluates the closed form,
// and the module oracle never builds a bipartite graph.

namespace persistd::oracle {

/// Interleaving distance of two interval modules by scanning candidate
/// thresholds with the ε-decision procedure. The answer is the smallest
/// candidate κ such that I and J are (κ + η)-interleaved, where η is half
/// the smallest gap between distinct finite candidates (1 if there is only
/// one). Relies only on monotonicity of the decision in ε.
inline Distance interval_distance_scan(const Interval& a, const Interval& b) {
  auto lo = [](const Interval& i) { return i.is_empty() ? ExtRational(0) : i.lo().value; };
  auto hi = [](const Interval& i) { return i.is_empty() ? ExtRational(0) : i.hi().value; };
  std::vector<Distance> cands{Distance::zero()};
  if (!a.is_empty() && !b.is_empty()) {
    cands.emplace_back(endpoint_gap(lo(a), lo(b)));
    cands.emplace_back(endpoint_gap(hi(a), hi(b)));
  }
  cands.push_back(diameter(a).half());
  cands.push_back(diameter(b).half());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  Rational eta(1);
  for (std::size_t k = 1; k < cands.size(); ++k) {
    if (!cands[k].is_finite()) break;
    const Rational gap = cands[k].value() - cands[k - 1].value();
    if (gap / 2 < eta) eta = gap / 2;
  }
  for (const auto& c : cands) {
    if (!c.is_finite()) break;
    if (are_eps_interleaved(a, b, Rational(c.value() + eta))) return c;
  }
  return Distance::infinity();
}

/// Bottleneck distance by enumerating every partial bijection between the
/// expanded summand lists. Exponential; keep inputs to a handful of summands.
inline Distance module_distance_exhaustive(const PModule& m, const PModule& n) {
  const auto a = m.expanded();
  const auto b = n.expanded();
  std::vector<char> used(b.size(), 0);
  Distance best = Distance::infinity();
  bool found = false;

  std::function<void(std::size_t, Distance)> walk = [&](std::size_t i, Distance cost) {
    if (found && best <= cost) return;
    if (i == a.size()) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!used[j]) cost = max(cost, distance_to_zero(b[j]));
      }
      if (!found || cost < best) {
        best = cost;
        found = true;
      }
      return;
    }
    walk(i + 1, max(cost, distance_to_zero(a[i])));
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      walk(i + 1, max(cost, interval_distance(a[i], b[j])));
      used[j] = 0;
    }
  };
  walk(0, Distance::zero());
  return best;
}

}  // namespace persistd::oracle
