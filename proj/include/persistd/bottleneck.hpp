#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persistd/detail/matching.hpp"
#include "persistd/error.hpp"
#include "persistd/interleaving.hpp"
#include "persistd/pmodule.hpp"

// Interleaving distance between finitely interval-decomposable modules,
// computed as the bottleneck distance of their barcodes. The identity
// d_I = d_B for such modules is taken as given.
//
// Feasibility of a threshold t is a perfect-matching question on the usual
// doubled graph: left = summands of M plus one "diagonal" slot per summand
// of N, right = summands of N plus one diagonal slot per summand of M.
// M_i - N_j when d(M_i, N_j) <= t, M_i - diag(M_i) when d(M_i, 0) <= t,
// diag(N_j) - N_j when d(N_j, 0) <= t, and every diagonal slot is joined to
// every other-side diagonal slot. Summands with d(., 0) > t therefore have
// to be matched to a real partner.

namespace persistd {

inline constexpr std::size_t kDefaultVertexCap = 10000;

struct MatchOptions {
  /// Upper bound on the total number of expanded summands of both modules.
  std::size_t vertex_cap = kDefaultVertexCap;
};

/// A pairing of summands of M and N (indices into `expanded()` order) plus
/// the summands left unmatched, witnessing that the bottleneck cost is at
/// most `threshold`.
struct MatchingCertificate {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched_m;
  std::vector<std::size_t> unmatched_n;
  Distance threshold;

  friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

namespace detail {

class DoubledGraph {
 public:
  DoubledGraph(std::vector<std::vector<std::size_t>> pair_adj, std::vector<char> delete_m,
               std::vector<char> delete_n)
      : pair_adj_(std::move(pair_adj)),
        delete_m_(std::move(delete_m)),
        delete_n_(std::move(delete_n)) {}

  std::size_t m() const noexcept { return delete_m_.size(); }
  std::size_t n() const noexcept { return delete_n_.size(); }
  std::size_t left_count() const noexcept { return m() + n(); }
  std::size_t right_count() const noexcept { return n() + m(); }

  std::size_t degree(std::size_t u) const {
    if (u < m()) return pair_adj_[u].size() + (delete_m_[u] ? 1 : 0);
    return m() + (delete_n_[u - m()] ? 1 : 0);
  }

  std::size_t neighbor(std::size_t u, std::size_t k) const {
    if (u < m()) {
      if (k < pair_adj_[u].size()) return pair_adj_[u][k];
      return n() + u;
    }
    const std::size_t j = u - m();
    if (delete_n_[j]) {
      if (k == 0) return j;
      --k;
    }
    return n() + k;
  }

 private:
  std::vector<std::vector<std::size_t>> pair_adj_;
  std::vector<char> delete_m_;
  std::vector<char> delete_n_;
};

// Perfect matching of the doubled graph translated back into a pairing, or
// nullopt when none exists.
inline std::optional<MatchingCertificate> solve_doubled(const DoubledGraph& g) {
  HopcroftKarp<DoubledGraph> hk(g);
  if (hk.run() != g.left_count()) return std::nullopt;
  MatchingCertificate cert;
  const auto& left = hk.match_left();
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (left[i] < g.n()) {
      cert.pairs.emplace_back(i, left[i]);
    } else {
      cert.unmatched_m.push_back(i);
    }
  }
  const auto& right = hk.match_right();
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (right[j] >= g.m()) cert.unmatched_n.push_back(j);
  }
  return cert;
}

inline void check_cap(std::size_t total, const MatchOptions& options) {
  if (total > options.vertex_cap) {
    throw CapExceededError("matching needs " + std::to_string(total) +
                           " summand vertices, above the cap of " +
                           std::to_string(options.vertex_cap));
  }
}

// Expanded summands and all pairwise/deletion costs of a module pair.
class BottleneckInstance {
 public:
  BottleneckInstance(const PModule& m, const PModule& n, const MatchOptions& options)
      : a_(m.expanded()), b_(n.expanded()) {
    check_cap(a_.size() + b_.size(), options);
    cost_.resize(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      cost_[i].reserve(b_.size());
      for (const auto& j : b_) cost_[i].push_back(interval_distance(a_[i], j));
    }
    for (const auto& i : a_) zero_a_.push_back(distance_to_zero(i));
    for (const auto& j : b_) zero_b_.push_back(distance_to_zero(j));
  }

  /// Sorted distinct finite values the bottleneck cost can take, with 0.
  std::vector<Distance> candidates() const {
    std::vector<Distance> out{Distance::zero()};
    auto keep = [&](const Distance& d) {
      if (d.is_finite()) out.push_back(d);
    };
    for (const auto& row : cost_) std::for_each(row.begin(), row.end(), keep);
    std::for_each(zero_a_.begin(), zero_a_.end(), keep);
    std::for_each(zero_b_.begin(), zero_b_.end(), keep);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  DoubledGraph graph_at(const Distance& t) const {
    std::vector<std::vector<std::size_t>> adj(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      for (std::size_t j = 0; j < b_.size(); ++j) {
        if (cost_[i][j] <= t) adj[i].push_back(j);
      }
    }
    std::vector<char> del_a(a_.size());
    std::vector<char> del_b(b_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) del_a[i] = zero_a_[i] <= t;
    for (std::size_t j = 0; j < b_.size(); ++j) del_b[j] = zero_b_[j] <= t;
    return DoubledGraph(std::move(adj), std::move(del_a), std::move(del_b));
  }

  std::optional<MatchingCertificate> certificate_at(const Distance& t) const {
    auto cert = solve_doubled(graph_at(t));
    if (cert) cert->threshold = t;
    return cert;
  }

  /// Index of the smallest feasible candidate, or nullopt if none is.
  std::optional<std::size_t> first_feasible(const std::vector<Distance>& cands) const {
    std::size_t lo = 0;
    std::size_t hi = cands.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (certificate_at(cands[mid])) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    if (lo == cands.size()) return std::nullopt;
    return lo;
  }

 private:
  std::vector<Interval> a_;
  std::vector<Interval> b_;
  std::vector<std::vector<Distance>> cost_;
  std::vector<Distance> zero_a_;
  std::vector<Distance> zero_b_;
};

}  // namespace detail

/// True iff some partial matching has every matched pair at interval
/// distance <= t and every unmatched summand at distance <= t from 0.
inline bool bottleneck_feasible(const PModule& m, const PModule& n, const Distance& t,
                                const MatchOptions& options = {}) {
  return detail::BottleneckInstance(m, n, options).certificate_at(t).has_value();
}

/// d_I(M, N) for finitely interval-decomposable modules. Returns +inf when no
/// finite threshold admits a matching.
inline Distance module_distance(const PModule& m, const PModule& n,
                                const MatchOptions& options = {}) {
  const detail::BottleneckInstance inst(m, n, options);
  const auto cands = inst.candidates();
  const auto idx = inst.first_feasible(cands);
  return idx ? cands[*idx] : Distance::infinity();
}

/// A matching whose threshold equals module_distance(M, N).
inline MatchingCertificate distance_certificate(const PModule& m, const PModule& n,
                                                const MatchOptions& options = {}) {
  const detail::BottleneckInstance inst(m, n, options);
  const auto cands = inst.candidates();
  const auto idx = inst.first_feasible(cands);
  if (!idx) throw InfiniteDistanceError("modules are at infinite distance");
  return *inst.certificate_at(cands[*idx]);
}

/// Re-checks a certificate with exact arithmetic: every summand index is
/// used exactly once, matched pairs and unmatched summands respect the
/// threshold. Establishes threshold >= module_distance(M, N).
inline bool verify_certificate(const PModule& m, const PModule& n, const MatchingCertificate& cert) {
  const auto a = m.expanded();
  const auto b = n.expanded();
  std::vector<int> seen_a(a.size(), 0);
  std::vector<int> seen_b(b.size(), 0);
  for (const auto& [i, j] : cert.pairs) {
    if (i >= a.size() || j >= b.size()) return false;
    ++seen_a[i];
    ++seen_b[j];
    if (interval_distance(a[i], b[j]) > cert.threshold) return false;
  }
  for (std::size_t i : cert.unmatched_m) {
    if (i >= a.size()) return false;
    ++seen_a[i];
    if (distance_to_zero(a[i]) > cert.threshold) return false;
  }
  for (std::size_t j : cert.unmatched_n) {
    if (j >= b.size()) return false;
    ++seen_b[j];
    if (distance_to_zero(b[j]) > cert.threshold) return false;
  }
  auto once = [](int c) { return c == 1; };
  return std::all_of(seen_a.begin(), seen_a.end(), once) &&
         std::all_of(seen_b.begin(), seen_b.end(), once);
}

/// Decides whether M and N are ε-interleaved, through the matching
/// characterisation: an ε-matching whose pairs are ε-interleaved interval
/// modules and whose unmatched summands are ε-interleaved with 0.
inline bool modules_eps_interleaved(const PModule& m, const PModule& n, const Rational& eps,
                                    const MatchOptions& options = {}) {
  if (eps < 0) throw DomainError("interleaving parameter must be nonnegative");
  const auto a = m.expanded();
  const auto b = n.expanded();
  detail::check_cap(a.size() + b.size(), options);
  const Interval zero;
  std::vector<std::vector<std::size_t>> adj(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (are_eps_interleaved(a[i], b[j], eps)) adj[i].push_back(j);
    }
  }
  std::vector<char> del_a(a.size());
  std::vector<char> del_b(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) del_a[i] = are_eps_interleaved(a[i], zero, eps);
  for (std::size_t j = 0; j < b.size(); ++j) del_b[j] = are_eps_interleaved(b[j], zero, eps);
  return detail::solve_doubled(detail::DoubledGraph(std::move(adj), std::move(del_a),
                                                    std::move(del_b)))
      .has_value();
}

}  // namespace persistd
