#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace persistd::detail {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

/// Maximum-cardinality bipartite matching (Hopcroft-Karp).
///
/// `Graph` exposes left_count(), right_count(), degree(u) and
/// neighbor(u, k) for left vertices u; neighbours are right vertices. The
/// graph is read through this interface only, so dense neighbourhoods can
/// stay implicit.
template <class Graph>
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const Graph& g)
      : g_(g),
        match_left_(g.left_count(), kUnmatched),
        match_right_(g.right_count(), kUnmatched),
        dist_(g.left_count()),
        cursor_(g.left_count()) {}

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::size_t u = 0; u < g_.left_count(); ++u) {
        if (match_left_[u] == kUnmatched && dfs(u)) ++size;
      }
    }
    return size;
  }

  const std::vector<std::size_t>& match_left() const noexcept { return match_left_; }
  const std::vector<std::size_t>& match_right() const noexcept { return match_right_; }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> queue;
    for (std::size_t u = 0; u < g_.left_count(); ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      const std::size_t deg = g_.degree(u);
      for (std::size_t k = 0; k < deg; ++k) {
        const std::size_t partner = match_right_[g_.neighbor(u, k)];
        if (partner == kUnmatched) {
          found = true;
        } else if (dist_[partner] == kInf) {
          dist_[partner] = dist_[u] + 1;
          queue.push(partner);
        }
      }
    }
    return found;
  }

  // Iterative would avoid deep recursion on huge inputs; the vertex cap keeps
  // the depth bounded in practice.
  bool dfs(std::size_t u) {
    const std::size_t deg = g_.degree(u);
    for (std::size_t& k = cursor_[u]; k < deg; ++k) {
      const std::size_t v = g_.neighbor(u, k);
      const std::size_t partner = match_right_[v];
      if (partner == kUnmatched || (dist_[partner] == dist_[u] + 1 && dfs(partner))) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++k;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const Graph& g_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
};

}  // namespace persistd::detail
