#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "persistd/error.hpp"
#include "persistd/interleaving.hpp"
#include "persistd/interval.hpp"

namespace persistd {

struct Summand {
  Interval interval;
  std::size_t multiplicity = 1;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// A finitely interval-decomposable persistence module: a finite multiset of
/// nonempty intervals. Summands are kept in canonical order with equal
/// intervals merged, so `==` coincides with isomorphism.
class PModule {
 public:
  /// The zero module.
  PModule() = default;

  /// One summand per entry. Empty intervals are rejected.
  explicit PModule(const std::vector<Interval>& intervals) {
    summands_.reserve(intervals.size());
    for (const auto& i : intervals) summands_.push_back({i, 1});
    canonicalize();
  }

  explicit PModule(std::vector<Summand> summands) : summands_(std::move(summands)) {
    canonicalize();
  }

  const std::vector<Summand>& summands() const noexcept { return summands_; }

  /// Total number of summands counted with multiplicity.
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto& s : summands_) n += s.multiplicity;
    return n;
  }

  bool is_zero() const noexcept { return summands_.empty(); }

  /// One interval per summand copy, in canonical order.
  std::vector<Interval> expanded() const {
    std::vector<Interval> out;
    out.reserve(size());
    for (const auto& s : summands_) out.insert(out.end(), s.multiplicity, s.interval);
    return out;
  }

  friend bool operator==(const PModule&, const PModule&) = default;

 private:
  void canonicalize() {
    for (const auto& s : summands_) {
      if (s.interval.is_empty()) throw DomainError("a module summand cannot be empty");
      if (s.multiplicity == 0) throw DomainError("summand multiplicity must be positive");
    }
    std::stable_sort(summands_.begin(), summands_.end(), [](const Summand& x, const Summand& y) {
      return canonical_order(x.interval, y.interval) < 0;
    });
    std::vector<Summand> merged;
    merged.reserve(summands_.size());
    for (auto& s : summands_) {
      if (!merged.empty() && merged.back().interval == s.interval) {
        merged.back().multiplicity += s.multiplicity;
      } else {
        merged.push_back(std::move(s));
      }
    }
    summands_ = std::move(merged);
  }

  std::vector<Summand> summands_;
};

namespace detail {

// Builds a module from a per-summand transform, dropping empty results.
template <class Fn>
PModule map_summands(const PModule& m, Fn&& fn) {
  std::vector<Summand> out;
  out.reserve(m.summands().size());
  for (const auto& s : m.summands()) {
    Interval image = fn(s.interval);
    if (!image.is_empty()) out.push_back({std::move(image), s.multiplicity});
  }
  return PModule(std::move(out));
}

}  // namespace detail

inline PModule direct_sum(const PModule& m, const PModule& n) {
  std::vector<Summand> all = m.summands();
  all.insert(all.end(), n.summands().begin(), n.summands().end());
  return PModule(std::move(all));
}

struct Bounds {
  Rational lo;
  Rational hi;
};

struct ClassMembership {
  bool in_fid = true;
  bool in_ffid = false;
  std::optional<bool> in_ffid_cd;
  bool is_ephemeral = false;
  bool is_zero = false;
};

/// Membership of M in the finitely-presentable classes: (fid) always;
/// (ffid) when every summand is bounded; (ffid^[c,d]) when every summand
/// lies in [c,d]; ephemeral when every summand is a singleton.
inline ClassMembership classify(const PModule& m, const std::optional<Bounds>& bounds = {}) {
  if (bounds && !(bounds->lo < bounds->hi)) throw DomainError("class bounds need c < d");
  ClassMembership out;
  out.is_zero = m.is_zero();
  out.in_ffid = std::all_of(m.summands().begin(), m.summands().end(),
                            [](const Summand& s) { return s.interval.is_bounded(); });
  out.is_ephemeral = std::all_of(m.summands().begin(), m.summands().end(),
                                 [](const Summand& s) { return s.interval.is_singleton(); });
  if (bounds) {
    const Interval box = closed(bounds->lo, bounds->hi);
    out.in_ffid_cd = std::all_of(m.summands().begin(), m.summands().end(),
                                 [&](const Summand& s) { return is_subset(s.interval, box); });
  }
  return out;
}

/// The radical: the submodule generated by images of strictly earlier
/// structure maps. Singletons vanish and closed finite lower endpoints open.
inline PModule radical(const PModule& m) {
  return detail::map_summands(m, [](const Interval& i) {
    if (!i.lo().closed) return i;
    return make_interval(Endpoint{i.lo().value, false}, i.hi());
  });
}

/// The p-persistent submodule: each summand I becomes I ∩ I[-p], the part of
/// I reachable from p earlier.
inline PModule persistent_submodule(const PModule& m, const Rational& p) {
  if (p < 0) throw DomainError("persistence parameter must be nonnegative");
  const Rational back(-p);
  return detail::map_summands(m, [&](const Interval& i) { return intersect(i, shift(i, back)); });
}

/// Point t of the straight-line path from M (t = 0) to the zero module
/// (t = 1). For 0 < t < 1 each summand with inf c, sup d, h = (d - c)/2
/// becomes [c + t h, d - t h). Requires every summand to be bounded, since
/// unbounded summands sit at infinite distance from 0.
inline PModule contraction_path(const PModule& m, const Rational& t) {
  if (t < 0 || t > 1) throw DomainError("path parameter must lie in [0,1]");
  if (!classify(m).in_ffid) throw DomainError("contraction path needs bounded summands");
  if (t == 0) return m;
  if (t == 1) return PModule();
  return detail::map_summands(m, [&](const Interval& i) {
    const Rational& c = i.lo().value.value();
    const Rational& d = i.hi().value.value();
    const Rational step = t * (d - c) / 2;
    return closed_open(Rational(c + step), Rational(d - step));
  });
}

}  // namespace persistd
