#pragma once

#include "persistd/error.hpp"
#include "persistd/interval.hpp"
#include "persistd/rational.hpp"

namespace persistd {

/// Decides whether the interval modules I and J are ε-interleaved: the
/// ε-erosion of each must be contained in the other. Either side may be
/// Empty (the zero module).
inline bool are_eps_interleaved(const Interval& a, const Interval& b, const Rational& eps) {
  if (eps < 0) throw DomainError("interleaving parameter must be nonnegative");
  return is_subset(erode(a, eps), b) && is_subset(erode(b, eps), a);
}

/// d_I(I, 0) = diam(I) / 2.
inline Distance distance_to_zero(const Interval& a) { return diameter(a).half(); }

/// Interleaving distance between two interval modules, in closed form.
///
/// With a = inf I, b = sup I, c = inf J, d = sup J the distance is
///   min( max(|a - c|, |b - d|), max(diam I, diam J) / 2 ),
/// where a gap between equal infinities is 0 and a gap against a single
/// infinity is +inf. Decorations do not affect the value, only whether the
/// infimum is attained.
inline Distance interval_distance(const Interval& a, const Interval& b) {
  if (a.is_empty()) return distance_to_zero(b);
  if (b.is_empty()) return distance_to_zero(a);
  const Distance matched = max(Distance(endpoint_gap(a.lo().value, b.lo().value)),
                               Distance(endpoint_gap(a.hi().value, b.hi().value)));
  const Distance collapsed = max(diameter(a), diameter(b)).half();
  return min(matched, collapsed);
}

/// Open-ball membership: d_I(I, center) < radius.
inline bool ball_membership(const Interval& a, const Interval& center, const Rational& radius) {
  if (radius <= 0) throw DomainError("ball radius must be positive");
  return interval_distance(a, center) < Distance(radius);
}

}  // namespace persistd
