#pragma once

#include "persistd/error.hpp"
#include "persistd/interval.hpp"

namespace persistd {

/// True iff there is a nonzero morphism of interval modules I -> J, which
/// happens exactly when J <= I and the intervals meet.
inline bool has_nonzero_map(const Interval& from, const Interval& to) {
  if (from.is_empty() || to.is_empty()) throw DomainError("nonzero maps need nonempty intervals");
  return interval_leq(to, from) && !intersect(from, to).is_empty();
}

/// Image, kernel and cokernel of the canonical map I -> J. The map itself is
/// the identity on the image and zero elsewhere, so it is not stored.
struct MapParts {
  Interval image;
  Interval kernel;
  Interval cokernel;
};

inline MapParts canonical_map_parts(const Interval& from, const Interval& to) {
  if (!has_nonzero_map(from, to)) throw NoNonzeroMapError("no nonzero map between the intervals");
  auto [cokernel, kernel] = residuals(to, from);
  return {intersect(from, to), std::move(kernel), std::move(cokernel)};
}

}  // namespace persistd
