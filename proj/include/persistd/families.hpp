#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "persistd/error.hpp"
#include "persistd/interval.hpp"
#include "persistd/pmodule.hpp"

// Generators for the constructive witness families. Infinite direct sums
// only appear as finite truncations; each generator notes which limiting
// statement its truncations stand in for.

namespace persistd {

/// Exclusive upper bound on cube coordinates for dimension n: 1 / (100 n).
inline Rational cube_side_limit(std::size_t n) { return Rational(1, 100 * static_cast<long>(n)); }

/// M(x) = ⊕_{i=1}^{N} [ i/N, i/N + 1/(10N) + x_i ). For coordinates in
/// [0, 1/(100N)) the map x -> M(x) is an isometry from the sup-norm cube
/// into the module space.
inline PModule cube_point_module(std::size_t n, const std::vector<Rational>& x) {
  if (n == 0) throw DomainError("cube dimension must be positive");
  if (x.size() != n) throw DomainError("cube point has the wrong number of coordinates");
  const Rational limit = cube_side_limit(n);
  const long big_n = static_cast<long>(n);
  std::vector<Interval> summands;
  summands.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < 0 || x[i] >= limit) {
      throw DomainError("cube coordinate " + std::to_string(i) + " outside [0, 1/(100N))");
    }
    const Rational start(static_cast<long>(i + 1), big_n);
    summands.push_back(closed_open(start, Rational(start + Rational(1, 10 * big_n) + x[i])));
  }
  return PModule(summands);
}

/// Truncation of the binary-sequence module: summand n is [2n-1, 2n+1) for
/// bit 0 and [2n-2, 2n+2) for bit 1. Distinct sequences of equal length sit
/// at distance exactly 1, which is what rules out a countable dense set.
inline PModule binary_sequence_module(const std::vector<bool>& bits) {
  if (bits.empty()) throw DomainError("bit list must be nonempty");
  std::vector<Interval> summands;
  summands.reserve(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const long n = static_cast<long>(k + 1);
    summands.push_back(bits[k] ? closed_open(2 * (n - 1), 2 * n + 2)
                               : closed_open(2 * n - 1, 2 * n + 1));
  }
  return PModule(summands);
}

/// M_n = ⊕_{k=0}^{n} [-1/2^k, 1/2^k): a Cauchy sequence with no limit among
/// pointwise finite-dimensional modules.
inline PModule cauchy_witness(std::size_t n) {
  std::vector<Interval> summands;
  summands.reserve(n + 1);
  Rational r(1);
  for (std::size_t k = 0; k <= n; ++k) {
    summands.push_back(closed_open(Rational(-r), r));
    r /= 2;
  }
  return PModule(summands);
}

/// ⊕_{k=1}^{n} [0, k). Its distance to 0 is n/2, unbounded in n.
inline PModule staircase(std::size_t n) {
  if (n == 0) throw DomainError("staircase length must be positive");
  std::vector<Interval> summands;
  for (std::size_t k = 1; k <= n; ++k) summands.push_back(closed_open(0, static_cast<long>(k)));
  return PModule(summands);
}

/// n copies of I. For I = [c,d) distinct counts are (d-c)/2 apart.
inline PModule replicate(const Interval& i, std::size_t n) {
  if (i.is_empty()) throw DomainError("cannot replicate the empty interval");
  if (n == 0) return PModule();
  return PModule(std::vector<Summand>{{i, n}});
}

enum class Inclusion {
  FfidCdInFfid,
  FfidInCfid,
  FidInCid,
  FidInPfd,
  CidInRid,
  PfdInRid,
};

inline constexpr std::array<Inclusion, 6> kAllInclusions = {
    Inclusion::FfidCdInFfid, Inclusion::FfidInCfid, Inclusion::FidInCid,
    Inclusion::FidInPfd,     Inclusion::CidInRid,   Inclusion::PfdInRid,
};

inline std::string_view inclusion_name(Inclusion inc) {
  switch (inc) {
    case Inclusion::FfidCdInFfid: return "ffid_cd_in_ffid";
    case Inclusion::FfidInCfid: return "ffid_in_cfid";
    case Inclusion::FidInCid: return "fid_in_cid";
    case Inclusion::FidInPfd: return "fid_in_pfd";
    case Inclusion::CidInRid: return "cid_in_rid";
    case Inclusion::PfdInRid: return "pfd_in_rid";
  }
  return "";
}

inline Inclusion parse_inclusion(std::string_view name) {
  for (Inclusion inc : kAllInclusions) {
    if (inclusion_name(inc) == name) return inc;
  }
  throw DomainError("unknown inclusion '" + std::string(name) + "'");
}

/// The module N near M but outside the smaller class of `inclusion`, with
/// infinite direct sums truncated to `trunc` copies:
///   ffid_cd_in_ffid  M ⊕ [d, d+2ε)               (needs `bounds` = [c,d])
///   ffid_in_cfid     M ⊕ trunc × [0, 2ε)
///   fid_in_cid       M ⊕ trunc × [0, 2ε)
///   fid_in_pfd       M ⊕ ⊕_{k=1}^{trunc} [k, k+2ε)
///   cid_in_rid       M ⊕ trunc × [0, 2ε)
///   pfd_in_rid       M ⊕ trunc × [0, 2ε)
/// Every added summand is at distance ε from 0, so d_I(M, N) <= ε; equality
/// holds when no summand of M is within ε of an added one.
inline PModule open_subset_witness(const PModule& m, Inclusion inclusion, const Rational& eps,
                                   std::size_t trunc, const std::optional<Bounds>& bounds = {}) {
  if (eps <= 0) throw DomainError("witness radius must be positive");
  if (trunc == 0) throw DomainError("truncation length must be positive");
  const Rational width(2 * eps);
  std::vector<Summand> extra;
  switch (inclusion) {
    case Inclusion::FfidCdInFfid: {
      if (!bounds) throw DomainError("ffid_cd_in_ffid needs bounds [c,d]");
      const auto cls = classify(m, bounds);
      if (!cls.in_ffid_cd.value_or(false)) {
        throw ClassMismatchError("module is not contained in the given bounds");
      }
      extra.push_back({closed_open(bounds->hi, Rational(bounds->hi + width)), 1});
      break;
    }
    case Inclusion::FfidInCfid:
      if (!classify(m).in_ffid) throw ClassMismatchError("module has an unbounded summand");
      extra.push_back({closed_open(0, width), trunc});
      break;
    case Inclusion::FidInPfd:
      for (std::size_t k = 1; k <= trunc; ++k) {
        const Rational start(static_cast<long>(k));
        extra.push_back({closed_open(start, Rational(start + width)), 1});
      }
      break;
    case Inclusion::FidInCid:
    case Inclusion::CidInRid:
    case Inclusion::PfdInRid:
      // Every finite module lies in (fid), (cid) and (pfd).
      extra.push_back({closed_open(0, width), trunc});
      break;
  }
  return direct_sum(m, PModule(std::move(extra)));
}

}  // namespace persistd
