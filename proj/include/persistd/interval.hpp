#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "persistd/error.hpp"
#include "persistd/rational.hpp"

namespace persistd {

/// An endpoint value together with a membership flag. Infinite endpoints
/// are always open.
struct Endpoint {
  ExtRational value;
  bool closed = false;

  static Endpoint closed_at(Rational v) { return {ExtRational(std::move(v)), true}; }
  static Endpoint open_at(Rational v) { return {ExtRational(std::move(v)), false}; }
  static Endpoint neg_inf() { return {ExtRational::neg_inf(), false}; }
  static Endpoint pos_inf() { return {ExtRational::pos_inf(), false}; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Order on endpoints used as lower bounds: larger means the bound excludes
/// more. At equal values closed < open.
inline std::strong_ordering lower_order(const Endpoint& a, const Endpoint& b) {
  if (auto c = a.value <=> b.value; c != 0) return c;
  return static_cast<int>(!a.closed) <=> static_cast<int>(!b.closed);
}

/// Order on endpoints used as upper bounds: larger means the bound admits
/// more. At equal values open < closed.
inline std::strong_ordering upper_order(const Endpoint& a, const Endpoint& b) {
  if (auto c = a.value <=> b.value; c != 0) return c;
  return static_cast<int>(a.closed) <=> static_cast<int>(b.closed);
}

/// A (possibly empty) interval of the real line with rational or infinite
/// endpoints. Nonempty intervals satisfy lo.value <= hi.value, and equal
/// values only occur for closed singletons [r,r].
///
/// An Interval also stands for the interval persistence module supported on
/// it; the empty interval is the zero module.
class Interval {
 public:
  /// The empty interval.
  Interval() = default;

  static Interval empty() { return {}; }

  bool is_empty() const noexcept { return empty_; }

  /// Lower endpoint; only meaningful for nonempty intervals.
  const Endpoint& lo() const {
    if (empty_) throw DomainError("lo() of the empty interval");
    return lo_;
  }
  const Endpoint& hi() const {
    if (empty_) throw DomainError("hi() of the empty interval");
    return hi_;
  }

  bool is_singleton() const noexcept { return !empty_ && lo_.value == hi_.value; }
  bool is_bounded() const noexcept {
    return empty_ || (lo_.value.is_finite() && hi_.value.is_finite());
  }

  bool contains(const Rational& x) const {
    if (empty_) return false;
    const ExtRational ex(x);
    const bool above = lo_.closed ? lo_.value <= ex : lo_.value < ex;
    const bool below = hi_.closed ? ex <= hi_.value : ex < hi_.value;
    return above && below;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Interval(Endpoint lo, Endpoint hi) : empty_(false), lo_(std::move(lo)), hi_(std::move(hi)) {}

  friend Interval make_interval(Endpoint lo, Endpoint hi);

  bool empty_ = true;
  Endpoint lo_;
  Endpoint hi_;
};

/// Builds the interval {x : lo ◁ x ◁ hi}. Endpoint pairs describing no
/// points normalize to the empty interval. A closed infinite endpoint is
/// malformed and raises DomainError.
inline Interval make_interval(Endpoint lo, Endpoint hi) {
  if ((!lo.value.is_finite() && lo.closed) || (!hi.value.is_finite() && hi.closed)) {
    throw DomainError("infinite endpoints must be open");
  }
  if (lo.value.is_pos_inf() || hi.value.is_neg_inf()) return Interval::empty();
  if (hi.value < lo.value) return Interval::empty();
  if (lo.value == hi.value && !(lo.closed && hi.closed)) return Interval::empty();
  return Interval(std::move(lo), std::move(hi));
}

/// Convenience constructors for the four finite shapes.
inline Interval closed_open(Rational a, Rational b) {
  return make_interval(Endpoint::closed_at(std::move(a)), Endpoint::open_at(std::move(b)));
}
inline Interval open_closed(Rational a, Rational b) {
  return make_interval(Endpoint::open_at(std::move(a)), Endpoint::closed_at(std::move(b)));
}
inline Interval closed(Rational a, Rational b) {
  return make_interval(Endpoint::closed_at(std::move(a)), Endpoint::closed_at(std::move(b)));
}
inline Interval open(Rational a, Rational b) {
  return make_interval(Endpoint::open_at(std::move(a)), Endpoint::open_at(std::move(b)));
}
inline Interval singleton(const Rational& r) { return closed(r, r); }

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const Endpoint& lo = lower_order(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo();
  const Endpoint& hi = upper_order(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi();
  return make_interval(lo, hi);
}

/// Set inclusion A ⊆ B.
inline bool is_subset(const Interval& a, const Interval& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  return lower_order(b.lo(), a.lo()) <= 0 && upper_order(a.hi(), b.hi()) <= 0;
}

/// The interval partial order A <= B: every point of A lies below some point
/// of B, and every point of B lies above some point of A.
///
/// Empty conventions: Empty <= Empty; Empty <= B and A <= Empty are false
/// for nonempty A, B.
inline bool interval_leq(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  return upper_order(a.hi(), b.hi()) <= 0 && lower_order(a.lo(), b.lo()) <= 0;
}

/// A ≺ B: every point of A is <= every point of B. Vacuously true when
/// either side is empty.
inline bool strictly_precedes(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return true;
  return a.hi().value <= b.lo().value;
}

/// For J <= I (both nonempty) returns (J \ (I∩J), I \ (I∩J)). Throws
/// OrderingError when J <= I fails.
inline std::pair<Interval, Interval> residuals(const Interval& j, const Interval& i) {
  if (j.is_empty() || i.is_empty()) throw DomainError("residuals of an empty interval");
  if (!interval_leq(j, i)) throw OrderingError("residuals require J <= I");
  const Interval common = intersect(i, j);
  if (common.is_empty()) return {j, i};
  // The complement of an endpoint flips its decoration; infinities stay open.
  auto complement = [](const Endpoint& e) { return Endpoint{e.value, e.value.is_finite() && !e.closed}; };
  Interval below = make_interval(j.lo(), complement(common.lo()));
  Interval above = make_interval(complement(common.hi()), i.hi());
  return {std::move(below), std::move(above)};
}

/// sup - inf, decorations ignored. Zero for Empty and singletons.
inline Distance diameter(const Interval& a) {
  if (a.is_empty()) return Distance::zero();
  if (!a.is_bounded()) return Distance::infinity();
  return Distance(Rational(a.hi().value.value() - a.lo().value.value()));
}

/// I[ε] = {x : x + ε ∈ I}: both endpoints move down by ε.
inline Interval shift(const Interval& a, const Rational& eps) {
  if (a.is_empty()) return a;
  return make_interval(Endpoint{a.lo().value - eps, a.lo().closed},
                       Endpoint{a.hi().value - eps, a.hi().closed});
}

/// The ε-erosion I[ε] ∩ I[-ε].
inline Interval erode(const Interval& a, const Rational& eps) {
  if (eps < 0) throw DomainError("erosion by a negative amount");
  return intersect(shift(a, eps), shift(a, Rational(-eps)));
}

/// Canonical total order on nonempty intervals:
/// (lo under lower_order, hi under upper_order), lexicographically.
/// Empty sorts first.
inline std::strong_ordering canonical_order(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) {
    return static_cast<int>(!a.is_empty()) <=> static_cast<int>(!b.is_empty());
  }
  if (auto c = lower_order(a.lo(), b.lo()); c != 0) return c;
  return upper_order(a.hi(), b.hi());
}

// ---------------------------------------------------------------------------
// Text form: `[lo,hi)`, `(lo,hi]`, `[lo,hi]`, `(lo,hi)`, `empty`

inline std::string to_string(const Interval& a) {
  if (a.is_empty()) return "empty";
  std::string out;
  out += a.lo().closed ? '[' : '(';
  out += to_string(a.lo().value);
  out += ',';
  out += to_string(a.hi().value);
  out += a.hi().closed ? ']' : ')';
  return out;
}

/// Parses the interval text form. Unlike make_interval, a pair with
/// lo > hi is an error rather than Empty, and `[inf` / `-inf]` style
/// closed infinities are rejected.
inline Interval parse_interval(std::string_view text, std::size_t base_offset = 0) {
  std::size_t offset = base_offset;
  const std::string_view s = detail::trim(text, offset);
  if (s == "empty") return Interval::empty();
  if (s.size() < 2) throw ParseError("expected an interval", offset);
  const char open_ch = s.front();
  const char close_ch = s.back();
  if (open_ch != '[' && open_ch != '(') throw ParseError("expected '[' or '('", offset);
  if (close_ch != ']' && close_ch != ')') {
    throw ParseError("expected ']' or ')'", offset + s.size() - 1);
  }
  const std::string_view body = s.substr(1, s.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected ','", offset + 1);
  if (body.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("unexpected second ','", offset + 1 + body.find(',', comma + 1));
  }
  const ExtRational lo = parse_ext_rational(body.substr(0, comma), offset + 1);
  const ExtRational hi = parse_ext_rational(body.substr(comma + 1), offset + 2 + comma);
  if (!lo.is_finite() && open_ch == '[') throw ParseError("closed infinite endpoint", offset);
  if (!hi.is_finite() && close_ch == ']') {
    throw ParseError("closed infinite endpoint", offset + s.size() - 1);
  }
  if (hi < lo) throw ParseError("lower endpoint exceeds upper endpoint", offset + 1);
  return make_interval(Endpoint{lo, open_ch == '['}, Endpoint{hi, close_ch == ']'});
}

}  // namespace persistd
