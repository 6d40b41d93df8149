#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "persistd/error.hpp"

namespace persistd {

/// Exact rational number. Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// A rational extended by -inf and +inf, totally ordered
/// -inf < every finite value < +inf.
class ExtRational {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtRational(int value) : value_(value) {}                  // NOLINT

  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  const Rational& value() const {
    if (!is_finite()) throw DomainError("value() of an infinite ExtRational");
    return value_;
  }

  ExtRational operator-() const {
    switch (kind_) {
      case Kind::NegInf: return pos_inf();
      case Kind::PosInf: return neg_inf();
      case Kind::Finite: break;
    }
    return ExtRational(Rational(-value_));
  }

  friend ExtRational operator+(const ExtRational& x, const Rational& r) {
    if (!x.is_finite()) return x;
    return ExtRational(Rational(x.value_ + r));
  }
  friend ExtRational operator-(const ExtRational& x, const Rational& r) {
    if (!x.is_finite()) return x;
    return ExtRational(Rational(x.value_ - r));
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }

  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

/// |x - y| on the extended line, with |inf - inf| = |-inf - (-inf)| = 0 and
/// +inf whenever exactly one side is infinite (or the infinities differ).
inline ExtRational endpoint_gap(const ExtRational& x, const ExtRational& y) {
  if (x.is_finite() && y.is_finite()) return ExtRational(Rational(abs(x.value() - y.value())));
  if (x.kind() == y.kind()) return ExtRational(0);
  return ExtRational::pos_inf();
}

/// A nonnegative extended rational: the codomain of every distance.
class Distance {
 public:
  Distance() = default;
  explicit Distance(ExtRational value) : value_(std::move(value)) {
    if (value_ < ExtRational(0)) throw DomainError("distance must be nonnegative");
  }
  explicit Distance(Rational value) : Distance(ExtRational(std::move(value))) {}

  static Distance zero() { return Distance(); }
  static Distance infinity() { return Distance(ExtRational::pos_inf()); }

  bool is_infinite() const noexcept { return value_.is_pos_inf(); }
  bool is_finite() const noexcept { return value_.is_finite(); }
  const ExtRational& ext() const noexcept { return value_; }
  const Rational& value() const { return value_.value(); }

  Distance half() const {
    if (is_infinite()) return *this;
    return Distance(Rational(value() / 2));
  }

  friend Distance operator+(const Distance& a, const Distance& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Distance(Rational(a.value() + b.value()));
  }
  friend Distance operator*(const Rational& k, const Distance& d) {
    if (k < 0) throw DomainError("distance scaled by a negative factor");
    if (d.is_infinite()) return k == 0 ? zero() : infinity();
    return Distance(Rational(k * d.value()));
  }

  friend bool operator==(const Distance&, const Distance&) = default;
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    return a.value_ <=> b.value_;
  }

 private:
  ExtRational value_{0};
};

inline Distance max(const Distance& a, const Distance& b) { return a < b ? b : a; }
inline Distance min(const Distance& a, const Distance& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// Text form

inline std::string to_string(const Rational& r) {
  const auto num = numerator(r);
  const auto den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const ExtRational& x) {
  switch (x.kind()) {
    case ExtRational::Kind::NegInf: return "-inf";
    case ExtRational::Kind::PosInf: return "inf";
    case ExtRational::Kind::Finite: break;
  }
  return to_string(x.value());
}

inline std::string to_string(const Distance& d) { return to_string(d.ext()); }

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
/// Only for human display; never fed back into computations.
inline std::string to_decimal(const ExtRational& x, unsigned digits = 6) {
  if (!x.is_finite()) return to_string(x);
  using boost::multiprecision::cpp_int;
  const Rational& r = x.value();
  cpp_int num = numerator(r);
  const cpp_int den = denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  cpp_int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const cpp_int scaled = num * scale / den;
  const cpp_int whole = scaled / scale;
  std::string frac = cpp_int(scaled % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = sign + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parses an optionally signed run of digits; returns the number of chars used.
inline std::size_t scan_integer(std::string_view s, std::size_t base_offset, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == digits_start) throw ParseError("expected digits", base_offset + i);
  return i;
}

}  // namespace detail

/// Parses `p/q` or an integer (optionally signed, surrounding blanks
/// ignored). `base_offset` is added to reported error positions.
inline Rational parse_rational(std::string_view text, std::size_t base_offset = 0) {
  std::size_t offset = base_offset;
  const std::string_view s = detail::trim(text, offset);
  if (s.empty()) throw ParseError("expected a rational number", offset);
  const std::size_t num_len = detail::scan_integer(s, offset, true);
  using boost::multiprecision::cpp_int;
  cpp_int num(std::string(s.substr(s[0] == '+' ? 1 : 0, num_len - (s[0] == '+' ? 1 : 0))));
  if (num_len == s.size()) return Rational(num);
  if (s[num_len] != '/') throw ParseError("unexpected character in rational", offset + num_len);
  const std::string_view den_text = s.substr(num_len + 1);
  const std::size_t den_len = detail::scan_integer(den_text, offset + num_len + 1, false);
  if (den_len != den_text.size()) {
    throw ParseError("unexpected character in rational", offset + num_len + 1 + den_len);
  }
  cpp_int den{std::string(den_text)};
  if (den == 0) throw ParseError("zero denominator", offset + num_len + 1);
  return Rational(num, den);
}

/// Like parse_rational, but also accepts `inf`, `+inf` and `-inf`.
inline ExtRational parse_ext_rational(std::string_view text, std::size_t base_offset = 0) {
  std::size_t offset = base_offset;
  const std::string_view s = detail::trim(text, offset);
  if (s == "inf" || s == "+inf") return ExtRational::pos_inf();
  if (s == "-inf") return ExtRational::neg_inf();
  return ExtRational(parse_rational(s, offset));
}

}  // namespace persistd
