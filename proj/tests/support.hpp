#pragma once

#include <string_view>
#include <vector>

#include "persistd/interval.hpp"
#include "persistd/pmodule.hpp"
#include "persistd/random.hpp"

namespace testing_support {

inline persistd::Interval iv(std::string_view text) { return persistd::parse_interval(text); }

inline persistd::PModule mod(std::initializer_list<std::string_view> texts) {
  std::vector<persistd::Interval> out;
  for (auto t : texts) out.push_back(iv(t));
  return persistd::PModule(out);
}

inline persistd::Rational q(long p, long d = 1) { return persistd::Rational(p, d); }

// Every interval with endpoints in {k/2 : 0 <= k <= 2*span} plus the rays,
// all decorations. Small enough for exhaustive checks.
inline std::vector<persistd::Interval> half_grid(int span = 3) {
  using namespace persistd;
  std::vector<Endpoint> los{Endpoint::neg_inf()};
  std::vector<Endpoint> his{Endpoint::pos_inf()};
  for (int k = 0; k <= 2 * span; ++k) {
    const Rational v(k, 2);
    los.push_back(Endpoint::closed_at(v));
    los.push_back(Endpoint::open_at(v));
    his.push_back(Endpoint::closed_at(v));
    his.push_back(Endpoint::open_at(v));
  }
  std::vector<Interval> out;
  for (const auto& lo : los) {
    for (const auto& hi : his) {
      Interval i = make_interval(lo, hi);
      if (!i.is_empty()) out.push_back(i);
    }
  }
  return out;
}

}  // namespace testing_support
