#include "fnil/hsl.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnil {

std::string HslValue::to_string() const {
  switch (kind) {
    case Kind::Exact:
      return std::to_string(value);
    case Kind::UpperBound:
      return "<= " + std::to_string(value);
    case Kind::Unknown:
      return "unknown";
  }
  return "?";
}

HslValue hsl_max(const HslValue& a, const HslValue& b) {
  if (!a.is_known() || !b.is_known()) return HslValue::unknown();
  const int64_t v = std::max(a.value, b.value);
  if (a.is_exact() && b.is_exact()) return HslValue::exact(v);
  // max of an exact value and a (possibly loose) upper bound stays an upper
  // bound unless the exact side dominates it.
  if (a.is_exact() && a.value >= b.value) return HslValue::exact(a.value);
  if (b.is_exact() && b.value >= a.value) return HslValue::exact(b.value);
  return HslValue::upper(v);
}

HslValue hsl_min_upper(const HslValue& a, const HslValue& b) {
  if (!a.is_known()) return b.is_known() ? HslValue::upper(b.value) : a;
  if (!b.is_known()) return HslValue::upper(a.value);
  return HslValue::upper(std::min(a.value, b.value));
}

HslValue hsl_ses_bound(const HslValue& a, const HslValue& c, bool split) {
  if (split) return hsl_max(a, c);
  if (!a.is_known() || !c.is_known()) return HslValue::unknown();
  if (a.value == 0 && c.value == 0 && a.is_exact() && c.is_exact())
    return HslValue::exact(0);
  return HslValue::upper(a.value + c.value);
}

HslValue hsl_window_bound(const DegreeSupport& window, const HslValue& hsl_deg0,
                          int64_t p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (window.is_empty) return HslValue::exact(0);
  if (window.lo == kNegInf || window.hi == kPosInf) return HslValue::unknown();
  const int64_t extent = std::max(std::abs(window.lo), std::abs(window.hi));
  int64_t e0 = 0, power = 1;
  while (power <= extent) {
    power *= p;
    ++e0;
  }
  const bool has_zero = window.lo <= 0 && 0 <= window.hi;
  if (!has_zero) return HslValue::upper(e0);
  if (!hsl_deg0.is_known()) return HslValue::unknown();
  return HslValue::upper(std::max(hsl_deg0.value, e0));
}

int64_t f_exp(std::optional<int64_t> a_j, int64_t p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (!a_j.has_value() || *a_j < 1) return 0;
  int64_t e = 0, power = 1;
  while (power <= *a_j) {
    power *= p;
    ++e;
  }
  return e;
}

}  // namespace fnil
