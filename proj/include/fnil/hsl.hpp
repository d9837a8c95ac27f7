#pragma once

#include <cstdint>
#include <string>

#include "fnil/nilsupport.hpp"

namespace fnil {

// A Hartshorne-Speiser-Lyubeznik number, possibly only bounded from above.
// An upper bound may be tightened but is never silently treated as exact.
struct HslValue {
  enum class Kind { Exact, UpperBound, Unknown } kind = Kind::Unknown;
  int64_t value = 0;

  static HslValue exact(int64_t v) { return {Kind::Exact, v}; }
  static HslValue upper(int64_t v) { return {Kind::UpperBound, v}; }
  static HslValue unknown() { return {Kind::Unknown, 0}; }

  bool is_known() const { return kind != Kind::Unknown; }
  bool is_exact() const { return kind == Kind::Exact; }
  std::string to_string() const;
  friend bool operator==(const HslValue&, const HslValue&) = default;
};

HslValue hsl_max(const HslValue& a, const HslValue& b);
HslValue hsl_min_upper(const HslValue& a, const HslValue& b);

// Along a short exact sequence with lifts of nilpotents nilpotent, the middle
// HSL number is at most the sum of the outer ones; for a split sequence it is
// the maximum (exact when both inputs are exact).
HslValue hsl_ses_bound(const HslValue& a, const HslValue& c, bool split);

// Bound from a finite degree window. Classes in nonzero degrees are killed
// once the orbit degree leaves the window, which takes at most e_0 steps with
// p^e_0 > max(|lo|, |hi|); classes in degree zero need hsl_deg0 steps. The
// bound is max of the two contributions (restricted to e_0 alone when degree
// zero is outside the window). Returns Unknown for an unbounded window and
// exact 0 for an empty one.
HslValue hsl_window_bound(const DegreeSupport& window, const HslValue& hsl_deg0,
                          int64_t p);

// min{e : p^e > a_j}; zero when a_j < 1 (pass nullopt for a_j = -inf).
int64_t f_exp(std::optional<int64_t> a_j, int64_t p);

}  // namespace fnil
