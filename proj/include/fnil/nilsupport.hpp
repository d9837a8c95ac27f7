#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>

namespace fnil {

// Sentinels for extended-integer bookkeeping (degrees, depths, b-invariants).
constexpr int64_t kPosInf = std::numeric_limits<int64_t>::max() / 4;
constexpr int64_t kNegInf = -kPosInf;

inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

enum class Membership { Present, Absent, Unknown };

enum class NilKind {
  Empty,          // nilsupport empty: the module is nilpotent
  ZeroOnly,       // nilsupport exactly {0}: generalized nilpotent, not nilpotent
  Window,         // finite certified knowledge over a degree window
  LowerInterval,  // infinite nilsupport inside (-inf, sup_bound]
};

// Symbolic knowledge about the nil-support of one graded module with a
// Frobenius action. Membership of each degree is three-valued; every
// operation degrades exactness instead of inventing certainty.
struct NilSupportDescriptor {
  NilKind kind = NilKind::Empty;
  int64_t p = 2;

  // Window fields. Degrees above window_hi are certified absent, degrees in
  // [window_lo, window_hi] are certified by the member/unknown sets, and
  // degrees below window_lo are absent only when tail_known.
  int64_t window_lo = 0;
  int64_t window_hi = 0;
  std::set<int64_t> members;   // certified non-nilpotent degrees
  std::set<int64_t> unknown;   // scanned but undecided degrees
  bool tail_known = true;

  // LowerInterval fields: the nil-support is infinite and contained in
  // (-inf, sup_bound]. full means it equals that interval; sup_exact means
  // the supremum is attained at sup_bound.
  int64_t sup_bound = 0;
  bool sup_exact = false;
  bool full = false;

  static NilSupportDescriptor empty(int64_t p);
  static NilSupportDescriptor zero_only(int64_t p);
  static NilSupportDescriptor window(int64_t p, int64_t lo, int64_t hi,
                                     std::set<int64_t> members,
                                     std::set<int64_t> unknown,
                                     bool tail_known);
  static NilSupportDescriptor lower_interval(int64_t p, int64_t sup_bound,
                                             bool sup_exact, bool full);

  Membership membership(int64_t t) const;
  Membership zero_membership() const { return membership(0); }
  // All degrees strictly below x certified absent?
  bool absent_below(int64_t x) const;

  bool certainly_nilpotent() const { return kind == NilKind::Empty; }
  bool certainly_not_nilpotent() const;
  // nilsupport certified to be a subset of {0} (generalized nilpotent)
  bool certainly_generalized() const;
  bool certainly_not_generalized() const;

  void validate() const;  // invariants incl. closure of members under t -> tp
  std::string to_string() const;

  friend bool operator==(const NilSupportDescriptor&,
                         const NilSupportDescriptor&) = default;
};

enum class TrichotomyClass {
  Nilpotent,
  GeneralizedNilpotentOnly,
  InfiniteNilsupport,
  Unknown,
};

// Classifies a descriptor against the trichotomy (empty / {0} / infinite)
// valid for modules with finite-dimensional graded pieces; refuses when the
// finiteness hypothesis is not asserted.
TrichotomyClass classify_trichotomy(const NilSupportDescriptor& d,
                                    bool piecewise_finite);

struct BInvariant {
  enum class Kind { NegInfinity, Exact, UpperBound } kind;
  int64_t value = 0;                        // unused for NegInfinity
  std::optional<int64_t> certified_lower;   // a known member, when any
  std::string to_string() const;
  friend bool operator==(const BInvariant&, const BInvariant&) = default;
};

// sup of the nil-support.
BInvariant b_invariant(const NilSupportDescriptor& d);

NilSupportDescriptor nilsupp_intersect(const NilSupportDescriptor& a,
                                       const NilSupportDescriptor& b);
NilSupportDescriptor nilsupp_union(const NilSupportDescriptor& a,
                                   const NilSupportDescriptor& b);

// Restriction to degrees divisible by v, regraded by t -> t/v.
NilSupportDescriptor veronese_restrict(const NilSupportDescriptor& d,
                                       int64_t v);

// Intersection with the nil-support of a reduced standard graded ring viewed
// as a module over itself (all of N); the result lives in {0}.
NilSupportDescriptor restrict_to_degree_zero(const NilSupportDescriptor& d);

// Degree supports are intervals for every module this toolkit manipulates.
struct DegreeSupport {
  bool is_empty = true;
  int64_t lo = 0, hi = 0;  // may be kNegInf / kPosInf

  static DegreeSupport none() { return {}; }
  static DegreeSupport interval(int64_t lo, int64_t hi);
  std::string to_string() const;
  friend bool operator==(const DegreeSupport&, const DegreeSupport&) = default;
};

DegreeSupport degsupp_intersect(const DegreeSupport& a, const DegreeSupport& b);

}  // namespace fnil
