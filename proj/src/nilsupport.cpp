#include "fnil/nilsupport.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fnil {

NilSupportDescriptor NilSupportDescriptor::empty(int64_t p) {
  NilSupportDescriptor d;
  d.kind = NilKind::Empty;
  d.p = p;
  return d;
}

NilSupportDescriptor NilSupportDescriptor::zero_only(int64_t p) {
  NilSupportDescriptor d;
  d.kind = NilKind::ZeroOnly;
  d.p = p;
  return d;
}

NilSupportDescriptor NilSupportDescriptor::window(int64_t p, int64_t lo,
                                                  int64_t hi,
                                                  std::set<int64_t> members,
                                                  std::set<int64_t> unknown,
                                                  bool tail_known) {
  NilSupportDescriptor d;
  d.kind = NilKind::Window;
  d.p = p;
  d.window_lo = lo;
  d.window_hi = hi;
  d.members = std::move(members);
  d.unknown = std::move(unknown);
  d.tail_known = tail_known;
  // Canonical forms for fully certified windows.
  if (d.unknown.empty() && d.tail_known) {
    if (d.members.empty()) return empty(p);
    if (d.members == std::set<int64_t>{0}) return zero_only(p);
  }
  d.validate();
  return d;
}

NilSupportDescriptor NilSupportDescriptor::lower_interval(int64_t p,
                                                          int64_t sup_bound,
                                                          bool sup_exact,
                                                          bool full) {
  NilSupportDescriptor d;
  d.kind = NilKind::LowerInterval;
  d.p = p;
  d.sup_bound = sup_bound;
  d.sup_exact = sup_exact || full;
  d.full = full;
  d.validate();
  return d;
}

Membership NilSupportDescriptor::membership(int64_t t) const {
  switch (kind) {
    case NilKind::Empty:
      return Membership::Absent;
    case NilKind::ZeroOnly:
      return t == 0 ? Membership::Present : Membership::Absent;
    case NilKind::Window:
      if (t > window_hi) return Membership::Absent;
      if (t >= window_lo) {
        if (members.count(t)) return Membership::Present;
        if (unknown.count(t)) return Membership::Unknown;
        return Membership::Absent;
      }
      return tail_known ? Membership::Absent : Membership::Unknown;
    case NilKind::LowerInterval:
      if (t > sup_bound) return Membership::Absent;
      if (full) return Membership::Present;
      if (sup_exact && t == sup_bound) return Membership::Present;
      return Membership::Unknown;
  }
  return Membership::Unknown;
}

bool NilSupportDescriptor::absent_below(int64_t x) const {
  switch (kind) {
    case NilKind::Empty:
      return true;
    case NilKind::ZeroOnly:
      return x <= 0;
    case NilKind::Window: {
      if (!tail_known) return false;
      if (x <= window_lo) return true;
      for (int64_t t = window_lo; t < std::min(x, window_hi + 1); ++t)
        if (membership(t) != Membership::Absent) return false;
      return x <= window_hi + 1;
    }
    case NilKind::LowerInterval:
      return false;  // unbounded below
  }
  return false;
}

bool NilSupportDescriptor::certainly_not_nilpotent() const {
  switch (kind) {
    case NilKind::Empty:
      return false;
    case NilKind::ZeroOnly:
    case NilKind::LowerInterval:
      return true;
    case NilKind::Window:
      return !members.empty();
  }
  return false;
}

bool NilSupportDescriptor::certainly_generalized() const {
  switch (kind) {
    case NilKind::Empty:
    case NilKind::ZeroOnly:
      return true;
    case NilKind::LowerInterval:
      return false;
    case NilKind::Window: {
      // Need every nonzero degree certified absent.
      if (!tail_known) return false;
      for (int64_t t : members)
        if (t != 0) return false;
      for (int64_t t : unknown)
        if (t != 0) return false;
      return true;
    }
  }
  return false;
}

bool NilSupportDescriptor::certainly_not_generalized() const {
  switch (kind) {
    case NilKind::Empty:
    case NilKind::ZeroOnly:
      return false;
    case NilKind::LowerInterval:
      return true;  // infinite nil-support
    case NilKind::Window:
      for (int64_t t : members)
        if (t != 0) return true;
      return false;
  }
  return false;
}

void NilSupportDescriptor::validate() const {
  if (p < 2) throw std::invalid_argument("descriptor needs p >= 2");
  if (kind == NilKind::Window) {
    if (window_lo > window_hi + 1)
      throw std::invalid_argument("descriptor window is inverted");
    for (int64_t t : members) {
      if (t < window_lo || t > window_hi)
        throw std::invalid_argument("member outside descriptor window");
      if (unknown.count(t))
        throw std::invalid_argument("degree both member and unknown");
      // Members propagate along t -> tp while the orbit stays in the window.
      const int64_t tp = t * p;
      if (t != 0 && tp >= window_lo && tp <= window_hi && !members.count(tp))
        throw std::invalid_argument(
            "member set not closed under multiplication by p");
    }
    for (int64_t t : unknown)
      if (t < window_lo || t > window_hi)
        throw std::invalid_argument("unknown degree outside window");
  }
  if (kind == NilKind::LowerInterval && full && !sup_exact)
    throw std::invalid_argument("full lower interval must have exact sup");
}

std::string NilSupportDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case NilKind::Empty:
      os << "empty";
      break;
    case NilKind::ZeroOnly:
      os << "{0}";
      break;
    case NilKind::Window: {
      os << "window[" << window_lo << "," << window_hi << "] members{";
      bool first = true;
      for (int64_t t : members) {
        if (!first) os << ",";
        os << t;
        first = false;
      }
      os << "} undecided:" << unknown.size()
         << (tail_known ? "" : " tail-unknown");
      break;
    }
    case NilKind::LowerInterval:
      os << (full ? "(-inf," : "infinite<=(") << sup_bound
         << (full ? "]" : "]") << (sup_exact ? " sup-exact" : "");
      break;
  }
  return os.str();
}

TrichotomyClass classify_trichotomy(const NilSupportDescriptor& d,
                                    bool piecewise_finite) {
  if (!piecewise_finite)
    throw std::invalid_argument(
        "trichotomy requires finite-dimensional graded pieces");
  switch (d.kind) {
    case NilKind::Empty:
      return TrichotomyClass::Nilpotent;
    case NilKind::ZeroOnly:
      return TrichotomyClass::GeneralizedNilpotentOnly;
    case NilKind::LowerInterval:
      return TrichotomyClass::InfiniteNilsupport;
    case NilKind::Window:
      for (int64_t t : d.members)
        if (t != 0) return TrichotomyClass::InfiniteNilsupport;
      return TrichotomyClass::Unknown;
  }
  return TrichotomyClass::Unknown;
}

BInvariant b_invariant(const NilSupportDescriptor& d) {
  switch (d.kind) {
    case NilKind::Empty:
      return {BInvariant::Kind::NegInfinity, 0, std::nullopt};
    case NilKind::ZeroOnly:
      return {BInvariant::Kind::Exact, 0, 0};
    case NilKind::LowerInterval:
      if (d.sup_exact)
        return {BInvariant::Kind::Exact, d.sup_bound, d.sup_bound};
      return {BInvariant::Kind::UpperBound, d.sup_bound, std::nullopt};
    case NilKind::Window: {
      std::optional<int64_t> top_member;
      if (!d.members.empty()) top_member = *d.members.rbegin();
      int64_t cap = d.tail_known ? kNegInf : d.window_lo - 1;
      if (!d.unknown.empty()) cap = std::max(cap, *d.unknown.rbegin());
      if (top_member && *top_member >= cap)
        return {BInvariant::Kind::Exact, *top_member, top_member};
      if (top_member)
        return {BInvariant::Kind::UpperBound, cap, top_member};
      if (cap == kNegInf)
        return {BInvariant::Kind::NegInfinity, 0, std::nullopt};
      return {BInvariant::Kind::UpperBound, cap, std::nullopt};
    }
  }
  return {BInvariant::Kind::UpperBound, 0, std::nullopt};
}

std::string BInvariant::to_string() const {
  switch (kind) {
    case Kind::NegInfinity:
      return "-inf";
    case Kind::Exact:
      return std::to_string(value);
    case Kind::UpperBound:
      return "<= " + std::to_string(value);
  }
  return "?";
}

namespace {

Membership meet_and(Membership a, Membership b) {
  if (a == Membership::Absent || b == Membership::Absent)
    return Membership::Absent;
  if (a == Membership::Present && b == Membership::Present)
    return Membership::Present;
  return Membership::Unknown;
}

Membership meet_or(Membership a, Membership b) {
  if (a == Membership::Present || b == Membership::Present)
    return Membership::Present;
  if (a == Membership::Absent && b == Membership::Absent)
    return Membership::Absent;
  return Membership::Unknown;
}

void require_same_p(const NilSupportDescriptor& a,
                    const NilSupportDescriptor& b) {
  if (a.p != b.p)
    throw std::invalid_argument("descriptor characteristic mismatch");
}

// Upper bound for the extent of possibly-present degrees.
int64_t presence_upper_bound(const NilSupportDescriptor& d) {
  switch (d.kind) {
    case NilKind::Empty:
      return kNegInf;
    case NilKind::ZeroOnly:
      return 0;
    case NilKind::LowerInterval:
      return d.sup_bound;
    case NilKind::Window: {
      int64_t hi = d.tail_known ? kNegInf : d.window_lo - 1;
      if (!d.members.empty()) hi = std::max(hi, *d.members.rbegin());
      if (!d.unknown.empty()) hi = std::max(hi, *d.unknown.rbegin());
      return hi;
    }
  }
  return 0;
}

// Lowest degree with explicit per-degree knowledge; below it only the tail
// flags speak.
int64_t knowledge_floor(const NilSupportDescriptor& d) {
  switch (d.kind) {
    case NilKind::Empty:
    case NilKind::ZeroOnly:
      return 0;
    case NilKind::Window:
      return d.window_lo;
    case NilKind::LowerInterval:
      return d.sup_bound + 1;  // everything below is uniform
  }
  return 0;
}

NilSupportDescriptor window_from_memberships(const NilSupportDescriptor& a,
                                             const NilSupportDescriptor& b,
                                             bool intersect) {
  const int64_t lo = std::min(knowledge_floor(a), knowledge_floor(b));
  const int64_t hi = 0;
  std::set<int64_t> members, unknown;
  for (int64_t t = lo; t <= hi; ++t) {
    const Membership m = intersect ? meet_and(a.membership(t), b.membership(t))
                                   : meet_or(a.membership(t), b.membership(t));
    if (m == Membership::Present) members.insert(t);
    if (m == Membership::Unknown) unknown.insert(t);
  }
  const bool tail = intersect
                        ? (a.absent_below(lo) || b.absent_below(lo))
                        : (a.absent_below(lo) && b.absent_below(lo));
  return NilSupportDescriptor::window(a.p, lo, hi, std::move(members),
                                      std::move(unknown), tail);
}

}  // namespace

NilSupportDescriptor nilsupp_intersect(const NilSupportDescriptor& a,
                                       const NilSupportDescriptor& b) {
  require_same_p(a, b);
  if (a.kind == NilKind::Empty || b.kind == NilKind::Empty)
    return NilSupportDescriptor::empty(a.p);
  if (a.kind == NilKind::LowerInterval && b.kind == NilKind::LowerInterval &&
      a.full && b.full)
    return NilSupportDescriptor::lower_interval(
        a.p, std::min(a.sup_bound, b.sup_bound), true, true);
  if (a.kind == NilKind::LowerInterval && b.kind == NilKind::LowerInterval) {
    // Two infinite sets with no per-degree certificates: everything at or
    // below the smaller bound stays undecided.
    const int64_t s = std::min(a.sup_bound, b.sup_bound);
    Membership at_s = meet_and(a.membership(s), b.membership(s));
    std::set<int64_t> members;
    if (at_s == Membership::Present) members.insert(s);
    return NilSupportDescriptor::window(a.p, s + 1, 0, std::move(members), {},
                                        false);
  }
  return window_from_memberships(a, b, /*intersect=*/true);
}

NilSupportDescriptor nilsupp_union(const NilSupportDescriptor& a,
                                   const NilSupportDescriptor& b) {
  require_same_p(a, b);
  if (a.kind == NilKind::Empty) return b;
  if (b.kind == NilKind::Empty) return a;
  const bool a_inf = a.kind == NilKind::LowerInterval;
  const bool b_inf = b.kind == NilKind::LowerInterval;
  if (a_inf && b_inf && a.full && b.full)
    return NilSupportDescriptor::lower_interval(
        a.p, std::max(a.sup_bound, b.sup_bound), true, true);
  if (a_inf || b_inf) {
    const NilSupportDescriptor& inf_side = a_inf ? a : b;
    const NilSupportDescriptor& other = a_inf ? b : a;
    if (inf_side.full) {
      // Degrees inside the interval are present regardless of the other
      // side; the union stays the interval when nothing sits above it.
      bool other_inside = true;
      for (int64_t t = inf_side.sup_bound + 1; t <= 0 && other_inside; ++t)
        other_inside = other.membership(t) == Membership::Absent;
      if (other_inside)
        return NilSupportDescriptor::lower_interval(a.p, inf_side.sup_bound,
                                                    true, true);
    }
    // Union with an infinite set is infinite; keep the coarse sup bound.
    const int64_t sup =
        std::max(inf_side.sup_bound, presence_upper_bound(other));
    const bool exact =
        meet_or(a.membership(sup), b.membership(sup)) == Membership::Present;
    return NilSupportDescriptor::lower_interval(a.p, sup, exact, false);
  }
  return window_from_memberships(a, b, /*intersect=*/false);
}

NilSupportDescriptor veronese_restrict(const NilSupportDescriptor& d,
                                       int64_t v) {
  if (v < 1) throw std::invalid_argument("Veronese index must be >= 1");
  if (v == 1) return d;
  switch (d.kind) {
    case NilKind::Empty:
      return d;
    case NilKind::ZeroOnly:
      return d;  // 0 is divisible by every v
    case NilKind::LowerInterval: {
      const int64_t s = floor_div(d.sup_bound, v);
      if (d.full) return NilSupportDescriptor::lower_interval(d.p, s, true, true);
      // The multiples of v inside an unknown infinite set may even be empty.
      return NilSupportDescriptor::window(d.p, s + 1, 0, {}, {}, false);
    }
    case NilKind::Window: {
      std::set<int64_t> members, unknown;
      for (int64_t t : d.members)
        if (t % v == 0) members.insert(t / v);
      for (int64_t t : d.unknown)
        if (t % v == 0) unknown.insert(t / v);
      const int64_t lo = ceil_div(d.window_lo, v);
      const int64_t hi = floor_div(d.window_hi, v);
      return NilSupportDescriptor::window(d.p, lo, std::max(hi, lo - 1),
                                          std::move(members),
                                          std::move(unknown), d.tail_known);
    }
  }
  return d;
}

NilSupportDescriptor restrict_to_degree_zero(const NilSupportDescriptor& d) {
  switch (d.zero_membership()) {
    case Membership::Present:
      return NilSupportDescriptor::zero_only(d.p);
    case Membership::Absent:
      return NilSupportDescriptor::empty(d.p);
    case Membership::Unknown:
      return NilSupportDescriptor::window(d.p, 0, 0, {}, {0}, true);
  }
  return NilSupportDescriptor::empty(d.p);
}

DegreeSupport DegreeSupport::interval(int64_t lo, int64_t hi) {
  DegreeSupport s;
  if (lo > hi) return s;
  s.is_empty = false;
  s.lo = lo;
  s.hi = hi;
  return s;
}

std::string DegreeSupport::to_string() const {
  if (is_empty) return "{}";
  std::ostringstream os;
  os << (lo == kNegInf ? std::string("(-inf") : "[" + std::to_string(lo));
  os << ", ";
  os << (hi == kPosInf ? std::string("inf)") : std::to_string(hi) + "]");
  return os.str();
}

DegreeSupport degsupp_intersect(const DegreeSupport& a, const DegreeSupport& b) {
  if (a.is_empty || b.is_empty) return DegreeSupport::none();
  return DegreeSupport::interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

}  // namespace fnil
