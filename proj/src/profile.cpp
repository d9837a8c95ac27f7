#include "fnil/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnil {

std::string to_string(TriBool t) {
  switch (t) {
    case TriBool::True:
      return "true";
    case TriBool::False:
      return "false";
    case TriBool::Unknown:
      return "unknown";
  }
  return "?";
}

std::string DepthInterval::to_string() const {
  auto fmt = [](int64_t v) {
    return v >= kPosInf ? std::string("inf") : std::to_string(v);
  };
  if (exact()) return fmt(lo);
  return "[" + fmt(lo) + ", " + fmt(hi) + "]";
}

std::string BIndex::to_string() const {
  switch (kind) {
    case Kind::Infinity:
      return "inf";
    case Kind::Exact:
      return std::to_string(lo);
    case Kind::Range:
      return "[" + std::to_string(lo) + ", " +
             (hi >= kPosInf ? std::string("inf") : std::to_string(hi)) + "]";
  }
  return "?";
}

const IndexData& RingProfile::index(int j) const {
  if (j < 0 || j >= int(H.size()))
    throw std::out_of_range("cohomological index out of range");
  return H[j];
}

IndexData& RingProfile::index(int j) {
  if (j < 0 || j >= int(H.size()))
    throw std::out_of_range("cohomological index out of range");
  return H[j];
}

DepthInterval RingProfile::fdepth() const {
  int64_t lo = dim;  // F-depth <= dim for a ring
  for (int j = 0; j <= dim; ++j) {
    if (!H[j].is_zero && !H[j].nilsupport.certainly_nilpotent()) {
      lo = j;
      break;
    }
  }
  int64_t hi = dim;
  for (int j = 0; j <= dim; ++j) {
    if (!H[j].is_zero && H[j].nilsupport.certainly_not_nilpotent()) {
      hi = j;
      break;
    }
  }
  if (dim > 0) lo = std::max<int64_t>(lo, 1);  // positive F-depth in positive dim
  lo = std::min(lo, hi);
  return {lo, hi};
}

DepthInterval RingProfile::gfdepth() const {
  int64_t lo = dim;
  for (int j = 0; j <= dim; ++j) {
    if (!H[j].is_zero && !H[j].nilsupport.certainly_generalized()) {
      lo = j;
      break;
    }
  }
  // gF-depth >= F-depth always.
  lo = std::max(lo, fdepth().lo);
  int64_t hi = equidimensional ? dim : kPosInf;
  for (int j = 0; j <= dim; ++j) {
    if (!H[j].is_zero && H[j].nilsupport.certainly_not_generalized()) {
      hi = j;
      break;
    }
  }
  lo = std::min(lo, hi);
  return {lo, hi};
}

BIndex RingProfile::b_index() const {
  std::optional<int64_t> first_unknown, first_present;
  for (int j = 0; j <= dim; ++j) {
    if (H[j].is_zero) continue;
    switch (H[j].nilsupport.zero_membership()) {
      case Membership::Present:
        if (!first_present) first_present = j;
        break;
      case Membership::Unknown:
        if (!first_unknown && !first_present) first_unknown = j;
        break;
      case Membership::Absent:
        break;
    }
    if (first_present) break;
  }
  if (first_present && !first_unknown)
    return {BIndex::Kind::Exact, *first_present, *first_present};
  if (first_present) return {BIndex::Kind::Range, *first_unknown, *first_present};
  if (first_unknown) return {BIndex::Kind::Range, *first_unknown, kPosInf};
  return {BIndex::Kind::Infinity, 0, kPosInf};
}

TriBool RingProfile::weakly_f_nilpotent() const {
  const DepthInterval f = fdepth();
  if (f.lo >= dim) return TriBool::True;
  if (f.hi < dim) return TriBool::False;
  return TriBool::Unknown;
}

TriBool RingProfile::generalized_weakly_f_nilpotent() const {
  const DepthInterval g = gfdepth();
  if (g.lo >= dim) return TriBool::True;
  if (g.hi < dim) return TriBool::False;
  return TriBool::Unknown;
}

TriBool RingProfile::f_nilpotent() const {
  const BIndex b = b_index();
  if (b.kind == BIndex::Kind::Exact) return TriBool::False;
  if (b.kind == BIndex::Kind::Range && b.hi < kPosInf) return TriBool::False;
  if (b.kind != BIndex::Kind::Infinity) return TriBool::Unknown;
  const bool punc = punctured_f_rational.value_or(false) ||
                    (punctured_f_nilpotent.value_or(false) && equidimensional);
  return punc ? TriBool::True : TriBool::Unknown;
}

void RingProfile::validate() const {
  if (dim < 0) throw std::invalid_argument("profile with negative dimension");
  if (int(H.size()) != dim + 1)
    throw std::invalid_argument("profile needs dim + 1 index records");
  for (int j = 0; j <= dim; ++j) {
    const IndexData& d = H[j];
    if (d.is_zero) {
      if (!d.degsupp.is_empty || !d.nilsupport.certainly_nilpotent())
        throw std::invalid_argument("zero module with nonempty support data");
      continue;
    }
    if (d.nilsupport.p != p)
      throw std::invalid_argument("descriptor characteristic mismatch");
    d.nilsupport.validate();
    // artinian graded modules are nilpotent in positive degree
    for (int64_t t = 1; t <= 4; ++t)
      if (d.nilsupport.membership(t) == Membership::Present)
        throw std::invalid_argument("non-nilpotent positive degree in profile");
  }
}

}  // namespace fnil
