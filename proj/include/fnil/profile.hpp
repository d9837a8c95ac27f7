#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fnil/hsl.hpp"
#include "fnil/nilsupport.hpp"

namespace fnil {

enum class TriBool { True, False, Unknown };
std::string to_string(TriBool t);

// Closed interval bracketing a depth-like invariant; kPosInf marks the
// F-depth of the zero module.
struct DepthInterval {
  int64_t lo = 0;
  int64_t hi = kPosInf;
  bool exact() const { return lo == hi; }
  std::string to_string() const;
  friend bool operator==(const DepthInterval&, const DepthInterval&) = default;
};

// Per-cohomological-index record of one graded local cohomology module.
struct IndexData {
  bool is_zero = true;
  DegreeSupport degsupp;            // empty when is_zero
  NilSupportDescriptor nilsupport;  // Empty when is_zero
  HslValue hsl = HslValue::exact(0);
  HslValue hsl_deg0 = HslValue::exact(0);
  std::optional<int64_t> dim_g0;    // dim of the degree-0 non-nilpotent quotient
  bool asserted = false;            // user-asserted rather than engine-computed

  std::optional<int64_t> a() const {  // a-invariant; nullopt = -inf
    if (is_zero || degsupp.is_empty) return std::nullopt;
    return degsupp.hi;
  }
};

// First cohomological index where b_j = 0, in N union {infinity}; bracketed
// when earlier indices are undecided.
struct BIndex {
  enum class Kind { Infinity, Exact, Range } kind = Kind::Infinity;
  int64_t lo = 0, hi = kPosInf;
  std::string to_string() const;
  friend bool operator==(const BIndex&, const BIndex&) = default;
};

// The lingua franca between the cohomology engine and the construction
// calculators: everything known about one graded ring, index by index.
struct RingProfile {
  std::string name;
  int64_t p = 2;
  int dim = 0;
  std::vector<IndexData> H;  // size dim + 1

  bool cm = false;
  bool depth_ge_2 = false;
  bool equidimensional = true;
  bool reduced = true;  // Frobenius injective on the ring itself
  std::optional<bool> punctured_f_rational;
  std::optional<bool> punctured_f_nilpotent;

  const IndexData& index(int j) const;
  IndexData& index(int j);

  DepthInterval fdepth() const;
  DepthInterval gfdepth() const;
  BIndex b_index() const;  // b(R)

  TriBool weakly_f_nilpotent() const;
  TriBool generalized_weakly_f_nilpotent() const;
  // Routed through the punctured-spectrum criterion: finite b(R) refutes
  // F-nilpotence outright; b(R) = infinity proves it only under one of the
  // punctured-spectrum flags.
  TriBool f_nilpotent() const;

  void validate() const;
};

}  // namespace fnil
