#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fnil/hsl.hpp"
#include "fnil/nilsupport.hpp"
#include "fnil/profile.hpp"

namespace fnil {

// Output of a calculator: a named quantity, its value or bracket, and the
// rule that justifies it. Every verdict names its rule; notes carry
// hypothesis echoes and supersession remarks.
struct BoundReport {
  std::string quantity;
  enum class Kind {
    Exact,
    LowerBound,
    UpperBound,
    Interval,
    Verdict,
    Unknown
  } kind = Kind::Unknown;
  int64_t value = 0;
  int64_t value_hi = kPosInf;  // second endpoint for Interval
  TriBool verdict = TriBool::Unknown;
  std::string rule;
  std::string formula;
  std::vector<std::string> notes;

  std::string value_string() const;
};

// least e >= 0 with p^e >= threshold
int64_t min_e_pow_at_least(int64_t p, int64_t threshold);

// ---------------------------------------------------------------------------
// Frobenius-test-exponent arithmetic for weakly / generalized weakly
// F-nilpotent rings: the binomial-weighted sums of HSL numbers.
// ---------------------------------------------------------------------------

int64_t fte_bound_weak(const std::vector<int64_t>& h, int64_t d);
int64_t fte_bound_generalized(const std::vector<int64_t>& h, int64_t d,
                              int64_t N, int64_t p);
BoundReport fte_bound_weak_report(const std::vector<HslValue>& h, int64_t d);
BoundReport fte_bound_generalized_report(const std::vector<HslValue>& h,
                                         int64_t d, int64_t N, int64_t p);

// ---------------------------------------------------------------------------
// Gluing along a pair of ideals with trivial intersection.
// ---------------------------------------------------------------------------

// F-depth R >= min{F-depth R/a1, F-depth R/a2, F-depth R/b + 1}; exact value
// fb + 1 when fb is exact and fb + 1 falls strictly below the other two.
// The same arithmetic applies to gF-depth inputs.
BoundReport glue_fdepth(const DepthInterval& f1, const DepthInterval& f2,
                        const DepthInterval& fb, bool generalized);

// Certifies weak F-nilpotence of the glued ring from the dimension
// hypotheses dim R/a1 = dim R/a2 = d, dim R/b >= d-1 and the three verdicts;
// the generalized variant additionally needs equidimensionality.
BoundReport glue_wfn_check(int64_t d, int64_t dim1, int64_t dim2, int64_t dimb,
                           TriBool v1, TriBool v2, TriBool vb,
                           bool equidimensional, bool generalized);

struct GlueHslResult {
  std::vector<int> valid_indices;       // j with a certified per-index bound
  std::vector<HslValue> per_index;      // HSL H^j(R) bounds, size d+1
  BoundReport fte;
};

// h_quotient[j] = HSL H^j(R/b), h_max[j] = max of the two quotient HSL
// numbers at index j; dim_b selects between the two displayed bound shapes
// (dim R/b = d or d-1, the latter requiring the top HSL number of R).
GlueHslResult glue_hsl_fte(const std::vector<HslValue>& h_quotient,
                           const std::vector<HslValue>& h_max, int64_t d,
                           int64_t dim_b,
                           const std::optional<HslValue>& hsl_top);

// ---------------------------------------------------------------------------
// Segre products T = R # S with the diagonal Frobenius action.
// ---------------------------------------------------------------------------

struct KunnethSummand {
  enum class Label { FirstFactor, SecondFactor, Mixed } label;
  int r = 0, s = 0;  // cohomological bidegree for Mixed
  NilSupportDescriptor descriptor;
  DegreeSupport degsupp;
  HslValue hsl;
  std::optional<int64_t> dim_g0;
  std::string to_string(int j) const;
};

struct KunnethSummandReport {
  int j = 0;
  std::vector<KunnethSummand> summands;  // only the nonzero ones
};

struct SegreResult {
  RingProfile profile;
  std::vector<KunnethSummandReport> kunneth;
};

// Assembles the profile of R # S through the Kuenneth decomposition; requires
// depth >= 2 on both factors and matching characteristic.
SegreResult segre_profile(const RingProfile& R, const RingProfile& S);

std::vector<BoundReport> segre_fdepth_bounds(const RingProfile& R,
                                             const RingProfile& S);
std::vector<BoundReport> segre_gfdepth(const RingProfile& R,
                                       const RingProfile& S);

// Per-index HSL bounds for T; requires both factors weakly F-nilpotent.
std::vector<HslValue> segre_hsl_bounds(const RingProfile& R,
                                       const RingProfile& S);

struct SegreFteResult {
  BoundReport refined;  // binomial-weighted sum of the per-index bounds
  BoundReport coarse;   // 2^{d_T} max{HSL R, HSL S}
};
SegreFteResult segre_fte_bound(const RingProfile& R, const RingProfile& S);

BoundReport segre_gwfn_fte_bound(const RingProfile& R, const RingProfile& S,
                                 int64_t N);

// Length of the degree-0 non-nilpotent quotient of H^j(T).
BoundReport segre_length_deg0(const RingProfile& R, const RingProfile& S,
                              int j);

// ---------------------------------------------------------------------------
// Veronese subrings.
// ---------------------------------------------------------------------------

RingProfile veronese_profile(const RingProfile& R, int64_t v);

struct VeroneseEquivalenceResult {
  std::vector<std::pair<int64_t, TriBool>> per_index;  // (v, F-nilpotent?)
  BoundReport report;
};
// Under "weakly F-nilpotent and F-nilpotent on the punctured spectrum", the
// single verdict b(R) = infinity settles F-nilpotence of every Veronese.
VeroneseEquivalenceResult veronese_fnilpotence_equivalence(
    const RingProfile& R, const std::vector<int64_t>& v_list);

BoundReport veronese_fte_bound(const RingProfile& R, bool generalized,
                               int64_t N);

// ---------------------------------------------------------------------------
// Diagonal subalgebras of bigraded hypersurfaces.
// ---------------------------------------------------------------------------

struct DiagonalSpec {
  int64_t g = 1, h = 1;    // Veronese bidegree Delta = (g, h), not both zero
  int64_t d1 = 0, d2 = 0;  // bidegree of the hypersurface f
};

// T_Delta = R^(g) # S^(h); degenerates to a single Veronese when g or h is 0.
RingProfile diagonal_profile(const RingProfile& R, const RingProfile& S,
                             const DiagonalSpec& spec);

std::vector<BoundReport> diagonal_fdepth(const RingProfile& R,
                                         const RingProfile& S,
                                         const DiagonalSpec& spec);

// Bounds for the hypersurface quotient (T/fT)_Delta from the profile of
// T_Delta via the twisted-action exact sequence.
std::vector<BoundReport> diagonal_hypersurface_bounds(
    const RingProfile& t_delta, bool dims_match);

struct DiagonalQuotientResult {
  bool bullet_ratio_first = false;
  bool bullet_ratio_second = false;
  bool bullet_determinant = false;
  bool all_hold = false;
  BoundReport report;
};

// The three numerical conditions under which the quotient keeps the full
// F-depth of T_Delta; b-invariants at index f_T enter through their
// certified values (-inf allowed) or upper bounds.
DiagonalQuotientResult diagonal_quotient_conditions(const BInvariant& b_ft_R,
                                                    const BInvariant& b_ft_S,
                                                    const DiagonalSpec& spec);

}  // namespace fnil
