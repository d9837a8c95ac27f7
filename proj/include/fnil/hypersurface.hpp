#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fnil/matrix.hpp"
#include "fnil/profile.hpp"

namespace fnil {

// One monomial of the defining form g(x_0..x_{n-1}).
struct GTerm {
  std::vector<int64_t> exps;  // length n, total degree deg_f
  int64_t coeff;              // nonzero mod p
};

// R = F_p[x_0,...,x_n] / (x_n^deg_f - g(x_0,...,x_{n-1})), free over
// A = F_p[x_0,...,x_{n-1}] with basis 1, x_n, ..., x_n^{deg_f - 1}. The top
// graded local cohomology H^n_m(R) is modeled on the monomial basis
// x_n^j / (x_0^{c_0} ... x_{n-1}^{c_{n-1}}) with 0 <= j < deg_f, c_i >= 1.
class HypersurfaceRing {
public:
  HypersurfaceRing(int64_t p, int n, int64_t deg_f, std::vector<GTerm> g_terms);

  // g = x_0^d + ... + x_{n-1}^d, the diagonal preset.
  static HypersurfaceRing fermat(int64_t p, int n, int64_t deg_f);

  int64_t p() const { return field_.modulus(); }
  const PrimeField& field() const { return field_; }
  int n() const { return n_; }
  int64_t deg_f() const { return deg_f_; }
  const std::vector<GTerm>& g_terms() const { return g_terms_; }
  bool is_diagonal_form() const;  // every variable in its own power term
  std::string describe() const;

private:
  PrimeField field_;
  int n_;
  int64_t deg_f_;
  std::vector<GTerm> g_terms_;
};

// Monomial basis element of one graded piece of H^n_m(R). Classes are equal
// exactly when all exponents agree; there are no relations among them.
struct CechClass {
  int64_t xn_exp;               // in [0, deg_f)
  std::vector<int64_t> denom;   // c_0..c_{n-1}, all >= 1
  int64_t degree;               // = xn_exp - sum(denom), redundant but checked

  friend bool operator==(const CechClass&, const CechClass&) = default;
};

// All classes of degree t in lexicographic order on (xn_exp, denom); empty
// exactly when the graded piece vanishes (in particular above a_invariant).
std::vector<CechClass> basis_at_degree(const HypersurfaceRing& ring, int64_t t);
int64_t basis_dim_at_degree(const HypersurfaceRing& ring, int64_t t);

// Multiplier polynomials for twisted actions, e.g. f^{p-1} F.
struct PolyTerm {
  int64_t coeff;
  std::vector<int64_t> exps;  // exponents of x_0..x_{n-1}
  int64_t xn_exp;
};
using Polynomial = std::vector<PolyTerm>;

// Rewrites every x_n exponent below deg_f using x_n^deg_f = g; the result is
// homogeneous of the same total degree.
Polynomial reduce_multiplier(const HypersurfaceRing& ring, Polynomial poly);
int64_t poly_total_degree(const Polynomial& poly);  // requires homogeneous

// Matrix of (u * F) from the degree-t piece to the degree-(p*t + deg u)
// piece, columns indexed by basis_at_degree(ring, t), rows by the target
// basis, both in lexicographic order.
struct FrobeniusLayer {
  int64_t source_degree = 0;
  int64_t target_degree = 0;
  std::optional<Polynomial> multiplier;
  PrimeFieldMatrix matrix;
};

FrobeniusLayer frobenius_layer(const HypersurfaceRing& ring, int64_t t,
                               const std::optional<Polynomial>& multiplier = {});

// Matrix of F^e on the degree-t piece computed by a single expansion with
// exponent p^e; the oracle route for the layer-composition property.
PrimeFieldMatrix frobenius_power_matrix(const HypersurfaceRing& ring, int64_t t,
                                        int e);

enum class DegreeStatus { ZeroSpace, Nilpotent, NotNilpotent, NotNilpotentUpTo };

// Verdict for one degree. Exact at t = 0 (single endomorphism) and at t > 0
// (the orbit leaves the degree support); at t < 0 nilpotence is certified
// when the kernel chain fills, otherwise the verdict only reports how far the
// chain was driven.
struct DegreeVerdict {
  int64_t degree = 0;
  DegreeStatus status = DegreeStatus::ZeroSpace;
  int e = 0;  // annihilation exponent, or steps examined for NotNilpotentUpTo
  KernelChain chain;
};

// Caps on the orbit-chase work at negative degrees, where graded pieces grow
// like |t| p^e. Exceeding a cap stops the chain honestly.
struct EngineBudget {
  int64_t max_expansion_terms = 300'000;
  int64_t max_source_dim = 4'000;
};

DegreeVerdict degree_verdict(const HypersurfaceRing& ring, int64_t t, int max_e,
                             const EngineBudget& budget = {});

// deg_f - 1 - n: the top degree of a nonzero graded piece of H^n_m(R).
int64_t a_invariant(const HypersurfaceRing& ring);

// Least e annihilating the stable kernel of the degree-0 action; 0 when the
// action is injective there.
int hsl_degree0(const HypersurfaceRing& ring);

// True when the defining form is certified to cut out a smooth projective
// hypersurface (decidable here for diagonal forms: every variable present
// and p not dividing deg_f); conservative false otherwise.
bool smoothness_check(const HypersurfaceRing& ring);

struct ClassifyOptions {
  int max_e = 10;
  std::optional<int64_t> window_lo;  // default -(4 * deg_f)
  EngineBudget budget;
};

// When verdicts_out is supplied it receives the per-degree window scan
// backing the profile.
RingProfile classify_ring(const HypersurfaceRing& ring,
                          const ClassifyOptions& opts = {},
                          std::vector<DegreeVerdict>* verdicts_out = nullptr);

// Per-degree verdicts computed by the last classify_ring call are kept in
// the returned profile's nilsupport window; this helper re-runs the scan and
// returns them explicitly for reporting.
std::vector<DegreeVerdict> scan_window(const HypersurfaceRing& ring,
                                       const ClassifyOptions& opts = {});

// H^j = 0 below the dimension; the top module has a-invariant -dim and an
// injective Frobenius, so its nil-support is the full interval of its degree
// support.
RingProfile polynomial_ring_profile(int64_t p, int dim);

}  // namespace fnil
