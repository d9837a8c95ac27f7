#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>

#include "fnil/matrix.hpp"
#include "fnil/nilsupport.hpp"

namespace fnil {

// A graded module with Frobenius action given by explicit matrices on a
// finite degree window; every piece outside the window is declared zero.
// That declaration makes nilpotence decisions exact: for t != 0 the orbit
// degree t*p^e eventually leaves the window, and degree 0 is a single
// endomorphism. Serves as the brute-force oracle for the support lemmas.
struct ExplicitGradedFModule {
  int64_t p = 2;
  std::map<int64_t, int> pieces;                 // degree -> dimension (> 0)
  std::map<int64_t, PrimeFieldMatrix> layers;    // degree t -> matrix into tp

  int dim_at(int64_t t) const;
  PrimeFieldMatrix layer_at(int64_t t) const;    // zero matrix when missing
  bool is_zero_module() const { return pieces.empty(); }
  void validate() const;
};

PrimeFieldMatrix kronecker(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

// Degreewise tensor with the diagonal Frobenius action.
ExplicitGradedFModule simulate_segre(const ExplicitGradedFModule& a,
                                     const ExplicitGradedFModule& b);

// Keeps pieces in degrees divisible by v, regraded t -> t/v.
ExplicitGradedFModule simulate_veronese(const ExplicitGradedFModule& m,
                                        int64_t v);

std::set<int64_t> degsupp_of(const ExplicitGradedFModule& m);

// Exact nil-support, decided degree by degree.
std::set<int64_t> nilsupport_exact(const ExplicitGradedFModule& m);

NilSupportDescriptor descriptor_of(const ExplicitGradedFModule& m);

ExplicitGradedFModule random_fmodule(int64_t p, int64_t window_lo,
                                     int64_t window_hi, int max_dim,
                                     std::mt19937& rng);

}  // namespace fnil
