#pragma once

#include <cstdint>
#include <vector>

#include "fnil/prime_field.hpp"

namespace fnil {

// (sum parts)! / prod(parts!) mod p, computed digit-wise in base p.  The
// result is 0 exactly when adding the parts in base p carries; otherwise it
// is the product over digit positions of the small multinomials of the
// digits.  Exponents in the Frobenius expansions reach the order of p, so
// factorial-based evaluation is never used.
int64_t multinomial_mod_p(const std::vector<int64_t>& parts,
                          const PrimeField& field);

int64_t binomial_mod_p(int64_t n, int64_t k, const PrimeField& field);

// Exact binomial coefficient; throws on int64 overflow. Used by the
// Frobenius-test-exponent bound formulas, where d stays small.
int64_t binomial_int64(int64_t n, int64_t k);

}  // namespace fnil
