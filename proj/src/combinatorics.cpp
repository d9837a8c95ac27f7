#include "fnil/combinatorics.hpp"

#include <stdexcept>

namespace fnil {

namespace {

// n! / prod(k_i!) mod p for n < p, all k_i >= 0 summing to n.
int64_t small_multinomial(int64_t n, const std::vector<int64_t>& ks,
                          const PrimeField& field) {
  int64_t num = 1;
  for (int64_t i = 2; i <= n; ++i) num = field.mul(num, field.reduce(i));
  int64_t den = 1;
  for (int64_t k : ks)
    for (int64_t i = 2; i <= k; ++i) den = field.mul(den, field.reduce(i));
  return field.mul(num, field.inv(den));
}

}  // namespace

int64_t multinomial_mod_p(const std::vector<int64_t>& parts,
                          const PrimeField& field) {
  if (parts.empty()) throw std::invalid_argument("multinomial of no parts");
  const int64_t p = field.modulus();
  std::vector<int64_t> rem = parts;
  for (int64_t r : rem)
    if (r < 0) throw std::invalid_argument("negative multinomial part");

  int64_t result = 1;
  bool any_left = true;
  while (any_left) {
    any_left = false;
    std::vector<int64_t> digits(rem.size());
    int64_t digit_sum = 0;
    for (size_t i = 0; i < rem.size(); ++i) {
      digits[i] = rem[i] % p;
      digit_sum += digits[i];
      rem[i] /= p;
      if (rem[i] > 0) any_left = true;
    }
    // A carry in base-p addition of the parts kills the coefficient.
    if (digit_sum >= p) return 0;
    result = field.mul(result, small_multinomial(digit_sum, digits, field));
  }
  return result;
}

int64_t binomial_mod_p(int64_t n, int64_t k, const PrimeField& field) {
  if (k < 0 || k > n) return 0;
  return multinomial_mod_p({k, n - k}, field);
}

int64_t binomial_int64(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > (__int128(1) << 62))
      throw std::overflow_error("binomial_int64 overflow");
  }
  return int64_t(acc);
}

}  // namespace fnil
