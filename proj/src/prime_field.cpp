#include "fnil/prime_field.hpp"

#include <string>

namespace fnil {

namespace {
constexpr int64_t kMaxModulus = int64_t(1) << 31;  // keeps a*b inside int64
}

PrimeField::PrimeField(int64_t p) : p_(p) {
  if (p >= kMaxModulus)
    throw std::invalid_argument("modulus too large: " + std::to_string(p));
  if (!is_prime(p))
    throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

int64_t PrimeField::pow(int64_t base, uint64_t exp) const {
  int64_t acc = 1 % p_;
  int64_t b = reduce(base);
  while (exp) {
    if (exp & 1) acc = mul(acc, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return acc;
}

int64_t PrimeField::inv(int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return pow(a, uint64_t(p_ - 2));
}

bool PrimeField::is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (int64_t d = 37; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fnil
