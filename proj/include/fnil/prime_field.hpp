#pragma once

#include <cstdint>
#include <stdexcept>

namespace fnil {

// Arithmetic context for the prime field F_p. Construction validates that p
// is prime, so everything downstream may assume canonical representatives in
// [0, p) over an actual field.
class PrimeField {
public:
  explicit PrimeField(int64_t p);

  int64_t modulus() const { return p_; }

  int64_t reduce(int64_t a) const {
    int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  // The binary operations expect canonical representatives.
  int64_t add(int64_t a, int64_t b) const {
    int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  int64_t sub(int64_t a, int64_t b) const {
    int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p_; }
  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }

  int64_t pow(int64_t base, uint64_t exp) const;
  int64_t inv(int64_t a) const;  // throws std::domain_error on 0

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

  static bool is_prime(int64_t n);

private:
  int64_t p_;
};

}  // namespace fnil
