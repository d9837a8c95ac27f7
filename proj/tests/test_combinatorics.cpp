#include <vector>

#include "doctest.h"
#include "fnil/combinatorics.hpp"
#include "fnil/prime_field.hpp"

using fnil::binomial_int64;
using fnil::binomial_mod_p;
using fnil::multinomial_mod_p;
using fnil::PrimeField;

namespace {

// Independent oracle: exact integer multinomial via repeated binomials.
// Safe for part sums up to 20 or so; tests stay at <= 12.
int64_t multinomial_exact(const std::vector<int64_t>& parts) {
  int64_t total = 0, acc = 1;
  for (int64_t k : parts) {
    total += k;
    acc *= binomial_int64(total, k);
  }
  return acc;
}

// Enumerates all compositions of `sum` into `n` nonnegative parts.
void compositions(int64_t sum, int n, std::vector<int64_t>& cur,
                  std::vector<std::vector<int64_t>>& out) {
  if (n == 1) {
    cur.push_back(sum);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int64_t k = 0; k <= sum; ++k) {
    cur.push_back(k);
    compositions(sum - k, n - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("multinomial_mod_p matches stated examples") {
  CHECK(multinomial_mod_p({1, 1}, PrimeField(5)) == 2);
  // binomial(4,2) = 6 = 0 mod 2
  CHECK(multinomial_exact({2, 2}) == 6);
  CHECK(multinomial_mod_p({2, 2}, PrimeField(2)) == 0);
  // 12!/(3!4!5!) mod 7, against the exact-integer oracle
  const int64_t exact = multinomial_exact({3, 4, 5});
  CHECK(exact == 27720);
  CHECK(multinomial_mod_p({3, 4, 5}, PrimeField(7)) == exact % 7);
}

TEST_CASE("multinomial_mod_p equals exact value reduced, all sums <= 12") {
  for (int64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField f(p);
    for (int n : {1, 2, 3}) {
      for (int64_t sum = 0; sum <= 12; ++sum) {
        std::vector<std::vector<int64_t>> all;
        std::vector<int64_t> cur;
        compositions(sum, n, cur, all);
        for (const auto& parts : all) {
          CAPTURE(p);
          CAPTURE(sum);
          REQUIRE(multinomial_mod_p(parts, f) ==
                  multinomial_exact(parts) % p);
        }
      }
    }
  }
}

TEST_CASE("multinomial handles exponents far beyond factorial range") {
  // digits of 10^6 and 10^6 in base 1000003 do not carry
  PrimeField f(1000003);
  CHECK(multinomial_mod_p({1000003, 1000003}, f) ==
        binomial_mod_p(2 * 1000003, 1000003, f));
  // Lucas: C(2p, p) = C(2,1)*C(0,0) = 2 mod p
  CHECK(binomial_mod_p(2 * 1000003, 1000003, f) == 2);
}

TEST_CASE("binomial_int64") {
  CHECK(binomial_int64(0, 0) == 1);
  CHECK(binomial_int64(5, 2) == 10);
  CHECK(binomial_int64(5, 7) == 0);
  CHECK(binomial_int64(5, -1) == 0);
  CHECK(binomial_int64(60, 30) == 118264581564861424LL);
}
