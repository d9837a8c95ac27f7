#include <random>
#include <vector>

#include "doctest.h"
#include "fnil/matrix.hpp"

using fnil::apply;
using fnil::endo_nilpotence_index;
using fnil::iterate_kernel_chain;
using fnil::kernel;
using fnil::KernelChain;
using fnil::multiply;
using fnil::nullity;
using fnil::PrimeFieldMatrix;
using fnil::rank;

namespace {

PrimeFieldMatrix from_rows(std::vector<std::vector<int64_t>> rows, int64_t p) {
  const int r = int(rows.size());
  const int c = r ? int(rows[0].size()) : 0;
  PrimeFieldMatrix m(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = ((rows[i][j] % p) + p) % p;
  return m;
}

bool in_kernel(const PrimeFieldMatrix& m, const std::vector<int64_t>& v) {
  for (int64_t x : apply(m, v))
    if (x != 0) return false;
  return true;
}

PrimeFieldMatrix random_matrix(int r, int c, int64_t p, std::mt19937& rng) {
  PrimeFieldMatrix m(r, c, p);
  std::uniform_int_distribution<int64_t> dist(0, p - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("kernel: identity and zero") {
  CHECK(kernel(PrimeFieldMatrix::identity(2, 5)).empty());
  PrimeFieldMatrix z(2, 2, 5);
  auto basis = kernel(z);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<int64_t>{1, 0});
  CHECK(basis[1] == std::vector<int64_t>{0, 1});
}

TEST_CASE("kernel of [[1,1],[2,2]] mod 3 against full enumeration") {
  auto m = from_rows({{1, 1}, {2, 2}}, 3);
  // Oracle: enumerate all 9 vectors over F_3.
  std::vector<std::vector<int64_t>> null_vectors;
  for (int64_t a = 0; a < 3; ++a)
    for (int64_t b = 0; b < 3; ++b)
      if (in_kernel(m, {a, b}) && (a || b)) null_vectors.push_back({a, b});
  REQUIRE(null_vectors.size() == 2);  // the two nonzero multiples of (1,2)

  auto basis = kernel(m);
  REQUIRE(basis.size() == 1);
  bool found = false;
  for (const auto& v : null_vectors) found = found || v == basis[0];
  CHECK(found);
}

TEST_CASE("kernel is deterministic and reduced") {
  auto m = from_rows({{2, 4, 1}, {1, 2, 3}}, 5);
  auto b1 = kernel(m);
  auto b2 = kernel(m);
  CHECK(b1 == b2);
  for (const auto& v : b1) CHECK(in_kernel(m, v));
}

TEST_CASE("rank + nullity = cols on random matrices") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
    auto m = random_matrix(r, c, trial % 2 ? 3 : 7, rng);
    CHECK(rank(m) + nullity(m) == m.cols());
    CHECK(int(kernel(m).size()) == nullity(m));
  }
}

TEST_CASE("endo_nilpotence_index basics") {
  PrimeFieldMatrix z(3, 3, 7);
  CHECK(endo_nilpotence_index(z) == 1);
  CHECK(!endo_nilpotence_index(PrimeFieldMatrix::identity(3, 7)).has_value());
  // J_3 nilpotent of index 3
  auto j3 = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, 7);
  CHECK(endo_nilpotence_index(j3) == 3);
  CHECK_THROWS_AS(endo_nilpotence_index(PrimeFieldMatrix(2, 3, 7)),
                  std::invalid_argument);
}

TEST_CASE("nilpotence index present iff M^D = 0 (powering oracle)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 4;
    auto m = random_matrix(d, d, 2, rng);
    PrimeFieldMatrix pw = PrimeFieldMatrix::identity(d, 2);
    for (int e = 0; e < d; ++e) pw = multiply(pw, m);
    CHECK(endo_nilpotence_index(m).has_value() == pw.is_zero());
  }
}

TEST_CASE("kernel chain: nilpotent Jordan block repeated") {
  auto j2 = from_rows({{0, 1}, {0, 0}}, 3);
  std::vector<PrimeFieldMatrix> maps{j2, j2};
  auto chain = iterate_kernel_chain(maps, 10);
  CHECK(chain.dims == std::vector<int>{1, 2});
  CHECK(chain.full_at == 2);
  CHECK(chain.stabilized);
}

TEST_CASE("kernel chain: invertible map repeated") {
  auto inv = from_rows({{1, 1}, {0, 1}}, 3);
  std::vector<PrimeFieldMatrix> maps{inv, inv, inv};
  auto chain = iterate_kernel_chain(maps, 3);
  CHECK(chain.dims == std::vector<int>{0, 0, 0});
  CHECK(!chain.full_at.has_value());
  CHECK(chain.stabilized);
}

TEST_CASE("kernel chain agrees with explicit composite nullity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PrimeFieldMatrix> maps;
    int cur = 3;
    for (int i = 0; i < 4; ++i) {
      const int next = 1 + (trial + i) % 4;
      maps.push_back(random_matrix(next, cur, 2, rng));
      cur = next;
    }
    auto chain = iterate_kernel_chain(maps, 4);
    PrimeFieldMatrix composite = maps[0];
    for (size_t e = 0; e < chain.dims.size(); ++e) {
      if (e > 0) composite = multiply(maps[e], composite);
      CHECK(chain.dims[e] == nullity(composite));
      if (e > 0) CHECK(chain.dims[e] >= chain.dims[e - 1]);  // nondecreasing
    }
  }
}

TEST_CASE("kernel chain rejects mismatched shapes") {
  std::vector<PrimeFieldMatrix> maps{PrimeFieldMatrix(2, 2, 3),
                                     PrimeFieldMatrix(2, 3, 3)};
  CHECK_THROWS_AS(iterate_kernel_chain(maps, 5), std::invalid_argument);
}
