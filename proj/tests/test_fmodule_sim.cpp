#include <random>

#include "doctest.h"
#include "fnil/fmodule_sim.hpp"

using namespace fnil;

namespace {

ExplicitGradedFModule one_dim_at(int64_t p, int64_t deg, int64_t scalar) {
  ExplicitGradedFModule m;
  m.p = p;
  m.pieces[deg] = 1;
  PrimeFieldMatrix layer(deg == 0 ? 1 : 0, 1, p);
  if (deg == 0) layer.at(0, 0) = scalar;
  m.layers[deg] = layer;
  return m;
}

}  // namespace

TEST_CASE("kronecker shapes and values") {
  PrimeFieldMatrix a(1, 2, 5), b(2, 1, 5);
  a.at(0, 0) = 2;
  a.at(0, 1) = 3;
  b.at(0, 0) = 1;
  b.at(1, 0) = 4;
  auto k = kronecker(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(1, 0) == 3);  // 2*4 = 8 = 3 mod 5
  CHECK(k.at(0, 1) == 3);
  CHECK(k.at(1, 1) == 2);  // 3*4 = 12 = 2 mod 5
}

TEST_CASE("segre with the zero module is zero") {
  ExplicitGradedFModule z;
  z.p = 3;
  auto m = one_dim_at(3, 0, 1);
  CHECK(simulate_segre(m, z).is_zero_module());
  CHECK(simulate_segre(z, m).is_zero_module());
}

TEST_CASE("identity piece against zero-map piece gives a zero layer") {
  auto id = one_dim_at(5, 0, 1);
  auto zero_map = one_dim_at(5, 0, 0);
  auto s = simulate_segre(id, zero_map);
  CHECK(s.dim_at(0) == 1);
  CHECK(s.layer_at(0).is_zero());
  CHECK(nilsupport_exact(s).empty());
  CHECK(nilsupport_exact(id) == std::set<int64_t>{0});
}

TEST_CASE("veronese simulator basics") {
  ExplicitGradedFModule m;
  m.p = 2;
  m.pieces[-4] = 2;
  m.pieces[-2] = 1;
  m.pieces[0] = 1;
  m.layers[-2] = PrimeFieldMatrix(2, 1, 2);  // -2 -> -4
  m.layers[-4] = PrimeFieldMatrix(0, 2, 2);
  PrimeFieldMatrix l0(1, 1, 2);
  l0.at(0, 0) = 1;
  m.layers[0] = l0;
  m.validate();

  auto v1 = simulate_veronese(m, 1);
  CHECK(degsupp_of(v1) == degsupp_of(m));
  auto v2 = simulate_veronese(m, 2);
  CHECK(degsupp_of(v2) == std::set<int64_t>{-2, -1, 0});
  CHECK(v2.dim_at(-2) == 2);
  auto z = simulate_veronese(ExplicitGradedFModule{.p = 2}, 3);
  CHECK(z.is_zero_module());
}

TEST_CASE("support lemmas on random window-complete modules") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int64_t p = trial % 2 ? 2 : 3;
    auto m1 = random_fmodule(p, -6, 4, 3, rng);
    auto m2 = random_fmodule(p, -6, 4, 3, rng);
    auto s = simulate_segre(m1, m2);

    // degsupp of the product is the intersection of degree supports
    std::set<int64_t> expected_supp;
    for (int64_t t : degsupp_of(m1))
      if (degsupp_of(m2).count(t)) expected_supp.insert(t);
    CHECK(degsupp_of(s) == expected_supp);

    // nilsupp of the product is the intersection of nil-supports
    std::set<int64_t> expected_nil;
    auto n1 = nilsupport_exact(m1), n2 = nilsupport_exact(m2);
    for (int64_t t : n1)
      if (n2.count(t)) expected_nil.insert(t);
    CHECK(nilsupport_exact(s) == expected_nil);

    // descriptor arithmetic agrees with the simulator
    auto lhs = descriptor_of(s);
    auto rhs = nilsupp_intersect(descriptor_of(m1), descriptor_of(m2));
    for (int64_t t = -8; t <= 0; ++t) {
      CAPTURE(trial);
      CAPTURE(t);
      CHECK(lhs.membership(t) == rhs.membership(t));
    }

    // Veronese restriction lemma
    for (int64_t v : {1, 2, 3}) {
      auto mv = simulate_veronese(m1, v);
      std::set<int64_t> expected_v;
      for (int64_t t : n1)
        if (t % v == 0) expected_v.insert(t / v);
      CHECK(nilsupport_exact(mv) == expected_v);
      auto dv = veronese_restrict(descriptor_of(m1), v);
      auto dl = descriptor_of(mv);
      for (int64_t t = -8; t <= 0; ++t)
        CHECK(dl.membership(t) == dv.membership(t));
    }
  }
}
