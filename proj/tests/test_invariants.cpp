// Cross-cutting property tests for the descriptor calculus and the
// construction calculators.

#include <random>

#include "doctest.h"
#include "fnil/construction.hpp"
#include "fnil/fmodule_sim.hpp"
#include "fnil/hypersurface.hpp"

using namespace fnil;

namespace {

int64_t b_upper(const BInvariant& b) {
  switch (b.kind) {
    case BInvariant::Kind::NegInfinity:
      return kNegInf;
    case BInvariant::Kind::Exact:
    case BInvariant::Kind::UpperBound:
      return b.value;
  }
  return kPosInf;
}

}  // namespace

TEST_CASE("trichotomy classifier matches exhaustive simulation") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int64_t p = trial % 2 ? 2 : 3;
    const auto m = random_fmodule(p, -6, 6, 3, rng);
    const auto nil = nilsupport_exact(m);
    const auto cls = classify_trichotomy(descriptor_of(m), true);
    if (nil.empty())
      CHECK(cls == TrichotomyClass::Nilpotent);
    else if (nil == std::set<int64_t>{0})
      CHECK(cls == TrichotomyClass::GeneralizedNilpotentOnly);
    else
      CHECK(cls == TrichotomyClass::InfiniteNilsupport);
  }
}

TEST_CASE("b of an intersection never exceeds the factor b-invariants") {
  using D = NilSupportDescriptor;
  std::vector<D> ds = {
      D::empty(2),
      D::zero_only(2),
      D::window(2, -6, 0, {-2, -4, 0}, {}, true),
      D::window(2, -6, 0, {-3, -6}, {-1}, false),
      D::lower_interval(2, -1, true, true),
      D::lower_interval(2, -4, true, true),
  };
  for (const auto& a : ds)
    for (const auto& b : ds) {
      const BInvariant ba = b_invariant(a), bb = b_invariant(b);
      const BInvariant bi = b_invariant(nilsupp_intersect(a, b));
      CHECK(b_upper(bi) <= std::min(b_upper(ba), b_upper(bb)));
    }
}

TEST_CASE("weakening an input never strengthens the intersection") {
  using D = NilSupportDescriptor;
  const D certified = D::window(3, -4, 0, {-1, -3, 0}, {}, true);
  // weakened: one member downgraded to undecided, tail forgotten
  const D weakened = D::window(3, -4, 0, {-1, -3}, {0}, false);
  const D other = D::window(3, -4, 0, {-3, 0}, {-2}, false);
  const D strong = nilsupp_intersect(certified, other);
  const D weak = nilsupp_intersect(weakened, other);
  for (int64_t t = -8; t <= 0; ++t) {
    // Present may degrade to Unknown but never flips to Absent, and Absent
    // may degrade to Unknown but never flips to Present.
    if (weak.membership(t) == Membership::Present)
      CHECK(strong.membership(t) == Membership::Present);
    if (weak.membership(t) == Membership::Absent)
      CHECK(strong.membership(t) == Membership::Absent);
  }
}

TEST_CASE("segre dimension law") {
  ClassifyOptions opts;
  opts.window_lo = 0;
  for (auto [dr, ds] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const RingProfile R =
        dr == 2 ? classify_ring(HypersurfaceRing::fermat(5, 2, 4), opts)
                : polynomial_ring_profile(5, dr);
    const RingProfile S = polynomial_ring_profile(5, ds);
    CHECK(segre_profile(R, S).profile.dim == dr + ds - 1);
  }
}

TEST_CASE("sparse orbit chase agrees with dense kernel chains") {
  std::vector<HypersurfaceRing> rings;
  rings.push_back(HypersurfaceRing::fermat(3, 2, 4));
  rings.push_back(HypersurfaceRing::fermat(5, 2, 3));
  rings.push_back(HypersurfaceRing::fermat(2, 3, 4));
  rings.push_back(HypersurfaceRing(5, 2, 4, {{{4, 0}, 1}, {{2, 2}, 3}, {{0, 4}, 4}}));
  for (const auto& ring : rings)
    for (int64_t t : {-1, -2, -3}) {
      const auto sparse = degree_verdict(ring, t, 3);
      std::vector<PrimeFieldMatrix> maps;
      int64_t deg = t;
      for (int e = 0; e < 3; ++e) {
        maps.push_back(frobenius_layer(ring, deg).matrix);
        deg *= ring.p();
      }
      const auto dense = iterate_kernel_chain(maps, 3);
      CAPTURE(ring.describe());
      CAPTURE(t);
      REQUIRE(sparse.chain.dims.size() <= dense.dims.size() + 0u);
      for (size_t i = 0; i < sparse.chain.dims.size(); ++i)
        CHECK(sparse.chain.dims[i] == dense.dims[i]);
      if (sparse.chain.full_at && *sparse.chain.full_at <= 3)
        CHECK(dense.full_at == sparse.chain.full_at);
    }
}

TEST_CASE("union membership semantics on descriptor samples") {
  using D = NilSupportDescriptor;
  std::vector<D> ds = {
      D::empty(2),
      D::zero_only(2),
      D::window(2, -6, 0, {-2, -4, 0}, {}, true),
      D::window(2, -6, 0, {-3, -6}, {-1}, false),
      D::lower_interval(2, -1, true, true),
      D::lower_interval(2, -4, false, false),
  };
  for (const auto& a : ds)
    for (const auto& b : ds) {
      const D u = nilsupp_union(a, b);
      for (int64_t t = -10; t <= 0; ++t) {
        const Membership ma = a.membership(t), mb = b.membership(t);
        const Membership mu = u.membership(t);
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CAPTURE(t);
        // soundness: certain answers about the union never contradict the
        // pointwise truth table
        if (ma == Membership::Present || mb == Membership::Present)
          CHECK(mu != Membership::Absent);
        if (ma == Membership::Absent && mb == Membership::Absent)
          CHECK(mu != Membership::Present);
      }
    }
}

TEST_CASE("fte calculators are pure arithmetic") {
  const std::vector<int64_t> h{0, 1, 2, 1};
  CHECK(fte_bound_weak(h, 3) == fte_bound_weak(h, 3));
  CHECK(fte_bound_generalized(h, 3, 2, 5) == fte_bound_generalized(h, 3, 2, 5));
}
