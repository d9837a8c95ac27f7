#include <cstdio>

#include "doctest.h"
#include "fnil/hypersurface.hpp"
#include "fnil/profile_io.hpp"

using namespace fnil;

namespace {

bool profiles_equal(const RingProfile& a, const RingProfile& b) {
  if (a.name != b.name || a.p != b.p || a.dim != b.dim) return false;
  if (a.cm != b.cm || a.depth_ge_2 != b.depth_ge_2 ||
      a.equidimensional != b.equidimensional || a.reduced != b.reduced)
    return false;
  if (a.punctured_f_rational != b.punctured_f_rational) return false;
  if (a.punctured_f_nilpotent != b.punctured_f_nilpotent) return false;
  for (int j = 0; j <= a.dim; ++j) {
    const IndexData &x = a.index(j), &y = b.index(j);
    if (x.is_zero != y.is_zero || x.asserted != y.asserted) return false;
    if (x.is_zero) continue;
    if (!(x.degsupp == y.degsupp) || !(x.nilsupport == y.nilsupport))
      return false;
    if (!(x.hsl == y.hsl) || !(x.hsl_deg0 == y.hsl_deg0)) return false;
    if (x.dim_g0 != y.dim_g0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("profile JSON round trip") {
  ClassifyOptions opts;
  opts.window_lo = -8;
  opts.max_e = 3;
  for (int64_t p : {5, 7, 13}) {
    auto prof = classify_ring(HypersurfaceRing::fermat(p, 2, 4), opts);
    auto j = profile_to_json(prof);
    auto back = profile_from_json(j);
    CAPTURE(p);
    CHECK(profiles_equal(prof, back));
    // serialize-parse-serialize is a fixed point
    CHECK(profile_to_json(back) == j);
  }
  auto poly = polynomial_ring_profile(7, 2);
  CHECK(profiles_equal(poly, profile_from_json(profile_to_json(poly))));
}

TEST_CASE("schema versioning and unknown markers") {
  auto prof = polynomial_ring_profile(5, 2);
  auto j = profile_to_json(prof);
  CHECK(j["schema_version"] == 1);
  CHECK(j["flags"]["punctured_spectrum_f_nilpotent"].is_null());
  j["schema_version"] = 99;
  CHECK_THROWS_AS(profile_from_json(j), std::invalid_argument);

  // unknown HSL entries carry an explicit marker
  ClassifyOptions opts;
  opts.window_lo = -4;
  opts.max_e = 2;
  auto quartic = classify_ring(HypersurfaceRing::fermat(7, 2, 4), opts);
  auto qj = profile_to_json(quartic);
  CHECK(qj["indices"][2]["hsl"]["kind"] == "unknown");
  CHECK(qj["indices"][2]["asserted"] == false);
}

TEST_CASE("save and load through a file") {
  const std::string path = "/tmp/fnil_test_profile.json";
  auto prof = polynomial_ring_profile(7, 3);
  save_profile(prof, path);
  auto back = load_profile(path);
  CHECK(profiles_equal(prof, back));
  std::remove(path.c_str());
  CHECK_THROWS(load_profile("/tmp/definitely_missing_profile.json"));
}
