#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "k3lat/enumerate.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/kummer.hpp"

using namespace k3lat;

namespace {

// Supports of the Kummer code: spans of the glue supports, by brute force.
std::set<PointSet> kummer_code() {
  std::vector<PointSet> gens{complement_of({})};
  for (int i = 1; i <= 4; ++i) gens.push_back(hyperplane(f2_unit(i), 0));
  std::set<PointSet> code;
  for (unsigned mask = 0; mask < 32; ++mask) {
    PointSet s;
    for (unsigned k = 0; k < 5; ++k)
      if (mask >> k & 1) s = symmetric_difference(s, gens[k]);
    code.insert(s);
  }
  return code;
}

bool disc_opposite(const GramLattice& a, const GramLattice& b) {
  return forms_isomorphic(discriminant_form(a), discriminant_form(b).negated()).isomorphic;
}

}  // namespace

TEST_CASE("Kummer lattice") {
  auto k = kummer_lattice();
  CHECK(k.lattice().rank() == 16);
  CHECK(k.lattice().determinant() == 64);  // 2^16 / (2^5)^2
  CHECK(k.lattice().is_even());
  CHECK(k.lattice().signature() == Signature{0, 16});
  for (const auto& h : all_affine_hyperplanes()) CHECK(k.contains(k.half_sum("K", h)));
  CHECK_FALSE(k.contains(k.half_sum("K", plane_v(1, 2))));
  // q on (Z/2)^6 of a hyperbolic sum: 35 nonzero isotropic elements and 28 with q = 1
  QCensus c = q_census(discriminant_form(k.lattice()));
  CHECK(c[Rational(0)] == 35);
  CHECK(c[Rational(1)] == 28);
  CHECK(disc_opposite(k.lattice(), standard_lattice("U(2)^3")));
  // no roots other than the 16 curves
  CHECK(enumerate_vectors(k.lattice(), -2).size() == 16);
}

TEST_CASE("glue validation") {
  auto glue = kummer_glue();
  glue.push_back(kummer_lattice().half_sum("K", {0, 1}));
  CHECK_THROWS_AS(kummer_lattice_with_glue(glue), GlueError);
}

TEST_CASE("Nikulin lattice") {
  auto n = nikulin_lattice();
  CHECK(n.lattice().determinant() == 64);
  CHECK(n.contains(RatVector(8, rat(1, 2))));
}

TEST_CASE("M_G and the complement of K_0000") {
  auto m = mg_lattice();
  CHECK(abs(m.lattice().determinant()) == 128);
  auto f = discriminant_form(m.lattice());
  CHECK(f.size() == 128);
  for (const auto& o : f.orders()) CHECK(o == 2);
  CHECK(compare_mg_constructions().isometric);
  auto comp = mg_as_complement_in_kummer();
  CHECK(abs(comp.sub.determinant()) == 128);
}

TEST_CASE("K'_4d") {
  auto code = kummer_code();
  for (long d = 1; d <= 6; ++d) {
    INFO("d = " << d);
    auto kp = k4d_prime(d);
    CHECK(kp.lattice().determinant() == 64 * d);
    CHECK(kp.lattice().signature() == Signature{1, 16});
    CHECK(k4d_discriminant_generators_ok(d));
    std::set<PointSet> expected;
    for (const auto& w : code) expected.insert(symmetric_difference(v4d_support(d), w));
    auto got = divisible_class_supports(d);
    CHECK(std::set<PointSet>(got.begin(), got.end()) == expected);
    std::map<std::size_t, std::uint64_t> census;
    for (const auto& s : expected) ++census[s.size()];
    CHECK(divisible_class_census(d) == census);
  }
  CHECK(v4d_support(2).size() == 4);
  CHECK(v4d_support(3).size() == 6);
  CHECK_THROWS_AS(k4d_prime(0), UsageError);
}

TEST_CASE("K'_4d does not depend on the glue choice") {
  for (long d : {1L, 2L}) {
    auto u = k4d_uniqueness_check(d);
    CHECK(u.glue_classes > 0);
    CHECK(u.all_same_det);
    CHECK(u.isomorphic_forms == u.glue_classes);
  }
}

TEST_CASE("NS(Y)") {
  for (long d = 1; d <= 8; ++d) {
    INFO("d = " << d);
    auto y = nsy_lattice(d);
    CHECK(y.lattice().determinant() == -64 * d);
    CHECK(disc_opposite(y.lattice(), transcendental_lattice(TFamily::Y, d)));
  }
  CHECK(nsy_resolve_case(7, NsyCase::Auto) == NsyCase::III);
  CHECK(nsy_resolve_case(7, NsyCase::IV) == NsyCase::IV);
  CHECK_THROWS_AS(nsy_resolve_case(5, NsyCase::IV), UsageError);
  CHECK_THROWS_AS(nsy_resolve_case(5, NsyCase::II), UsageError);
  for (long d : {3L, 7L}) {
    auto y = nsy_lattice(d, NsyCase::IV);
    auto f = discriminant_form(y.lattice());
    CHECK(forms_isomorphic(f, nsy_case_iv_expected_form(d).negated()).isomorphic);
  }
}

TEST_CASE("M_G discriminant orbits") {
  auto orbits = mg_discriminant_orbits();
  REQUIRE(orbits.size() == 6);
  std::uint64_t total = 0;
  for (const auto& o : orbits) total += o.count;
  CHECK(total == 128);
}

TEST_CASE("K3 lattice from glue") {
  auto l = k3_lattice_glued();
  CHECK(abs(l.lattice().determinant()) == 1);
  CHECK(l.lattice().is_even());
  CHECK(l.lattice().signature() == Signature{3, 19});
  CHECK(k3_glue_vectors().size() == 11);
}

TEST_CASE("Omega") {
  for (long d = 1; d <= 4; ++d) {
    INFO("d = " << d);
    auto o = omega_g(d);
    CHECK(o.omega.sub.rank() == 15);
    CHECK(abs(o.omega.sub.determinant()) == 512);
    CHECK(o.w1_index == 2);
  }
}

TEST_CASE("transcendental lattices") {
  for (long t = 1; t <= 4; ++t) {
    INFO("t = " << t);
    for (auto f : {TFamily::XCase1, TFamily::XCase2, TFamily::XCase3}) {
      auto a = transcendental_lattice(f, t);
      auto b = w_vector_complement(f, t);
      CHECK(a.determinant() == b.determinant());
      auto fa = discriminant_form(a);
      auto fb = discriminant_form(b);
      CHECK(invariant_factors(fa.orders()) == invariant_factors(fb.orders()));
      CHECK(q_census(fa) == q_census(fb));
      if (t <= 2) CHECK(forms_isomorphic(fa, fb).isomorphic);
    }
    CHECK(disc_opposite(transcendental_lattice(TFamily::Kummer, t), k4d_prime(t).lattice()));
  }
  CHECK(parse_tfamily("X2") == TFamily::XCase2);
  CHECK_THROWS_AS(parse_tfamily("Z"), UsageError);
}
