#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3lat/errors.hpp"
#include "k3lat/finite_form.hpp"

using namespace k3lat;

namespace {

// q computed straight from lifts and the Gram matrix, no numerator tables.
QCensus census_from_lifts(const GramLattice& l, const FiniteQuadraticForm& f) {
  QCensus c;
  for (std::uint64_t idx = 1; idx < f.size(); ++idx) {
    auto e = f.element(idx);
    RatVector x(l.rank(), Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t r = 0; r < l.rank(); ++r) x[r] += e[i] * f.lifts()[i][r];
    ++c[mod2(l.norm(x))];
  }
  return c;
}

}  // namespace

TEST_CASE("mod reductions") {
  CHECK(mod2(rat(-1, 2)) == rat(3, 2));
  CHECK(mod2(Rational(5)) == 1);
  CHECK(mod1(rat(-1, 3)) == rat(2, 3));
  CHECK(mod1(rat(7, 4)) == rat(3, 4));
}

TEST_CASE("discriminant form of A1 and <-2d>") {
  auto f = discriminant_form(standard_lattice("A1(-1)"));
  CHECK(f.size() == 2);
  CHECK(f.q({1}) == rat(3, 2));
  auto g = discriminant_form(standard_lattice("<-12>"));
  CHECK(g.size() == 12);
  CHECK(g.q({1}) == mod2(rat(-1, 12)));
  CHECK(g.b({1}, {1}) == rat(11, 12));
}

TEST_CASE("census agrees with a direct evaluation") {
  for (const char* spec : {"<-2>^6", "U(2)+<-8>", "A7(-1)+<-6>", "D4(-1)+U(2)", "<-4>+<-12>+U(2)"}) {
    auto l = standard_lattice(spec);
    auto f = discriminant_form(l);
    INFO(spec);
    CHECK(q_census(f) == census_from_lifts(l, f));
    CHECK(q_census_serial(f) == q_census(f));
  }
}

TEST_CASE("q does not depend on the choice of lifts") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-3, 3);
  auto l = standard_lattice("<-8>+U(2)+<-6>");
  auto f = discriminant_form(l);
  std::vector<RatVector> shifted = f.lifts();
  for (auto& v : shifted)
    for (auto& x : v) x += pick(rng);
  FiniteQuadraticForm g(f.orders(), f.values(), shifted);
  CHECK(census_from_lifts(l, g) == q_census(f));
}

TEST_CASE("form isomorphism") {
  RatMatrix u2{{0, 0}, {0, 0}};
  u2(0, 1) = u2(1, 0) = rat(1, 2);
  RatMatrix v2{{1, 0}, {0, 1}};
  v2(0, 1) = v2(1, 0) = rat(1, 2);
  auto fu = form_from_matrix({2, 2}, u2);
  auto fv = form_from_matrix({2, 2}, v2);
  CHECK_FALSE(forms_isomorphic(fu, fv).isomorphic);
  CHECK(forms_isomorphic(fu, fu.negated()).isomorphic);
  // v + v is isomorphic to u + u although v and u differ
  auto a = discriminant_form(standard_lattice("D4(-1)+D4(-1)"));
  CHECK(forms_isomorphic(a, fv.direct_sum(fv)).isomorphic);
  CHECK(forms_isomorphic(a, fu.direct_sum(fu)).isomorphic);
  CHECK_FALSE(forms_isomorphic(a, fu.direct_sum(fv)).isomorphic);
  // <-2> + <-6> vs <-6> + <-2>: generator order differs
  auto c = discriminant_form(standard_lattice("<-2>+<-6>"));
  auto d = discriminant_form(standard_lattice("<-6>+<-2>"));
  auto iso = forms_isomorphic(c, d);
  REQUIRE(iso.isomorphic);
  for (std::size_t i = 0; i < c.generator_count(); ++i) {
    FiniteQuadraticForm::Element e(c.generator_count(), 0);
    e[i] = 1;
    CHECK(d.q(iso.images[i]) == c.q(e));
  }
}

TEST_CASE("malformed forms are rejected") {
  RatMatrix bad{{0}};
  bad(0, 0) = rat(1, 3);
  CHECK_THROWS_AS(form_from_matrix({2}, bad), UsageError);
  CHECK_THROWS_AS(discriminant_form(standard_lattice("<-3>")), OddLatticeError);
}

TEST_CASE("verify_form_matches") {
  RatMatrix q{{0}};
  q(0, 0) = mod2(rat(-1, 4));
  CHECK(verify_form_matches(standard_lattice("<-4>"), {4}, q));
  q(0, 0) = rat(1, 4);
  CHECK_FALSE(verify_form_matches(standard_lattice("<-4>"), {4}, q));
}
