#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3lat/errors.hpp"
#include "k3lat/models.hpp"

using namespace k3lat;

namespace {

ExactPolynomial x(std::size_t n, std::size_t i) { return ExactPolynomial::variable(n, i); }

ExactPolynomial random_poly(std::mt19937& rng, std::size_t n, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, static_cast<int>(max_deg));
  ExactPolynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n);
    for (auto& v : e) v = static_cast<unsigned>(expo(rng)) / static_cast<unsigned>(n);
    p.add_term(e, Rational(coef(rng), 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  auto a = x(2, 0) + x(2, 1);
  auto sq = a * a;
  CHECK(to_string(sq) == "x0^2 + 2*x0*x1 + x1^2");
  CHECK((a - a).is_zero());
  CHECK(sq.degree() == 2);
  CHECK(a.pow(3) == sq * a);
  CHECK(sq.evaluate({Rational(1, 2), Rational(3)}) == Rational(49, 4));
  CHECK(sq.derivative(0) == x(2, 0) * Rational(2) + x(2, 1) * Rational(2));
  CHECK(ExactPolynomial(2).degree() == -1);
  // no zero coefficients survive cancellation
  auto c = x(2, 0) * x(2, 1) - x(2, 1) * x(2, 0);
  CHECK(c.terms().empty());
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), DimensionError);
  CHECK_THROWS_AS(sq.evaluate({1}), DimensionError);
}

TEST_CASE("grlex order puts higher degree first then lex") {
  GrlexGreater gt;
  CHECK(gt({2, 0, 0}, {0, 1, 0}));
  CHECK(gt({1, 1, 0}, {1, 0, 1}));
  CHECK(gt({0, 2, 0}, {0, 1, 1}));
  CHECK_FALSE(gt({0, 1, 0}, {0, 1, 0}));
  auto monos = monomials_of_degree(3, 2);
  CHECK(monos.size() == 6);
  CHECK(monos.front() == Exponents{2, 0, 0});
  CHECK(monos.back() == Exponents{0, 0, 2});
  CHECK(std::is_sorted(monos.begin(), monos.end(), gt));
}

TEST_CASE("substitute under the sign and swap generators") {
  auto gens = heisenberg_generators();
  auto ps = heisenberg_quartics();
  REQUIRE(gens.size() == 4);
  for (const auto& g : gens)
    for (const auto& p : ps) CHECK(substitute(p, g) == p);
  // two sign flips fix the product monomial; a single flip negates it
  auto one_flip = ProjectiveTransform::signed_permutation({0, 1, 2, 3}, {-1, 1, 1, 1});
  CHECK(substitute(ps[4], one_flip) == -ps[4]);
  auto k = ExactPolynomial::constant(4, Rational(7, 3));
  CHECK(substitute(k, gens[2]) == k);
  // x0 -> x1 under the swap generator
  CHECK(substitute(x(4, 0), gens[2]) == x(4, 1));
  CHECK(substitute(x(4, 0), gens[3]) == x(4, 3));
  CHECK_THROWS_AS(substitute(x(3, 0), gens[0]), DimensionError);
  RatMatrix singular(2, 2);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(ProjectiveTransform::from_matrix(singular), UsageError);
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937 rng(20260);
  auto gens = heisenberg_generators();
  RatMatrix m(4, 4);
  // a non-permutation invertible transform as well
  m(0, 0) = 1, m(0, 1) = 2, m(1, 1) = 1, m(2, 2) = Rational(1, 3), m(3, 0) = -1, m(3, 3) = 1;
  gens.push_back(ProjectiveTransform::from_matrix(m));
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_poly(rng, 4, 12, 5), q = random_poly(rng, 4, 12, 5);
    for (const auto& g : gens) {
      CHECK(substitute(p * q, g) == substitute(p, g) * substitute(q, g));
      CHECK(substitute(p + q, g) == substitute(p, g) + substitute(q, g));
      if (p.is_homogeneous() && !p.is_zero()) CHECK(substitute(p, g).degree() <= p.degree());
    }
  }
}

TEST_CASE("invariant spaces") {
  auto gens = heisenberg_generators();
  auto quartic = invariant_space(4, gens, 4);
  CHECK(quartic.size() == 5);
  CHECK(same_span(quartic, heisenberg_quartics()));
  for (const auto& p : quartic)
    for (const auto& g : gens) CHECK(substitute(p, g) == p);
  CHECK(invariant_space(4, gens, 1).empty());
  CHECK(invariant_space(4, {}, 4).size() == 35);
  CHECK(invariant_space(4, gens, 0).size() == 1);
  // a lone diagonal sign flip keeps the quartics even in x1 and x3
  auto flip = ProjectiveTransform::signed_permutation({0, 1, 2, 3}, {1, -1, 1, -1});
  std::size_t even_count = 0;
  for (const auto& e : monomials_of_degree(4, 4))
    if ((e[1] + e[3]) % 2 == 0) ++even_count;
  CHECK(invariant_space(4, {flip}, 4).size() == even_count);
  CHECK_THROWS_AS(invariant_space(4, gens, 9), GuardExceeded);
  CHECK_THROWS_AS(invariant_space(4, gens, -1), GuardExceeded);
}

TEST_CASE("the quartic relation among p0..p4") {
  auto rep = igusa_relation_check();
  CHECK(rep.identically_zero);
  CHECK(rep.witness.empty());
  CHECK(rep.spot_value == 0);

  auto bad = igusa_relation_check(17);
  CHECK_FALSE(bad.identically_zero);
  // the extra p4^4 = x0^4 x1^4 x2^4 x3^4 is the only surviving term
  CHECK(bad.nonzero_terms == 1);
  CHECK(bad.composed_degree == 16);
  CHECK(bad.witness == "x0^4*x1^4*x2^4*x3^4");
  CHECK(bad.spot_value == Rational(30 * 30 * 30 * 30));

  // independent spot check at a second point via direct evaluation
  auto ps = heisenberg_quartics();
  RatVector pt{Rational(1, 2), Rational(-3), Rational(7, 5), Rational(2)}, vals;
  for (const auto& p : ps) vals.push_back(p.evaluate(pt));
  CHECK(igusa_relation().evaluate(vals) == 0);
}

TEST_CASE("even sign group invariants on six variables") {
  auto rep = even_sign_invariants_check();
  CHECK(rep.squares_invariant);
  CHECK(rep.product_invariant);
  CHECK(rep.degree2_dimension == 6);
  CHECK(rep.degree2_is_squares);
  CHECK(rep.relation_zero);
  CHECK(rep.product_degree == 6);
  CHECK(rep.ok());
  // degree 2 has 21 monomials, of which only the 6 squares survive
  CHECK(monomials_of_degree(6, 2).size() == 21);
  auto gens = even_sign_generators();
  CHECK(gens.size() == 5);
  // a single odd flip is not in the group: the product changes sign
  auto odd = ProjectiveTransform::signed_permutation({0, 1, 2, 3, 4, 5}, {-1, 1, 1, 1, 1, 1});
  ExactPolynomial prod = ExactPolynomial::constant(6, 1);
  for (std::size_t i = 0; i < 6; ++i) prod = prod * x(6, i);
  CHECK(substitute(prod, odd) == -prod);
}

TEST_CASE("gradients") {
  auto sq = x(4, 0) * x(4, 0);
  CHECK(gradient_at(sq, {1, 0, 0, 0}) == RatVector{2, 0, 0, 0});
  CHECK(gradient_at(heisenberg_quartics()[4], {0, 1, 1, 1}) == RatVector{1, 0, 0, 0});
  auto q = invariant_quartic({1, Rational(2, 3), -5, 7, 11});
  auto g = gradient_at(q, {1, 2, 3, 5});
  CHECK(std::any_of(g.begin(), g.end(), [](const Rational& r) { return r != 0; }));
  // Euler: sum x_i dF/dx_i = 4 F
  RatVector pt{1, 2, 3, 5};
  Rational euler = 0;
  for (std::size_t i = 0; i < 4; ++i) euler += pt[i] * g[i];
  CHECK(euler == q.evaluate(pt) * 4);
  CHECK_THROWS_AS(gradient_at(sq, {1, 2}), DimensionError);
  CHECK_THROWS_AS(invariant_quartic({1, 2}), DimensionError);
}

TEST_CASE("genus two quadrics at explicit parameters") {
  std::vector<Rational> s{0, 1, -1, 2, Rational(1, 2), 3};
  auto qs = genus2_quadrics(s);
  REQUIRE(qs.size() == 3);
  for (const auto& q : qs) CHECK(q.degree() == 2);
  CHECK(qs[2].coefficient({0, 0, 0, 0, 2, 0}) == Rational(1, 4));
  // the point with all z_i = 0 except none: check a point on all three via exact evaluation
  RatVector z(6, Rational(0));
  for (const auto& q : qs) CHECK(q.evaluate(z) == 0);
  CHECK(gradient_at(qs[1], {1, 1, 1, 1, 1, 1}) == RatVector{0, 2, -2, 4, 1, 6});
  CHECK_THROWS_AS(genus2_quadrics({0, 1, 1, 2, 3, 4}), UsageError);
  CHECK_THROWS_AS(genus2_quadrics({0, 1}), DimensionError);
}
