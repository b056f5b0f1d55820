#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "k3lat/enumerate.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/lattice.hpp"

using namespace k3lat;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Brute force over a coordinate box; used as an independent oracle for enumeration.
std::vector<IntVector> box_vectors(const GramLattice& l, long norm, long radius) {
  std::vector<IntVector> out;
  IntVector x(l.rank(), Integer(-radius));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == l.rank()) {
      auto first = std::find_if(x.begin(), x.end(), [](const Integer& c) { return c != 0; });
      if (first != x.end() && *first > 0 && l.norm(x) == norm) out.push_back(x);
      return;
    }
    for (long v = -radius; v <= radius; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pairing on standard lattices") {
  auto u = hyperbolic_plane();
  CHECK(u.pairing(iv({1, 0}), iv({0, 1})) == 1);
  auto u2 = hyperbolic_plane(2);
  CHECK(u2.pairing(iv({1, 0}), iv({0, 1})) == 2);
  auto k = standard_lattice("<-2>^16");
  CHECK(k.rank() == 16);
  CHECK(k.norm(k.basis_vector(5)) == -2);
  CHECK_THROWS_AS(u.pairing(iv({1}), iv({0, 1})), DimensionError);
}

TEST_CASE("invariants") {
  auto e8 = root_lattice_e8();
  auto inv = e8.invariants();
  CHECK(inv.rank == 8);
  CHECK(inv.signature == Signature{0, 8});
  CHECK(inv.determinant == 1);
  CHECK(inv.is_even);

  auto u23 = standard_lattice("U(2)^3");
  auto i2 = u23.invariants();
  CHECK(i2.signature == Signature{3, 3});
  CHECK(i2.abs_determinant() == 64);
  CHECK(i2.determinant == -64);

  CHECK_THROWS_AS(GramLattice(IntMatrix{{0, 0}, {0, 1}}).invariants(), DegenerateLatticeError);
  CHECK_THROWS_AS(GramLattice(IntMatrix{{0, 1}, {2, 0}}), UsageError);
}

TEST_CASE("signature of mixed forms") {
  // U + <-2> + <4>: two positive, two negative
  auto l = standard_lattice("U+<-2>+<4>");
  CHECK(l.signature() == Signature{2, 2});
  CHECK(standard_lattice("U^3+E8(-1)^2").signature() == Signature{3, 19});
}

TEST_CASE("smith normal form") {
  IntMatrix m{{2, -6}, {8, 4}};
  auto s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.divisors == std::vector<Integer>{2, 28});
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);

  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));

  auto r = smith_normal_form(IntMatrix{{4, 0}, {0, 2}});
  CHECK(r.divisors == std::vector<Integer>{2, 4});

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = dist(rng);
    auto t = smith_normal_form(a);
    CHECK(t.U * a * t.V == t.D);
    for (std::size_t i = 0; i + 1 < t.divisors.size(); ++i)
      CHECK(mpz_divisible_p(t.divisors[i + 1].get_mpz_t(), t.divisors[i].get_mpz_t()));
  }
}

TEST_CASE("hermite basis and kernel") {
  IntMatrix rows{{2, 4}, {3, 6}, {0, 5}};
  auto h = hermite_row_basis(rows);
  CHECK(h == IntMatrix{{1, 2}, {0, 5}});
  IntMatrix a{{1, 2, 3}};
  auto k = integer_kernel(a);
  CHECK(k.cols() == 2);
  CHECK((a * k) == IntMatrix(1, 2));
  CHECK(is_primitive(k));
}

TEST_CASE("discriminant groups") {
  auto e8 = root_lattice_e8();
  CHECK(discriminant_group(e8).orders.empty());
  auto u2 = hyperbolic_plane(2);
  auto g = discriminant_group(u2);
  CHECK(g.orders == std::vector<Integer>{2, 2});
  for (const auto& lift : g.lifts) CHECK(is_integral(u2.dual_coords(lift)));
  auto e8m2 = rescale(e8, 2);
  CHECK(discriminant_group(e8m2).orders == std::vector<Integer>(8, 2));
  auto a2 = root_lattice_a(2);
  auto ga = discriminant_group(a2);
  CHECK(ga.orders == std::vector<Integer>{3});
  CHECK(ga.coordinates(a2, ga.lifts[0]) == iv({1}));
}

TEST_CASE("orthogonal complement and saturation") {
  auto u = hyperbolic_plane();
  IntMatrix e(2, 1);
  e(0, 0) = 1;
  CHECK_THROWS_AS(orthogonal_complement(u, e), DegenerateLatticeError);

  // <2x + 2y> inside <-2>^2 saturates to <x + y> with index 2
  auto d = standard_lattice("<-2>^2");
  IntMatrix s(2, 1);
  s(0, 0) = 2;
  s(1, 0) = 2;
  auto sat = saturation(d, s);
  CHECK(sat.index == 2);
  CHECK(sat.closure.basis.col(0) == iv({1, 1}));
  IntMatrix p(2, 1);
  p(0, 0) = 1;
  CHECK(saturation(d, p).index == 1);

  auto comp = orthogonal_complement(d, sat.closure.basis);
  CHECK(comp.sub.rank() == 1);
  CHECK(comp.sub.gram()(0, 0) == -4);
  CHECK(d.pairing(comp.basis.col(0), sat.closure.basis.col(0)) == 0);
}

TEST_CASE("overlattice") {
  auto n8 = standard_lattice("<-2>^8");
  RatVector half(8, rat(1, 2));
  auto n = overlattice(n8, {half}, "N");
  CHECK(n.index == 2);
  CHECK(n.lattice.invariants().abs_determinant() == 64);
  CHECK(n.lattice.is_even());
  CHECK(n.coordinates_of(half).has_value());
  RatVector quarter(8, Rational(0));
  quarter[0] = rat(1, 2);
  CHECK(!n.coordinates_of(quarter).has_value());

  auto same = overlattice(n8, {});
  CHECK(same.index == 1);
  CHECK(same.lattice.gram() == n8.gram());

  // ½(x1+x2) has square -1: odd
  RatVector odd(8, Rational(0));
  odd[0] = odd[1] = rat(1, 2);
  CHECK_THROWS_AS(overlattice(n8, {odd}), GlueError);
  RatVector bad(8, Rational(0));
  bad[0] = rat(1, 3);
  CHECK_THROWS_AS(overlattice(n8, {bad}), GlueError);
}

TEST_CASE("standard lattice constructors") {
  CHECK(standard_lattice("U(32)").gram() == IntMatrix{{0, 32}, {32, 0}});
  auto lhs = rescale(standard_lattice("U^3+<-4>"), 2);
  auto rhs = standard_lattice("U(2)^3+<-8>");
  CHECK(lhs.gram() == rhs.gram());
  CHECK(standard_lattice("A1(-1)").gram() == IntMatrix{{-2}});
  auto e8 = root_lattice_e8();
  CHECK(e8.gram()(2, 7) == 1);
  CHECK(e8.gram()(6, 5) == 1);
  CHECK(e8.gram()(0, 7) == 0);
  CHECK(root_lattice_d(4).invariants().determinant == 4);
  CHECK(root_lattice_a(7).invariants().determinant == -8);
  CHECK_THROWS_AS(standard_lattice("Q7"), UsageError);
}

TEST_CASE("enumeration against brute force") {
  for (const char* name : {"A3(-1)", "D4(-1)", "A2(-1)+<-4>", "<-2>^3+<-6>"}) {
    auto l = standard_lattice(name);
    for (long norm : {-2L, -4L, -6L}) {
      auto fast = enumerate_vectors(l, norm);
      CHECK(fast == box_vectors(l, norm, 4));
      CHECK(fast == enumerate_vectors_serial(l, norm));
    }
  }
}

TEST_CASE("enumeration counts") {
  auto e8 = root_lattice_e8();
  auto roots = enumerate_vectors(e8, -2);
  CHECK(roots.size() == 120);
  CHECK(std::is_sorted(roots.begin(), roots.end()));
  // theta series of E8: 2160 vectors of norm 4
  CHECK(enumerate_vectors(e8, -4).size() == 1080);
  CHECK(enumerate_vectors(standard_lattice("<-4>"), -2).empty());
  CHECK_THROWS_AS(enumerate_vectors(hyperbolic_plane(), -2), NotDefiniteError);
  CHECK_THROWS_AS(enumerate_vectors(e8, -200), GuardExceeded);
}

TEST_CASE("lll transform is unimodular") {
  IntMatrix g{{10, 7, 3}, {7, 10, 4}, {3, 4, 12}};
  auto t = lll_reduce_gram(g);
  CHECK(abs(determinant(t)) == 1);
}
