#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "k3lat/errors.hpp"
#include "k3lat/f2.hpp"

using namespace k3lat;

TEST_CASE("point encoding") {
  CHECK(f2_parse("1000") == 8);
  CHECK(f2_parse("0001") == 1);
  CHECK(f2_label(f2_point(1, 0, 1, 1)) == "1011");
  CHECK(f2_coord(f2_parse("0100"), 2) == 1);
  CHECK(f2_unit(3) == f2_parse("0010"));
  CHECK(f2_dot(f2_parse("1100"), f2_parse("0110")) == 1);
  CHECK_THROWS_AS(f2_parse("102"), UsageError);
}

TEST_CASE("affine subspace counts") {
  auto hyper = all_affine_hyperplanes();
  CHECK(hyper.size() == 30);
  for (const auto& h : hyper) CHECK(h.size() == 8);
  CHECK(std::set<PointSet>(hyper.begin(), hyper.end()).size() == 30);
  // 35 linear planes, each with 4 cosets
  CHECK(all_affine_planes().size() == 140);
  CHECK(plane_v(1, 2) == PointSet{0, 4, 8, 12});
  AffineSubspace s{{{f2_unit(1), 1}, {f2_unit(2), 0}}};
  CHECK(s.dimension() == 2);
}

TEST_CASE("set operations") {
  auto d = symmetric_difference(plane_v(1, 2), plane_v(3, 4));
  CHECK(d.size() == 6);
  CHECK(complement_of(d).size() == 10);
  CHECK(nonzero_points().size() == 15);
  CHECK(to_string(plane_v(3, 4)) == "{0000,0001,0010,0011}");
}

TEST_CASE("gf2 linear algebra") {
  Gf2Matrix m(2, 3);
  m(0, 0) = m(0, 1) = 1;
  m(1, 1) = m(1, 2) = 1;
  CHECK(gf2_rank(m) == 2);
  auto ker = gf2_kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<std::uint8_t>{1, 1, 1});
  std::vector<std::uint8_t> x;
  CHECK(gf2_solve(m, {1, 0}, x));
  CHECK(((x[0] ^ x[1]) == 1 && (x[1] ^ x[2]) == 0));
  Gf2Matrix z(1, 2);
  CHECK_FALSE(gf2_solve(z, {1}, x));
}
