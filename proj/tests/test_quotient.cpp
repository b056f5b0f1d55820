#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3lat/errors.hpp"
#include "k3lat/quotient.hpp"

using namespace k3lat;

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n, Integer(0));
  v[i] = 1;
  return v;
}

std::size_t idx(const GramLattice& l, const std::string& label) { return *l.index_of(label); }

}  // namespace

TEST_CASE("lattices and map shapes") {
  auto maps = build_quotient_maps();
  CHECK(maps.push.source.rank() == 16 + 6 + 120);
  CHECK(maps.push.target.rank() == 22);
  CHECK(maps.push.matrix.rows() == 22);
  CHECK(maps.pull.matrix.rows() == 142);
  CHECK_FALSE(maps.push.source.is_even());
  CHECK(maps.push.target.is_even());
  CHECK(maps.push.target.invariants().abs_determinant() == Integer(1) << 46);  // 2 * (2^10)^3 * 2^15
}

TEST_CASE("images of basis vectors") {
  auto maps = build_quotient_maps();
  const auto& cover = maps.push.source;
  const auto& base = maps.push.target;
  IntVector k = unit(base.rank(), idx(base, "k"));
  CHECK(maps.push(unit(cover.rank(), idx(cover, "k1"))) == k);
  CHECK(maps.push(unit(cover.rank(), idx(cover, "k2"))) == k);
  CHECK(maps.push(unit(cover.rank(), idx(cover, "n4_7"))) == unit(base.rank(), idx(base, "m4")));

  IntVector expected(cover.rank(), Integer(0));
  for (int j = 1; j <= 8; ++j) expected[idx(cover, "n3_" + std::to_string(j))] = 2;
  CHECK(maps.pull(unit(base.rank(), idx(base, "m3"))) == expected);

  // pull(push(x)) = 16 x on the U(2) block.
  for (const char* l : {"e1", "f1", "e2", "f2", "e3", "f3"}) {
    IntVector x = unit(cover.rank(), idx(cover, l));
    IntVector y = maps.pull(maps.push(x));
    for (auto& c : x) c *= 16;
    CHECK(y == x);
  }
}

TEST_CASE("metric identities") {
  auto maps = build_quotient_maps();
  const auto& cover = maps.push.source;
  const auto& base = maps.push.target;
  IntVector e = unit(cover.rank(), idx(cover, "e2")), f = unit(cover.rank(), idx(cover, "f2"));
  CHECK(cover.pairing(e, f) == 2);
  CHECK(base.pairing(maps.push(e), maps.push(f)) == 32);
  IntVector m5 = unit(base.rank(), idx(base, "m5"));
  CHECK(base.norm(m5) == -2);
  CHECK(cover.pairing(maps.pull(m5), unit(cover.rank(), idx(cover, "k9"))) == 0);

  // Oracle: projection formula vector by vector on every basis pair.
  bool all = true;
  for (std::size_t a = 0; a < base.rank(); ++a)
    for (std::size_t b = 0; b < cover.rank(); ++b) {
      IntVector ua = unit(base.rank(), a), ub = unit(cover.rank(), b);
      all = all && cover.pairing(maps.pull(ua), ub) == base.pairing(ua, maps.push(ub));
    }
  CHECK(all);

  auto rep = verify_quotient_identities(maps);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 7);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}

TEST_CASE("a corrupted map fails with the offending pair") {
  auto maps = build_quotient_maps();
  maps.pull.matrix(idx(maps.pull.target, "n2_3"), idx(maps.pull.source, "m2")) = 3;
  auto rep = verify_quotient_identities(maps);
  CHECK_FALSE(rep.all_pass());
  bool named = false;
  for (const auto& c : rep.checks)
    if (c.name == "projection_formula") {
      CHECK_FALSE(c.pass);
      named = c.detail.find("m2") != std::string::npos && c.detail.find("n2_3") != std::string::npos;
    }
  CHECK(named);

  auto bad = build_quotient_maps();
  bad.push.matrix = IntMatrix(3, 3);
  CHECK_THROWS_AS(verify_quotient_identities(bad), DimensionError);
}

TEST_CASE("overlattice chain") {
  auto rep = overlattice_chain_check();
  // |det R| = 2^16 * (2^10)^3 = 2^46 against a unimodular lattice.
  CHECK(rep.total_index == Integer(1) << 23);
  CHECK(rep.total_exponent == 23);
  REQUIRE(rep.steps.size() == 3);
  CHECK(rep.steps[0].index == Integer(1) << 12);
  CHECK(rep.steps[0].sub_det == Integer(1) << 46);
  CHECK(rep.steps[1].index == Integer(1) << 11);
  CHECK(rep.steps[1].super_det == 1);
  CHECK(rep.steps[2].index == Integer(1) << 5);
  for (const auto& s : rep.steps) CHECK(s.consistent);
  CHECK(rep.quarter_classes_generate);
  CHECK(rep.closes);
}
