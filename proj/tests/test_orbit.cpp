#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3lat/errors.hpp"
#include "k3lat/orbit.hpp"

using namespace k3lat;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

GramLattice uu() { return standard_lattice("U+U"); }

// det of v-perp from det L * v^2 / div(v)^2, with div(v) = gcd of the pairings of v.
Integer complement_det_oracle(const GramLattice& l, const IntVector& v) {
  Integer div = gcd_of(l.gram() * v);
  return l.determinant() * l.norm(v) / (div * div);
}

}  // namespace

TEST_CASE("uu_reduce") {
  auto r = uu_reduce(iv({2, 4, 6, 8}));
  CHECK(r.d == 2);
  CHECK(r.de == 28);
  CHECK(is_isometry(uu(), r.witness));
  CHECK(r.witness * iv({2, 4, 6, 8}) == iv({2, 28, 0, 0}));
  auto g = uu_reduce(iv({6, 10, 0, 0}));
  CHECK(g.d == 2);
  CHECK(g.de == 30);
  auto one = uu_reduce(iv({1, 0, 0, 0}));
  CHECK(one.d == 1);
  CHECK(one.de == 0);
  // negative determinant keeps its sign in the second slot
  auto neg = uu_reduce(iv({3, -5, 0, 0}));
  CHECK(neg.d * neg.de * 2 == uu().norm(iv({3, -5, 0, 0})));
  CHECK_THROWS_AS(uu_reduce(iv({0, 0, 0, 0})), UsageError);
}

TEST_CASE("reflections") {
  auto a4 = a2d_lattice(2);
  auto axis = iv({1, 0, 2});
  auto w = reflect(a4, axis, iv({1, 1, 3}));
  CHECK(w == iv({0, 1, 1}));
  CHECK(a4.norm(w) == a4.norm(iv({1, 1, 3})));
  CHECK(reflect(a4, axis, axis) == iv({-1, 0, -2}));
  for (auto x : {iv({5, -2, 7}), iv({0, 3, 1})}) CHECK(reflect(a4, axis, reflect(a4, axis, x)) == x);
  auto m = reflection_matrix(a4, axis);
  CHECK(is_isometry(a4, m));
  CHECK(m * m == IntMatrix::identity(3));
  CHECK_THROWS_AS(reflect(a4, iv({0, 1, 0}), iv({1, 1, 1})), UsageError);
  auto odd = standard_lattice("<-6>+U");
  CHECK_THROWS_AS(reflect(odd, iv({1, 1, 0}), iv({0, 0, 1})), UsageError);
  CHECK_THROWS_AS(reflection_matrix(odd, iv({1, 1, 0})), UsageError);
}

TEST_CASE("reduce_a2d") {
  auto r = reduce_a2d(2, iv({3, 1, 10}));
  // 2r = 2c - 2 d a^2 = 20 - 36
  CHECK(r.result == iv({0, 1, -8}));
  CHECK(r.steps == 3);
  CHECK(is_isometry(a2d_lattice(2), r.witness));
  CHECK(r.witness * iv({3, 1, 10}) == r.result);
  CHECK(reduce_a2d(5, iv({0, 1, 7})).result == iv({0, 1, 7}));
  // d=3, w=2, h=1, j=1, t=5: s = -d w h^2 - 2 d h j + w t = -2
  CHECK(reduce_a2d(3, iv({3, 2, 10})).result == iv({1, 2, -2}));
  // the minus branch: (w h - j, w, w t) with w=5, h=2, j=2, t=1, d=1: s = -20 + 8 + 5
  auto m = reduce_a2d(1, iv({8, 5, 5}));
  CHECK(m.result == iv({2, 5, -7}));
  CHECK(a2d_lattice(1).norm(m.result) == a2d_lattice(1).norm(iv({8, 5, 5})));
  CHECK_THROWS_AS(reduce_a2d(2, iv({1, 2, 3})), UsageError);
  CHECK_THROWS_AS(reduce_a2d(2, iv({1, 0, 3})), UsageError);
}

TEST_CASE("classification examples") {
  auto a = classify_t2p(2, iv({1, 1, 1, 0, 0}));
  CHECK(a.tag == "v1");
  CHECK(a.params.at("r") == -1);
  auto b = classify_t2p(2, iv({1, 2, 2, 0, 0}));
  CHECK(b.tag == "v2");
  CHECK(b.params.at("s") == 1);
  CHECK(std::find(b.aliases.begin(), b.aliases.end(), "w2") != b.aliases.end());
  auto c = classify_t2p(2, iv({1, 4, 4, 0, 0}));
  CHECK(c.tag == "v2p");
  CHECK(c.params.at("j") == 1);
  CHECK(c.params.at("u") == 1);
  Integer norm = t2p_lattice(2).norm(iv({1, 4, 4, 0, 0}));
  CHECK(norm == 28);
  CHECK(norm == -2 * 2 * 1 + 8 * 4 * 1);
  // rescaled by 2 this is the 8(8u - 1) identity of w3
  CHECK(2 * norm == 8 * (8 * 1 - 1));
  auto z = classify_t2p(3, iv({-1, 0, 0, 0, 0}));
  CHECK(z.tag == "v0");
  // (1, 2p, 0, 0, 0) is the same orbit as v0
  auto z2 = classify_t2p(3, iv({1, 6, 0, 0, 0}));
  CHECK(z2.tag == "v0");
  CHECK(z2.representative == iv({1, 0, 0, 0, 0}));
  CHECK(z2.witness * iv({1, 6, 0, 0, 0}) == z2.representative);
  auto p = classify_t2p(5, iv({2, 5, 15, 0, 0}));
  CHECK(p.tag == "vp");
  CHECK(p.params.at("l") == 2);
  CHECK(p.params.at("t") == 3);
  CHECK_THROWS_AS(classify_t2p(3, iv({2, 2, 4, 0, 0})), UsageError);
  CHECK_THROWS_AS(classify_t2p(4, iv({1, 1, 1, 0, 0})), UsageError);
}

TEST_CASE("witness and invariants on random orbits") {
  const std::vector<std::pair<std::string, std::map<std::string, Integer>>> forms = {
      {"v0", {}}, {"v1", {{"r", 3}}}, {"v1", {{"r", -2}}}, {"v2", {{"s", 2}}}, {"v2p", {{"j", 1}, {"u", -1}}}};
  for (long p : {2L, 3L, 5L}) {
    auto t = t2p_lattice(p);
    auto all = forms;
    if (p == 5) {
      all.push_back({"vp", {{"l", 2}, {"t", 1}}});
      all.push_back({"v2p", {{"j", 3}, {"u", 2}}});
    }
    for (const auto& [tag, params] : all) {
      IntVector rep = normal_form_vector(p, tag, params);
      auto base = classify_t2p(p, rep);
      CHECK(base.tag == tag);
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        IntMatrix g = random_isometry(p, seed * 7919 + static_cast<std::uint64_t>(p));
        IntVector v = g * rep;
        auto c = classify_t2p(p, v);
        INFO("p=" << p << " tag=" << tag << " v=" << to_string(v));
        CHECK(c.tag == base.tag);
        CHECK(c.params == base.params);
        CHECK(is_isometry(t, c.witness));
        CHECK(c.witness * v == c.representative);
        if (t.norm(v) != 0) {
          auto inv = orbit_invariants(p, v);
          CHECK(inv.det_complement == complement_det_oracle(t, v));
          CHECK(inv.det_complement == expected_complement_det(p, c));
        }
      }
    }
  }
}

TEST_CASE("random isometries") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_isometry(t2p_lattice(3), random_isometry(3, seed)));
  CHECK(random_isometry(3, 1, 0) == IntMatrix::identity(5));
  IntMatrix d = IntMatrix::identity(5);
  d(0, 0) = -1;
  CHECK(d * d == IntMatrix::identity(5));
}

TEST_CASE("orbit invariants") {
  CHECK(orbit_invariants(3, iv({1, 0, 0, 0, 0})).det_complement == 1);
  CHECK(orbit_invariants(3, iv({0, 1, 4, 0, 0})).det_complement == -4 * 3 * 4);
  CHECK_THROWS_AS(orbit_invariants(3, iv({0, 1, 0, 0, 0})), DegenerateLatticeError);
}

TEST_CASE("normal forms have distinct invariants") {
  auto s = orbit_disjointness_sweep(7, 20);
  CHECK(s.vectors > 800);
  CHECK(s.collisions.empty());
}
