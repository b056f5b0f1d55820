#include "k3lat/orbit.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "k3lat/errors.hpp"

namespace k3lat {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

GramLattice t2p_lattice(long p) {
  IntMatrix g(5, 5);
  g(0, 0) = -2 * p;
  g(1, 2) = g(2, 1) = 1;
  g(3, 4) = g(4, 3) = 1;
  return GramLattice(g, {"a0", "a1", "a2", "a3", "a4"}, "T_" + std::to_string(2 * p));
}

GramLattice a2d_lattice(long d) {
  IntMatrix g(3, 3);
  g(0, 0) = -2 * d;
  g(1, 2) = g(2, 1) = 1;
  return GramLattice(g, {"a", "b", "c"}, "A_" + std::to_string(2 * d));
}

bool is_isometry(const GramLattice& l, const IntMatrix& m) {
  return m.rows() == l.rank() && m.cols() == l.rank() && m.transpose() * l.gram() * m == l.gram();
}

namespace {

// U+U as 2x2 matrices [[a1, -a3], [a4, a2]] with quadratic form 2 det.
IntMatrix as_matrix(const IntVector& v) {
  IntMatrix m(2, 2);
  m(0, 0) = v[0];
  m(0, 1) = -v[2];
  m(1, 0) = v[3];
  m(1, 1) = v[1];
  return m;
}

IntVector from_matrix(const IntMatrix& m) { return {m(0, 0), m(1, 1), -m(0, 1), m(1, 0)}; }

// Coordinate matrix of X -> A X B on U+U.
IntMatrix uu_action(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix w(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    IntVector e(4, Integer(0));
    e[k] = 1;
    w.set_col(k, from_matrix(a * as_matrix(e) * b));
  }
  return w;
}

IntMatrix embed_uu(const IntMatrix& w4) {
  IntMatrix w = IntMatrix::identity(5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) w(i + 1, j + 1) = w4(i, j);
  return w;
}

IntMatrix flip_first(std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  m(0, 0) = -1;
  return m;
}

// (a0, a1, a2) -> (a0 - k a1, a1, a2 - 2pk a0 + p k^2 a1): k-fold D o R on the first U.
IntMatrix shift_matrix(long p, const Integer& k, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  m(0, 1) = -k;
  m(2, 0) = -2 * p * k;
  m(2, 1) = p * k * k;
  return m;
}

// k with a - k b in (-b/2, b/2], for b > 0
Integer round_div(const Integer& a, const Integer& b) {
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * (a - k * b) > b) ++k;
  return k;
}

}  // namespace

UUReduction uu_reduce(const IntVector& v4) {
  if (v4.size() != 4) throw DimensionError("uu_reduce expects 4 coordinates");
  if (std::all_of(v4.begin(), v4.end(), [](const Integer& x) { return x == 0; })) throw UsageError("uu_reduce: zero vector");
  IntMatrix m = as_matrix(v4);
  SmithForm s = smith_normal_form(m);
  IntMatrix u = s.U;
  if (determinant(s.U) * determinant(s.V) == -1) u.negate_row(1);
  IntMatrix w = uu_action(u, s.V);
  IntVector img = w * v4;
  if (img[2] != 0 || img[3] != 0 || img[0] <= 0) throw InternalError("uu_reduce produced a non-diagonal image");
  return UUReduction{img[0], img[1], w};
}

IntMatrix reflection_matrix(const GramLattice& l, const IntVector& axis) {
  Integer vv = l.norm(axis);
  if (vv == 0) throw UsageError("reflection axis is isotropic");
  RatMatrix r = RatMatrix::identity(l.rank());
  IntVector gv = l.gram() * axis;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) {
      Rational x(2 * axis[i] * gv[j], vv);
      x.canonicalize();
      r(i, j) -= x;
    }
  bool integral = true;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) integral = integral && r(i, j).get_den() == 1;
  if (!integral) throw UsageError("reflection in " + to_string(axis) + " is not integral on the lattice");
  return to_integer(r);
}

IntVector reflect(const GramLattice& l, const IntVector& axis, const IntVector& w) {
  if (axis.size() != l.rank() || w.size() != l.rank()) throw DimensionError("reflect: dimension mismatch");
  Integer vv = l.norm(axis);
  if (vv == 0) throw UsageError("reflection axis is isotropic");
  Integer num = 2 * l.pairing(w, axis);
  if (!mpz_divisible_p(num.get_mpz_t(), vv.get_mpz_t())) throw UsageError("reflection image is not integral");
  Integer k = num / vv;
  IntVector out = w;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * axis[i];
  return out;
}

A2dReduction reduce_a2d(long d, const IntVector& v3) {
  if (d < 1) throw UsageError("d must be positive");
  if (v3.size() != 3) throw DimensionError("reduce_a2d expects 3 coordinates");
  const Integer& w = v3[1];
  if (w < 1 || !mpz_divisible_p(v3[2].get_mpz_t(), w.get_mpz_t()))
    throw UsageError("reduce_a2d expects (a, 1, c) or (wh +- j, w, wt) with w > 0");
  A2dReduction out;
  Integer k = round_div(v3[0], w);
  out.steps = static_cast<std::size_t>(Integer(abs(k)).get_ui());
  out.witness = shift_matrix(d, k, 3);
  out.result = out.witness * v3;
  if (out.result[0] < 0) {
    out.witness = flip_first(3) * out.witness;
    out.result = out.witness * v3;
    ++out.steps;
  }
  return out;
}

IntVector normal_form_vector(long p, const std::string& tag, const std::map<std::string, Integer>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw UsageError("normal form " + tag + " needs parameter " + key);
    return it->second;
  };
  if (tag == "v0") return {1, 0, 0, 0, 0};
  if (tag == "v1") return {0, 1, get("r"), 0, 0};
  if (tag == "v2") return {1, 2, 2 * get("s"), 0, 0};
  if (tag == "vp") return {get("l"), p, p * get("t"), 0, 0};
  if (tag == "v2p") return {get("j"), 2 * p, 2 * p * get("u"), 0, 0};
  throw UsageError("unknown normal form tag " + tag);
}

NormalFormClass classify_t2p(long p, const IntVector& v) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  if (v.size() != 5) throw DimensionError("T_2p vectors have 5 coordinates");
  if (gcd_of(v) != 1) throw UsageError("vector is not primitive");
  NormalFormClass out;
  IntMatrix w = IntMatrix::identity(5);
  IntVector cur = v;
  auto apply = [&](const IntMatrix& m) {
    w = m * w;
    cur = m * cur;
  };
  IntVector tail(cur.begin() + 1, cur.end());
  if (std::all_of(tail.begin(), tail.end(), [](const Integer& x) { return x == 0; })) {
    if (cur[0] < 0) apply(flip_first(5));
    out.tag = "v0";
    out.representative = cur;
    out.witness = w;
    return out;
  }
  const IntMatrix reflection = reflection_matrix(t2p_lattice(p), {1, 0, p, 0, 0});
  apply(embed_uu(uu_reduce(tail).witness));
  // b-decreasing loop: one reflection makes b = gcd(b, 2p), the guard only catches bugs
  std::size_t steps = 0;
  while ((2 * p) % cur[1] != 0) {
    if (++steps > kOrbitLoopGuard) throw InternalError("orbit reduction did not terminate");
    apply(reflection);
    apply(embed_uu(uu_reduce(IntVector(cur.begin() + 1, cur.end())).witness));
  }
  const Integer b = cur[1];
  Integer k = round_div(cur[0], b);
  if (k != 0) {
    apply(shift_matrix(p, k, 5));
    steps += Integer(abs(k)).get_ui();
  }
  if (cur[0] < 0) apply(flip_first(5));
  const Integer& n = cur[0];
  const Integer& c = cur[2];
  if (b == 1) {
    out.tag = "v1";
    out.params["r"] = c;
    if (p == 2) out.aliases = {"w1"};
  } else if (b == 2) {
    out.tag = "v2";
    out.params["s"] = c / 2;
    if (p == 2) {
      out.params["l"] = n;
      out.params["t"] = c / 2;
      out.aliases = {"vp", "w2"};
    }
  } else if (b == p) {
    out.tag = "vp";
    out.params["l"] = n;
    out.params["t"] = c / p;
  } else if (n == 1 && c == 0) {
    // (1, 2p, 0, 0, 0) lies in the orbit of (1, 0, 0, 0, 0): swap and negate the first U, flip, reflect
    IntMatrix s = IntMatrix::identity(5);
    s(1, 1) = s(2, 2) = 0;
    s(1, 2) = s(2, 1) = -1;
    apply(s);
    apply(flip_first(5));
    apply(reflection);
    steps += 3;
    out.tag = "v0";
  } else {
    out.tag = "v2p";
    out.params["j"] = n;
    out.params["u"] = c / (2 * p);
    if (p == 2) out.aliases = {"w3"};
  }
  if (gcd_of(cur) != 1) throw InternalError("normal form lost primitivity");
  out.representative = cur;
  out.witness = w;
  out.reduction_steps = steps;
  return out;
}

OrbitInvariants orbit_invariants(long p, const IntVector& v) {
  GramLattice t = t2p_lattice(p);
  if (v.size() != 5) throw DimensionError("T_2p vectors have 5 coordinates");
  Integer norm = t.norm(v);
  if (norm == 0) throw DegenerateLatticeError("isotropic vector: complement is degenerate");
  IntMatrix col(5, 1);
  col.set_col(0, v);
  Embedding e = orthogonal_complement(t, col, "v-perp");
  return OrbitInvariants{norm, e.sub.determinant(), e.sub};
}

Integer expected_complement_det(long p, const NormalFormClass& c) {
  auto param = [&](const char* k) { return c.params.at(k); };
  if (c.tag == "v0") return 1;
  if (c.tag == "v1") return -4 * p * param("r");
  if (c.tag == "v2") return -p * (4 * param("s") - p);
  if (c.tag == "vp") return -4 * (p * param("t") - param("l") * param("l"));
  if (c.tag == "v2p") return -4 * p * param("u") + param("j") * param("j");
  throw UsageError("unknown tag " + c.tag);
}

IntMatrix random_isometry(long p, std::uint64_t seed, std::size_t word_length) {
  GramLattice t = t2p_lattice(p);
  const IntMatrix e_up{{1, 1}, {0, 1}}, e_up_inv{{1, -1}, {0, 1}};
  const IntMatrix e_lo{{1, 0}, {1, 1}}, e_lo_inv{{1, 0}, {-1, 1}}, id2 = IntMatrix::identity(2);
  IntMatrix swap = IntMatrix::identity(5);
  swap.swap_rows(1, 3);
  swap.swap_rows(2, 4);
  IntMatrix minus = IntMatrix::identity(5);
  for (std::size_t i = 0; i < 5; ++i) minus(i, i) = -1;
  const std::vector<IntMatrix> gens = {
      reflection_matrix(t, {1, 0, p, 0, 0}),
      flip_first(5),
      minus,
      swap,
      embed_uu(uu_action(e_up, id2)),
      embed_uu(uu_action(e_up_inv, id2)),
      embed_uu(uu_action(e_lo, id2)),
      embed_uu(uu_action(e_lo_inv, id2)),
      embed_uu(uu_action(id2, e_up)),
      embed_uu(uu_action(id2, e_lo)),
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  IntMatrix m = IntMatrix::identity(5);
  for (std::size_t i = 0; i < word_length; ++i) m = gens[pick(rng)] * m;
  if (!is_isometry(t, m)) throw InternalError("random word is not an isometry");
  return m;
}

}  // namespace k3lat

namespace k3lat {

DisjointnessSweep orbit_disjointness_sweep(long max_p, long max_param) {
  struct Entry {
    long p;
    std::string tag;
    std::map<std::string, Integer> params;
    Integer norm, det;
  };
  std::vector<Entry> entries;
  for (long p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    entries.push_back({p, "v0", {}, 0, 0});
    for (long x = -max_param; x <= max_param; ++x) {
      entries.push_back({p, "v1", {{"r", x}}, 0, 0});
      entries.push_back({p, "v2", {{"s", x}}, 0, 0});
      if (p > 2)
        for (long l = 1; l <= p / 2; ++l) entries.push_back({p, "vp", {{"l", l}, {"t", x}}, 0, 0});
      for (long j = 1; j < p; j += 2)
        if (!(j == 1 && x == 0)) entries.push_back({p, "v2p", {{"j", j}, {"u", x}}, 0, 0});
    }
  }
  std::vector<char> keep(entries.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < entries.size(); ++i) {
    IntVector v = normal_form_vector(entries[i].p, entries[i].tag, entries[i].params);
    if (t2p_lattice(entries[i].p).norm(v) == 0) continue;
    auto inv = orbit_invariants(entries[i].p, v);
    entries[i].norm = inv.norm;
    entries[i].det = inv.det_complement;
    keep[i] = 1;
  }
  DisjointnessSweep out;
  std::map<std::tuple<long, Integer, Integer>, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!keep[i]) continue;
    ++out.vectors;
    auto key = std::make_tuple(entries[i].p, entries[i].norm, entries[i].det);
    auto [it, fresh] = seen.emplace(key, i);
    if (fresh) continue;
    const Entry& a = entries[it->second];
    if (a.tag != entries[i].tag)
      out.collisions.push_back({entries[i].p, entries[i].norm, entries[i].det, a.tag, entries[i].tag, a.params,
                                entries[i].params});
  }
  return out;
}

}  // namespace k3lat
