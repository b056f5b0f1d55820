#include "k3lat/divisor.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "k3lat/enumerate.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/f2.hpp"

namespace k3lat {

namespace {

IntMatrix column(const IntVector& v) { return IntMatrix::from_columns({v}, v.size()); }

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

std::size_t positive_root_count(char kind, std::size_t n) {
  switch (kind) {
    case 'A': return n * (n + 1) / 2;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  throw InternalError("unknown Dynkin kind");
}

// Dynkin type of a connected tree of simple roots given by its adjacency lists.
std::pair<char, std::size_t> classify_component(const std::vector<std::vector<std::size_t>>& adj,
                                                const std::vector<std::size_t>& nodes) {
  const std::size_t n = nodes.size();
  std::size_t edges = 0;
  std::vector<std::size_t> branch;
  for (auto v : nodes) {
    edges += adj[v].size();
    if (adj[v].size() > 3) throw InternalError("root graph vertex of degree > 3");
    if (adj[v].size() == 3) branch.push_back(v);
  }
  edges /= 2;
  if (edges != n - 1) throw InternalError("root graph component is not a tree");
  if (branch.empty()) return {'A', n};
  if (branch.size() > 1) throw InternalError("root graph component with two branch points");
  std::vector<std::size_t> arms;
  for (auto start : adj[branch[0]]) {
    std::size_t len = 1, prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  throw InternalError("non-ADE root graph component");
}

std::string dynkin_key(char kind, std::size_t n) { return std::string(1, kind) + std::to_string(n); }

}  // namespace

std::string RootSystem::type_string() const {
  if (components.empty()) return "0";
  std::vector<std::pair<std::string, int>> parts(components.begin(), components.end());
  auto order = [](char k) { return k == 'E' ? 0 : k == 'D' ? 1 : 2; };
  std::sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
    if (a.first[0] != b.first[0]) return order(a.first[0]) < order(b.first[0]);
    return std::stoi(a.first.substr(1)) > std::stoi(b.first.substr(1));
  });
  std::string out;
  for (const auto& [key, count] : parts) {
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += key;
  }
  return out;
}

RootSystem root_system_of(const GramLattice& l, std::vector<IntVector> positive) {
  RootSystem rs;
  for (auto& r : positive) {
    if (l.norm(r) != -2) throw InternalError("root_system_of: vector of norm " + to_string(l.norm(r)));
    normalize_sign(r);
  }
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  rs.positive_roots = positive;
  std::set<IntVector> pos(positive.begin(), positive.end());

  // Lexicographic positivity is the order of a generic linear functional; simple roots are
  // the positive roots that are not a sum of two positive roots.
  for (const auto& a : positive) {
    bool simple = true;
    for (const auto& b : positive) {
      if (&a == &b) continue;
      IntVector diff(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
      if (pos.count(diff)) {
        simple = false;
        break;
      }
    }
    if (simple) rs.simple_roots.push_back(a);
  }

  const std::size_t m = rs.simple_roots.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Integer b = l.pairing(rs.simple_roots[i], rs.simple_roots[j]);
      if (b == 0) continue;
      if (b != 1) throw InternalError("simple roots pair to " + to_string(b));
      adj[i].push_back(j);
      adj[j].push_back(i);
    }

  std::vector<bool> seen(m, false);
  std::size_t expected = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> nodes, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    auto [kind, n] = classify_component(adj, nodes);
    expected += positive_root_count(kind, n);
    rs.components[dynkin_key(kind, n)] += 1;
  }
  if (expected != positive.size())
    throw InternalError("root count " + std::to_string(positive.size()) + " does not match Dynkin type " +
                        rs.type_string());
  return rs;
}

RootSystem root_decomposition(const GramLattice& l) {
  auto sig = l.signature();
  if (sig.negative != l.rank()) throw NotDefiniteError("root_decomposition needs a negative definite lattice");
  return root_system_of(l, enumerate_vectors(l, -2));
}

std::string to_string(AmpleStatus s) {
  switch (s) {
    case AmpleStatus::AmpleUpToWeyl: return "ample_up_to_weyl";
    case AmpleStatus::BigNefWithRoots: return "big_nef_with_roots";
    case AmpleStatus::IsotropicNefCandidate: return "isotropic_nef_candidate";
    case AmpleStatus::NotPositive: return "not_positive";
  }
  return "?";
}

AmplenessVerdict ample_up_to_weyl(const PolarizedNS& p) {
  const GramLattice& ns = p.ns;
  if (p.candidate.size() != ns.rank()) throw DimensionError("candidate length does not match the lattice rank");
  if (ns.signature().positive != 1) throw UsageError("polarized lattice must have exactly one positive direction");
  for (const auto& [label, c] : p.curves) {
    if (c.size() != ns.rank()) throw DimensionError("curve " + label + " has the wrong length");
    if (ns.norm(c) != -2) throw UsageError("curve " + label + " does not have self-intersection -2");
  }

  AmplenessVerdict v;
  v.square = ns.norm(p.candidate);
  for (const auto& [label, c] : p.curves)
    if (ns.pairing(c, p.candidate) == 0) v.contracted_curves.push_back(label);
  if (v.square < 0) {
    v.status = AmpleStatus::NotPositive;
    return v;
  }
  if (v.square == 0) {
    v.status = AmpleStatus::IsotropicNefCandidate;
    return v;
  }

  Embedding perp = orthogonal_complement(ns, column(p.candidate), "candidate-perp");
  RootSystem rs = root_decomposition(perp.sub);
  for (const auto& r : rs.positive_roots) {
    IntVector x = perp.basis * r;
    normalize_sign(x);
    v.roots.push_back(std::move(x));
  }
  std::sort(v.roots.begin(), v.roots.end());
  v.root_type = rs.components;
  v.root_type_string = rs.type_string();
  v.status = v.roots.empty() ? AmpleStatus::AmpleUpToWeyl : AmpleStatus::BigNefWithRoots;
  return v;
}

std::vector<Ample3Row> ample3_boundary_sweep(long max_d, int max_r) {
  if (max_d < 1 || max_r < 1 || max_r > 16) throw UsageError("ample3 sweep needs d >= 1 and 1 <= r <= 16");
  std::vector<Ample3Row> rows;
  for (long d = 1; d <= max_d; ++d) {
    NamedLattice kp = k4d_prime(d);
    PolarizedNS base{kp.lattice(), {}, {}};
    for (F2Point q = 0; q < kF2Points; ++q)
      base.curves.emplace_back(curve_label("K", q), kp.class_coords(curve_label("K", q)));
    for (int r = 1; r <= max_r; ++r) {
      PointSet pts;
      for (int i = 0; i < r; ++i) pts.push_back(static_cast<F2Point>(i));
      RatVector cls = kp.ambient_class("H");
      RatVector ks = kp.sum_of("K", pts);
      for (std::size_t i = 0; i < cls.size(); ++i) cls[i] -= ks[i];
      PolarizedNS pn = base;
      pn.candidate = kp.coords(cls);
      auto verdict = ample_up_to_weyl(pn);
      rows.push_back({d, r, verdict.square, verdict.status});
    }
  }
  return rows;
}

EvenSetReport even_sets(const GramLattice& ns, const std::vector<IntVector>& curves) {
  const std::size_t k = curves.size();
  if (k > 24) throw UsageError("even_sets supports at most 24 curves");
  for (std::size_t i = 0; i < k; ++i) {
    if (curves[i].size() != ns.rank()) throw DimensionError("curve length does not match the lattice rank");
    if (ns.norm(curves[i]) != -2) throw UsageError("curve " + std::to_string(i) + " is not a -2 class");
    for (std::size_t j = i + 1; j < k; ++j)
      if (ns.pairing(curves[i], curves[j]) != 0)
        throw UsageError("curves " + std::to_string(i) + " and " + std::to_string(j) + " meet");
  }
  Gf2Matrix m(ns.rank(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < ns.rank(); ++i) m(i, j) = mpz_odd_p(curves[j][i].get_mpz_t()) ? 1 : 0;
  auto basis = gf2_kernel(m);

  EvenSetReport rep;
  rep.kernel_dim = basis.size();
  const std::uint64_t total = std::uint64_t(1) << basis.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<std::uint8_t> x(k, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1u)
        for (std::size_t j = 0; j < k; ++j) x[j] ^= basis[b][j];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < k; ++j)
      if (x[j]) support.push_back(j);
    rep.weights[support.size()] += 1;
    rep.elements.push_back(std::move(support));
  }
  std::sort(rep.elements.begin(), rep.elements.end());
  return rep;
}

LineBasisReport line_basis_check(const GramLattice& ns, const std::vector<IntVector>& classes, const IntVector& d) {
  const std::size_t n = ns.rank();
  if (classes.size() != n) throw DimensionError("line basis needs exactly rank-many classes");
  if (d.size() != n) throw DimensionError("D has the wrong length");
  LineBasisReport rep;
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (classes[j].size() != n) throw DimensionError("class length does not match the lattice rank");
    m.set_col(j, classes[j]);
    rep.degrees.push_back(ns.pairing(classes[j], d));
    rep.self_intersections.push_back(ns.norm(classes[j]));
  }
  rep.determinant = determinant(m);
  rep.is_basis = abs(rep.determinant) == 1;
  rep.all_minus_two = std::all_of(rep.self_intersections.begin(), rep.self_intersections.end(),
                                  [](const Integer& x) { return x == -2; });
  rep.all_degree_one =
      std::all_of(rep.degrees.begin(), rep.degrees.end(), [](const Integer& x) { return x == 1; });
  rep.d_square = ns.norm(d);
  return rep;
}

LineBasisReport line_basis_check(const GramLattice& ns, const std::vector<RatVector>& classes, const IntVector& d) {
  std::vector<IntVector> ints;
  for (const auto& c : classes) {
    if (!is_integral(c)) throw UsageError("class " + to_string(c) + " is not in the lattice");
    ints.push_back(to_integer(c));
  }
  return line_basis_check(ns, ints, d);
}

IntVector unit_pairing_vector(const GramLattice& ns, const IntVector& f) {
  IntVector g = ns.dual_coords(f);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (abs(g[i]) == 1) {
      IntVector z(n, Integer(0));
      z[i] = g[i];
      return z;
    }
  SmithForm s = smith_normal_form(IntMatrix::from_rows({g}, n));
  if (s.divisors.empty() || s.divisors[0] != 1)
    throw UsageError("F pairs with the lattice in a proper ideal; no class meets it once");
  IntVector z = s.V.col(0);
  for (auto& x : z) x *= s.U(0, 0);
  if (dot(g, z) != 1) throw InternalError("extended gcd vector does not pair to 1 with F");
  return z;
}

FibrationReport fibration_check(const GramLattice& ns, const IntVector& f, const std::vector<IntVector>& sections,
                                const std::vector<IntVector>& components) {
  if (f.size() != ns.rank()) throw DimensionError("F has the wrong length");
  FibrationReport rep;
  rep.f_square = ns.norm(f);
  rep.isotropic = rep.f_square == 0;
  for (const auto& s : sections) rep.section_degrees.push_back(ns.pairing(f, s));
  for (const auto& c : components) rep.component_degrees.push_back(ns.pairing(f, c));
  rep.sections_ok = std::all_of(rep.section_degrees.begin(), rep.section_degrees.end(),
                                [](const Integer& x) { return x == 1; });
  rep.components_ok = std::all_of(rep.component_degrees.begin(), rep.component_degrees.end(),
                                  [](const Integer& x) { return x == 0; });
  if (!rep.isotropic) return rep;

  rep.z = unit_pairing_vector(ns, f);
  IntMatrix constraints = IntMatrix::from_rows({ns.dual_coords(f), ns.dual_coords(rep.z)}, ns.rank());
  IntMatrix basis = integer_kernel(constraints);
  Embedding w = make_embedding(ns, basis, "F-perp/F");
  if (w.sub.signature().negative != w.sub.rank())
    throw NotDefiniteError("F-perp/F is not negative definite; the lattice is not hyperbolic");
  rep.fiber_lattice = w.sub;
  rep.roots = root_decomposition(w.sub);
  for (auto& r : rep.roots.positive_roots) r = w.basis * r;
  for (auto& r : rep.roots.simple_roots) r = w.basis * r;
  for (const auto& [key, count] : rep.roots.components) {
    std::size_t n = std::stoul(key.substr(1));
    std::string hint;
    if (key[0] == 'A') hint = "I_" + std::to_string(n + 1);
    else if (key[0] == 'D') hint = "I_" + std::to_string(n - 4) + "*";
    else hint = n == 6 ? "IV*" : n == 7 ? "III*" : "II*";
    for (int i = 0; i < count; ++i) rep.fiber_hints.push_back(hint + "-compatible");
  }
  return rep;
}

Rational shioda_tate_discriminant(const std::vector<Integer>& dets, const Integer& torsion) {
  if (torsion <= 0) throw UsageError("torsion order must be positive");
  Integer prod = 1;
  for (const auto& d : dets) {
    if (d <= 0) throw UsageError("fiber root determinants must be positive");
    prod *= d;
  }
  Rational out(prod, torsion * torsion);
  out.canonicalize();
  return out;
}

Integer kodaira_root_det(const std::string& fiber) {
  if (fiber == "II*") return 1;
  if (fiber == "III*" || fiber == "III") return 2;
  if (fiber == "IV*" || fiber == "IV") return 3;
  if (fiber == "II" || fiber == "I0" || fiber == "I1") return 1;
  if (fiber.size() >= 2 && fiber[0] == 'I') {
    bool star = fiber.back() == '*';
    std::string num = fiber.substr(1, fiber.size() - 1 - (star ? 1 : 0));
    if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
      if (star) return 4;
      return Integer(num);
    }
  }
  throw UsageError("unknown Kodaira fiber '" + fiber + "'");
}

std::vector<ShiodaInoseExample> shioda_inose_examples() {
  struct Spec {
    std::string name;
    long q_square;
    int glue_count;  // N_1..N_k glued to Q
    std::vector<long> coeffs;
    std::string roots;
    std::vector<std::string> fibers;
    int torsion;
  };
  std::vector<std::string> six_i2(6, "I2"), eight_i2(8, "I2");
  std::vector<Spec> specs = {
      {"genus2-jacobian", 4, 2, {4, 7, 10, 8, 6, 4, 2, 5}, "D9+6A1", {}, 2},
      {"polarization-1-2", 8, 4, {5, 10, 15, 12, 9, 6, 3, 8}, "A7+8A1", {}, 4},
      {"polarization-1-3", 12, 2, {6, 12, 18, 15, 12, 8, 4, 9}, "D7+A2+6A1", {}, 2},
  };
  specs[0].fibers = {"I5*"};
  specs[0].fibers.insert(specs[0].fibers.end(), six_i2.begin(), six_i2.end());
  specs[1].fibers = {"I8"};
  specs[1].fibers.insert(specs[1].fibers.end(), eight_i2.begin(), eight_i2.end());
  specs[2].fibers = {"I3*", "I3"};
  specs[2].fibers.insert(specs[2].fibers.end(), six_i2.begin(), six_i2.end());

  std::vector<ShiodaInoseExample> out;
  for (const auto& sp : specs) {
    std::vector<std::string> labels{"Q"};
    for (int i = 1; i <= 8; ++i) labels.push_back("N" + std::to_string(i));
    for (int i = 1; i <= 8; ++i) labels.push_back("E" + std::to_string(i));
    std::vector<IntMatrix> blocks{IntMatrix{{sp.q_square}}};
    IntMatrix n8(8, 8);
    for (int i = 0; i < 8; ++i) n8(i, i) = -2;
    blocks.push_back(n8);
    blocks.push_back(root_lattice_e8().gram());
    GramLattice amb(block_diagonal(blocks), labels, "<" + std::to_string(sp.q_square) + ">+<-2>^8+E8(-1)");

    auto unit = [](std::size_t i) {
      RatVector v(17, Rational(0));
      v[i] = 1;
      return v;
    };
    RatVector qglue = unit(0), nhalf(17, Rational(0));
    for (int i = 1; i <= sp.glue_count; ++i) qglue[i] = 1;
    for (auto& x : qglue) x /= 2;
    for (int i = 1; i <= 8; ++i) nhalf[i] = Rational(1, 2);
    std::vector<RatVector> basis{qglue};
    std::vector<std::string> blabels{"Qglue"};
    for (int i = 1; i <= 7; ++i) {
      basis.push_back(unit(i));
      blabels.push_back("N" + std::to_string(i));
    }
    basis.push_back(nhalf);
    blabels.push_back("Nhalf");
    for (int i = 9; i <= 16; ++i) {
      basis.push_back(unit(i));
      blabels.push_back("E" + std::to_string(i - 8));
    }
    NamedLattice named{amb, overlattice_in_basis(amb, {qglue, nhalf}, basis, blabels, sp.name)};

    RatVector f = unit(0);
    for (int j = 0; j < 8; ++j) f[9 + j] = -sp.coeffs[j];
    ShiodaInoseExample ex;
    ex.name = sp.name;
    ex.fiber = named.coords(f);
    ex.expected_roots = sp.roots;
    ex.fibers = sp.fibers;
    ex.torsion = sp.torsion;
    const GramLattice& ns = named.lattice();
    bool found = false;
    for (int j = 1; j <= 8; ++j) {
      IntVector e = named.class_coords("E" + std::to_string(j));
      Integer deg = ns.pairing(ex.fiber, e);
      if (deg == 1 && !found) {
        ex.zero_section = *ns.index_of("E" + std::to_string(j));
        found = true;
      } else if (deg == 0) {
        ex.components.push_back(e);
      }
    }
    for (int i = 1; i <= 8; ++i) ex.components.push_back(named.class_coords("N" + std::to_string(i)));
    ex.named = std::move(named);
    out.push_back(std::move(ex));
  }
  return out;
}

EnriquesShape parse_enriques_shape(const std::string& s) {
  if (s == "t") return EnriquesShape::T;
  if (s == "s") return EnriquesShape::S;
  if (s == "u") return EnriquesShape::U;
  throw UsageError("Enriques shape must be t, s or u");
}

std::string to_string(EnriquesShape s) {
  switch (s) {
    case EnriquesShape::T: return "t";
    case EnriquesShape::S: return "s";
    case EnriquesShape::U: return "u";
  }
  return "?";
}

IntMatrix enriques_q_gram(EnriquesShape shape, long param) {
  if (param < 1 || param > 10) throw UsageError("Enriques parameter must be in 1..10");
  switch (shape) {
    case EnriquesShape::T: return IntMatrix{{-4, 0}, {0, -2 * param}};
    case EnriquesShape::S: return IntMatrix{{-4, 2}, {2, -2 * param}};
    case EnriquesShape::U: return IntMatrix{{-4, 1}, {1, -2 * param}};
  }
  throw UsageError("bad Enriques shape");
}

namespace {

using Small = std::vector<long long>;

Small to_small(const IntVector& v) {
  Small s;
  for (const auto& x : v) s.push_back(x.get_si());
  return s;
}

long long small_dot(const Small& a, const Small& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Candidate order: smaller coordinate norm first, then lexicographic.
void sort_by_size(std::vector<IntVector>& vs) {
  auto size = [](const IntVector& v) {
    Integer s = 0;
    for (const auto& x : v) s += x * x;
    return s;
  };
  std::stable_sort(vs.begin(), vs.end(), [&](const IntVector& a, const IntVector& b) {
    Integer sa = size(a), sb = size(b);
    return sa != sb ? sa < sb : a < b;
  });
}

EnriquesCertificate build_certificate(EnriquesShape shape, long param, const IntMatrix& q,
                                      const std::vector<IntVector>& xs) {
  EnriquesCertificate c;
  c.shape = shape;
  c.param = param;
  c.q_gram = q;
  c.e8_vectors = xs;

  // Ambient U + E8(-2), coordinates (e, f, E1..E8).
  GramLattice e8m2 = rescale(root_lattice_e8(), 2);
  GramLattice amb = direct_sum({hyperbolic_plane(1), e8m2}, "U+E8(-2)");
  auto lift = [](const IntVector& x) {
    IntVector v(10, Integer(0));
    for (std::size_t i = 0; i < 8; ++i) v[2 + i] = x[i];
    return v;
  };
  IntVector e(10, Integer(0));
  e[0] = 1;
  IntVector v2 = lift(xs[0]);
  v2[0] += 1;
  v2[1] += 2;
  c.ambient_vectors = {e, v2, lift(xs[1]), lift(xs[2])};
  IntMatrix b = IntMatrix::from_columns(c.ambient_vectors, 10);
  c.induced_gram = b.transpose() * amb.gram() * b;
  c.expected_gram = block_diagonal({IntMatrix{{0, 2}, {2, 0}}, q.scaled(2)});
  c.gram_ok = c.induced_gram == c.expected_gram;

  SmithForm s = smith_normal_form(b);
  c.elementary_divisors = s.divisors;
  c.primitive = s.rank == 4 && std::all_of(s.divisors.begin(), s.divisors.end(), [](const Integer& d) { return d == 1; });

  Embedding perp = orthogonal_complement(amb, b, "certificate-perp");
  c.complement = perp.sub;
  if (perp.sub.signature().negative != perp.sub.rank()) throw InternalError("Enriques complement is not definite");
  for (const auto& r : enumerate_vectors(perp.sub, -2)) c.complement_roots.push_back(perp.basis * r);
  c.root_free = c.complement_roots.empty();
  return c;
}

}  // namespace

EnriquesCertificate enriques_embedding(EnriquesShape shape, long param) {
  IntMatrix q = enriques_q_gram(shape, param);
  GramLattice e8 = root_lattice_e8();
  auto roots = enumerate_vectors(e8, -2);
  auto second = enumerate_vectors(e8, q(0, 0).get_si());
  auto third_half = enumerate_vectors(e8, q(1, 1).get_si());
  sort_by_size(roots);
  sort_by_size(second);
  std::vector<IntVector> third;
  for (const auto& v : third_half) {
    third.push_back(v);
    IntVector w = v;
    for (auto& x : w) x = -x;
    third.push_back(w);
  }
  sort_by_size(third);

  std::vector<Small> third_small;
  for (const auto& v : third) third_small.push_back(to_small(v));
  const long long q01 = q(0, 1).get_si();

  for (const auto& x1 : roots) {
    Small g1 = to_small(e8.dual_coords(x1));
    for (const auto& x2 : second) {
      if (small_dot(g1, to_small(x2)) != 0) continue;
      Small g2 = to_small(e8.dual_coords(x2));
      for (std::size_t k = 0; k < third.size(); ++k) {
        if (small_dot(g1, third_small[k]) != 0 || small_dot(g2, third_small[k]) != q01) continue;
        auto cert = build_certificate(shape, param, q, {x1, x2, third[k]});
        if (cert.ok()) return cert;
      }
    }
  }
  throw InfeasibleError("no Enriques embedding certificate for " + to_string(shape) + "=" + std::to_string(param));
}

std::size_t p_length(const std::vector<Integer>& orders, const Integer& p) {
  std::size_t n = 0;
  for (const auto& o : orders)
    if (o % p == 0) ++n;
  return n;
}

LengthReport length_obstruction(std::size_t rank_r, const std::vector<Integer>& omega,
                                const std::vector<Integer>& target) {
  std::set<Integer> primes;
  auto collect = [&](Integer n) {
    if (n <= 0) throw UsageError("cyclic orders must be positive");
    for (Integer p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        primes.insert(p);
        n /= p;
      }
    if (n > 1) primes.insert(n);
  };
  for (const auto& o : omega) collect(o);
  for (const auto& o : target) collect(o);

  LengthReport rep;
  for (const auto& p : primes) {
    LengthRow row;
    row.prime = p;
    row.omega_length = p_length(omega, p);
    row.target_length = p_length(target, p);
    row.min_surviving = row.omega_length > rank_r ? row.omega_length - rank_r : 0;
    row.max_reachable = row.omega_length + rank_r;
    row.ok = row.target_length >= row.min_surviving && row.target_length <= row.max_reachable;
    rep.feasible = rep.feasible && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace k3lat
