#include "k3lat/kummer.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "k3lat/errors.hpp"

namespace k3lat {

std::string curve_label(const std::string& prefix, F2Point p) { return prefix + "_" + f2_label(p); }

RatVector NamedLattice::ambient_class(const std::string& label) const {
  return to_rational(ambient.basis_vector(label));
}

IntVector NamedLattice::coords(const RatVector& v) const {
  auto c = model.coordinates_of(v);
  if (!c) throw UsageError("class " + to_string(v) + " is not in " + lattice().name());
  return *c;
}

bool NamedLattice::contains(const RatVector& v) const { return model.coordinates_of(v).has_value(); }

RatVector NamedLattice::sum_of(const std::string& prefix, const PointSet& pts) const {
  RatVector v(ambient.rank(), Rational(0));
  for (F2Point p : pts) {
    auto i = ambient.index_of(curve_label(prefix, p));
    if (!i) throw UsageError("no ambient class " + curve_label(prefix, p));
    v[*i] += 1;
  }
  return v;
}

RatVector NamedLattice::half_sum(const std::string& prefix, const PointSet& pts) const {
  RatVector v = sum_of(prefix, pts);
  for (auto& x : v) x /= 2;
  return v;
}

namespace {

// <lead...> + <-2>^points, labels lead labels then prefix_point.
GramLattice curve_ambient(const std::vector<std::pair<std::string, long>>& lead, const std::string& prefix,
                          const PointSet& pts, const std::string& name) {
  const std::size_t n = lead.size() + pts.size();
  IntMatrix g(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lead.size(); ++i) {
    g(i, i) = lead[i].second;
    labels.push_back(lead[i].first);
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    g(lead.size() + k, lead.size() + k) = -2;
    labels.push_back(curve_label(prefix, pts[k]));
  }
  return GramLattice(g, labels, name);
}

PointSet all_points() {
  PointSet p;
  for (F2Point x = 0; x < kF2Points; ++x) p.push_back(x);
  return p;
}

RatVector half_over(std::size_t n, std::size_t offset, const PointSet& pts, const PointSet& domain) {
  RatVector v(n, Rational(0));
  for (F2Point p : pts) {
    auto it = std::lower_bound(domain.begin(), domain.end(), p);
    if (it == domain.end() || *it != p) throw InternalError("point outside the curve domain");
    v[offset + static_cast<std::size_t>(it - domain.begin())] = rat(1, 2);
  }
  return v;
}

RatVector shifted(const RatVector& v, std::size_t lead, std::size_t total) {
  RatVector out(total, Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) out[lead + i] = v[i];
  return out;
}

RatVector unit(std::size_t n, std::size_t i) {
  RatVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

// Basis of K in <-2>^16 coordinates: five half sums and eleven curves.
const std::vector<F2Point>& kummer_basis_curves() {
  static const std::vector<F2Point> pts = {
      f2_parse("0000"), f2_parse("1000"), f2_parse("0100"), f2_parse("0010"), f2_parse("0001"), f2_parse("0011"),
      f2_parse("0101"), f2_parse("1001"), f2_parse("0110"), f2_parse("1010"), f2_parse("1100")};
  return pts;
}

std::vector<std::string> kummer_basis_labels() {
  std::vector<std::string> labels = {"half_all", "half_W1", "half_W2", "half_W3", "half_W4"};
  for (F2Point p : kummer_basis_curves()) labels.push_back(curve_label("K", p));
  return labels;
}

std::vector<RatVector> kummer_basis_vectors() {
  auto basis = kummer_glue();
  for (F2Point p : kummer_basis_curves()) basis.push_back(unit(16, p));
  return basis;
}

std::vector<RatVector> mg_glue_vectors() {
  PointSet dom = nonzero_points();
  std::vector<RatVector> glue;
  for (int i = 1; i <= 4; ++i) glue.push_back(half_over(15, 0, hyperplane(f2_unit(i), 1), dom));
  return glue;
}

std::vector<F2Point> mg_basis_curves() {
  std::vector<F2Point> pts;
  for (F2Point p = 1; p < kF2Points; ++p)
    if (std::popcount(p) >= 2) pts.push_back(p);
  return pts;
}

}  // namespace

std::vector<RatVector> kummer_glue() {
  PointSet all = all_points();
  std::vector<RatVector> glue{half_over(16, 0, all, all)};
  for (int i = 1; i <= 4; ++i) glue.push_back(half_over(16, 0, hyperplane(f2_unit(i), 0), all));
  return glue;
}

NamedLattice kummer_lattice() {
  GramLattice amb = curve_ambient({}, "K", all_points(), "<-2>^16");
  return NamedLattice{amb, overlattice_in_basis(amb, kummer_glue(), kummer_basis_vectors(), kummer_basis_labels(), "K")};
}

NamedLattice kummer_lattice_with_glue(const std::vector<RatVector>& glue) {
  GramLattice amb = curve_ambient({}, "K", all_points(), "<-2>^16");
  return NamedLattice{amb, overlattice(amb, glue, "K")};
}

NamedLattice nikulin_lattice() {
  IntMatrix g(8, 8);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 8; ++i) {
    g(i, i) = -2;
    labels.push_back("N" + std::to_string(i + 1));
  }
  GramLattice amb(g, labels, "<-2>^8");
  RatVector half(8, rat(1, 2));
  std::vector<RatVector> basis{half};
  for (std::size_t i = 0; i < 7; ++i) basis.push_back(unit(8, i));
  std::vector<std::string> blabels{"half_all"};
  for (std::size_t i = 0; i < 7; ++i) blabels.push_back(labels[i]);
  return NamedLattice{amb, overlattice_in_basis(amb, {half}, basis, blabels, "N")};
}

NamedLattice mg_lattice() {
  PointSet dom = nonzero_points();
  GramLattice amb = curve_ambient({}, "M", dom, "<-2>^15");
  auto glue = mg_glue_vectors();
  std::vector<RatVector> basis = glue;
  std::vector<std::string> labels{"half_A1", "half_A2", "half_A3", "half_A4"};
  for (F2Point p : mg_basis_curves()) {
    basis.push_back(unit(15, p - 1));
    labels.push_back(curve_label("M", p));
  }
  return NamedLattice{amb, overlattice_in_basis(amb, glue, basis, labels, "M_G")};
}

Embedding mg_as_complement_in_kummer() {
  NamedLattice k = kummer_lattice();
  IntMatrix sub(16, 1);
  sub.set_col(0, k.class_coords("K_0000"));
  return orthogonal_complement(k.lattice(), sub, "K_0000-perp");
}

MgComparison compare_mg_constructions() {
  NamedLattice k = kummer_lattice();
  NamedLattice mg = mg_lattice();
  Embedding comp = mg_as_complement_in_kummer();
  MgComparison out;
  out.witness = IntMatrix(15, comp.basis.cols());
  // Identify K_p with M_p for p != 0: the complement has no K_0000 component.
  for (std::size_t c = 0; c < comp.basis.cols(); ++c) {
    RatVector amb_k = k.model.to_old(comp.basis.col(c));
    if (amb_k[0] != 0) throw InternalError("complement of K_0000 has a K_0000 component");
    RatVector amb_m(amb_k.begin() + 1, amb_k.end());
    auto coords = mg.model.coordinates_of(amb_m);
    if (!coords) return out;
    out.witness.set_col(c, *coords);
  }
  IntMatrix pulled = out.witness.transpose() * mg.lattice().gram() * out.witness;
  out.isometric = comp.basis.cols() == 15 && abs(determinant(out.witness)) == 1 && pulled == comp.sub.gram();
  return out;
}

PointSet v4d_support(long d) {
  if (d < 1) throw UsageError("d must be positive");
  if (d % 2 == 0) return plane_v(1, 2);
  return symmetric_difference(plane_v(1, 2), plane_v(3, 4));
}

NamedLattice k4d_prime(long d) {
  if (d < 1) throw UsageError("d must be positive");
  PointSet all = all_points();
  GramLattice amb = curve_ambient({{"H", 4 * d}}, "K", all, "<" + std::to_string(4 * d) + ">+<-2>^16");
  std::vector<RatVector> glue;
  for (const auto& g : kummer_glue()) glue.push_back(shifted(g, 1, 17));
  RatVector hv = half_over(17, 1, v4d_support(d), all);
  hv[0] = rat(1, 2);
  glue.push_back(hv);
  std::vector<RatVector> basis{hv};
  std::vector<std::string> labels{"half_H_v"};
  auto kb = kummer_basis_vectors();
  auto kl = kummer_basis_labels();
  for (std::size_t i = 0; i < kb.size(); ++i) {
    basis.push_back(shifted(kb[i], 1, 17));
    labels.push_back(kl[i]);
  }
  return NamedLattice{amb, overlattice_in_basis(amb, glue, basis, labels, "K'_" + std::to_string(4 * d))};
}

std::vector<PointSet> divisible_class_supports(long d) {
  NamedLattice kp = k4d_prime(d);
  const std::size_t n = kp.lattice().rank();
  Gf2Matrix m(n, kF2Points);
  for (F2Point p = 0; p < kF2Points; ++p) {
    IntVector c = kp.class_coords(curve_label("K", p));
    for (std::size_t i = 0; i < n; ++i) m(i, p) = mpz_odd_p(c[i].get_mpz_t()) ? 1 : 0;
  }
  IntVector h = kp.class_coords("H");
  std::vector<std::uint8_t> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = mpz_odd_p(h[i].get_mpz_t()) ? 1 : 0;
  std::vector<std::uint8_t> x0;
  if (!gf2_solve(m, rhs, x0)) return {};
  auto ker = gf2_kernel(m);
  std::vector<PointSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << ker.size()); ++mask) {
    std::vector<std::uint8_t> x = x0;
    for (std::size_t k = 0; k < ker.size(); ++k)
      if (mask >> k & 1)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= ker[k][i];
    PointSet s;
    for (F2Point p = 0; p < kF2Points; ++p)
      if (x[p]) s.push_back(p);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::size_t, std::uint64_t> divisible_class_census(long d) {
  std::map<std::size_t, std::uint64_t> census;
  for (const auto& s : divisible_class_supports(d)) ++census[s.size()];
  return census;
}

namespace {

RatVector lattice_rational_coords(const NamedLattice& nl, const RatVector& amb) {
  RatVector x;
  if (!solve_rational(nl.model.basis, amb, x)) throw InternalError("ambient vector outside the rational span");
  return x;
}

std::uint64_t subgroup_size(const std::vector<Integer>& orders, const std::vector<IntVector>& gens) {
  std::vector<long> ord;
  for (const auto& o : orders) ord.push_back(o.get_si());
  auto key = [&](const std::vector<long>& e) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k = k * static_cast<std::uint64_t>(ord[i]) + static_cast<std::uint64_t>(e[i]);
    return k;
  };
  std::set<std::uint64_t> seen;
  std::vector<std::vector<long>> frontier{std::vector<long>(ord.size(), 0)};
  seen.insert(0);
  while (!frontier.empty()) {
    auto e = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<long> f(ord.size());
      for (std::size_t i = 0; i < ord.size(); ++i) f[i] = (e[i] + g[i].get_si()) % ord[i];
      if (seen.insert(key(f)).second) frontier.push_back(f);
    }
  }
  return seen.size();
}

}  // namespace

bool k4d_discriminant_generators_ok(long d) {
  NamedLattice kp = k4d_prime(d);
  DiscriminantGroup g = discriminant_group(kp.lattice());
  RatVector first = kp.half_sum("K", d % 2 == 0 ? plane_v(3, 4) : plane_v(1, 2));
  first[0] += Rational(1, 4 * d);
  first[0].canonicalize();
  std::vector<RatVector> gens_amb{first};
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}})
    gens_amb.push_back(kp.half_sum("K", plane_v(i, j)));
  std::vector<IntVector> gens;
  for (const auto& a : gens_amb) gens.push_back(g.coordinates(kp.lattice(), lattice_rational_coords(kp, a)));
  return Integer(static_cast<unsigned long>(subgroup_size(g.orders, gens))) == g.order();
}

K4dUniqueness k4d_uniqueness_check(long d) {
  NamedLattice k = kummer_lattice();
  FiniteQuadraticForm fk = discriminant_form(k.lattice());
  NamedLattice reference = k4d_prime(d);
  FiniteQuadraticForm fref = discriminant_form(reference.lattice());
  Integer ref_det = abs(reference.lattice().determinant());
  PointSet all = all_points();
  GramLattice amb = reference.ambient;
  std::vector<RatVector> base;
  for (const auto& gl : kummer_glue()) base.push_back(shifted(gl, 1, 17));
  K4dUniqueness out;
  for (std::uint64_t idx = 1; idx < fk.size(); ++idx) {
    auto e = fk.element(idx);
    // d + q(e) must vanish mod 2 for the glue to be even
    if (mod2(Rational(d) + fk.q(e)) != 0) continue;
    RatVector lift(16, Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t r = 0; r < 16; ++r) lift[r] += e[i] * fk.lifts()[i][r];
    RatVector amb_lift = k.model.basis * lift;
    RatVector glue = shifted(amb_lift, 1, 17);
    glue[0] = rat(1, 2);
    auto gl = base;
    gl.push_back(glue);
    Overlattice o = overlattice(amb, gl);
    ++out.glue_classes;
    if (abs(o.lattice.determinant()) != ref_det) out.all_same_det = false;
    if (forms_isomorphic(discriminant_form(o.lattice), fref).isomorphic) ++out.isomorphic_forms;
  }
  return out;
}

std::string to_string(NsyCase c) {
  switch (c) {
    case NsyCase::Auto: return "auto";
    case NsyCase::I: return "i";
    case NsyCase::II: return "ii";
    case NsyCase::III: return "iii";
    case NsyCase::IV: return "iv";
    case NsyCase::V: return "v";
  }
  return "?";
}

NsyCase nsy_resolve_case(long d, NsyCase requested) {
  if (d < 1) throw UsageError("d must be positive");
  NsyCase natural = NsyCase::V;
  switch (d % 4) {
    case 1: natural = NsyCase::I; break;
    case 2: natural = NsyCase::II; break;
    case 3: natural = NsyCase::III; break;
    default: natural = NsyCase::V; break;
  }
  if (requested == NsyCase::Auto) return natural;
  if (requested == NsyCase::IV) {
    if (d % 4 != 3) throw UsageError("case iv needs d = 3 mod 4");
    return NsyCase::IV;
  }
  if (requested != natural) throw UsageError("case " + to_string(requested) + " does not apply to d = " + std::to_string(d));
  return requested;
}

PointSet nsy_support(long d, NsyCase c) {
  auto parse = [](std::initializer_list<const char*> xs) {
    PointSet s;
    for (const char* x : xs) s.push_back(f2_parse(x));
    std::sort(s.begin(), s.end());
    return s;
  };
  switch (nsy_resolve_case(d, c)) {
    case NsyCase::I: return parse({"1101", "1110", "1111", "1000", "0100"});
    case NsyCase::II: return parse({"0001", "0010", "0011", "1000", "0100", "1100"});
    case NsyCase::III: return parse({"0001", "0010", "0011"});
    case NsyCase::IV: return nonzero_points();
    case NsyCase::V: return parse({"1100", "1110", "1101", "1111"});
    case NsyCase::Auto: break;
  }
  throw InternalError("unresolved NS(Y) case");
}

NamedLattice nsy_lattice(long d, NsyCase c) {
  NsyCase resolved = nsy_resolve_case(d, c);
  PointSet dom = nonzero_points();
  GramLattice amb = curve_ambient({{"L", 2 * d}}, "M", dom, "<" + std::to_string(2 * d) + ">+<-2>^15");
  std::vector<RatVector> glue;
  for (const auto& g : mg_glue_vectors()) glue.push_back(shifted(g, 1, 16));
  RatVector lw = half_over(16, 1, nsy_support(d, resolved), dom);
  lw[0] = rat(1, 2);
  glue.push_back(lw);
  std::vector<RatVector> basis{lw};
  std::vector<std::string> labels{"half_L_W"};
  for (std::size_t i = 0; i < 4; ++i) {
    basis.push_back(glue[i]);
    labels.push_back("half_A" + std::to_string(i + 1));
  }
  for (F2Point p : mg_basis_curves()) {
    basis.push_back(unit(16, p));
    labels.push_back(curve_label("M", p));
  }
  return NamedLattice{amb, overlattice_in_basis(amb, glue, basis, labels,
                                                "NS(Y)_" + std::to_string(d) + "_" + to_string(resolved))};
}

FiniteQuadraticForm nsy_case_iv_expected_form(long d) {
  std::vector<Integer> orders{2, 2, 2, 2, 2, Integer(2 * d)};
  RatMatrix v(6, 6);
  for (std::size_t b = 0; b < 3; ++b) v(2 * b, 2 * b + 1) = v(2 * b + 1, 2 * b) = rat(1, 2);
  v(5, 5) = rat(-d - 1, 2 * d);
  return FiniteQuadraticForm(orders, v);
}

std::vector<MgOrbit> mg_discriminant_orbits() {
  NamedLattice mg = mg_lattice();
  auto parse = [](std::initializer_list<const char*> xs) {
    PointSet s;
    for (const char* x : xs) s.push_back(f2_parse(x));
    std::sort(s.begin(), s.end());
    return s;
  };
  PointSet zero_plane_less = plane_v(3, 4);
  zero_plane_less.erase(zero_plane_less.begin());
  std::vector<MgOrbit> orbits = {
      {"1-2b", nonzero_points(), 0, 0},
      {"2a", hyperplane(f2_unit(1), 1), 0, 0},
      {"3a", parse({"1100", "1101", "1110", "1111"}), 0, 0},
      {"3b", zero_plane_less, 0, 0},
      {"4a", symmetric_difference(plane_v(1, 2), plane_v(3, 4)), 0, 0},
      {"4b", parse({"1101", "1110", "1111", "1000", "0100"}), 0, 0},
  };
  RatMatrix amb_gram = to_rational(mg.ambient.gram());
  for (auto& o : orbits) {
    RatVector y = mg.half_sum("M", o.representative);
    if (!is_integral(mg.model.basis.transpose() * (amb_gram * y)))
      throw InternalError("orbit representative not in the dual lattice");
    o.q = mod2(mg.ambient.norm(y));
  }
  // Minimal coset weight over the code of M_G / <M_p> separates the classes.
  std::vector<PointSet> code{{}};
  for (const auto& h : all_affine_hyperplanes())
    if (!std::binary_search(h.begin(), h.end(), 0u)) code.push_back(h);
  auto min_weight = [&](const PointSet& s) {
    std::size_t best = 99;
    for (const auto& c : code) best = std::min(best, symmetric_difference(s, c).size());
    return best;
  };
  std::map<std::size_t, std::size_t> weight_to_orbit;
  for (std::size_t i = 0; i < orbits.size(); ++i) weight_to_orbit[min_weight(orbits[i].representative)] = i;
  if (weight_to_orbit.size() != orbits.size()) throw InternalError("orbit representatives share a coset weight");
  FiniteQuadraticForm f = discriminant_form(mg.lattice());
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    auto e = f.element(idx);
    RatVector lift(15, Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t r = 0; r < 15; ++r) lift[r] += e[i] * f.lifts()[i][r];
    RatVector amb = mg.model.basis * lift;
    PointSet support;
    for (F2Point p = 1; p < kF2Points; ++p)
      if (amb[p - 1].get_den() != 1) support.push_back(p);
    auto it = weight_to_orbit.find(min_weight(support));
    if (it == weight_to_orbit.end()) throw InternalError("discriminant element outside the six classes");
    if (f.q(e) != orbits[it->second].q) throw InternalError("q value differs inside an orbit class");
    ++orbits[it->second].count;
  }
  return orbits;
}

std::vector<RatVector> k3_glue_vectors() {
  // omega pairs (12)(34) | (13)(24) | (14)(23)
  static const int pairs[6][2] = {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}};
  PointSet all = all_points();
  std::vector<RatVector> glue;
  for (const auto& g : kummer_glue()) glue.push_back(shifted(g, 6, 22));
  for (std::size_t w = 0; w < 6; ++w) {
    AffineSubspace s{{{f2_unit(pairs[w][0]), 0}, {f2_unit(pairs[w][1]), 0}}};
    RatVector u = half_over(22, 6, s.points(), all);
    u[w] = rat(1, 2);
    glue.push_back(u);
  }
  return glue;
}

NamedLattice k3_lattice_glued() {
  const std::vector<std::string> omega = {"w12", "w34", "w13", "w24", "w14", "w23"};
  IntMatrix g(22, 22);
  std::vector<std::string> labels = omega;
  for (std::size_t b = 0; b < 3; ++b) g(2 * b, 2 * b + 1) = g(2 * b + 1, 2 * b) = 2;
  for (F2Point p = 0; p < kF2Points; ++p) {
    g(6 + p, 6 + p) = -2;
    labels.push_back(curve_label("K", p));
  }
  GramLattice amb(g, labels, "U(2)^3+<-2>^16");
  auto glue = k3_glue_vectors();
  std::vector<RatVector> basis(glue.begin() + 5, glue.end());
  std::vector<std::string> blabels;
  for (const auto& w : omega) blabels.push_back("u" + w.substr(1));
  auto kb = kummer_basis_vectors();
  auto kl = kummer_basis_labels();
  for (std::size_t i = 0; i < kb.size(); ++i) {
    basis.push_back(shifted(kb[i], 6, 22));
    blabels.push_back(kl[i]);
  }
  return NamedLattice{amb, overlattice_in_basis(amb, glue, basis, blabels, "Lambda_K3")};
}

OmegaData omega_g(long d) {
  OmegaData out{k4d_prime(d), {}, {}, {}, 0};
  const auto& kp = out.k4d;
  IntVector h = kp.class_coords("H");
  IntVector half = kp.coords(kp.half_sum("K", all_points()));
  IntMatrix both = IntMatrix::from_columns({h, half}, kp.lattice().rank());
  out.omega = orthogonal_complement(kp.lattice(), both, "Omega");
  IntMatrix one = IntMatrix::from_columns({half}, kp.lattice().rank());
  out.l_lattice = orthogonal_complement(kp.lattice(), one, "L_w1");
  out.w1 = h;
  Integer big = abs(kp.lattice().norm(h) * out.omega.sub.determinant());
  Integer small = abs(out.l_lattice.sub.determinant());
  Integer sq = big / small;
  if (sq * small != big || !mpz_perfect_square_p(sq.get_mpz_t())) throw InternalError("index of w1 + Omega not a square");
  out.w1_index = sqrt(sq);
  return out;
}

TFamily parse_tfamily(const std::string& name) {
  if (name == "kummer") return TFamily::Kummer;
  if (name == "X1") return TFamily::XCase1;
  if (name == "X2") return TFamily::XCase2;
  if (name == "X3") return TFamily::XCase3;
  if (name == "Y") return TFamily::Y;
  throw UsageError("unknown family '" + name + "' (kummer, X1, X2, X3, Y)");
}

std::string to_string(TFamily f) {
  switch (f) {
    case TFamily::Kummer: return "kummer";
    case TFamily::XCase1: return "X1";
    case TFamily::XCase2: return "X2";
    case TFamily::XCase3: return "X3";
    case TFamily::Y: return "Y";
  }
  return "?";
}

GramLattice transcendental_lattice(TFamily f, long param) {
  if (param < 1 && f != TFamily::XCase2 && f != TFamily::XCase3) throw UsageError("parameter must be positive");
  GramLattice u2 = hyperbolic_plane(2);
  std::string tag = to_string(f) + "(" + std::to_string(param) + ")";
  switch (f) {
    case TFamily::Kummer:
      return direct_sum({GramLattice(IntMatrix{{-4 * param}}, {"h"}), u2, u2}, "T_" + tag);
    case TFamily::XCase1:
      return direct_sum({GramLattice(IntMatrix{{-8}}, {"a"}), GramLattice(IntMatrix{{-4 * param}}, {"b"}), u2, u2},
                        "T_" + tag);
    case TFamily::XCase2:
      return direct_sum({GramLattice(IntMatrix{{-8, 4}, {4, -4 * param}}, {"a", "b"}), u2, u2}, "T_" + tag);
    case TFamily::XCase3:
      return direct_sum({GramLattice(IntMatrix{{-8, 2}, {2, -4 * param}}, {"a", "b"}), u2, u2}, "T_" + tag);
    case TFamily::Y:
      return direct_sum({u2, u2, GramLattice(IntMatrix{{-2}}, {"a"}), GramLattice(IntMatrix{{-2 * param}}, {"b"})},
                        "T_" + tag);
  }
  throw UsageError("unknown family");
}

GramLattice omega_perp_lattice() { return direct_sum({GramLattice(IntMatrix{{-8}}, {"x"}), hyperbolic_plane(2), hyperbolic_plane(2), hyperbolic_plane(2)}, "<-8>+U(2)^3"); }

GramLattice w_vector_complement(TFamily f, long param) {
  GramLattice amb = omega_perp_lattice();
  IntVector w(7, Integer(0));
  switch (f) {
    case TFamily::XCase1: w[1] = 1; w[2] = param; break;
    case TFamily::XCase2: w[0] = 1; w[1] = 2; w[2] = 2 * param; break;
    case TFamily::XCase3: w[0] = 1; w[1] = 4; w[2] = 4 * param; break;
    default: throw UsageError("w vectors exist only for the X families");
  }
  IntMatrix sub = IntMatrix::from_columns({w}, 7);
  return orthogonal_complement(amb, sub, "w-perp").sub;
}

}  // namespace k3lat
