#include "k3lat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "k3lat/errors.hpp"

namespace k3lat {

GramLattice::GramLattice(IntMatrix gram, std::vector<std::string> labels, std::string name)
    : gram_(std::move(gram)), labels_(std::move(labels)), name_(std::move(name)) {
  if (!gram_.is_symmetric()) throw UsageError("Gram matrix must be square and symmetric");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != gram_.rows()) throw DimensionError("label count does not match rank");
}

bool GramLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

std::optional<std::size_t> GramLattice::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

IntVector GramLattice::basis_vector(std::size_t i) const {
  if (i >= rank()) throw DimensionError("basis index out of range");
  IntVector v(rank(), Integer(0));
  v[i] = 1;
  return v;
}

IntVector GramLattice::basis_vector(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw UsageError("unknown basis label '" + label + "'");
  return basis_vector(*i);
}

Integer GramLattice::pairing(const IntVector& u, const IntVector& v) const {
  if (u.size() != rank() || v.size() != rank()) throw DimensionError("pairing: vector length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (v[j] != 0 && gram_(i, j) != 0) s += u[i] * gram_(i, j) * v[j];
  }
  return s;
}

Rational GramLattice::pairing(const RatVector& u, const RatVector& v) const {
  if (u.size() != rank() || v.size() != rank()) throw DimensionError("pairing: vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (v[j] != 0 && gram_(i, j) != 0) s += u[i] * gram_(i, j) * v[j];
  }
  return s;
}

IntVector GramLattice::dual_coords(const IntVector& v) const {
  if (v.size() != rank()) throw DimensionError("vector length mismatch");
  return gram_ * v;
}

RatVector GramLattice::dual_coords(const RatVector& v) const {
  if (v.size() != rank()) throw DimensionError("vector length mismatch");
  return to_rational(gram_) * v;
}

Integer GramLattice::determinant() const { return k3lat::determinant(gram_); }

Signature GramLattice::signature() const {
  // Congruence diagonalization over Q.
  RatMatrix a = to_rational(gram_);
  std::size_t n = rank();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && a(k, q) == 0) ++q;
        if (q == n) throw DegenerateLatticeError("degenerate Gram matrix");
        a.add_row(k, q, Rational(1));
        a.add_col(k, q, Rational(1));
      }
    }
    const Rational piv = a(k, k);
    if (piv > 0)
      ++sig.positive;
    else
      ++sig.negative;
    // Schur complement of the pivot
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / piv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (a(k, j) != 0) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
  }
  return sig;
}

LatticeInvariants GramLattice::invariants() const {
  LatticeInvariants inv;
  inv.rank = rank();
  inv.determinant = determinant();
  if (inv.determinant == 0) throw DegenerateLatticeError("degenerate Gram matrix" + (name_.empty() ? "" : " (" + name_ + ")"));
  inv.signature = signature();
  inv.is_even = is_even();
  return inv;
}

GramLattice GramLattice::renamed(std::string name) const { return GramLattice(gram_, labels_, std::move(name)); }

GramLattice GramLattice::relabeled(std::vector<std::string> labels) const {
  return GramLattice(gram_, std::move(labels), name_);
}

Embedding make_embedding(const GramLattice& ambient, const IntMatrix& basis, std::string name) {
  if (basis.rows() != ambient.rank()) throw DimensionError("embedding basis has wrong ambient dimension");
  IntMatrix g = basis.transpose() * ambient.gram() * basis;
  return Embedding{basis, GramLattice(g, {}, std::move(name))};
}

namespace {

// Row Hermite form of a in place, with the same row operations applied to u.
void hermite_rows_tracked(IntMatrix& a, IntMatrix& u) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
      Integer x = a(r, c) / g, y = a(i, c) / g;
      auto mix = [&](IntMatrix& w) {
        for (std::size_t j = 0; j < w.cols(); ++j) {
          Integer top = s * w(r, j) + t * w(i, j);
          Integer bot = -y * w(r, j) + x * w(i, j);
          w(r, j) = top;
          w(i, j) = bot;
        }
      };
      mix(a);
      mix(u);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      a.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
}

bool is_zero_row(const IntMatrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(i, j) != 0) return false;
  return true;
}

bool is_diagonal(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != 0) return false;
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  // Alternate row and column Hermite forms until diagonal; this keeps entries bounded
  // where plain pivoting blows up.
  IntMatrix vt = v.transpose();
  while (!is_diagonal(a)) {
    hermite_rows_tracked(a, u);
    if (is_diagonal(a)) break;
    IntMatrix at = a.transpose();
    hermite_rows_tracked(at, vt);
    a = at.transpose();
  }
  v = vt.transpose();
  // Diagonal now: fix signs, move zeros last and enforce the divisibility chain.
  const std::size_t k = std::min(r, c);
  for (std::size_t i = 0; i < k; ++i)
    if (a(i, i) < 0) {
      a.negate_row(i);
      u.negate_row(i);
    }
  std::size_t t = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (a(i, i) != 0) {
      if (i != t) {
        a.swap_rows(t, i);
        u.swap_rows(t, i);
        a.swap_cols(t, i);
        v.swap_cols(t, i);
      }
      ++t;
    }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      if (mpz_divisible_p(a(j, j).get_mpz_t(), a(i, i).get_mpz_t())) continue;
      // [[p,0],[0,q]] -> [[g,0],[0,pq/g]] with p*s + q*t = g
      Integer p = a(i, i), q = a(j, j), g, s, tt;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      // column j += column i: [[p,p],[0,q]]
      a.add_col(j, i, Integer(1));
      v.add_col(j, i, Integer(1));
      // rows (i, j) by [[s, tt], [-q/g, p/g]]
      Integer x = p / g, y = q / g;
      auto mix = [&](IntMatrix& w) {
        for (std::size_t col = 0; col < w.cols(); ++col) {
          Integer top = s * w(i, col) + tt * w(j, col);
          Integer bot = -y * w(i, col) + x * w(j, col);
          w(i, col) = top;
          w(j, col) = bot;
        }
      };
      mix(a);
      mix(u);
      // now [[s p, g], [-pq/g, 0]]; swap columns and clear the s p left in row i
      a.swap_cols(i, j);
      v.swap_cols(i, j);
      Integer f = a(i, j) / g;
      a.add_col(j, i, -f);
      v.add_col(j, i, -f);
      if (a(j, j) < 0) {
        a.negate_row(j);
        u.negate_row(j);
      }
    }
  SmithForm out{u, a, v, t, {}};
  for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(a(i, i));
  return out;
}

IntMatrix hermite_row_basis(const IntMatrix& rows) {
  IntMatrix a = rows;
  IntMatrix none(rows.rows(), 0);
  hermite_rows_tracked(a, none);
  std::size_t r = 0;
  while (r < a.rows() && !is_zero_row(a, r)) ++r;
  return a.submatrix(0, 0, r, a.cols());
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  const std::size_t n = m.cols();
  IntMatrix rows(n - s.rank, n);
  for (std::size_t k = s.rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) rows(k - s.rank, i) = s.V(i, k);
  if (rows.rows() == 0) return IntMatrix(n, 0);
  return hermite_row_basis(rows).transpose();
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : orders) o *= d;
  return o;
}

IntVector DiscriminantGroup::coordinates(const GramLattice& l, const RatVector& y) const {
  RatVector gy = l.dual_coords(y);
  if (!is_integral(gy)) throw UsageError("element is not in the dual lattice");
  IntVector x = to_integer(gy);
  IntVector out = coordinate_map * x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer rmd;
    mpz_fdiv_r(rmd.get_mpz_t(), out[i].get_mpz_t(), orders[i].get_mpz_t());
    out[i] = rmd;
  }
  return out;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  SmithForm s = smith_normal_form(l.gram());
  if (s.rank < l.rank()) throw DegenerateLatticeError("degenerate Gram matrix");
  DiscriminantGroup g;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.divisors[i] > 1) keep.push_back(i);
  g.coordinate_map = IntMatrix(keep.size(), l.rank());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    std::size_t i = keep[k];
    g.orders.push_back(s.divisors[i]);
    RatVector lift(l.rank());
    for (std::size_t r = 0; r < l.rank(); ++r) {
      lift[r] = Rational(s.V(r, i), s.divisors[i]);
      lift[r].canonicalize();
    }
    g.lifts.push_back(std::move(lift));
    for (std::size_t j = 0; j < l.rank(); ++j) g.coordinate_map(k, j) = s.U(i, j);
  }
  return g;
}

Embedding orthogonal_complement(const GramLattice& ambient, const IntMatrix& sub_basis, std::string name) {
  if (sub_basis.rows() != ambient.rank()) throw DimensionError("sublattice basis has wrong ambient dimension");
  IntMatrix sub_gram = sub_basis.transpose() * ambient.gram() * sub_basis;
  if (k3lat::determinant(sub_gram) == 0)
    throw DegenerateLatticeError("sublattice is degenerate; its orthogonal complement meets it");
  IntMatrix functionals = sub_basis.transpose() * ambient.gram();
  IntMatrix basis = integer_kernel(functionals);
  return make_embedding(ambient, basis, std::move(name));
}

Saturation saturation(const GramLattice& ambient, const IntMatrix& sub_basis, std::string name) {
  if (sub_basis.rows() != ambient.rank()) throw DimensionError("sublattice basis has wrong ambient dimension");
  SmithForm s = smith_normal_form(sub_basis);
  IntMatrix uinv = to_integer(inverse(to_rational(s.U)));
  IntMatrix rows(s.rank, ambient.rank());
  for (std::size_t k = 0; k < s.rank; ++k)
    for (std::size_t i = 0; i < ambient.rank(); ++i) rows(k, i) = uinv(i, k);
  IntMatrix basis = hermite_row_basis(rows).transpose();
  Integer index = 1;
  for (const auto& d : s.divisors) index *= d;
  return Saturation{make_embedding(ambient, basis, std::move(name)), index};
}

bool is_primitive(const IntMatrix& sub_basis) {
  SmithForm s = smith_normal_form(sub_basis);
  if (s.rank != sub_basis.cols()) return false;
  for (const auto& d : s.divisors)
    if (d != 1) return false;
  return true;
}

std::optional<IntVector> Overlattice::coordinates_of(const RatVector& old_coords) const {
  RatVector x;
  if (!solve_rational(basis, old_coords, x)) return std::nullopt;
  if (!is_integral(x)) return std::nullopt;
  return to_integer(x);
}

RatVector Overlattice::to_old(const IntVector& new_coords) const { return basis * to_rational(new_coords); }

namespace {

void validate_glue(const GramLattice& l, const std::vector<RatVector>& glue) {
  for (std::size_t k = 0; k < glue.size(); ++k) {
    if (glue[k].size() != l.rank()) throw DimensionError("glue vector has wrong length");
    if (!is_integral(l.dual_coords(glue[k])))
      throw GlueError("glue vector " + to_string(glue[k]) + " does not pair integrally with the lattice");
    Rational self = l.pairing(glue[k], glue[k]);
    if (self.get_den() != 1) throw GlueError("glue vector " + to_string(glue[k]) + " has non-integral square");
    if (l.is_even() && mpz_odd_p(self.get_num_mpz_t()))
      throw GlueError("glue vector " + to_string(glue[k]) + " has odd square " + to_string(self));
    for (std::size_t j = 0; j < k; ++j)
      if (l.pairing(glue[k], glue[j]).get_den() != 1)
        throw GlueError("glue vectors " + to_string(glue[j]) + " and " + to_string(glue[k]) +
                        " pair non-integrally");
  }
}

}  // namespace

Overlattice overlattice(const GramLattice& l, const std::vector<RatVector>& glue, std::string name) {
  validate_glue(l, glue);
  const std::size_t n = l.rank();
  Integer den = 1;
  for (const auto& g : glue) den = lcm(den, lcm_of_denominators(g));
  IntMatrix gens(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
  for (std::size_t k = 0; k < glue.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      // den * e_i are already generators, so glue entries only matter mod den
      Rational x = glue[k][i] * den;
      mpz_fdiv_r(gens(n + k, i).get_mpz_t(), x.get_num_mpz_t(), den.get_mpz_t());
    }
  IntMatrix h = hermite_row_basis(gens);
  RatMatrix basis(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      basis(i, k) = Rational(h(k, i), den);
      basis(i, k).canonicalize();
    }
  RatMatrix g = basis.transpose() * to_rational(l.gram()) * basis;
  IntMatrix gi = to_integer(g);
  Integer hdet = abs(k3lat::determinant(h));
  Integer full = 1;
  for (std::size_t i = 0; i < n; ++i) full *= den;
  if (!mpz_divisible_p(full.get_mpz_t(), hdet.get_mpz_t())) throw InternalError("overlattice index not integral");
  Integer index = full / hdet;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return Overlattice{GramLattice(gi, labels, std::move(name)), basis, index};
}

Overlattice overlattice_in_basis(const GramLattice& l, const std::vector<RatVector>& glue,
                                 const std::vector<RatVector>& basis_vectors, std::vector<std::string> labels,
                                 std::string name) {
  Overlattice generic = overlattice(l, glue, name);
  const std::size_t n = l.rank();
  if (basis_vectors.size() != n) throw DimensionError("preferred basis has wrong size");
  IntMatrix transition(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto c = generic.coordinates_of(basis_vectors[k]);
    if (!c) throw InternalError("preferred basis vector " + to_string(basis_vectors[k]) + " not in overlattice");
    transition.set_col(k, *c);
  }
  if (abs(k3lat::determinant(transition)) != 1) throw InternalError("preferred vectors do not form a basis");
  RatMatrix basis = RatMatrix::from_columns(basis_vectors, n);
  IntMatrix g = to_integer(basis.transpose() * to_rational(l.gram()) * basis);
  return Overlattice{GramLattice(g, std::move(labels), std::move(name)), basis, generic.index};
}

std::vector<Integer> invariant_factors(const std::vector<Integer>& cyclic_orders) {
  IntMatrix d(cyclic_orders.size(), cyclic_orders.size());
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) d(i, i) = cyclic_orders[i];
  SmithForm s = smith_normal_form(d);
  std::vector<Integer> out;
  for (const auto& x : s.divisors)
    if (x > 1) out.push_back(x);
  return out;
}

GramLattice hyperbolic_plane(long scale) {
  IntMatrix g{{0, scale}, {scale, 0}};
  return GramLattice(g, {"e", "f"}, scale == 1 ? "U" : "U(" + std::to_string(scale) + ")");
}

GramLattice diagonal_lattice(const std::vector<long>& entries, const std::string& label_prefix) {
  IntMatrix g(entries.size(), entries.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    g(i, i) = entries[i];
    labels.push_back(label_prefix + std::to_string(i + 1));
  }
  return GramLattice(g, labels);
}

GramLattice root_lattice_a(std::size_t k) {
  if (k == 0) throw UsageError("A_k needs k >= 1");
  IntMatrix g(k, k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    g(i, i) = -2;
    if (i + 1 < k) g(i, i + 1) = g(i + 1, i) = 1;
    labels.push_back("a" + std::to_string(i + 1));
  }
  return GramLattice(g, labels, "A" + std::to_string(k) + "(-1)");
}

GramLattice root_lattice_d(std::size_t k) {
  if (k < 4) throw UsageError("D_k needs k >= 4");
  IntMatrix g(k, k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    g(i, i) = -2;
    labels.push_back("d" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 2 < k; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(k - 3, k - 1) = g(k - 1, k - 3) = 1;
  return GramLattice(g, labels, "D" + std::to_string(k) + "(-1)");
}

GramLattice root_lattice_e8() {
  // E1..E7 an A7 chain, E8 attached to E3.
  IntMatrix g(8, 8);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 8; ++i) {
    g(i, i) = -2;
    labels.push_back("E" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < 7; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(2, 7) = g(7, 2) = 1;
  return GramLattice(g, labels, "E8(-1)");
}

GramLattice direct_sum(const std::vector<GramLattice>& parts, std::string name) {
  std::vector<IntMatrix> blocks;
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    blocks.push_back(p.gram());
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    labels.clear();
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (const auto& lab : parts[b].labels()) labels.push_back(lab + "_" + std::to_string(b + 1));
  }
  if (name.empty()) {
    for (std::size_t b = 0; b < parts.size(); ++b) name += (b ? "+" : "") + parts[b].name();
  }
  return GramLattice(block_diagonal(blocks), labels, name);
}

GramLattice rescale(const GramLattice& l, long factor) {
  if (factor == 0) throw UsageError("rescale by zero");
  return GramLattice(l.gram().scaled(Integer(factor)), l.labels(),
                     l.name().empty() ? std::string() : "(" + l.name() + ")(" + std::to_string(factor) + ")");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "' in lattice name");
  }
  if (pos != s.size()) throw UsageError("bad integer '" + s + "' in lattice name");
  return v;
}

GramLattice single_lattice(const std::string& tok) {
  if (tok == "U") return hyperbolic_plane(1);
  if (tok.rfind("U(", 0) == 0 && tok.back() == ')') return hyperbolic_plane(parse_long(tok.substr(2, tok.size() - 3)));
  if (tok.front() == '<' && tok.back() == '>') {
    long m = parse_long(tok.substr(1, tok.size() - 2));
    return GramLattice(IntMatrix{{m}}, {"x"}, "<" + std::to_string(m) + ">");
  }
  if (tok == "E8(-1)") return root_lattice_e8();
  if ((tok.front() == 'A' || tok.front() == 'D') && tok.size() > 5 && tok.substr(tok.size() - 4) == "(-1)") {
    long k = parse_long(tok.substr(1, tok.size() - 5));
    if (k <= 0) throw UsageError("bad root lattice rank in '" + tok + "'");
    return tok.front() == 'A' ? root_lattice_a(static_cast<std::size_t>(k)) : root_lattice_d(static_cast<std::size_t>(k));
  }
  throw UsageError("unknown lattice name '" + tok + "'");
}

}  // namespace

GramLattice standard_lattice(const std::string& spec) {
  std::vector<GramLattice> parts;
  std::size_t start = 0;
  int depth = 0;
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i < spec.size() && (spec[i] == '(' || spec[i] == '<')) ++depth;
    if (i < spec.size() && (spec[i] == ')' || spec[i] == '>')) --depth;
    if (i == spec.size() || (spec[i] == '+' && depth == 0)) {
      tokens.push_back(trim(spec.substr(start, i - start)));
      start = i + 1;
    }
  }
  for (const auto& t : tokens) {
    if (t.empty()) throw UsageError("empty lattice name in '" + spec + "'");
    std::string base = t;
    long power = 1;
    auto caret = t.rfind('^');
    if (caret != std::string::npos) {
      base = trim(t.substr(0, caret));
      power = parse_long(trim(t.substr(caret + 1)));
      if (power <= 0) throw UsageError("bad power in '" + t + "'");
    }
    GramLattice l = single_lattice(base);
    for (long k = 0; k < power; ++k) parts.push_back(l);
  }
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts, spec);
}

}  // namespace k3lat
