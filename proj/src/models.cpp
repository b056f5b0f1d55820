#include "k3lat/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

ExactPolynomial ExactPolynomial::constant(std::size_t nvars, const Rational& c) {
  ExactPolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

ExactPolynomial ExactPolynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

ExactPolynomial ExactPolynomial::monomial(const Exponents& e, const Rational& c) {
  ExactPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int ExactPolynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total(terms_.begin()->first));
}

bool ExactPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total(t.first) == d; });
}

Rational ExactPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExactPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length does not match the variable count");
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExactPolynomial::check_same(const ExactPolynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomials in different numbers of variables");
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
  check_same(o);
  ExactPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
  check_same(o);
  ExactPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
  check_same(o);
  ExactPolynomial out(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

ExactPolynomial ExactPolynomial::operator*(const Rational& c) const {
  ExactPolynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, a] : terms_) out.terms_.emplace(e, a * c);
  return out;
}

ExactPolynomial ExactPolynomial::pow(unsigned k) const {
  ExactPolynomial out = constant(nvars_, 1), base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

Rational ExactPolynomial::evaluate(const RatVector& x) const {
  if (x.size() != nvars_) throw DimensionError("point dimension does not match the variable count");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

ExactPolynomial ExactPolynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw DimensionError("variable index out of range");
  ExactPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    f[i] -= 1;
    out.add_term(f, c * e[i]);
  }
  return out;
}

ExactPolynomial ExactPolynomial::compose(const std::vector<ExactPolynomial>& subs) const {
  if (subs.size() != nvars_) throw DimensionError("one substitute per variable is required");
  const std::size_t m = subs.empty() ? 0 : subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != m) throw DimensionError("substitutes live in different variable counts");
  // Cache powers of each substitute.
  std::vector<std::vector<ExactPolynomial>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(constant(m, 1));
  ExactPolynomial out(m);
  for (const auto& [e, c] : terms_) {
    ExactPolynomial t = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * subs[i]);
      if (e[i]) t = t * powers[i][e[i]];
    }
    out = out + t;
  }
  return out;
}

std::string term_string(const Exponents& e, const Rational& c) {
  std::string mono;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!mono.empty()) mono += "*";
    mono += "x" + std::to_string(i);
    if (e[i] > 1) mono += "^" + std::to_string(e[i]);
  }
  if (mono.empty()) return to_string(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return to_string(c) + "*" + mono;
}

std::string to_string(const ExactPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string t = term_string(e, c);
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

ProjectiveTransform ProjectiveTransform::from_matrix(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("transform matrix must be square");
  if (determinant(m) == 0) throw UsageError("transform matrix is singular");
  return {m};
}

ProjectiveTransform ProjectiveTransform::signed_permutation(const std::vector<std::size_t>& perm,
                                                            const std::vector<int>& signs) {
  const std::size_t n = perm.size();
  if (signs.size() != n) throw DimensionError("one sign per coordinate is required");
  RatMatrix m(n, n);
  // Image coordinate i is signs[i] * x_{perm[i]}.
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n) throw UsageError("permutation index out of range");
    m(i, perm[i]) = signs[i];
  }
  return from_matrix(m);
}

ExactPolynomial substitute(const ExactPolynomial& p, const ProjectiveTransform& t) {
  const std::size_t n = t.dimension();
  if (p.nvars() != n) throw DimensionError("transform and polynomial dimensions differ");
  std::vector<ExactPolynomial> subs;
  for (std::size_t i = 0; i < n; ++i) {
    ExactPolynomial s(n);
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      s.add_term(e, t.matrix(i, j));
    }
    subs.push_back(s);
  }
  return p.compose(subs);
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) return out;
  Exponents e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;  // already grlex descending
}

std::vector<ExactPolynomial> invariant_space(std::size_t nvars, const std::vector<ProjectiveTransform>& gens,
                                             int degree) {
  if (degree < 0 || degree > kInvariantDegreeGuard)
    throw GuardExceeded("invariant_space degree must be in 0.." + std::to_string(kInvariantDegreeGuard));
  auto monos = monomials_of_degree(nvars, static_cast<unsigned>(degree));
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  const std::size_t n = monos.size();
  RatMatrix stacked(gens.size() * n, n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].dimension() != nvars) throw DimensionError("generator dimension does not match");
    for (std::size_t j = 0; j < n; ++j) {
      ExactPolynomial img = substitute(ExactPolynomial::monomial(monos[j]), gens[g]);
      for (const auto& [e, c] : img.terms()) stacked(g * n + index.at(e), j) += c;
      stacked(g * n + j, j) -= 1;
    }
  }
  std::vector<ExactPolynomial> out;
  for (const auto& v : rational_kernel(stacked)) {
    ExactPolynomial p(nvars);
    for (std::size_t j = 0; j < n; ++j) p.add_term(monos[j], v[j]);
    out.push_back(p);
  }
  return out;
}

bool same_span(const std::vector<ExactPolynomial>& basis, const std::vector<ExactPolynomial>& polys) {
  std::set<Exponents, GrlexGreater> support;
  for (const auto* group : {&basis, &polys})
    for (const auto& p : *group)
      for (const auto& [e, c] : p.terms()) support.insert(e);
  std::vector<Exponents> cols(support.begin(), support.end());
  auto to_matrix = [&](const std::vector<const ExactPolynomial*>& ps) {
    RatMatrix m(ps.size(), cols.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = ps[i]->coefficient(cols[j]);
    return m;
  };
  std::vector<const ExactPolynomial*> a, b, both;
  for (const auto& p : basis) a.push_back(&p), both.push_back(&p);
  for (const auto& p : polys) b.push_back(&p), both.push_back(&p);
  std::size_t ra = rank(to_matrix(a)), rb = rank(to_matrix(b)), rab = rank(to_matrix(both));
  return ra == rab && rb == rab;
}

std::vector<ProjectiveTransform> heisenberg_generators() {
  return {
      ProjectiveTransform::signed_permutation({0, 1, 2, 3}, {1, -1, 1, -1}),
      ProjectiveTransform::signed_permutation({0, 1, 2, 3}, {1, -1, -1, 1}),
      ProjectiveTransform::signed_permutation({1, 0, 3, 2}, {1, 1, 1, 1}),
      ProjectiveTransform::signed_permutation({3, 2, 1, 0}, {1, 1, 1, 1}),
  };
}

std::vector<ExactPolynomial> heisenberg_quartics() {
  auto m = [](unsigned a, unsigned b, unsigned c, unsigned d) { return ExactPolynomial::monomial({a, b, c, d}); };
  return {
      m(4, 0, 0, 0) + m(0, 4, 0, 0) + m(0, 0, 4, 0) + m(0, 0, 0, 4),
      m(2, 2, 0, 0) + m(0, 0, 2, 2),
      m(2, 0, 2, 0) + m(0, 2, 0, 2),
      m(2, 0, 0, 2) + m(0, 2, 2, 0),
      m(1, 1, 1, 1),
  };
}

ExactPolynomial invariant_quartic(const std::vector<Rational>& a) {
  if (a.size() != 5) throw DimensionError("five coefficients a0..a4 are required");
  auto ps = heisenberg_quartics();
  ExactPolynomial out(4);
  for (std::size_t i = 0; i < 5; ++i) out = out + ps[i] * a[i];
  return out;
}

ExactPolynomial igusa_relation(const Rational& leading) {
  std::vector<ExactPolynomial> p;
  for (std::size_t i = 0; i < 5; ++i) p.push_back(ExactPolynomial::variable(5, i));
  auto sq = [](const ExactPolynomial& x) { return x * x; };
  return sq(sq(p[4])) * leading + sq(p[0]) * sq(p[4]) + sq(p[1]) * sq(p[2]) + sq(p[1]) * sq(p[3]) +
         sq(p[2]) * sq(p[3]) - (sq(p[1]) + sq(p[2]) + sq(p[3])) * sq(p[4]) * Rational(4) -
         p[0] * p[1] * p[2] * p[3];
}

IgusaReport igusa_relation_check(const Rational& leading) {
  ExactPolynomial rel = igusa_relation(leading);
  auto ps = heisenberg_quartics();
  ExactPolynomial composed = rel.compose(ps);
  IgusaReport rep;
  rep.identically_zero = composed.is_zero();
  rep.composed_degree = composed.degree();
  rep.nonzero_terms = composed.terms().size();
  if (!composed.is_zero()) {
    const auto& [e, c] = *composed.terms().begin();
    rep.witness = term_string(e, c);
  }
  RatVector x{1, 2, 3, 5}, vals;
  for (const auto& p : ps) vals.push_back(p.evaluate(x));
  rep.spot_value = rel.evaluate(vals);
  return rep;
}

std::vector<ProjectiveTransform> even_sign_generators(std::size_t nvars) {
  std::vector<std::size_t> id(nvars);
  std::iota(id.begin(), id.end(), 0);
  std::vector<ProjectiveTransform> gens;
  for (std::size_t i = 1; i < nvars; ++i) {
    std::vector<int> signs(nvars, 1);
    signs[0] = signs[i] = -1;
    gens.push_back(ProjectiveTransform::signed_permutation(id, signs));
  }
  return gens;
}

EvenSignReport even_sign_invariants_check() {
  constexpr std::size_t n = 6;
  auto gens = even_sign_generators(n);
  EvenSignReport rep;
  std::vector<ExactPolynomial> squares;
  ExactPolynomial product = ExactPolynomial::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    auto z = ExactPolynomial::variable(n, i);
    squares.push_back(z * z);
    product = product * z;
  }
  rep.squares_invariant = true;
  rep.product_invariant = true;
  for (const auto& g : gens) {
    for (const auto& s : squares) rep.squares_invariant = rep.squares_invariant && substitute(s, g) == s;
    rep.product_invariant = rep.product_invariant && substitute(product, g) == product;
  }
  rep.product_degree = product.degree();
  auto deg2 = invariant_space(n, gens, 2);
  rep.degree2_dimension = deg2.size();
  rep.degree2_is_squares = same_span(deg2, squares);

  // Variables y0..y5, t; substitute y_i = z_i^2 and t = prod z_i.
  std::vector<ExactPolynomial> yt;
  for (std::size_t i = 0; i <= n; ++i) yt.push_back(ExactPolynomial::variable(n + 1, i));
  ExactPolynomial prod_y = ExactPolynomial::constant(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) prod_y = prod_y * yt[i];
  ExactPolynomial relation = yt[n] * yt[n] - prod_y;
  std::vector<ExactPolynomial> subs = squares;
  subs.push_back(product);
  rep.relation_zero = relation.compose(subs).is_zero();
  return rep;
}

RatVector gradient_at(const ExactPolynomial& p, const RatVector& point) {
  if (point.size() != p.nvars()) throw DimensionError("point dimension does not match the variable count");
  RatVector g;
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(p.derivative(i).evaluate(point));
  return g;
}

std::vector<ExactPolynomial> genus2_quadrics(const std::vector<Rational>& s) {
  if (s.size() != 6) throw DimensionError("six branch values are required");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (s[i] == s[j]) throw UsageError("branch values must be distinct");
  std::vector<ExactPolynomial> out;
  for (int k = 0; k < 3; ++k) {
    ExactPolynomial q(6);
    for (std::size_t i = 0; i < 6; ++i) {
      Exponents e(6, 0);
      e[i] = 2;
      Rational c = 1;
      for (int t = 0; t < k; ++t) c *= s[i];
      q.add_term(e, c);
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace k3lat
