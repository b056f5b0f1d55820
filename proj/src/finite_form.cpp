#include "k3lat/finite_form.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "k3lat/errors.hpp"

namespace k3lat {

Rational mod2(const Rational& x) {
  Integer two_den = 2 * x.get_den();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), two_den.get_mpz_t());
  Rational out(r, x.get_den());
  out.canonicalize();
  return out;
}

Rational mod1(const Rational& x) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational out(r, x.get_den());
  out.canonicalize();
  return out;
}

namespace {

long to_long_checked(const Integer& x, const char* what) {
  if (!x.fits_slong_p() || x > (Integer(1) << 30)) throw GuardExceeded(std::string(what) + " too large");
  return x.get_si();
}

long pos_mod(__int128 a, long m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<long>(r);
}

// Numerator of x over the exponent e; throws when x is not in (1/e)Z.
long numerator_over(const Rational& x, long e, long modulus) {
  Rational y = x * e;
  if (y.get_den() != 1) throw UsageError("form value " + to_string(x) + " incompatible with group exponent");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), y.get_num_mpz_t(), static_cast<unsigned long>(modulus));
  return r.get_si();
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Integer> orders, RatMatrix values, std::vector<RatVector> lifts)
    : orders_(std::move(orders)), values_(std::move(values)), lifts_(std::move(lifts)) {
  const std::size_t k = orders_.size();
  if (values_.rows() != k || values_.cols() != k) throw DimensionError("value matrix does not match generator count");
  if (!lifts_.empty() && lifts_.size() != k) throw DimensionError("lift count does not match generator count");
  for (const auto& d : orders_) {
    if (d < 1) throw UsageError("cyclic order must be positive");
    small_orders_.push_back(to_long_checked(d, "cyclic order"));
  }
  exponent_ = 1;
  for (long d : small_orders_) exponent_ = std::lcm(exponent_, d);
  to_long_checked(Integer(exponent_), "group exponent");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      values_(i, j) = (i == j) ? mod2(values_(i, j)) : mod1(values_(i, j));
      if (i != j && mod1(values_(i, j)) != mod1(values_(j, i))) throw UsageError("value matrix not symmetric mod 1");
    }
  qnum_.resize(k);
  bnum_.assign(k * k, 0);
  const long e = exponent_;
  for (std::size_t i = 0; i < k; ++i) {
    qnum_[i] = numerator_over(values_(i, i), e, 2 * e);
    const __int128 d = small_orders_[i];
    if (pos_mod(d * qnum_[i], e) != 0 || pos_mod(d * d * qnum_[i], 2 * e) != 0)
      throw UsageError("q value of generator " + std::to_string(i) + " incompatible with its order");
    for (std::size_t j = 0; j < k; ++j) {
      long bn = (i == j) ? pos_mod(qnum_[i], e) : numerator_over(values_(i, j), e, e);
      if (pos_mod(d * bn, e) != 0) throw UsageError("b value incompatible with generator order");
      bnum_[i * k + j] = bn;
    }
  }
}

Integer FiniteQuadraticForm::order() const {
  Integer o = 1;
  for (const auto& d : orders_) o *= d;
  return o;
}

std::uint64_t FiniteQuadraticForm::size() const {
  Integer o = order();
  if (o > Integer(1) << 62) throw GuardExceeded("finite group too large");
  return o.get_ui();
}

FiniteQuadraticForm::Element FiniteQuadraticForm::element(std::uint64_t index) const {
  Element e(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    e[i] = static_cast<long>(index % static_cast<std::uint64_t>(small_orders_[i]));
    index /= static_cast<std::uint64_t>(small_orders_[i]);
  }
  return e;
}

std::uint64_t FiniteQuadraticForm::index_of(const Element& e) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(small_orders_[i]) + static_cast<std::uint64_t>(pos_mod(e[i], small_orders_[i]));
  return idx;
}

long FiniteQuadraticForm::element_order(const Element& e) const {
  long o = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    long c = pos_mod(e[i], small_orders_[i]);
    o = std::lcm(o, small_orders_[i] / std::gcd(c, small_orders_[i]));
  }
  return o;
}

long FiniteQuadraticForm::q_numerator(const Element& c) const {
  const std::size_t k = orders_.size();
  if (c.size() != k) throw DimensionError("element has wrong length");
  __int128 s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i] == 0) continue;
    s += static_cast<__int128>(c[i]) * c[i] * qnum_[i];
    for (std::size_t j = i + 1; j < k; ++j)
      if (c[j] != 0) s += 2 * static_cast<__int128>(c[i]) * c[j] * bnum_[i * k + j];
  }
  return pos_mod(s, 2 * exponent_);
}

long FiniteQuadraticForm::b_numerator(const Element& x, const Element& y) const {
  const std::size_t k = orders_.size();
  if (x.size() != k || y.size() != k) throw DimensionError("element has wrong length");
  __int128 s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (y[j] != 0) s += static_cast<__int128>(x[i]) * y[j] * bnum_[i * k + j];
  }
  return pos_mod(s, exponent_);
}

Rational FiniteQuadraticForm::q(const Element& e) const {
  Rational r(q_numerator(e), exponent_);
  r.canonicalize();
  return r;
}

Rational FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  Rational r(b_numerator(x, y), exponent_);
  r.canonicalize();
  return r;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  RatMatrix v = values_.scaled(Rational(-1));
  return FiniteQuadraticForm(orders_, v, lifts_);
}

FiniteQuadraticForm FiniteQuadraticForm::direct_sum(const FiniteQuadraticForm& other) const {
  const std::size_t a = generator_count(), b = other.generator_count();
  std::vector<Integer> orders = orders_;
  orders.insert(orders.end(), other.orders_.begin(), other.orders_.end());
  RatMatrix v(a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) v(i, j) = values_(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) v(a + i, a + j) = other.values_(i, j);
  return FiniteQuadraticForm(orders, v);
}

FiniteQuadraticForm discriminant_form(const GramLattice& l) {
  if (!l.is_even()) throw OddLatticeError("discriminant quadratic form needs an even lattice");
  DiscriminantGroup g = discriminant_group(l);
  const std::size_t k = g.orders.size();
  RatMatrix v(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) v(i, j) = l.pairing(g.lifts[i], g.lifts[j]);
  return FiniteQuadraticForm(g.orders, v, g.lifts);
}

RatMatrix discriminant_bilinear_values(const GramLattice& l) {
  DiscriminantGroup g = discriminant_group(l);
  const std::size_t k = g.orders.size();
  RatMatrix v(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) v(i, j) = mod1(l.pairing(g.lifts[i], g.lifts[j]));
  return v;
}

FiniteQuadraticForm form_from_matrix(const std::vector<Integer>& orders, const RatMatrix& values) {
  return FiniteQuadraticForm(orders, values);
}

namespace {

QCensus census_from_counts(const std::vector<std::uint64_t>& counts, long exponent) {
  QCensus out;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (counts[n] == 0) continue;
    Rational r(static_cast<long>(n), exponent);
    r.canonicalize();
    out[r] = counts[n];
  }
  return out;
}

void check_census_guard(const FiniteQuadraticForm& f) {
  if (f.order() > Integer(static_cast<unsigned long>(kCensusGuard)))
    throw GuardExceeded("group of order " + f.order().get_str() + " exceeds census guard 2^20");
}

}  // namespace

QCensus q_census_serial(const FiniteQuadraticForm& f) {
  check_census_guard(f);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(2 * f.exponent()), 0);
  const std::uint64_t n = f.size();
  for (std::uint64_t idx = 1; idx < n; ++idx) ++counts[static_cast<std::size_t>(f.q_numerator(f.element(idx)))];
  return census_from_counts(counts, f.exponent());
}

QCensus q_census(const FiniteQuadraticForm& f) {
  check_census_guard(f);
  const std::size_t buckets = static_cast<std::size_t>(2 * f.exponent());
  const std::int64_t n = static_cast<std::int64_t>(f.size());
  std::vector<std::uint64_t> counts(buckets, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(buckets, 0);
#pragma omp for schedule(static)
    for (std::int64_t idx = 1; idx < n; ++idx)
      ++local[static_cast<std::size_t>(f.q_numerator(f.element(static_cast<std::uint64_t>(idx))))];
#pragma omp critical
    for (std::size_t i = 0; i < buckets; ++i) counts[i] += local[i];
  }
  return census_from_counts(counts, f.exponent());
}

FormIsomorphism forms_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  const Integer limit(static_cast<unsigned long>(kIsomorphismGuard));
  if (a.order() > limit || b.order() > limit) throw GuardExceeded("isomorphism search limited to groups of order 2^10");
  FormIsomorphism result;
  if (invariant_factors(a.orders()) != invariant_factors(b.orders())) return result;
  if (a.exponent() != b.exponent()) return result;
  if (q_census_serial(a) != q_census_serial(b)) return result;

  const std::size_t k = a.generator_count();
  const std::uint64_t n = b.size();
  // (order, q) fingerprints of all elements of the target
  std::vector<FiniteQuadraticForm::Element> elems(n);
  std::vector<long> elem_order(n), elem_q(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    elems[i] = b.element(i);
    elem_order[i] = b.element_order(elems[i]);
    elem_q[i] = b.q_numerator(elems[i]);
  }
  std::vector<FiniteQuadraticForm::Element> gens(k);
  std::vector<std::vector<std::uint64_t>> candidates(k);
  for (std::size_t g = 0; g < k; ++g) {
    gens[g].assign(k, 0);
    gens[g][g] = 1;
    const long ord = a.element_order(gens[g]);
    const long qn = a.q_numerator(gens[g]);
    for (std::uint64_t i = 0; i < n; ++i)
      if (elem_order[i] == ord && elem_q[i] == qn) candidates[g].push_back(i);
    if (candidates[g].empty()) return result;
  }

  // Generators of a are independent, so their images must span a subgroup of the full size
  // at every stage; `span` tracks the subgroup generated by the images chosen so far.
  std::vector<std::uint64_t> choice(k);
  auto add_elems = [&](std::uint64_t x, std::uint64_t y) {
    FiniteQuadraticForm::Element s(b.generator_count());
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = elems[x][t] + elems[y][t];
    return b.index_of(s);
  };
  std::function<bool(std::size_t, const std::vector<std::uint64_t>&)> assign =
      [&](std::size_t g, const std::vector<std::uint64_t>& span) -> bool {
    if (g == k) return span.size() == n;
    std::vector<char> in_span(n, 0);
    for (auto x : span) in_span[x] = 1;
    const long ord = a.element_order(gens[g]);
    for (auto cand : candidates[g]) {
      bool ok = true;
      for (std::size_t h = 0; h < g && ok; ++h)
        ok = b.b_numerator(elems[cand], elems[choice[h]]) == a.b_numerator(gens[g], gens[h]);
      if (!ok) continue;
      std::uint64_t m = cand;
      for (long i = 1; i < ord && ok; ++i, m = add_elems(m, cand)) ok = !in_span[m];
      if (!ok) continue;
      std::vector<std::uint64_t> next;
      next.reserve(span.size() * static_cast<std::size_t>(ord));
      std::uint64_t shift = 0;
      for (long i = 0; i < ord; ++i, shift = add_elems(shift, cand))
        for (auto x : span) next.push_back(add_elems(x, shift));
      choice[g] = cand;
      if (assign(g + 1, next)) return true;
    }
    return false;
  };
  if (!assign(0, {0})) return result;
  result.isomorphic = true;
  for (std::size_t g = 0; g < k; ++g) result.images.push_back(elems[choice[g]]);
  return result;
}

bool verify_form_matches(const GramLattice& l, const std::vector<Integer>& orders, const RatMatrix& expected) {
  FiniteQuadraticForm target = form_from_matrix(orders, expected);
  return forms_isomorphic(discriminant_form(l), target).isomorphic;
}

}  // namespace k3lat
