#include "k3lat/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "k3lat/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3lat {

long enumeration_guard() {
  if (const char* env = std::getenv("K3LAT_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100;
}

namespace {

using I64 = long long;
constexpr I64 kEntryLimit = I64(1) << 40;

struct SmallMatrix {
  std::size_t n = 0;
  std::vector<I64> a;
  I64& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  I64 operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

SmallMatrix to_small(const IntMatrix& m) {
  SmallMatrix s{m.rows(), std::vector<I64>(m.rows() * m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p() || abs(m(i, j).get_si()) >= kEntryLimit) throw GuardExceeded("Gram entries too large for enumeration");
      s(i, j) = m(i, j).get_si();
    }
  return s;
}

void check_entry(I64 x) {
  if (x >= kEntryLimit || x <= -kEntryLimit) throw GuardExceeded("entry growth during lattice reduction");
}

// Gram-Schmidt data from a Gram matrix, in doubles.
void gram_schmidt(const SmallMatrix& g, std::vector<double>& mu, std::vector<double>& bstar) {
  const std::size_t n = g.n;
  mu.assign(n * n, 0.0);
  bstar.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double s = static_cast<double>(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= mu[j * n + k] * mu[i * n + k] * bstar[k];
      mu[i * n + j] = s / bstar[j];
    }
    double s = static_cast<double>(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= mu[i * n + k] * mu[i * n + k] * bstar[k];
    bstar[i] = s;
  }
}

void lll_in_place(SmallMatrix& g, SmallMatrix& t) {
  const std::size_t n = g.n;
  if (n < 2) return;
  const double delta = 0.99;
  std::vector<double> mu, bstar;
  gram_schmidt(g, mu, bstar);
  std::size_t k = 1;
  std::size_t steps = 0;
  while (k < n) {
    if (++steps > 1000000) throw InternalError("lattice reduction did not terminate");
    for (std::size_t jj = k; jj-- > 0;) {
      I64 q = std::llround(mu[k * n + jj]);
      if (q == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        g(k, i) -= q * g(jj, i);
        check_entry(g(k, i));
      }
      for (std::size_t i = 0; i < n; ++i) {
        g(i, k) -= q * g(i, jj);
        check_entry(g(i, k));
      }
      for (std::size_t i = 0; i < n; ++i) {
        t(i, k) -= q * t(i, jj);
        check_entry(t(i, k));
      }
      gram_schmidt(g, mu, bstar);
    }
    double m = mu[k * n + k - 1];
    if (bstar[k] >= (delta - m * m) * bstar[k - 1]) {
      ++k;
    } else {
      for (std::size_t i = 0; i < n; ++i) std::swap(g(k, i), g(k - 1, i));
      for (std::size_t i = 0; i < n; ++i) std::swap(g(i, k), g(i, k - 1));
      for (std::size_t i = 0; i < n; ++i) std::swap(t(i, k), t(i, k - 1));
      gram_schmidt(g, mu, bstar);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

struct Enumerator {
  const SmallMatrix& g;  // reduced positive definite Gram
  std::size_t n;
  I64 target;
  std::vector<double> q;    // q[i*n+j]: upper triangular coefficients, q[i*n+i] diagonal weights
  double bound;

  Enumerator(const SmallMatrix& gram, I64 target_norm) : g(gram), n(gram.n), target(target_norm) {
    // Cholesky in the form Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    std::vector<double> c(n * n);
    for (std::size_t i = 0; i < n * n; ++i) c[i] = static_cast<double>(g.a[i]);
    q.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double d = c[i * n + i];
      for (std::size_t k = 0; k < i; ++k) d -= q[k * n + i] * q[k * n + i] * q[k * n + k];
      if (!(d > 0)) throw NotDefiniteError("lattice is not negative definite");
      q[i * n + i] = d;
      for (std::size_t j = i + 1; j < n; ++j) {
        double s = c[i * n + j];
        for (std::size_t k = 0; k < i; ++k) s -= q[k * n + i] * q[k * n + j] * q[k * n + k];
        q[i * n + j] = s / d;
      }
    }
    bound = static_cast<double>(target) * (1.0 + 1e-9) + 1e-6;
  }

  I64 exact_norm(const std::vector<I64>& x) const {
    I64 s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      I64 row = 0;
      for (std::size_t j = 0; j < n; ++j) row += g(i, j) * x[j];
      s += x[i] * row;
    }
    return s;
  }

  // Candidate interval for level i given the coordinates above it.
  bool interval(std::size_t i, const std::vector<I64>& x, double used, bool higher_zero, I64& lo, I64& hi) const {
    double center = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i * n + j] * static_cast<double>(x[j]);
    double rem = bound - used;
    if (rem < 0) return false;
    double r = std::sqrt(rem / q[i * n + i]);
    lo = static_cast<I64>(std::ceil(center - r - 1e-9));
    hi = static_cast<I64>(std::floor(center + r + 1e-9));
    if (higher_zero) lo = std::max<I64>(lo, 0);
    return lo <= hi;
  }

  double contribution(std::size_t i, const std::vector<I64>& x) const {
    double t = static_cast<double>(x[i]);
    for (std::size_t j = i + 1; j < n; ++j) t += q[i * n + j] * static_cast<double>(x[j]);
    return q[i * n + i] * t * t;
  }

  void search(std::size_t level, std::vector<I64>& x, double used, bool higher_zero,
              std::vector<std::vector<I64>>& found) const {
    I64 lo, hi;
    if (!interval(level, x, used, higher_zero, lo, hi)) return;
    for (I64 v = lo; v <= hi; ++v) {
      x[level] = v;
      double u = used + contribution(level, x);
      if (u > bound) continue;
      bool zero = higher_zero && v == 0;
      if (level == 0) {
        if (!zero && exact_norm(x) == target) found.push_back(x);
      } else {
        search(level - 1, x, u, zero, found);
      }
    }
    x[level] = 0;
  }
};

struct Prepared {
  SmallMatrix reduced;
  SmallMatrix transform;
};

Prepared prepare(const GramLattice& l, long norm, long guard) {
  if (norm >= 0) throw UsageError("enumeration norm must be negative");
  if (-norm > guard)
    throw GuardExceeded("|norm| " + std::to_string(-norm) + " exceeds enumeration guard " + std::to_string(guard) +
                        " (raise K3LAT_GUARD)");
  Signature sig = l.signature();
  if (sig.positive != 0) throw NotDefiniteError("lattice is not negative definite");
  IntMatrix neg = l.gram().scaled(Integer(-1));
  Prepared p{to_small(neg), SmallMatrix{l.rank(), std::vector<I64>(l.rank() * l.rank(), 0)}};
  for (std::size_t i = 0; i < l.rank(); ++i) p.transform(i, i) = 1;
  lll_in_place(p.reduced, p.transform);
  return p;
}

std::vector<IntVector> finish(const Prepared& p, std::vector<std::vector<I64>>& found) {
  const std::size_t n = p.reduced.n;
  std::vector<IntVector> out;
  out.reserve(found.size());
  for (const auto& x : found) {
    IntVector v(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] != 0) s += Integer(static_cast<long>(p.transform(i, j))) * static_cast<long>(x[j]);
      v[i] = s;
    }
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
    if (first != v.end() && *first < 0)
      for (auto& c : v) c = -c;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IntMatrix lll_reduce_gram(const IntMatrix& positive_gram) {
  SmallMatrix g = to_small(positive_gram);
  SmallMatrix t{g.n, std::vector<I64>(g.n * g.n, 0)};
  for (std::size_t i = 0; i < g.n; ++i) t(i, i) = 1;
  lll_in_place(g, t);
  IntMatrix out(g.n, g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) out(i, j) = static_cast<long>(t(i, j));
  return out;
}

std::vector<IntVector> enumerate_vectors_serial(const GramLattice& l, long norm) {
  Prepared p = prepare(l, norm, enumeration_guard());
  if (l.rank() == 0) return {};
  Enumerator e(p.reduced, -norm);
  std::vector<std::vector<I64>> found;
  std::vector<I64> x(l.rank(), 0);
  e.search(l.rank() - 1, x, 0.0, true, found);
  return finish(p, found);
}

std::vector<IntVector> enumerate_vectors(const GramLattice& l, long norm, const EnumerationOptions& opts) {
  long guard = opts.guard > 0 ? opts.guard : enumeration_guard();
  Prepared p = prepare(l, norm, guard);
  const std::size_t n = l.rank();
  if (n == 0) return {};
  Enumerator e(p.reduced, -norm);
  if (!opts.parallel || n < 3) {
    std::vector<std::vector<I64>> found;
    std::vector<I64> x(n, 0);
    e.search(n - 1, x, 0.0, true, found);
    return finish(p, found);
  }
  // Prefixes fixing the two top coordinates; each is an independent subtree.
  struct Prefix {
    I64 top, next;
    double used;
    bool zero;
  };
  std::vector<Prefix> prefixes;
  {
    std::vector<I64> x(n, 0);
    I64 lo, hi;
    if (e.interval(n - 1, x, 0.0, true, lo, hi)) {
      for (I64 a = lo; a <= hi; ++a) {
        x[n - 1] = a;
        double u1 = e.contribution(n - 1, x);
        if (u1 > e.bound) continue;
        I64 lo2, hi2;
        if (!e.interval(n - 2, x, u1, a == 0, lo2, hi2)) continue;
        for (I64 b = lo2; b <= hi2; ++b) {
          x[n - 2] = b;
          double u2 = u1 + e.contribution(n - 2, x);
          if (u2 <= e.bound) prefixes.push_back({a, b, u2, a == 0 && b == 0});
        }
        x[n - 2] = 0;
      }
    }
  }
  std::vector<std::vector<std::vector<I64>>> per_prefix(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    std::vector<I64> x(n, 0);
    x[n - 1] = prefixes[k].top;
    x[n - 2] = prefixes[k].next;
    e.search(n - 3, x, prefixes[k].used, prefixes[k].zero, per_prefix[k]);
  }
  std::vector<std::vector<I64>> found;
  for (auto& f : per_prefix) found.insert(found.end(), f.begin(), f.end());
  return finish(p, found);
}

}  // namespace k3lat
