#include "k3lat/f2.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "k3lat/errors.hpp"

namespace k3lat {

int f2_coord(F2Point p, int i) {
  if (i < 1 || i > 4) throw UsageError("F2 coordinate index must be 1..4");
  return static_cast<int>((p >> (4 - i)) & 1u);
}

F2Point f2_point(int a1, int a2, int a3, int a4) {
  return static_cast<F2Point>(((a1 & 1) << 3) | ((a2 & 1) << 2) | ((a3 & 1) << 1) | (a4 & 1));
}

F2Point f2_parse(const std::string& bits) {
  if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
    throw UsageError("bad F2^4 point '" + bits + "'");
  return f2_point(bits[0] - '0', bits[1] - '0', bits[2] - '0', bits[3] - '0');
}

std::string f2_label(F2Point p) {
  std::string s(4, '0');
  for (int i = 1; i <= 4; ++i) s[i - 1] = static_cast<char>('0' + f2_coord(p, i));
  return s;
}

int f2_dot(F2Point a, F2Point b) { return std::popcount(a & b) & 1; }

F2Point f2_unit(int i) { return 1u << (4 - i); }

PointSet AffineSubspace::points() const {
  PointSet out;
  for (F2Point p = 0; p < kF2Points; ++p) {
    bool ok = true;
    for (const auto& [alpha, eps] : equations) ok = ok && f2_dot(alpha, p) == (eps & 1);
    if (ok) out.push_back(p);
  }
  return out;
}

std::size_t AffineSubspace::dimension() const {
  auto pts = points();
  if (pts.empty()) throw UsageError("empty affine subspace");
  return static_cast<std::size_t>(std::countr_zero(pts.size()));
}

PointSet hyperplane(F2Point alpha, int eps) { return AffineSubspace{{{alpha, eps}}}.points(); }

std::vector<PointSet> all_affine_hyperplanes() {
  std::vector<PointSet> out;
  for (F2Point alpha = 1; alpha < kF2Points; ++alpha)
    for (int eps = 0; eps < 2; ++eps) out.push_back(hyperplane(alpha, eps));
  return out;
}

PointSet affine_span(F2Point base, const std::vector<F2Point>& directions) {
  std::set<F2Point> pts{base};
  for (F2Point d : directions) {
    std::set<F2Point> more = pts;
    for (F2Point p : pts) more.insert(p ^ d);
    pts = more;
  }
  return PointSet(pts.begin(), pts.end());
}

std::vector<PointSet> all_affine_planes() {
  std::set<PointSet> planes;
  for (F2Point base = 0; base < kF2Points; ++base)
    for (F2Point u = 1; u < kF2Points; ++u)
      for (F2Point v = u + 1; v < kF2Points; ++v) {
        auto s = affine_span(base, {u, v});
        if (s.size() == 4) planes.insert(s);
      }
  return std::vector<PointSet>(planes.begin(), planes.end());
}

PointSet plane_v(int i, int j) { return affine_span(0, {f2_unit(i), f2_unit(j)}); }

PointSet symmetric_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet complement_of(const PointSet& a) {
  PointSet out;
  for (F2Point p = 0; p < kF2Points; ++p)
    if (!std::binary_search(a.begin(), a.end(), p)) out.push_back(p);
  return out;
}

PointSet nonzero_points() {
  PointSet out;
  for (F2Point p = 1; p < kF2Points; ++p) out.push_back(p);
  return out;
}

std::string to_string(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + f2_label(s[i]);
  return out + "}";
}

namespace {

// Row reduce [m | b]; returns pivot columns.
std::vector<std::size_t> gf2_reduce(Gf2Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && !m(p, c)) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < m.rows; ++i)
      if (i != r && m(i, c))
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) ^= m(r, j);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> gf2_kernel(const Gf2Matrix& m0) {
  Gf2Matrix m = m0;
  auto pivots = gf2_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool gf2_solve(const Gf2Matrix& m0, const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x) {
  if (b.size() != m0.rows) throw DimensionError("gf2_solve: shape mismatch");
  Gf2Matrix m(m0.rows, m0.cols + 1);
  for (std::size_t i = 0; i < m0.rows; ++i) {
    for (std::size_t j = 0; j < m0.cols; ++j) m(i, j) = m0(i, j);
    m(i, m0.cols) = b[i] & 1;
  }
  auto pivots = gf2_reduce(m);
  if (!pivots.empty() && pivots.back() == m0.cols) return false;
  x.assign(m0.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, m0.cols);
  return true;
}

std::size_t gf2_rank(const Gf2Matrix& m0) {
  Gf2Matrix m = m0;
  return gf2_reduce(m).size();
}

}  // namespace k3lat
