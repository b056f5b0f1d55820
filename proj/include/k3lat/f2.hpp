#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

/** Point of F_2^4 stored as a1a2a3a4 with a1 the most significant bit; index order is lexicographic. */
using F2Point = unsigned;

constexpr unsigned kF2Points = 16;

int f2_coord(F2Point p, int i);  // i in 1..4
F2Point f2_point(int a1, int a2, int a3, int a4);
F2Point f2_parse(const std::string& bits);
std::string f2_label(F2Point p);
int f2_dot(F2Point a, F2Point b);
F2Point f2_unit(int i);  // alpha_i

using PointSet = std::vector<F2Point>;  // sorted, no repeats

/** Solution set of affine equations alpha.x = eps over F_2^4. */
struct AffineSubspace {
  std::vector<std::pair<F2Point, int>> equations;
  PointSet points() const;
  std::size_t dimension() const;
};

PointSet hyperplane(F2Point alpha, int eps);
std::vector<PointSet> all_affine_hyperplanes();  // 30
std::vector<PointSet> all_affine_planes();       // 140
PointSet affine_span(F2Point base, const std::vector<F2Point>& directions);
PointSet plane_v(int i, int j);  // V_{i,j} = {0, alpha_i, alpha_j, alpha_i + alpha_j}
PointSet symmetric_difference(const PointSet& a, const PointSet& b);
PointSet complement_of(const PointSet& a);
PointSet nonzero_points();
std::string to_string(const PointSet& s);

/** Dense matrix over GF(2) with small dimensions. */
struct Gf2Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> a;
  Gf2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint8_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Basis of {x : M x = 0} over GF(2).
std::vector<std::vector<std::uint8_t>> gf2_kernel(const Gf2Matrix& m);
// One solution of M x = b, if any.
bool gf2_solve(const Gf2Matrix& m, const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x);
std::size_t gf2_rank(const Gf2Matrix& m);

}  // namespace k3lat
