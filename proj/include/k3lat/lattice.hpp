#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool operator==(const Signature&) const = default;
};

struct LatticeInvariants {
  std::size_t rank = 0;
  Signature signature;
  Integer determinant;
  bool is_even = false;

  Integer abs_determinant() const { return abs(determinant); }
};

/** Integral lattice given by a symmetric Gram matrix and labeled basis. */
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMatrix gram, std::vector<std::string> labels = {}, std::string name = {});

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.rows(); }
  bool is_even() const;

  std::optional<std::size_t> index_of(const std::string& label) const;
  IntVector basis_vector(std::size_t i) const;
  IntVector basis_vector(const std::string& label) const;

  Integer pairing(const IntVector& u, const IntVector& v) const;
  Rational pairing(const RatVector& u, const RatVector& v) const;
  Integer norm(const IntVector& u) const { return pairing(u, u); }
  Rational norm(const RatVector& u) const { return pairing(u, u); }
  // gram * v, the functional x -> (x, v).
  IntVector dual_coords(const IntVector& v) const;
  RatVector dual_coords(const RatVector& v) const;

  Integer determinant() const;
  Signature signature() const;
  LatticeInvariants invariants() const;

  GramLattice renamed(std::string name) const;
  GramLattice relabeled(std::vector<std::string> labels) const;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
  std::string name_;
};

/** Columns of `basis` express the sublattice basis in ambient coordinates. */
struct Embedding {
  IntMatrix basis;
  GramLattice sub;
};

Embedding make_embedding(const GramLattice& ambient, const IntMatrix& basis, std::string name = {});

struct SmithForm {
  IntMatrix U, D, V;  // U * M * V = D
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // nonzero diagonal of D
};

SmithForm smith_normal_form(const IntMatrix& m);

// Canonical (Hermite) basis of the row span; zero rows dropped.
IntMatrix hermite_row_basis(const IntMatrix& rows);
// Basis of the integer right kernel of m, as columns, in Hermite normalization.
IntMatrix integer_kernel(const IntMatrix& m);

struct DiscriminantGroup {
  std::vector<Integer> orders;  // nontrivial elementary divisors
  std::vector<RatVector> lifts;  // generator lifts in L^dual, lattice coordinates
  IntMatrix coordinate_map;     // rows of U for the nontrivial divisors
  Integer order() const;
  // Coordinates of a dual element on the generators, reduced modulo orders.
  IntVector coordinates(const GramLattice& l, const RatVector& dual_element) const;
};

DiscriminantGroup discriminant_group(const GramLattice& l);

Embedding orthogonal_complement(const GramLattice& ambient, const IntMatrix& sub_basis,
                                std::string name = {});

struct Saturation {
  Embedding closure;
  Integer index;
};

Saturation saturation(const GramLattice& ambient, const IntMatrix& sub_basis, std::string name = {});
bool is_primitive(const IntMatrix& sub_basis);

struct Overlattice {
  GramLattice lattice;
  RatMatrix basis;  // columns: new basis vectors in old coordinates
  Integer index;

  // Coordinates of an old-coordinate rational vector in the new basis, if it lies in the lattice.
  std::optional<IntVector> coordinates_of(const RatVector& old_coords) const;
  RatVector to_old(const IntVector& new_coords) const;
};

// Glue vectors are in L-coordinates. Validates integrality and evenness.
Overlattice overlattice(const GramLattice& l, const std::vector<RatVector>& glue, std::string name = {});
// Same lattice as overlattice(l, glue) but expressed in a caller-chosen basis, checked to span it.
Overlattice overlattice_in_basis(const GramLattice& l, const std::vector<RatVector>& glue,
                                 const std::vector<RatVector>& basis, std::vector<std::string> labels,
                                 std::string name = {});

// Canonical invariant-factor form of a finite abelian group given by cyclic orders.
std::vector<Integer> invariant_factors(const std::vector<Integer>& cyclic_orders);

// Standard lattices.
GramLattice hyperbolic_plane(long scale = 1);
GramLattice diagonal_lattice(const std::vector<long>& entries, const std::string& label_prefix = "x");
GramLattice root_lattice_a(std::size_t k);
GramLattice root_lattice_d(std::size_t k);
GramLattice root_lattice_e8();
GramLattice direct_sum(const std::vector<GramLattice>& parts, std::string name = {});
GramLattice rescale(const GramLattice& l, long factor);
// Names: U, U(n), <m>, A<k>(-1), D<k>(-1), E8(-1); direct sums joined with '+', powers as X^k.
GramLattice standard_lattice(const std::string& spec);

}  // namespace k3lat
