#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/kummer.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/** Connected Dynkin types, keyed "A3", "D9", "E8"; value is the multiplicity. */
struct RootSystem {
  std::map<std::string, int> components;
  std::vector<IntVector> positive_roots;  // lattice coordinates, one per sign pair
  std::vector<IntVector> simple_roots;

  std::size_t rank() const { return simple_roots.size(); }
  bool empty() const { return positive_roots.empty(); }
  // "D7+A2+6A1"; "0" for the empty system.
  std::string type_string() const;
};

RootSystem root_decomposition(const GramLattice& negative_definite);
// Same decomposition for a given set of positive roots, pairings taken in `l`.
RootSystem root_system_of(const GramLattice& l, std::vector<IntVector> positive_roots);

struct PolarizedNS {
  GramLattice ns;
  std::vector<std::pair<std::string, IntVector>> curves;
  IntVector candidate;
};

enum class AmpleStatus { AmpleUpToWeyl, BigNefWithRoots, IsotropicNefCandidate, NotPositive };
std::string to_string(AmpleStatus s);

struct AmplenessVerdict {
  AmpleStatus status = AmpleStatus::NotPositive;
  Integer square;
  std::vector<IntVector> roots;  // ns coordinates
  std::map<std::string, int> root_type;
  std::string root_type_string = "0";
  std::vector<std::string> contracted_curves;  // labeled curves orthogonal to the candidate
};

AmplenessVerdict ample_up_to_weyl(const PolarizedNS& p);

struct Ample3Row {
  long d = 0;
  int r = 0;
  Integer square;
  AmpleStatus status = AmpleStatus::NotPositive;
};
// D = H - (K_1 + ... + K_r) in K'_4d, first r points in lexicographic order.
std::vector<Ample3Row> ample3_boundary_sweep(long max_d, int max_r = 16);

struct EvenSetReport {
  std::size_t kernel_dim = 0;
  std::map<std::size_t, std::uint64_t> weights;
  std::vector<std::vector<std::size_t>> elements;  // curve index sets, nonzero kernel elements
};

EvenSetReport even_sets(const GramLattice& ns, const std::vector<IntVector>& curves);

struct LineBasisReport {
  bool is_basis = false;
  Integer determinant;
  std::vector<Integer> degrees;
  std::vector<Integer> self_intersections;
  bool all_minus_two = false;
  bool all_degree_one = false;
  Integer d_square;
};

LineBasisReport line_basis_check(const GramLattice& ns, const std::vector<IntVector>& classes, const IntVector& d);
// Rational input in lattice coordinates; every class must be integral.
LineBasisReport line_basis_check(const GramLattice& ns, const std::vector<RatVector>& classes, const IntVector& d);

struct FibrationReport {
  Integer f_square;
  bool isotropic = false;
  std::vector<Integer> section_degrees;
  std::vector<Integer> component_degrees;
  bool sections_ok = false;
  bool components_ok = false;
  IntVector z;                       // z.F = 1 used for the quotient model
  std::optional<GramLattice> fiber_lattice;  // {v in F-perp : v.z = 0}, negative definite
  RootSystem roots;
  std::vector<std::string> fiber_hints;  // A_{n-1} -> "I_n-compatible"
  bool ok() const { return isotropic && sections_ok && components_ok; }
};

FibrationReport fibration_check(const GramLattice& ns, const IntVector& f, const std::vector<IntVector>& sections,
                                const std::vector<IntVector>& components);

// A vector with z.F = 1: a signed unit vector when one works, else an extended-gcd combination.
IntVector unit_pairing_vector(const GramLattice& ns, const IntVector& f);

Rational shioda_tate_discriminant(const std::vector<Integer>& fiber_root_dets, const Integer& torsion_order);
// |det| of the root lattice of a Kodaira fiber: I_n -> n, I_n* -> 4, II* -> 1, III* -> 2, IV* -> 3,
// IV -> 3, III -> 2, I_1 / II / I_0 -> 1.
Integer kodaira_root_det(const std::string& fiber);

/** The three fibration examples built on <2k> + N + E8(-1) overlattices. */
struct ShiodaInoseExample {
  std::string name;
  NamedLattice named;  // ambient <Q^2> + <-2>^8 + E8(-1), labels Q, N1..N8, E1..E8
  IntVector fiber;
  std::size_t zero_section = 0;       // index into ns basis
  std::vector<IntVector> components;  // N_i and the E_j with F.E_j = 0
  std::string expected_roots;
  std::vector<std::string> fibers;    // Kodaira types of the reducible fibers
  int torsion = 1;
};
std::vector<ShiodaInoseExample> shioda_inose_examples();

enum class EnriquesShape { T, S, U };
EnriquesShape parse_enriques_shape(const std::string& s);
std::string to_string(EnriquesShape s);
IntMatrix enriques_q_gram(EnriquesShape shape, long param);

struct EnriquesCertificate {
  EnriquesShape shape = EnriquesShape::T;
  long param = 0;
  IntMatrix q_gram;
  std::vector<IntVector> e8_vectors;   // realize <-2> + Q in E8(-1)
  std::vector<IntVector> ambient_vectors;  // e, e+2f+b1, b2, b3 in U + E8(-2)
  IntMatrix induced_gram;
  IntMatrix expected_gram;  // U(2) + Q(2)
  std::vector<Integer> elementary_divisors;
  GramLattice complement;
  std::vector<IntVector> complement_roots;
  bool gram_ok = false;
  bool primitive = false;
  bool root_free = false;
  bool ok() const { return gram_ok && primitive && root_free; }
};

EnriquesCertificate enriques_embedding(EnriquesShape shape, long param);

struct LengthRow {
  Integer prime;
  std::size_t omega_length = 0;
  std::size_t target_length = 0;
  std::size_t min_surviving = 0;
  std::size_t max_reachable = 0;
  bool ok = false;
};

struct LengthReport {
  bool feasible = true;
  std::vector<LengthRow> rows;
};

// Length bounds for an overlattice of Omega + R with rank(R) = rank_r: per prime,
// l_p(Omega) - rank_r <= l_p(target) <= l_p(Omega) + rank_r.
LengthReport length_obstruction(std::size_t rank_r, const std::vector<Integer>& omega_orders,
                                const std::vector<Integer>& target_orders);
std::size_t p_length(const std::vector<Integer>& cyclic_orders, const Integer& p);

}  // namespace k3lat
