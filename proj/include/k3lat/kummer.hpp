#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "k3lat/f2.hpp"
#include "k3lat/finite_form.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/**
 * A lattice realized inside a rational span of a simple ambient lattice
 * (orthogonal sums of <-2>, <n> and U(n)) so that named classes such as K_p or H
 * keep their meaning. model.basis expresses the chosen basis in ambient coordinates.
 */
struct NamedLattice {
  GramLattice ambient;
  Overlattice model;

  const GramLattice& lattice() const { return model.lattice; }
  RatVector ambient_class(const std::string& label) const;
  // Ambient vector -> lattice coordinates; throws when the class is not in the lattice.
  IntVector coords(const RatVector& ambient_vector) const;
  bool contains(const RatVector& ambient_vector) const;
  IntVector class_coords(const std::string& label) const { return coords(ambient_class(label)); }
  // Half sum of the ambient classes named prefix + point label over a point set.
  RatVector half_sum(const std::string& prefix, const PointSet& pts) const;
  RatVector sum_of(const std::string& prefix, const PointSet& pts) const;
};

std::string curve_label(const std::string& prefix, F2Point p);

std::vector<RatVector> kummer_glue();  // over the 16 coordinates K_p
NamedLattice kummer_lattice();
NamedLattice kummer_lattice_with_glue(const std::vector<RatVector>& glue);
NamedLattice nikulin_lattice();

NamedLattice mg_lattice();            // overlattice of <-2>^15 by hyperplanes {a_i = 1}
Embedding mg_as_complement_in_kummer();  // K_0000-perp inside K, in K coordinates

struct MgComparison {
  bool isometric = false;
  IntMatrix witness;  // columns: basis of the complement model written in the overlattice basis
};
MgComparison compare_mg_constructions();

PointSet v4d_support(long d);
NamedLattice k4d_prime(long d);

// Support size -> number of classes (H - sum_J K_p)/2 in K'_4d.
std::map<std::size_t, std::uint64_t> divisible_class_census(long d);
std::vector<PointSet> divisible_class_supports(long d);

// The five discriminant generators listed for K'_4d; true when they generate the group.
bool k4d_discriminant_generators_ok(long d);

struct K4dUniqueness {
  std::size_t glue_classes = 0;      // admissible order-2 glue choices
  std::size_t isomorphic_forms = 0;  // of those, disc form isomorphic to K'_4d's
  bool all_same_det = true;
};
K4dUniqueness k4d_uniqueness_check(long d);

enum class NsyCase { Auto, I, II, III, IV, V };
PointSet nsy_support(long d, NsyCase c);
NsyCase nsy_resolve_case(long d, NsyCase requested);
std::string to_string(NsyCase c);
NamedLattice nsy_lattice(long d, NsyCase c = NsyCase::Auto);
// The stated discriminant form of the case iv lattice: q2 + q2 + [[0,1/2],[1/2,(-d-1)/2d]] on (Z/2)^5 + Z/2d.
FiniteQuadraticForm nsy_case_iv_expected_form(long d);

struct MgOrbit {
  std::string tag;
  PointSet representative;  // support of the half-sum representative
  Rational q;
  std::uint64_t count = 0;  // elements of the discriminant group in this class
};
std::vector<MgOrbit> mg_discriminant_orbits();

NamedLattice k3_lattice_glued();
std::vector<RatVector> k3_glue_vectors();

struct OmegaData {
  NamedLattice k4d;
  Embedding omega;      // in K'_4d coordinates
  Embedding l_lattice;  // complement of the half sum of all K_p
  IntVector w1;         // H, generator of the complement of omega in l_lattice
  Integer w1_index;     // index of Z w1 + omega in l_lattice
};
OmegaData omega_g(long d);

enum class TFamily { Kummer, XCase1, XCase2, XCase3, Y };
TFamily parse_tfamily(const std::string& name);
std::string to_string(TFamily f);
GramLattice transcendental_lattice(TFamily f, long param);

// Standard copies used by cross-checks.
GramLattice omega_perp_lattice();  // <-8> + U(2)^3
GramLattice w_vector_complement(TFamily f, long param);  // w_i-perp inside <-8> + U(2)^3

}  // namespace k3lat
