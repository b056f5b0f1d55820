#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/** <-2p> + U + U with coordinates (a0, a1, a2, a3, a4); U pairs are (a1,a2) and (a3,a4). */
GramLattice t2p_lattice(long p);
GramLattice a2d_lattice(long d);  // <-2d> + U, coordinates (a, b, c)

struct UUReduction {
  Integer d, de;      // image (d, de, 0, 0); de = d * e
  IntMatrix witness;  // 4x4 isometry of U+U sending the input to the image
};
UUReduction uu_reduce(const IntVector& v4);

// Reflection in an anisotropic axis; throws when the image is not integral.
IntVector reflect(const GramLattice& l, const IntVector& axis, const IntVector& w);
IntMatrix reflection_matrix(const GramLattice& l, const IntVector& axis);

struct A2dReduction {
  IntVector result;   // (j, w, s); j = 0 for the (a, 1, c) pattern
  IntMatrix witness;  // 3x3 isometry of <-2d> + U
  std::size_t steps = 0;
};
A2dReduction reduce_a2d(long d, const IntVector& v3);

struct NormalFormClass {
  std::string tag;                          // v0, v1, v2, vp, v2p
  std::map<std::string, Integer> params;    // r | s | l,t | j,u
  std::vector<std::string> aliases;         // vp / w1 / w2 / w3 names for p = 2
  IntVector representative;
  IntMatrix witness;                        // 5x5, witness * input = representative
  std::size_t reduction_steps = 0;
};

// Representative vector for a tag and parameters (no range checks beyond shape).
IntVector normal_form_vector(long p, const std::string& tag, const std::map<std::string, Integer>& params);

constexpr std::size_t kOrbitLoopGuard = 1000000;
NormalFormClass classify_t2p(long p, const IntVector& v);

struct OrbitInvariants {
  Integer norm;
  Integer det_complement;
  GramLattice complement;
};
OrbitInvariants orbit_invariants(long p, const IntVector& v);
// Table value of d(v-perp) for a classified vector.
Integer expected_complement_det(long p, const NormalFormClass& c);

// Random word in the generators of O(T_2p) used as a test oracle.
IntMatrix random_isometry(long p, std::uint64_t seed, std::size_t word_length = 12);
bool is_isometry(const GramLattice& l, const IntMatrix& m);

bool is_prime(long p);

}  // namespace k3lat

namespace k3lat {

struct SweepCollision {
  long p;
  Integer norm, det;
  std::string tag_a, tag_b;
  std::map<std::string, Integer> params_a, params_b;
};
struct DisjointnessSweep {
  std::size_t vectors = 0;
  std::vector<SweepCollision> collisions;
};
// All normal forms for primes p <= max_p with |r|, |s|, |t|, |u| <= max_param (isotropic ones skipped);
// (norm, det of complement) computed from the complement lattice.
DisjointnessSweep orbit_disjointness_sweep(long max_p, long max_param);

}  // namespace k3lat
