#pragma once

#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/** Integer linear map; columns are images of source basis vectors. Not an isometry in general. */
struct LatticeMap {
  IntMatrix matrix;  // target.rank() x source.rank()
  GramLattice source;
  GramLattice target;

  IntVector operator()(const IntVector& x) const { return matrix * x; }
};

/**
 * Cover side: k_1..k_16 (<-2>), e1 f1 e2 f2 e3 f3 (U(2)^3), n_{i,j} (<-1>, i = 1..15, j = 1..8).
 * Quotient side: k (<-2>), e1 f1 e2 f2 e3 f3 (U(32)^3), m_1..m_15 (<-2>).
 */
GramLattice quotient_cover_lattice();
GramLattice quotient_base_lattice();

struct QuotientMaps {
  LatticeMap push;  // cover -> quotient
  LatticeMap pull;  // quotient -> cover
};

QuotientMaps build_quotient_maps();

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first offending basis pair, empty on success
};

struct QuotientReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

QuotientReport verify_quotient_identities(const QuotientMaps& maps);

struct ChainStep {
  std::string name;
  Integer sub_det;    // |det| of the smaller lattice
  Integer super_det;  // |det| of the larger lattice
  Integer index;
  bool consistent = false;  // sub_det == super_det * index^2
};

struct ChainReport {
  std::vector<ChainStep> steps;
  Integer total_index;      // R inside the unimodular K3 lattice
  int total_exponent = 0;   // log2 of total_index
  bool quarter_classes_generate = false;  // e_i/4, f_i/4 alone give the first step
  bool closes = false;      // first step * second step == total
};

ChainReport overlattice_chain_check();

}  // namespace k3lat
