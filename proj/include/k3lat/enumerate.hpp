#pragma once

#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

struct EnumerationOptions {
  long guard = 0;        // 0: use K3LAT_GUARD or the default of 100
  bool parallel = true;  // split the search tree across OpenMP threads
};

long enumeration_guard();

/**
 * All vectors of the given (negative) norm in a negative definite lattice, one per
 * sign pair, first nonzero coordinate positive, sorted lexicographically.
 */
std::vector<IntVector> enumerate_vectors(const GramLattice& l, long norm, const EnumerationOptions& opts = {});
std::vector<IntVector> enumerate_vectors_serial(const GramLattice& l, long norm);

// Unimodular T (columns) with T^t G T LLL-reduced, for positive definite G.
IntMatrix lll_reduce_gram(const IntMatrix& positive_gram);

}  // namespace k3lat
