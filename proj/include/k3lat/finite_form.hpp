#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Canonical representatives: q in [0,2), b in [0,1).
Rational mod2(const Rational& x);
Rational mod1(const Rational& x);

/**
 * Finite quadratic form on a product of cyclic groups. The value matrix holds
 * q of each generator on the diagonal (mod 2) and b between generators off it (mod 1).
 */
class FiniteQuadraticForm {
 public:
  using Element = std::vector<long>;

  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(std::vector<Integer> orders, RatMatrix values, std::vector<RatVector> lifts = {});

  std::size_t generator_count() const { return orders_.size(); }
  const std::vector<Integer>& orders() const { return orders_; }
  const RatMatrix& values() const { return values_; }
  const std::vector<RatVector>& lifts() const { return lifts_; }
  Integer order() const;
  long exponent() const { return exponent_; }

  // Elements are indexed in mixed radix, last generator fastest.
  std::uint64_t size() const;
  Element element(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;
  long element_order(const Element& e) const;

  Rational q(const Element& e) const;
  Rational b(const Element& x, const Element& y) const;
  // Numerators over the exponent: q = q_numerator / exponent, reduced mod 2*exponent.
  long q_numerator(const Element& e) const;
  long b_numerator(const Element& x, const Element& y) const;

  FiniteQuadraticForm negated() const;
  FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& other) const;

 private:
  std::vector<Integer> orders_;
  RatMatrix values_;
  std::vector<RatVector> lifts_;
  std::vector<long> small_orders_;
  long exponent_ = 1;
  std::vector<long> qnum_;  // per generator, mod 2*exponent
  std::vector<long> bnum_;  // per generator pair, mod exponent
};

FiniteQuadraticForm discriminant_form(const GramLattice& l);
// b mod 1 on the discriminant group generators; works for odd lattices too.
RatMatrix discriminant_bilinear_values(const GramLattice& l);

// Diagonal entries are q values, off-diagonal b values.
FiniteQuadraticForm form_from_matrix(const std::vector<Integer>& orders, const RatMatrix& values);

// q value -> number of nonzero elements with that value.
using QCensus = std::map<Rational, std::uint64_t>;
QCensus q_census(const FiniteQuadraticForm& f);
QCensus q_census_serial(const FiniteQuadraticForm& f);
constexpr std::uint64_t kCensusGuard = std::uint64_t(1) << 20;
constexpr std::uint64_t kIsomorphismGuard = std::uint64_t(1) << 10;

struct FormIsomorphism {
  bool isomorphic = false;
  std::vector<FiniteQuadraticForm::Element> images;  // image of each generator of the first form
};

FormIsomorphism forms_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);
bool verify_form_matches(const GramLattice& l, const std::vector<Integer>& orders, const RatMatrix& expected);

}  // namespace k3lat
