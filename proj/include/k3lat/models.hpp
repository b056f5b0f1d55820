#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

using Exponents = std::vector<unsigned>;

// Graded lex with x0 > x1 > ...; larger terms first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/** Polynomial with rational coefficients; zero coefficients are never stored. */
class ExactPolynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit ExactPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static ExactPolynomial constant(std::size_t nvars, const Rational& c);
  static ExactPolynomial variable(std::size_t nvars, std::size_t i);
  static ExactPolynomial monomial(const Exponents& e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  ExactPolynomial operator+(const ExactPolynomial& o) const;
  ExactPolynomial operator-(const ExactPolynomial& o) const;
  ExactPolynomial operator*(const ExactPolynomial& o) const;
  ExactPolynomial operator*(const Rational& c) const;
  ExactPolynomial operator-() const { return *this * Rational(-1); }
  bool operator==(const ExactPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const ExactPolynomial& o) const { return !(*this == o); }
  ExactPolynomial pow(unsigned k) const;

  Rational evaluate(const RatVector& point) const;
  ExactPolynomial derivative(std::size_t i) const;
  // Replace x_i by subs[i]; all substitutes share one variable count.
  ExactPolynomial compose(const std::vector<ExactPolynomial>& subs) const;

 private:
  void check_same(const ExactPolynomial& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

std::string to_string(const ExactPolynomial& p);
std::string term_string(const Exponents& e, const Rational& c);

/** Linear change of variables x -> M x; here always signed permutations. */
struct ProjectiveTransform {
  RatMatrix matrix;
  static ProjectiveTransform from_matrix(const RatMatrix& m);  // checks square and invertible
  static ProjectiveTransform signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& signs);
  std::size_t dimension() const { return matrix.rows(); }
};

// p(M x)
ExactPolynomial substitute(const ExactPolynomial& p, const ProjectiveTransform& t);

constexpr int kInvariantDegreeGuard = 8;
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);
// Basis of polynomials of the given degree fixed by every generator.
std::vector<ExactPolynomial> invariant_space(std::size_t nvars, const std::vector<ProjectiveTransform>& gens,
                                             int degree);
// True when every polynomial of `polys` lies in the span of `basis` and the spans agree.
bool same_span(const std::vector<ExactPolynomial>& basis, const std::vector<ExactPolynomial>& polys);

// The four sign/permutation generators acting on P^3 and the invariant quartics p0..p4.
std::vector<ProjectiveTransform> heisenberg_generators();
std::vector<ExactPolynomial> heisenberg_quartics();
ExactPolynomial invariant_quartic(const std::vector<Rational>& a);  // a0 p0 + ... + a4 p4

// The degree-4 relation in five variables P0..P4 with the leading coefficient exposed for fault tests.
ExactPolynomial igusa_relation(const Rational& leading = 16);

struct IgusaReport {
  bool identically_zero = false;
  int composed_degree = 0;  // degree of the relation after substitution, if nonzero
  std::size_t nonzero_terms = 0;
  std::string witness;       // first nonzero term in grlex order
  Rational spot_value;       // relation evaluated at the p_i of (1,2,3,5)
};

IgusaReport igusa_relation_check(const Rational& leading = 16);

struct EvenSignReport {
  bool squares_invariant = false;
  bool product_invariant = false;
  std::size_t degree2_dimension = 0;
  bool degree2_is_squares = false;
  bool relation_zero = false;  // t^2 - prod y_i after t = prod z_i, y_i = z_i^2
  int product_degree = 0;
  bool ok() const { return squares_invariant && product_invariant && degree2_dimension == 6 && degree2_is_squares && relation_zero; }
};

std::vector<ProjectiveTransform> even_sign_generators(std::size_t nvars = 6);
EvenSignReport even_sign_invariants_check();

RatVector gradient_at(const ExactPolynomial& p, const RatVector& point);

// sum s_i^k z_i^2 for k = 0, 1, 2 at explicit distinct rational s.
std::vector<ExactPolynomial> genus2_quadrics(const std::vector<Rational>& s);

}  // namespace k3lat
