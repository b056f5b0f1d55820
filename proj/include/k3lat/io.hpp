#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "k3lat/finite_form.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/models.hpp"

namespace k3lat {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json rational_json(const Rational& x);  // always a string "a/b" or "a"
Rational rational_from_json(const Json& j);

Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const QCensus& c);  // {"0": 35, "1": 28}

/** Lattice file: name, labels, Gram rows and optional rational glue vectors. */
struct LatticeDocument {
  std::string name;
  std::vector<std::string> labels;
  IntMatrix gram;
  std::vector<RatVector> glue;

  // The lattice described, with the glue applied when present.
  GramLattice resolve() const;
};

LatticeDocument document_of(const GramLattice& l, const std::vector<RatVector>& glue = {});
Json lattice_to_json(const LatticeDocument& doc);
LatticeDocument lattice_from_json(const Json& j);
std::string dump_lattice(const LatticeDocument& doc);  // two-space indent, trailing newline
LatticeDocument parse_lattice(const std::string& text);
LatticeDocument read_lattice_file(const std::string& path);
void write_lattice_file(const std::string& path, const LatticeDocument& doc);

// {"nvars": n, "terms": [[[e0,...], "a/b"], ...]}; a bare term list is also accepted.
Json polynomial_to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const Json& j);
ExactPolynomial read_polynomial_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace k3lat
