#include "k3lat/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "k3lat/errors.hpp"

namespace k3lat {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw UsageError("not an integer: " + j.get<std::string>());
    return out;
  }
  throw UsageError("expected an integer, got " + j.dump());
}

Json rational_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  throw UsageError("expected a rational string, got " + j.dump());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const QCensus& c) {
  Json o = Json::object();
  for (const auto& [q, n] : c) o[to_string(q)] = n;
  return o;
}

GramLattice LatticeDocument::resolve() const {
  GramLattice base(gram, labels, name);
  if (glue.empty()) return base;
  return overlattice(base, glue, name).lattice;
}

LatticeDocument document_of(const GramLattice& l, const std::vector<RatVector>& glue) {
  return {l.name(), l.labels(), l.gram(), glue};
}

Json lattice_to_json(const LatticeDocument& doc) {
  Json j;
  j["name"] = doc.name;
  j["labels"] = doc.labels;
  j["gram"] = to_json(doc.gram);
  if (!doc.glue.empty()) {
    Json g = Json::array();
    for (const auto& v : doc.glue) g.push_back(to_json(v));
    j["glue"] = g;
  }
  return j;
}

LatticeDocument lattice_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("lattice document must be a JSON object");
  if (!j.contains("gram")) throw UsageError("lattice document has no \"gram\" field");
  LatticeDocument doc;
  doc.name = j.value("name", std::string());
  const Json& rows = j.at("gram");
  if (!rows.is_array()) throw UsageError("\"gram\" must be an array of rows");
  const std::size_t n = rows.size();
  doc.gram = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw DimensionError("\"gram\" must be square");
    for (std::size_t k = 0; k < n; ++k) doc.gram(i, k) = integer_from_json(rows[i][k]);
  }
  if (!doc.gram.is_symmetric()) throw UsageError("\"gram\" is not symmetric");
  if (j.contains("labels")) {
    doc.labels = j.at("labels").get<std::vector<std::string>>();
    if (doc.labels.size() != n) throw DimensionError("one label per basis vector is required");
  }
  if (j.contains("glue")) {
    for (const auto& g : j.at("glue")) {
      if (!g.is_array() || g.size() != n) throw DimensionError("glue vectors must have one entry per basis vector");
      RatVector v;
      for (const auto& x : g) v.push_back(rational_from_json(x));
      doc.glue.push_back(v);
    }
  }
  return doc;
}

std::string dump_lattice(const LatticeDocument& doc) { return lattice_to_json(doc).dump(2) + "\n"; }

LatticeDocument parse_lattice(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed lattice JSON: ") + e.what());
  }
  return lattice_from_json(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LatticeDocument read_lattice_file(const std::string& path) { return parse_lattice(read_text_file(path)); }

void write_lattice_file(const std::string& path, const LatticeDocument& doc) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << dump_lattice(doc);
}

Json polynomial_to_json(const ExactPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, rational_json(c)}));
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = terms;
  return j;
}

ExactPolynomial polynomial_from_json(const Json& j) {
  const Json* terms = &j;
  std::optional<std::size_t> nvars;
  if (j.is_object()) {
    if (!j.contains("terms")) throw UsageError("polynomial document has no \"terms\" field");
    terms = &j.at("terms");
    if (j.contains("nvars")) nvars = j.at("nvars").get<std::size_t>();
  }
  if (!terms->is_array()) throw UsageError("polynomial terms must be a list of [exponents, coefficient] pairs");
  if (!nvars) {
    if (terms->empty()) throw UsageError("cannot infer the variable count of an empty term list");
    nvars = (*terms)[0].at(0).size();
  }
  ExactPolynomial p(*nvars);
  for (const auto& t : *terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      throw UsageError("each term must be [exponents, coefficient]");
    Exponents e;
    for (const auto& x : t[0]) {
      if (!x.is_number_unsigned()) throw UsageError("exponents must be nonnegative integers");
      e.push_back(x.get<unsigned>());
    }
    if (e.size() != *nvars) throw DimensionError("exponent tuple length does not match nvars");
    p.add_term(e, rational_from_json(t[1]));
  }
  return p;
}

ExactPolynomial read_polynomial_file(const std::string& path) {
  try {
    return polynomial_from_json(Json::parse(read_text_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace k3lat
