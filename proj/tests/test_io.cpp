#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "k3lat/errors.hpp"
#include "k3lat/io.hpp"
#include "k3lat/kummer.hpp"

using namespace k3lat;

TEST_CASE("rational and integer encodings") {
  CHECK(rational_json(rat(1, 2)) == "1/2");
  CHECK(rational_json(rat(-6, 4)) == "-3/2");
  CHECK(rational_json(rat(5)) == "5");
  CHECK(rational_from_json("7/14") == rat(1, 2));
  CHECK(rational_from_json(3) == 3);
  CHECK_THROWS_AS(rational_from_json(0.5), UsageError);
  Integer big("123456789012345678901234567890");
  CHECK(integer_json(big).is_string());
  CHECK(integer_from_json(integer_json(big)) == big);
  CHECK(integer_json(Integer(-42)) == -42);
  CHECK_THROWS_AS(integer_from_json("12a"), UsageError);
}

TEST_CASE("lattice documents round trip bit exactly") {
  std::vector<GramLattice> lattices = {kummer_lattice().lattice(), k4d_prime(3).lattice(), nsy_lattice(2).lattice(),
                                       standard_lattice("U(32)^3+<-2>"), k3_lattice_glued().lattice()};
  for (const auto& l : lattices) {
    auto doc = document_of(l);
    std::string text = dump_lattice(doc);
    auto back = parse_lattice(text);
    CHECK(dump_lattice(back) == text);
    CHECK(back.gram == l.gram());
    CHECK(back.labels == l.labels());
    CHECK(back.name == l.name());
  }
  // Huge entries survive as strings.
  IntMatrix g(1, 1);
  g(0, 0) = Integer("-99999999999999999999998");
  auto doc = document_of(GramLattice(g, {"x"}, "big"));
  CHECK(parse_lattice(dump_lattice(doc)).gram == g);
}

TEST_CASE("glue in the file is applied on resolve") {
  auto base = diagonal_lattice(std::vector<long>(16, -2), "K");
  auto doc = document_of(base, kummer_glue());
  std::string text = dump_lattice(doc);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  auto back = parse_lattice(text);
  CHECK(dump_lattice(back) == text);
  GramLattice k = back.resolve();
  CHECK(k.rank() == 16);
  CHECK(abs(k.determinant()) == 64);
  // no glue: identity
  CHECK(document_of(base).resolve().gram() == base.gram());
}

TEST_CASE("file I/O") {
  auto path = (std::filesystem::temp_directory_path() / "k3lat_test_io_lattice.json").string();
  auto doc = document_of(nikulin_lattice().lattice());
  write_lattice_file(path, doc);
  CHECK(read_text_file(path) == dump_lattice(doc));
  CHECK(read_lattice_file(path).gram == doc.gram);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_lattice_file(path), UsageError);
}

TEST_CASE("malformed lattice documents") {
  CHECK_THROWS_AS(parse_lattice("{"), UsageError);
  CHECK_THROWS_AS(parse_lattice("[]"), UsageError);
  CHECK_THROWS_AS(parse_lattice(R"({"name": "x"})"), UsageError);
  CHECK_THROWS_AS(parse_lattice(R"({"gram": [[1, 2], [3]]})"), DimensionError);
  CHECK_THROWS_AS(parse_lattice(R"({"gram": [[2, 1], [0, 2]]})"), UsageError);
  CHECK_THROWS_AS(parse_lattice(R"({"gram": [[2]], "labels": ["a", "b"]})"), DimensionError);
  CHECK_THROWS_AS(parse_lattice(R"({"gram": [[2]], "glue": [["1/2", "0"]]})"), DimensionError);
  CHECK_THROWS_AS(parse_lattice(R"({"gram": [[-2]], "glue": [["1/x"]]})"), std::exception);
  // glue violating integrality is rejected when resolved
  auto bad = parse_lattice(R"({"name": "A1", "labels": ["a"], "gram": [[-2]], "glue": [["1/2"]]})");
  CHECK_THROWS(bad.resolve());
}

TEST_CASE("polynomial files") {
  auto p = heisenberg_quartics()[1] * rat(3, 4) - ExactPolynomial::constant(4, rat(1, 3));
  Json j = polynomial_to_json(p);
  CHECK(j["nvars"] == 4);
  CHECK(j["terms"][0][1] == "3/4");
  CHECK(polynomial_from_json(j) == p);
  // bare list with the variable count inferred
  Json bare = Json::parse(R"([[[1, 0, 0, 1], "2"], [[0, 2, 0, 0], "-1/2"]])");
  auto q = polynomial_from_json(bare);
  CHECK(q.nvars() == 4);
  CHECK(q.coefficient({1, 0, 0, 1}) == 2);
  CHECK(q.coefficient({0, 2, 0, 0}) == rat(-1, 2));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([[[1, 0], "1"], [[1], "1"]])")), DimensionError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([[[-1, 0], "1"]])")), UsageError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"nvars": 2})")), UsageError);
  CHECK_THROWS_AS(polynomial_from_json(Json::array()), UsageError);
}

TEST_CASE("census encoding") {
  QCensus c{{rat(0), 35}, {rat(1), 28}, {rat(1, 2), 3}};
  CHECK(to_json(c).dump() == R"({"0":35,"1/2":3,"1":28})");
}
