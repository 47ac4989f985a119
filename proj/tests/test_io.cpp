#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "frobkit/frobkit.hpp"
#include "test_util.hpp"

using namespace frobkit;
using testutil::a2_algebra;
using testutil::a3_algebra;
using testutil::a4_algebra;

namespace {

RationalField Q;

std::string read_sample(const std::string& name) {
  const std::string path = std::string(FROBKIT_SAMPLES_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("the kZ2 sample file parses to the group algebra") {
  const auto any = parse_algebra(read_sample("kz2.alg"));
  const auto& a = std::get<Algebra<RationalField>>(any);
  CHECK(a == abelian_group_algebra(Q, {2}));
}

TEST_CASE("the A2 sample file parses to the path algebra") {
  const auto any = parse_algebra(read_sample("a2.alg"));
  const auto& a = std::get<Algebra<RationalField>>(any);
  CHECK(a == a2_algebra());
}

TEST_CASE("the shipped A3 sample file is the six-dimensional path algebra") {
  const auto any = parse_algebra(read_sample("a3.alg"));
  const auto& a = std::get<Algebra<RationalField>>(any);
  CHECK(a.dim() == 6);
  CHECK(a == a3_algebra());
  CHECK(frobdim(a) == 1);
}

TEST_CASE("a composite modulus in the field directive is rejected") {
  try {
    parse_algebra("field Fp 4\ndim 1\nunit 0:1\nmul 0 0 0:1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(std::string(e.what()).find("prime") != std::string::npos);
  }
}

TEST_CASE("prime field files parse and round-trip") {
  const std::string text =
      "field Fp 5\ndim 2\nlabel 0 1\nlabel 1 g\nunit 0:1\n"
      "mul 0 0 0:1\nmul 0 1 1:1\nmul 1 0 1:1\nmul 1 1 0:1\n";
  const auto any = parse_algebra(text);
  const auto& a = std::get<Algebra<PrimeField>>(any);
  CHECK(a.dim() == 2);
  CHECK(a.field().modulus() == 5);
  CHECK(print_algebra(a) == text);
}

TEST_CASE("print-parse-print is the identity on canonical files") {
  const auto algebras = {a3_algebra(), abelian_group_algebra(Q, {2, 3}),
                         matrix_algebra(Q, 2), truncated_polynomial(Q, 3),
                         testutil::commutative_square_algebra()};
  for (const auto& a : algebras) {
    const std::string once = print_algebra(a);
    const auto reparsed = parse_algebra(once);
    const auto& b = std::get<Algebra<RationalField>>(reparsed);
    CHECK(b == a);
    CHECK(print_algebra(b) == once);
  }
}

TEST_CASE("negative and fractional coefficients round-trip") {
  std::vector<StructureConstant<RationalField>> table{
      {0, 0, 0, Rational(1)},
      {0, 1, 1, Rational(1)},
      {1, 0, 1, Rational(1)},
      {1, 1, 0, Rational(-3, 4)},
      {1, 1, 1, Rational(7, 2)},
  };
  const auto a =
      build_algebra(Q, 2, table, {Rational(1), Rational(0)}, {"u", "w"});
  const std::string text = print_algebra(a);
  CHECK(text.find("0:-3/4") != std::string::npos);
  CHECK(std::get<Algebra<RationalField>>(parse_algebra(text)) == a);
}

TEST_CASE("syntax errors carry line numbers") {
  auto expect_line = [](const std::string& text, std::size_t line) {
    try {
      parse_algebra(text);
      FAIL("expected ParseError for: " + text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("dim 2\n", 1);                         // field must come first
  expect_line("field Q\nlabel 0 x\n", 2);            // label before dim
  expect_line("field Q\ndim 1\nunit 0:1\nbogus\n", 4);
  expect_line("field Q\ndim 1\nunit 0:1\nmul 0 0 0:z\n", 4);
  expect_line("field Q\ndim 1\nunit 0:1\nmul 0 0 0:1\nmul 0 0\n", 5);
  expect_line("field Q\ndim 2\nunit 0:1\nmul 0 0 2:1\n", 4);  // index range
  expect_line("field Q\ndim 1\nmul 0 0 0:1\n", 2);            // missing unit
  expect_line("", 1);
}

TEST_CASE("semantic violations are SemanticError with a relevant line") {
  // non-associative table from the algebra tests, in file form
  const std::string text =
      "field Q\n"
      "dim 2\n"
      "unit 0:1\n"
      "mul 0 0 0:1\n"
      "mul 1 0 1:1\n"
      "mul 1 1 0:1\n";
  try {
    parse_algebra(text);
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  } catch (const ParseError&) {
    FAIL("semantic failure reported as a plain parse error");
  }

  const std::string bad_unit =
      "field Q\ndim 2\nunit 1:1\nmul 0 0 0:1\nmul 0 1 1:1\nmul 1 0 1:1\n"
      "mul 1 1 0:1\n";
  try {
    parse_algebra(bad_unit);
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("unit") != std::string::npos);
  }
}

TEST_CASE("tensor files parse and round-trip") {
  const auto a2 = a2_algebra();
  const auto space = frobenius_space(a2);
  const std::string text = print_tensor(space.basis[0]);
  const auto parsed = parse_tensor(Q, text, a2.dim());
  CHECK(parsed == space.basis[0]);
  CHECK(print_tensor(parsed) == text);

  CHECK_THROWS_AS(parse_tensor(Q, text, 5), ParseError);
  CHECK_THROWS_AS(parse_tensor(Q, "tensor dim 2\n0 0 1\n0 0 2\n", 2),
                  ParseError);
  CHECK_THROWS_AS(parse_tensor(Q, "0 0 1\n", 2), ParseError);

  // multiple blocks
  const std::string two = print_tensor(space.basis[0]) + "tensor dim 3\n";
  const auto blocks = parse_tensors(Q, two, 3);
  CHECK(blocks.size() == 2);
  CHECK(blocks[1].is_zero());
}

TEST_CASE("the commutative square quiver file builds the 9-dimensional "
          "algebra") {
  const auto quiver = parse_quiver(Q, read_sample("csquare.quiver"));
  CHECK(quiver.vertices == 4);
  CHECK(quiver.arrows.size() == 4);
  REQUIRE(quiver.relations.size() == 1);
  CHECK(quiver.relations[0].terms.size() == 2);
  const auto c = path_algebra(Q, quiver);
  CHECK(c == testutil::commutative_square_algebra());
}

TEST_CASE("the A4 quiver file with the radical-square generators gives the "
          "dimension-7 quotient") {
  const auto quiver = parse_quiver(Q, read_sample("a4.quiver"));
  const auto a4 = path_algebra(Q, quiver);
  CHECK(a4 == a4_algebra());
  const auto gens =
      parse_generators(Q, read_sample("ka4_rad2.gen"), a4.dim());
  REQUIRE(gens.size() == 2);
  const auto q = quotient(a4, ideal_closure(a4, gens));
  CHECK(q.algebra.dim() == 7);
  CHECK(frobdim(q.algebra) == 5);
}

TEST_CASE("quiver parse errors") {
  auto expect_throw = [](const std::string& text) {
    CHECK_THROWS_AS(parse_quiver(RationalField{}, text), ParseError);
  };
  expect_throw("arrow a 1 2\n");              // before vertex
  expect_throw("vertex 2\narrow a 0 1\n");    // vertices are 1-based
  expect_throw("vertex 2\narrow a 1 3\n");    // out of range
  expect_throw("vertex 2\narrow a 1 2\narrow a 2 1\n");  // duplicate label
  expect_throw("vertex 2\narrow 1a 1 2\n");   // bad label
  expect_throw("vertex 2\narrow a 1 2\nrelation b\n");   // unknown arrow
  expect_throw("vertex 2\narrow a 1 2\nrelation a-\n");  // dangling sign
  expect_throw("vertex 1\nrelation \n");

  // relations with coefficients and signs parse
  const auto q = parse_quiver(
      RationalField{},
      "vertex 1\narrow x 1 1\nrelation x.x-2/3*x.x.x\n");
  REQUIRE(q.relations.size() == 1);
  REQUIRE(q.relations[0].terms.size() == 2);
  CHECK(q.relations[0].terms[0].coeff == Rational(1));
  CHECK(q.relations[0].terms[1].coeff == Rational(-2, 3));
  CHECK(q.relations[0].terms[1].arrows ==
        std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("generators files reject junk") {
  CHECK_THROWS_AS(parse_generators(Q, "gen 5:1\n", 3), ParseError);
  CHECK_THROWS_AS(parse_generators(Q, "element 0:1\n", 3), ParseError);
  CHECK(parse_generators(Q, "", 3).empty());
}
