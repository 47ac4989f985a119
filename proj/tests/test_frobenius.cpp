#include <catch2/catch_amalgamated.hpp>

#include "frobkit/frobkit.hpp"
#include "test_util.hpp"

using namespace frobkit;
using testutil::a2_algebra;
using testutil::a3_algebra;
using testutil::a4_algebra;
using testutil::commutative_square_algebra;
using testutil::cyclic_delta_k;
using testutil::label_index;
using testutil::make_rng;
using testutil::permutation_morphism_matrix;
using testutil::permute_basis;
using testutil::random_permutation;

namespace {

RationalField Q;

/// Brute-force bimodule oracle, independent of verify_coproduct: checks
/// Delta(b_i b_j) = (b_i (x) 1) Delta(b_j) = Delta(b_i) (1 (x) b_j) by
/// expanding every product through Algebra::multiply only.
bool bimodule_oracle(const Algebra<RationalField>& a,
                     const Tensor2<RationalField>& t) {
  const std::size_t n = a.dim();
  // delta of a basis element, expanded entry by entry
  auto delta = [&](std::size_t i) {
    Tensor2<RationalField> d(Q, n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = 0; r < n; ++r) {
        if (t.at(p, r).is_zero()) continue;
        const auto prod = a.multiply(a.basis_element(i), a.basis_element(p));
        for (std::size_t x = 0; x < n; ++x)
          if (!prod[x].is_zero()) d.at(x, r) += t.at(p, r) * prod[x];
      }
    return d;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod_ij =
          a.multiply(a.basis_element(i), a.basis_element(j));
      Tensor2<RationalField> lhs(Q, n, n);
      for (std::size_t k = 0; k < n; ++k) {
        if (prod_ij[k].is_zero()) continue;
        const auto dk = delta(k);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (!dk.at(x, y).is_zero()) lhs.at(x, y) += prod_ij[k] * dk.at(x, y);
      }
      // (b_i (x) 1) Delta(b_j)
      const auto dj = delta(j);
      Tensor2<RationalField> mid(Q, n, n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r) {
          if (dj.at(p, r).is_zero()) continue;
          const auto prod = a.multiply(a.basis_element(i), a.basis_element(p));
          for (std::size_t x = 0; x < n; ++x)
            if (!prod[x].is_zero()) mid.at(x, r) += dj.at(p, r) * prod[x];
        }
      // Delta(b_i) (1 (x) b_j)
      const auto di = delta(i);
      Tensor2<RationalField> rhs(Q, n, n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r) {
          if (di.at(p, r).is_zero()) continue;
          const auto prod = a.multiply(a.basis_element(r), a.basis_element(j));
          for (std::size_t y = 0; y < n; ++y)
            if (!prod[y].is_zero()) rhs.at(p, y) += di.at(p, r) * prod[y];
        }
      if (lhs != mid || lhs != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("the kZ3 Frobenius space is spanned by the cyclic coproducts") {
  const auto z3 = abelian_group_algebra(Q, {3});
  const auto space = frobenius_space(z3);
  CHECK(space.dim() == 3);
  std::vector<Tensor2<RationalField>> closed_form;
  for (std::size_t k = 1; k <= 3; ++k) closed_form.push_back(cyclic_delta_k(Q, 3, k));
  CHECK(span_equal(Q, 3, space.basis, closed_form));
}

TEST_CASE("the A2 Frobenius space is one-dimensional with the known "
          "generator") {
  const auto a2 = a2_algebra();
  const auto space = frobenius_space(a2);
  REQUIRE(space.dim() == 1);
  Tensor2<RationalField> expected(Q, 3, 3);
  expected.at(label_index(a2, "eta"), label_index(a2, "e1")) = Q.one();
  expected.at(label_index(a2, "e2"), label_index(a2, "eta")) = Q.one();
  CHECK(space.basis[0] == expected);
}

TEST_CASE("matrix algebras have Frobenius dimension n^2") {
  CHECK(frobdim(matrix_algebra(Q, 2)) == 4);
  CHECK(frobdim(matrix_algebra(Q, 3)) == 9);
}

TEST_CASE("cyclic group algebras have Frobenius dimension n") {
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(frobdim(abelian_group_algebra(Q, {n})) == n);
}

TEST_CASE("the base field and the A4 path algebra have Frobenius dimension "
          "one") {
  CHECK(frobdim(truncated_polynomial(Q, 0)) == 1);
  CHECK(frobdim(a4_algebra()) == 1);
}

TEST_CASE("incremental intersection agrees with the stacked kernel") {
  const std::vector<Algebra<RationalField>> algebras = {
      abelian_group_algebra(Q, {2}), abelian_group_algebra(Q, {5}),
      a2_algebra(), a3_algebra(), matrix_algebra(Q, 2),
      truncated_polynomial(Q, 3), commutative_square_algebra(), a4_algebra()};
  for (const auto& a : algebras) {
    const auto space = frobenius_space(a);
    std::vector<Tensor2<RationalField>> naive;
    for (const auto& v : kernel_basis(centralizer_system(a)))
      naive.push_back(unflatten(Q, a.dim(), v));
    CHECK(naive.size() == space.dim());
    // identical canonical bases, not just equal spans
    const auto canonical = span_rref(Q, a.dim(), naive);
    REQUIRE(canonical.rows() == space.dim());
    for (std::size_t r = 0; r < space.dim(); ++r)
      CHECK(unflatten(Q, a.dim(), canonical.row(r)) == space.basis[r]);
  }
}

TEST_CASE("apply_coproduct at the unit returns Delta(1)") {
  const auto z2 = abelian_group_algebra(Q, {2});
  const auto space = frobenius_space(z2);
  for (const auto& t : space.basis) {
    const auto cop = make_coproduct(z2, t);
    CHECK(apply_coproduct(cop, z2.unit()) == t);
  }
}

TEST_CASE("the A3 coproduct of e2 is b (x) a") {
  const auto a3 = a3_algebra();
  const auto space = frobenius_space(a3);
  REQUIRE(space.dim() == 1);
  const auto cop = make_coproduct(a3, space.basis[0]);
  const auto at_e2 = apply_coproduct(cop, a3.basis_element(1));
  Tensor2<RationalField> expected(Q, 6, 6);
  expected.at(label_index(a3, "b"), label_index(a3, "a")) = Q.one();
  CHECK(at_e2 == expected);
}

TEST_CASE("applying g to g(x)g + 1(x)1 in kZ2 gives 1(x)g + g(x)1") {
  const auto z2 = abelian_group_algebra(Q, {2});
  Tensor2<RationalField> t(Q, 2, 2);
  t.at(1, 1) = Q.one();
  t.at(0, 0) = Q.one();
  const auto cop = make_coproduct(z2, t);
  const auto applied = apply_coproduct(cop, z2.basis_element(1));
  Tensor2<RationalField> expected(Q, 2, 2);
  expected.at(0, 1) = Q.one();
  expected.at(1, 0) = Q.one();
  CHECK(applied == expected);
}

TEST_CASE("verify_coproduct accepts computed basis tensors") {
  for (const auto& a : {abelian_group_algebra(Q, {4}), a3_algebra(),
                        matrix_algebra(Q, 2)}) {
    for (const auto& t : frobenius_space(a).basis) {
      const auto verdict = verify_coproduct(a, t);
      CHECK(verdict.ok);
      CHECK_FALSE(verdict.internal_failure);
    }
  }
}

TEST_CASE("1 (x) 1 is not a coproduct of kZ2") {
  const auto z2 = abelian_group_algebra(Q, {2});
  Tensor2<RationalField> t(Q, 2, 2);
  t.at(0, 0) = Q.one();
  const auto verdict = verify_coproduct(z2, t);
  CHECK_FALSE(verdict.ok);
  CHECK_FALSE(verdict.internal_failure);
  CHECK(verdict.message.find("invariance") != std::string::npos);
  CHECK_THROWS_AS(make_coproduct(z2, t), Error);
}

TEST_CASE("random combinations of kZ5 coproducts verify, including "
          "coassociativity") {
  const auto z5 = abelian_group_algebra(Q, {5});
  const auto space = frobenius_space(z5);
  auto rng = make_rng(0xc0a55);
  for (int rep = 0; rep < 10; ++rep) {
    Tensor2<RationalField> combo(Q, 5, 5);
    for (const auto& b : space.basis) {
      const auto coeff = testutil::random_rational(rng);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
          if (!b.at(i, j).is_zero()) combo.at(i, j) += coeff * b.at(i, j);
    }
    CHECK(verify_coproduct(z5, combo).ok);
  }
}

TEST_CASE("the bimodule oracle confirms every computed basis coproduct") {
  for (const auto& a :
       {abelian_group_algebra(Q, {3}), a2_algebra(), a3_algebra(),
        matrix_algebra(Q, 2), truncated_polynomial(Q, 2)}) {
    for (const auto& t : frobenius_space(a).basis)
      CHECK(bimodule_oracle(a, t));
  }
  // and rejects a non-invariant tensor
  const auto z2 = abelian_group_algebra(Q, {2});
  Tensor2<RationalField> bad(Q, 2, 2);
  bad.at(0, 0) = Q.one();
  CHECK_FALSE(bimodule_oracle(z2, bad));
}

TEST_CASE("transport along the identity is the identity") {
  const auto a3 = a3_algebra();
  const auto cop = make_coproduct(a3, frobenius_space(a3).basis[0]);
  const auto id =
      check_morphism(a3, a3, Matrix<RationalField>::identity(Q, a3.dim()));
  const auto moved = transport_coproduct(id, cop);
  CHECK(moved.delta_one == cop.delta_one);
}

TEST_CASE("transport requires a verified isomorphism") {
  const auto a3 = a3_algebra();
  const auto cop = make_coproduct(a3, frobenius_space(a3).basis[0]);
  const auto z2 = abelian_group_algebra(Q, {2});
  const auto dp = direct_product(z2, z2);
  CHECK_THROWS_AS(transport_coproduct(dp.embed_first, cop), MorphismError);
}

TEST_CASE("the automorphism g -> g^2 of kZ3 maps the Frobenius space onto "
          "itself") {
  const auto z3 = abelian_group_algebra(Q, {3});
  // basis 1, g, g^2; g -> g^2 swaps the last two basis vectors
  Matrix<RationalField> f(Q, 3, 3);
  f.at(0, 0) = Q.one();
  f.at(2, 1) = Q.one();
  f.at(1, 2) = Q.one();
  const auto phi = check_morphism(z3, z3, f);
  CHECK(phi.is_isomorphism());
  const auto space = frobenius_space(z3);
  std::vector<Tensor2<RationalField>> images;
  for (const auto& t : space.basis) {
    const auto moved = transport_coproduct(phi, make_coproduct(z3, t));
    CHECK(in_span(Q, 3, space.basis, moved.delta_one));
    images.push_back(moved.delta_one);
  }
  CHECK(span_equal(Q, 3, space.basis, images));
}

TEST_CASE("the commutative square algebra carries the transported tensor "
          "coproduct") {
  const auto a2 = a2_algebra();
  const auto b = tensor_product(a2, a2);
  CHECK(frobdim(b) == 1);

  const auto c = commutative_square_algebra();
  // the isomorphism of the two descriptions, given on basis labels
  const std::vector<std::pair<std::string, std::string>> images{
      {"e1*e1", "e1"}, {"e1*e2", "e2"}, {"e2*e1", "e3"}, {"e2*e2", "e4"},
      {"e1*eta", "a"}, {"eta*e2", "b"}, {"eta*e1", "g"}, {"e2*eta", "d"},
      {"eta*eta", "gd"}};
  Matrix<RationalField> f(Q, 9, 9);
  for (const auto& [src, tgt] : images)
    f.at(label_index(c, tgt), testutil::label_index(b, src)) = Q.one();
  const auto phi = check_morphism(b, c, f);
  CHECK(phi.is_isomorphism());
  CHECK(invert(f).has_value());

  const auto gen = make_coproduct(a2, frobenius_space(a2).basis[0]);
  const auto gen_b = tensor_coproduct(gen, gen);
  CHECK(span_equal(Q, 9, frobenius_space(b).basis, {gen_b.delta_one}));

  const auto moved = transport_coproduct(phi, gen_b);
  Tensor2<RationalField> expected(Q, 9, 9);
  expected.at(label_index(c, "gd"), label_index(c, "e1")) = Q.one();
  expected.at(label_index(c, "b"), label_index(c, "a")) = Q.one();
  expected.at(label_index(c, "d"), label_index(c, "g")) = Q.one();
  expected.at(label_index(c, "e4"), label_index(c, "gd")) = Q.one();
  CHECK(moved.delta_one == expected);
  CHECK(span_equal(Q, 9, frobenius_space(c).basis, {expected}));
}

TEST_CASE("product coproducts embed block-diagonally") {
  const auto z2 = abelian_group_algebra(Q, {2});
  const auto z3 = abelian_group_algebra(Q, {3});
  const auto d1 = make_coproduct(z2, cyclic_delta_k(Q, 2, 1));
  const auto d2 = make_coproduct(z3, cyclic_delta_k(Q, 3, 1));
  const auto combined = product_coproduct(d1, d2);
  const auto space = frobenius_space(combined.algebra);
  CHECK(space.dim() == 5);
  CHECK(in_span(Q, 5, space.basis, combined.delta_one));

  // zero coproducts give the zero tensor
  const auto zero = product_coproduct(
      make_coproduct(z2, Tensor2<RationalField>(Q, 2, 2)),
      make_coproduct(z3, Tensor2<RationalField>(Q, 3, 3)));
  CHECK(zero.delta_one.is_zero());

  // (Delta of k, Delta of k) over k x k is e1 (x) e1 + e2 (x) e2
  const auto k = truncated_polynomial(Q, 0);
  Tensor2<RationalField> one(Q, 1, 1);
  one.at(0, 0) = Q.one();
  const auto dk = make_coproduct(k, one);
  const auto pair = product_coproduct(dk, dk);
  Tensor2<RationalField> expected(Q, 2, 2);
  expected.at(0, 0) = Q.one();
  expected.at(1, 1) = Q.one();
  CHECK(pair.delta_one == expected);
}

TEST_CASE("tensor coproducts are Kronecker products") {
  const auto a2 = a2_algebra();
  const auto gen = make_coproduct(a2, frobenius_space(a2).basis[0]);

  // tensoring with the base field collapses to the original
  const auto k = truncated_polynomial(Q, 0);
  Tensor2<RationalField> one(Q, 1, 1);
  one.at(0, 0) = Q.one();
  const auto collapsed = tensor_coproduct(gen, make_coproduct(k, one));
  CHECK(collapsed.algebra.same_structure(a2));
  CHECK(collapsed.delta_one == gen.delta_one);

  const auto z2 = abelian_group_algebra(Q, {2});
  const auto d2 = make_coproduct(z2, cyclic_delta_k(Q, 2, 2));
  const auto tens = tensor_coproduct(d2, d2);
  const auto space = frobenius_space(tens.algebra);
  CHECK(space.dim() == 4);
  CHECK(in_span(Q, 4, space.basis, tens.delta_one));
}

TEST_CASE("Frobenius dimension laws on small pairs") {
  const std::vector<Algebra<RationalField>> zoo = {
      abelian_group_algebra(Q, {2}), abelian_group_algebra(Q, {3}),
      a2_algebra()};
  for (const auto& a : zoo)
    for (const auto& b : zoo) {
      CHECK(frobdim(direct_product(a, b).algebra) == frobdim(a) + frobdim(b));
      CHECK(frobdim(tensor_product(a, b)) == frobdim(a) * frobdim(b));
    }
}

TEST_CASE("composed coproducts over all basis pairs span the composite "
          "space") {
  const std::vector<Algebra<RationalField>> zoo = {
      abelian_group_algebra(Q, {2}), abelian_group_algebra(Q, {3}),
      a2_algebra(), truncated_polynomial(Q, 1)};
  for (const auto& a : zoo)
    for (const auto& b : zoo) {
      const auto space_a = frobenius_space(a);
      const auto space_b = frobenius_space(b);
      // the zero map is a (trivial) coproduct, so it joins the pair set on
      // the product side; without it the sums only span a hyperplane
      auto with_zero = [](const FrobeniusSpace<RationalField>& s,
                          std::size_t n) {
        std::vector<Tensor2<RationalField>> t = s.basis;
        t.emplace_back(Q, n, n);
        return t;
      };
      std::vector<Tensor2<RationalField>> product_images, tensor_images;
      for (const auto& ta : with_zero(space_a, a.dim()))
        for (const auto& tb : with_zero(space_b, b.dim())) {
          const auto ca = make_coproduct(a, ta);
          const auto cb = make_coproduct(b, tb);
          product_images.push_back(product_coproduct(ca, cb).delta_one);
        }
      for (const auto& ta : space_a.basis)
        for (const auto& tb : space_b.basis)
          tensor_images.push_back(
              tensor_coproduct(make_coproduct(a, ta), make_coproduct(b, tb))
                  .delta_one);
      const auto prod = direct_product(a, b).algebra;
      CHECK(span_rref(Q, prod.dim(), product_images).rows() ==
            frobenius_space(prod).dim());
      const auto tens = tensor_product(a, b);
      CHECK(span_equal(Q, tens.dim(), tensor_images,
                       frobenius_space(tens).basis));
    }
}

TEST_CASE("frobdim is invariant under basis permutations") {
  auto rng = make_rng(0x9e47);
  for (const auto& a : {abelian_group_algebra(Q, {4}), a3_algebra(),
                        matrix_algebra(Q, 2)}) {
    const auto space = frobenius_space(a);
    for (int rep = 0; rep < 3; ++rep) {
      const auto perm = random_permutation(rng, a.dim());
      const auto b = permute_basis(a, perm);
      const auto f =
          check_morphism(a, b, permutation_morphism_matrix(Q, perm));
      CHECK(f.is_isomorphism());
      const auto target = frobenius_space(b);
      CHECK(target.dim() == space.dim());
      std::vector<Tensor2<RationalField>> moved;
      for (const auto& t : space.basis)
        moved.push_back(
            transport_coproduct(f, make_coproduct(a, t)).delta_one);
      CHECK(span_equal(Q, b.dim(), target.basis, moved));
    }
  }
}

TEST_CASE("span utilities distinguish spans, not lists") {
  const auto z3 = abelian_group_algebra(Q, {3});
  const auto space = frobenius_space(z3);
  REQUIRE(space.dim() == 3);
  // rescale and mix rows: same span
  std::vector<Tensor2<RationalField>> mixed;
  Tensor2<RationalField> sum(Q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      sum.at(i, j) = space.basis[0].at(i, j) + space.basis[1].at(i, j) +
                     space.basis[2].at(i, j);
  mixed.push_back(sum);
  mixed.push_back(space.basis[1]);
  mixed.push_back(space.basis[2]);
  CHECK(span_equal(Q, 3, space.basis, mixed));
  CHECK_FALSE(span_equal(Q, 3, space.basis, {space.basis[0]}));
  CHECK(in_span(Q, 3, space.basis, sum));
  Tensor2<RationalField> outside(Q, 3, 3);
  outside.at(0, 0) = Q.one();
  CHECK_FALSE(in_span(Q, 3, space.basis, outside));
}

TEST_CASE("Frobenius spaces over prime fields") {
  PrimeField f3(3);
  CHECK(frobdim(abelian_group_algebra(f3, {3})) == 3);
  PrimeField f2(2);
  CHECK(frobdim(matrix_algebra(f2, 2)) == 4);
}
