#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/algebra.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/matrix.hpp"

namespace frobkit {

/// An element of A (x) A: entry (i, j) is the coefficient of b_i (x) b_j.
template <Field F>
using Tensor2 = Matrix<F>;

/// Flattening of an n x n tensor into a length n^2 vector, row-major:
/// entry (i, j) sits at index i * n + j. All canonical bases below are RREF
/// bases in this coordinate order.
template <Field F>
Coords<F> flatten(const Tensor2<F>& t) {
  Coords<F> v;
  v.reserve(t.rows() * t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) v.push_back(t.at(i, j));
  return v;
}

template <Field F>
Tensor2<F> unflatten(const F& field, std::size_t n, const Coords<F>& v) {
  if (v.size() != n * n) throw DimensionError("unflatten: wrong length");
  Tensor2<F> t(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = v[i * n + j];
  return t;
}

/// Left action (b_k (x) 1) T as a coefficient matrix: L_k * T.
template <Field F>
Tensor2<F> left_action(const Algebra<F>& a, std::size_t k,
                       const Tensor2<F>& t) {
  const std::size_t n = a.dim();
  Tensor2<F> r(a.field(), n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [x, coeff] : a.basis_product(k, c))
      for (std::size_t j = 0; j < n; ++j)
        if (!t.at(c, j).is_zero()) r.at(x, j) += coeff * t.at(c, j);
  return r;
}

/// Right action T (1 (x) b_k) as a coefficient matrix: T * R_k^T.
template <Field F>
Tensor2<F> right_action(const Algebra<F>& a, std::size_t k,
                        const Tensor2<F>& t) {
  const std::size_t n = a.dim();
  Tensor2<F> r(a.field(), n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& [y, coeff] : a.basis_product(b, k))
      for (std::size_t i = 0; i < n; ++i)
        if (!t.at(i, b).is_zero()) r.at(i, y) += t.at(i, b) * coeff;
  return r;
}

/// The k-th centralizer block: the matrix of T |-> L_k T - T R_k^T on
/// flattened coordinates (n^2 x n^2).
template <Field F>
Matrix<F> centralizer_block(const Algebra<F>& a, std::size_t k) {
  const std::size_t n = a.dim();
  Matrix<F> block(a.field(), n * n, n * n);
  // (L_k T)_{xy} = sum_c L_{xc} T_{cy};  (T R_k^T)_{xy} = sum_d T_{xd} R_{yd}
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [x, coeff] : a.basis_product(k, c))
      for (std::size_t y = 0; y < n; ++y)
        block.at(x * n + y, c * n + y) += coeff;
  for (std::size_t d = 0; d < n; ++d)
    for (const auto& [y, coeff] : a.basis_product(d, k))
      for (std::size_t x = 0; x < n; ++x)
        block.at(x * n + y, x * n + d) -= coeff;
  return block;
}

/// All n centralizer blocks stacked (n^3 x n^2); its kernel is the space of
/// invariants (A (x) A)^A.
template <Field F>
Matrix<F> centralizer_system(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  Matrix<F> system(a.field(), n * n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix<F> block = centralizer_block(a, k);
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c < n * n; ++c)
        system.at(k * n * n + r, c) = block.at(r, c);
  }
  return system;
}

/// Multiplication contraction m(T) = sum_{a,b} T_{ab} b_a b_b as an element.
template <Field F>
Coords<F> contract(const Algebra<F>& a, const Tensor2<F>& t) {
  const std::size_t n = a.dim();
  Coords<F> r(n, a.field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t.at(i, j).is_zero()) continue;
      for (const auto& [k, coeff] : a.basis_product(i, j))
        r[k] += t.at(i, j) * coeff;
    }
  return r;
}

/// Rows of the contraction operator on flattened coordinates (n x n^2):
/// row k, column (a, b) holds c_{ab}^k.
template <Field F>
Matrix<F> contraction_matrix(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  Matrix<F> m(a.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, coeff] : a.basis_product(i, j))
        m.at(k, i * n + j) += coeff;
  return m;
}

/// Canonical RREF basis (rows) of the span of a tensor list.
template <Field F>
Matrix<F> span_rref(const F& field, std::size_t n,
                    const std::vector<Tensor2<F>>& tensors) {
  std::vector<Coords<F>> rows;
  rows.reserve(tensors.size());
  for (const Tensor2<F>& t : tensors) rows.push_back(flatten(t));
  const RrefResult<F> rr =
      rref(Matrix<F>::from_rows(field, rows, n * n));
  Matrix<F> basis(field, rr.rank(), n * n);
  for (std::size_t r = 0; r < rr.rank(); ++r)
    for (std::size_t c = 0; c < n * n; ++c)
      basis.at(r, c) = rr.reduced.at(r, c);
  return basis;
}

/// Two tensor lists span the same subspace iff their stacked RREFs coincide.
template <Field F>
bool span_equal(const F& field, std::size_t n,
                const std::vector<Tensor2<F>>& lhs,
                const std::vector<Tensor2<F>>& rhs) {
  return span_rref(field, n, lhs) == span_rref(field, n, rhs);
}

template <Field F>
bool in_span(const F& field, std::size_t n,
             const std::vector<Tensor2<F>>& tensors, const Tensor2<F>& t) {
  std::vector<Tensor2<F>> extended = tensors;
  extended.push_back(t);
  return span_rref(field, n, tensors).rows() ==
         span_rref(field, n, extended).rows();
}

/// The space of invariants (A (x) A)^A in its canonical RREF basis; its
/// dimension is the Frobenius dimension of A.
template <Field F>
struct FrobeniusSpace {
  Algebra<F> algebra;
  std::vector<Tensor2<F>> basis;
  std::size_t dim() const { return basis.size(); }
};

/// A nearly Frobenius coproduct, stored by its value at 1; every other value
/// is (a (x) 1) delta_one. `normalized` records m(delta_one) = 1.
template <Field F>
struct Coproduct {
  Algebra<F> algebra;
  Tensor2<F> delta_one;
  bool normalized = false;
};

/// Kernel of the stacked centralizer operator. Computed by intersecting the
/// per-block kernels and canonicalized by a final RREF, which makes the
/// result identical to the kernel of the full stacked system.
template <Field F>
FrobeniusSpace<F> frobenius_space(const Algebra<F>& a) {
  const F& field = a.field();
  const std::size_t n = a.dim();
  // current spanning set of the candidate space, as flattened rows
  Matrix<F> rows = Matrix<F>::identity(field, n * n);
  for (std::size_t k = 0; k < n && rows.rows() > 0; ++k) {
    const std::size_t d = rows.rows();
    // constraint matrix: column r is block_k applied to candidate r
    Matrix<F> constraint(field, n * n, d);
    bool nonzero = false;
    for (std::size_t r = 0; r < d; ++r) {
      const Tensor2<F> t = unflatten(field, n, rows.row(r));
      const Tensor2<F> image = left_action(a, k, t) - right_action(a, k, t);
      for (std::size_t e = 0; e < n * n; ++e) {
        const auto& val = image.at(e / n, e % n);
        if (!val.is_zero()) {
          constraint.at(e, r) = val;
          nonzero = true;
        }
      }
    }
    if (!nonzero) continue;
    const std::vector<Coords<F>> combos = kernel_basis(constraint);
    Matrix<F> next(field, combos.size(), n * n);
    for (std::size_t r = 0; r < combos.size(); ++r)
      for (std::size_t c = 0; c < n * n; ++c) {
        auto& dst = next.at(r, c);
        for (std::size_t s = 0; s < d; ++s)
          if (!combos[r][s].is_zero() && !rows.at(s, c).is_zero())
            dst += combos[r][s] * rows.at(s, c);
      }
    rows = std::move(next);
  }
  const RrefResult<F> rr = rref(rows);
  std::vector<Tensor2<F>> basis;
  basis.reserve(rr.rank());
  for (std::size_t r = 0; r < rr.rank(); ++r)
    basis.push_back(unflatten(field, n, rr.reduced.row(r)));
  return {a, std::move(basis)};
}

template <Field F>
std::size_t frobdim(const Algebra<F>& a) {
  return frobenius_space(a).dim();
}

/// Outcome of verify_coproduct. A coassociativity failure can only come from
/// a library bug, never from user data, and is flagged separately.
struct CoproductVerdict {
  bool ok = true;
  bool internal_failure = false;
  std::string message;

  explicit operator bool() const { return ok; }
};

namespace detail {

/// (Delta (x) 1) Delta(b) = (1 (x) Delta) Delta(b) for all basis b, where
/// Delta(x) = (x (x) 1) T. Guaranteed by the bimodule condition; checked
/// entry by entry.
template <Field F>
bool coassociative(const Algebra<F>& a, const Tensor2<F>& t,
                   std::size_t* bad_index) {
  const std::size_t n = a.dim();
  std::vector<Tensor2<F>> delta;  // delta[i] = Delta(b_i)
  delta.reserve(n);
  for (std::size_t i = 0; i < n; ++i) delta.push_back(left_action(a, i, t));
  for (std::size_t k = 0; k < n; ++k) {
    const Tensor2<F>& s = delta[k];
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          auto lhs = a.field().zero();
          for (std::size_t c = 0; c < n; ++c)
            if (!s.at(c, z).is_zero() && !delta[c].at(x, y).is_zero())
              lhs += s.at(c, z) * delta[c].at(x, y);
          auto rhs = a.field().zero();
          for (std::size_t c = 0; c < n; ++c)
            if (!s.at(x, c).is_zero() && !delta[c].at(y, z).is_zero())
              rhs += s.at(x, c) * delta[c].at(y, z);
          if (lhs != rhs) {
            if (bad_index) *bad_index = k;
            return false;
          }
        }
  }
  return true;
}

}  // namespace detail

/// Full nearly-Frobenius verification of a candidate Delta(1):
///   1. invariance (b_k (x) 1) T = T (1 (x) b_k) for every k;
///   2. both bimodule diagrams on all basis pairs;
///   3. coassociativity on all basis elements (a consequence of 1-2, so a
///      failure is reported as an internal inconsistency).
template <Field F>
CoproductVerdict verify_coproduct(const Algebra<F>& a, const Tensor2<F>& t) {
  const std::size_t n = a.dim();
  if (t.rows() != n || t.cols() != n)
    throw DimensionError("tensor shape does not match algebra dimension");
  if (!(t.field() == a.field()))
    throw FieldMismatchError("tensor over a different field");
  for (std::size_t k = 0; k < n; ++k) {
    if (left_action(a, k, t) != right_action(a, k, t)) {
      return {false, false,
              "invariance violated at basis index " + std::to_string(k) +
                  ": (b (x) 1) T != T (1 (x) b)"};
    }
  }
  // Delta(b_i b_j) = (b_i (x) 1) Delta(b_j) = Delta(b_i) (1 (x) b_j)
  std::vector<Tensor2<F>> delta;
  delta.reserve(n);
  for (std::size_t i = 0; i < n; ++i) delta.push_back(left_action(a, i, t));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2<F> of_product(a.field(), n, n);
      for (const auto& [k, coeff] : a.basis_product(i, j)) {
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (!delta[k].at(x, y).is_zero())
              of_product.at(x, y) += coeff * delta[k].at(x, y);
      }
      if (of_product != left_action(a, i, delta[j]))
        return {false, false,
                "left bimodule diagram violated at basis pair (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")"};
      if (of_product != right_action(a, j, delta[i]))
        return {false, false,
                "right bimodule diagram violated at basis pair (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")"};
    }
  std::size_t bad = 0;
  if (!detail::coassociative(a, t, &bad))
    return {false, true,
            "internal consistency failure: coassociativity violated at basis "
            "index " +
                std::to_string(bad)};
  return {};
}

/// Wraps a tensor that already satisfies invariance; throws otherwise.
/// The normalized flag is set iff m(T) = 1.
template <Field F>
Coproduct<F> make_coproduct(const Algebra<F>& a, const Tensor2<F>& t) {
  const std::size_t n = a.dim();
  if (t.rows() != n || t.cols() != n)
    throw DimensionError("tensor shape does not match algebra dimension");
  for (std::size_t k = 0; k < n; ++k)
    if (left_action(a, k, t) != right_action(a, k, t))
      throw Error("tensor is not invariant; not a nearly Frobenius coproduct");
  return {a, t, contract(a, t) == a.unit()};
}

/// Delta(x) = (x (x) 1) Delta(1); the equal right-hand form
/// Delta(1) (1 (x) x) is recomputed and asserted.
template <Field F>
Tensor2<F> apply_coproduct(const Coproduct<F>& cop, const Coords<F>& x) {
  const Algebra<F>& a = cop.algebra;
  a.check_element(x);
  const Matrix<F> left = a.left_mult_matrix(x) * cop.delta_one;
  const Matrix<F> right = cop.delta_one * a.right_mult_matrix(x).transpose();
  if (left != right)
    throw InternalCheckError(
        "(x (x) 1) Delta(1) != Delta(1) (1 (x) x) on an invariant tensor");
  return left;
}

/// Transport along a verified isomorphism f: Delta_B(1) =
/// (f (x) f)(Delta_A(1)) = F T F^T. The result is re-verified over the
/// target.
template <Field F>
Coproduct<F> transport_coproduct(const Morphism<F>& f,
                                 const Coproduct<F>& cop) {
  if (!f.is_isomorphism())
    throw MorphismError(
        "transport requires a verified invertible algebra morphism");
  if (!f.source.same_structure(cop.algebra))
    throw Error("coproduct is not over the morphism source");
  const Tensor2<F> transported = f.map * cop.delta_one * f.map.transpose();
  const CoproductVerdict verdict = verify_coproduct(f.target, transported);
  if (!verdict)
    throw InternalCheckError("transported coproduct failed verification: " +
                             verdict.message);
  return make_coproduct(f.target, transported);
}

/// Coproduct on A x B: embed Delta_A(1) and Delta_B(1) block-diagonally.
/// The direct product is reconstructed here, so the result is over the
/// canonical direct_product(A, B) algebra.
template <Field F>
Coproduct<F> product_coproduct(const Coproduct<F>& ca,
                               const Coproduct<F>& cb) {
  const Algebra<F>& a = ca.algebra;
  const Algebra<F>& b = cb.algebra;
  const DirectProductResult<F> dp = direct_product(a, b);
  const std::size_t na = a.dim(), n = na + b.dim();
  Tensor2<F> t(a.field(), n, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) t.at(i, j) = ca.delta_one.at(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      t.at(na + i, na + j) = cb.delta_one.at(i, j);
  const CoproductVerdict verdict = verify_coproduct(dp.algebra, t);
  if (!verdict)
    throw InternalCheckError("product coproduct failed verification: " +
                             verdict.message);
  return make_coproduct(dp.algebra, t);
}

/// Coproduct on A (x) B: (1 (x) tau (x) 1)(Delta_A(1) (x) Delta_B(1)), i.e.
/// the Kronecker product of the two Delta(1) tensors in the fixed tensor
/// basis order. The tensor product algebra is reconstructed here.
template <Field F>
Coproduct<F> tensor_coproduct(const Coproduct<F>& ca, const Coproduct<F>& cb) {
  const Algebra<F>& a = ca.algebra;
  const Algebra<F>& b = cb.algebra;
  const Algebra<F> tp = tensor_product(a, b);
  const std::size_t na = a.dim(), nb = b.dim();
  Tensor2<F> t(a.field(), na * nb, na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t i2 = 0; i2 < na; ++i2) {
      if (ca.delta_one.at(i1, i2).is_zero()) continue;
      for (std::size_t j1 = 0; j1 < nb; ++j1)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          t.at(i1 * nb + j1, i2 * nb + j2) =
              ca.delta_one.at(i1, i2) * cb.delta_one.at(j1, j2);
    }
  const CoproductVerdict verdict = verify_coproduct(tp, t);
  if (!verdict)
    throw InternalCheckError("tensor coproduct failed verification: " +
                             verdict.message);
  return make_coproduct(tp, t);
}

}  // namespace frobkit
