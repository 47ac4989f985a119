#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/algebra.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/matrix.hpp"

namespace frobkit {

template <Field F>
struct SeparabilityVerdict {
  bool separable = false;
  std::optional<Tensor2<F>> certificate;  // the separability element e
  std::string field_note;                 // per-result field assumption
};

/// The affine system deciding normalized coproducts: the stacked centralizer
/// system with the contraction rows appended, right-hand side (0, ..., 0,
/// unit). A solution is exactly a tensor T with T invariant and m(T) = 1.
template <Field F>
std::pair<Matrix<F>, Coords<F>> normalized_system(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  const Matrix<F> cent = centralizer_system(a);
  const Matrix<F> contr = contraction_matrix(a);
  Matrix<F> system(a.field(), n * n * n + n, n * n);
  for (std::size_t r = 0; r < cent.rows(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) system.at(r, c) = cent.at(r, c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n * n; ++c)
      system.at(cent.rows() + r, c) = contr.at(r, c);
  Coords<F> rhs(n * n * n + n, a.field().zero());
  for (std::size_t r = 0; r < n; ++r) rhs[cent.rows() + r] = a.unit()[r];
  return {std::move(system), std::move(rhs)};
}

/// Any normalized nearly Frobenius coproduct from an already computed
/// Frobenius space, or nullopt when none exists. Feasibility is decided on
/// the invariant space: T is written on the canonical Frobenius basis and
/// m(T) = 1 is solved there, which is the affine system of
/// normalized_system restricted to its solution set. The returned witness
/// is deterministic (free variables of the reduced solve are zero) but not
/// otherwise canonical.
template <Field F>
std::optional<Coproduct<F>> normalized_coproduct(
    const FrobeniusSpace<F>& space) {
  const Algebra<F>& a = space.algebra;
  const std::size_t n = a.dim(), d = space.dim();
  Matrix<F> system(a.field(), n, d);
  for (std::size_t r = 0; r < d; ++r) {
    const Coords<F> m = contract(a, space.basis[r]);
    for (std::size_t k = 0; k < n; ++k) system.at(k, r) = m[k];
  }
  const std::optional<Coords<F>> x = solve(system, a.unit());
  if (!x) return std::nullopt;
  Tensor2<F> t(a.field(), n, n);
  for (std::size_t r = 0; r < d; ++r) {
    if ((*x)[r].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!space.basis[r].at(i, j).is_zero())
          t.at(i, j) += (*x)[r] * space.basis[r].at(i, j);
  }
  Coproduct<F> cop = make_coproduct(a, t);
  if (!cop.normalized)
    throw InternalCheckError("normalized solve produced m(T) != 1");
  return cop;
}

template <Field F>
std::optional<Coproduct<F>> normalized_coproduct(const Algebra<F>& a) {
  return normalized_coproduct(frobenius_space(a));
}

/// Product on A (x) A^op: (a (x) b)(c (x) d) = ac (x) db, extended
/// bilinearly to tensors. Separability elements are idempotent for it.
template <Field F>
Tensor2<F> enveloping_product(const Algebra<F>& a, const Tensor2<F>& s,
                              const Tensor2<F>& t) {
  const std::size_t n = a.dim();
  Tensor2<F> r(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (t.at(k, l).is_zero()) continue;
          const auto coeff = s.at(i, j) * t.at(k, l);
          // (b_i (x) b_j)(b_k (x) b_l) = b_i b_k (x) b_l b_j
          for (const auto& [x, cx] : a.basis_product(i, k))
            for (const auto& [y, cy] : a.basis_product(l, j))
              r.at(x, y) += coeff * cx * cy;
        }
    }
  return r;
}

namespace detail {

template <Field F>
std::string separability_field_note(const F& field) {
  if (field.characteristic() == 0)
    return "char 0: separable implies semisimple, and the trace-form "
           "converse applies";
  return "char p: separable implies semisimple; the converse is not "
         "computed over F_p";
}

}  // namespace detail

/// Separability decision with certificate. A certificate e satisfies
/// invariance, m(e) = 1 and e e = e in the enveloping product; the last is
/// a theorem given the first two, so its failure is an internal error.
template <Field F>
SeparabilityVerdict<F> is_separable(const Algebra<F>& a) {
  const std::optional<Coproduct<F>> cop = normalized_coproduct(a);
  SeparabilityVerdict<F> verdict;
  verdict.field_note = detail::separability_field_note(a.field());
  if (!cop) return verdict;
  const Tensor2<F>& e = cop->delta_one;
  if (enveloping_product(a, e, e) != e)
    throw InternalCheckError(
        "separability element is not idempotent in the enveloping product");
  verdict.separable = true;
  verdict.certificate = e;
  return verdict;
}

/// m(Delta(1)) = 1. Given invariance this is equivalent to m Delta = Id;
/// the full identity m(Delta(b_k)) = b_k is asserted for every k.
template <Field F>
bool is_normalized(const Algebra<F>& a, const Coproduct<F>& cop) {
  if (!a.same_structure(cop.algebra))
    throw Error("coproduct is not over this algebra");
  const bool at_unit = contract(a, cop.delta_one) == a.unit();
  if (at_unit) {
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (contract(a, left_action(a, k, cop.delta_one)) !=
          a.basis_element(k))
        throw InternalCheckError(
            "m(Delta(1)) = 1 but m(Delta(b_k)) != b_k at index " +
            std::to_string(k));
  }
  return at_unit;
}

/// Trace form G_{ij} = trace(L_{b_i b_j}) of the left regular
/// representation.
template <Field F>
Matrix<F> trace_form(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  Coords<F> traces(n, a.field().zero());
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix<F> lk = a.basis_left_matrix(k);
    for (std::size_t i = 0; i < n; ++i) traces[k] += lk.at(i, i);
  }
  Matrix<F> g(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, coeff] : a.basis_product(i, j))
        g.at(i, j) += coeff * traces[k];
  return g;
}

/// Characteristic-zero semisimplicity: the trace form is nondegenerate.
/// Only available over Q; the criterion is unsound over F_p in general.
inline bool semisimple_char0(const Algebra<RationalField>& a) {
  return rref(trace_form(a)).rank() == a.dim();
}

inline bool semisimple_char0(const Algebra<PrimeField>& a) {
  throw UnsupportedFieldError(
      "semisimple_char0 requires field Q; over F_" +
      std::to_string(a.field().characteristic()) +
      " only the implication 'separable => semisimple' is reported");
}

}  // namespace frobkit
