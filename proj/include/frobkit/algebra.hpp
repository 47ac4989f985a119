#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/matrix.hpp"

namespace frobkit {

/// One entry of a structure-constant table: b_i * b_j contains value * b_k.
template <Field F>
struct StructureConstant {
  std::size_t i, j, k;
  typename F::Element value;
};

/// Finite-dimensional associative unital algebra given by structure
/// constants over an exact field. Immutable after construction; copies are
/// cheap (shared data). Construction always runs the full associativity and
/// unit-law validation.
///
/// Conventions used throughout:
///   - basis elements are b_0 .. b_{n-1}; b_i b_j = sum_k c_{ij}^k b_k;
///   - left multiplication matrix L_x maps coords(y) to coords(x y);
///   - right multiplication matrix R_x maps coords(y) to coords(y x).
template <Field F>
class Algebra {
public:
  using Elt = typename F::Element;
  using Term = std::pair<std::size_t, Elt>;  // (basis index, coefficient)
  using ProductRow = std::vector<Term>;      // sorted by index, no zeros

  const F& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const Coords<F>& unit() const { return d_->unit; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& label(std::size_t i) const { return d_->labels[i]; }

  /// Sparse expansion of b_i * b_j.
  const ProductRow& basis_product(std::size_t i, std::size_t j) const {
    return d_->table[i * d_->dim + j];
  }

  Coords<F> zero_element() const {
    return Coords<F>(d_->dim, d_->field.zero());
  }
  Coords<F> basis_element(std::size_t i) const {
    Coords<F> v = zero_element();
    v[i] = d_->field.one();
    return v;
  }

  /// Bilinear extension of the table.
  Coords<F> multiply(const Coords<F>& x, const Coords<F>& y) const {
    check_element(x);
    check_element(y);
    Coords<F> r = zero_element();
    for (std::size_t i = 0; i < d_->dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d_->dim; ++j) {
        if (y[j].is_zero()) continue;
        const Elt f = x[i] * y[j];
        for (const Term& t : basis_product(i, j)) r[t.first] += f * t.second;
      }
    }
    return r;
  }

  /// L_x with (L_x)_{kj} = coefficient of b_k in x * b_j.
  Matrix<F> left_mult_matrix(const Coords<F>& x) const {
    check_element(x);
    Matrix<F> m(d_->field, d_->dim, d_->dim);
    for (std::size_t i = 0; i < d_->dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d_->dim; ++j)
        for (const Term& t : basis_product(i, j))
          m.at(t.first, j) += x[i] * t.second;
    }
    return m;
  }

  /// R_x with (R_x)_{kj} = coefficient of b_k in b_j * x.
  Matrix<F> right_mult_matrix(const Coords<F>& x) const {
    check_element(x);
    Matrix<F> m(d_->field, d_->dim, d_->dim);
    for (std::size_t i = 0; i < d_->dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d_->dim; ++j)
        for (const Term& t : basis_product(j, i))
          m.at(t.first, j) += x[i] * t.second;
    }
    return m;
  }

  Matrix<F> basis_left_matrix(std::size_t k) const {
    return left_mult_matrix(basis_element(k));
  }
  Matrix<F> basis_right_matrix(std::size_t k) const {
    return right_mult_matrix(basis_element(k));
  }

  /// Sorted dump of the sparse table, suitable for rebuilding.
  std::vector<StructureConstant<F>> table_entries() const {
    std::vector<StructureConstant<F>> out;
    for (std::size_t i = 0; i < d_->dim; ++i)
      for (std::size_t j = 0; j < d_->dim; ++j)
        for (const Term& t : basis_product(i, j))
          out.push_back({i, j, t.first, t.second});
    return out;
  }

  /// Mathematical identity: field, dimension, table and unit agree
  /// (labels ignored).
  bool same_structure(const Algebra& o) const {
    if (d_ == o.d_) return true;
    return d_->field == o.d_->field && d_->dim == o.d_->dim &&
           d_->unit == o.d_->unit && d_->table == o.d_->table;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.same_structure(b) && a.d_->labels == b.d_->labels;
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) {
    return !(a == b);
  }

  void check_element(const Coords<F>& x) const {
    if (x.size() != d_->dim)
      throw DimensionError("element size does not match algebra dimension");
  }

private:
  struct Data {
    F field;
    std::size_t dim;
    std::vector<ProductRow> table;  // index i*dim + j
    Coords<F> unit;
    std::vector<std::string> labels;
  };

  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;

  template <Field G>
  friend Algebra<G> build_algebra(const G&, std::size_t,
                                  const std::vector<StructureConstant<G>>&,
                                  const Coords<G>&, std::vector<std::string>);
};

/// Validated construction. The sweep is interleaved per basis index: for each
/// i it first checks unit * b_i = b_i * unit = b_i, then all associativity
/// triples (i, j, k) in lexicographic order; the first failure is reported.
template <Field F>
Algebra<F> build_algebra(const F& field, std::size_t dim,
                         const std::vector<StructureConstant<F>>& table,
                         const Coords<F>& unit,
                         std::vector<std::string> labels = {}) {
  if (dim == 0) throw Error("algebra dimension must be at least 1");
  if (unit.size() != dim) throw DimensionError("unit has wrong length");
  if (labels.empty()) {
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }
  if (labels.size() != dim) throw Error("label list has wrong length");
  for (const auto& u : unit)
    if (!field.admits(u)) throw FieldMismatchError("unit coefficient field");

  // accumulate duplicates, drop zeros, sort rows by target index
  std::vector<std::map<std::size_t, typename F::Element>> acc(dim * dim);
  for (const auto& sc : table) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim)
      throw Error("structure constant index out of range");
    if (!field.admits(sc.value))
      throw FieldMismatchError("structure constant field");
    auto& cell = acc[sc.i * dim + sc.j];
    auto it = cell.find(sc.k);
    if (it == cell.end())
      cell.emplace(sc.k, sc.value);
    else
      it->second += sc.value;
  }
  std::vector<typename Algebra<F>::ProductRow> rows(dim * dim);
  for (std::size_t cell = 0; cell < dim * dim; ++cell)
    for (auto& [k, v] : acc[cell])
      if (!v.is_zero()) rows[cell].emplace_back(k, v);
  auto data = std::make_shared<typename Algebra<F>::Data>(typename Algebra<F>::Data{
      field, dim, std::move(rows), unit, std::move(labels)});

  Algebra<F> a(std::move(data));
  for (std::size_t i = 0; i < dim; ++i) {
    const Coords<F> bi = a.basis_element(i);
    if (a.multiply(a.unit(), bi) != bi || a.multiply(bi, a.unit()) != bi)
      throw UnitError(i);
    for (std::size_t j = 0; j < dim; ++j) {
      const Coords<F> bj = a.basis_element(j);
      const Coords<F> ij = a.multiply(bi, bj);
      for (std::size_t k = 0; k < dim; ++k) {
        const Coords<F> bk = a.basis_element(k);
        const Coords<F> left = a.multiply(ij, bk);
        const Coords<F> right = a.multiply(bi, a.multiply(bj, bk));
        if (left != right) {
          std::string detail = "(b" + std::to_string(i) + " b" +
                               std::to_string(j) + ") b" + std::to_string(k) +
                               " != b" + std::to_string(i) + " (b" +
                               std::to_string(j) + " b" + std::to_string(k) +
                               ")";
          throw AssociativityError(i, j, k, detail);
        }
      }
    }
  }
  return a;
}

/// Algebra morphism candidate: map is target-dim x source-dim, column i is
/// the image of b_i. Flags are set only after the corresponding exhaustive
/// check has passed.
template <Field F>
struct Morphism {
  Algebra<F> source, target;
  Matrix<F> map;
  bool multiplicative = false;
  bool unital = false;
  bool invertible = false;

  bool is_isomorphism() const { return multiplicative && unital && invertible; }

  Coords<F> apply(const Coords<F>& x) const {
    source.check_element(x);
    return map.apply(x);
  }
};

/// Runs all morphism checks without throwing; flags record the outcome.
template <Field F>
Morphism<F> probe_morphism(const Algebra<F>& source, const Algebra<F>& target,
                           const Matrix<F>& map) {
  if (!(source.field() == target.field()))
    throw FieldMismatchError("morphism between algebras over different fields");
  if (map.rows() != target.dim() || map.cols() != source.dim())
    throw DimensionError("morphism matrix must be target-dim x source-dim");
  Morphism<F> f{source, target, map};
  f.unital = map.apply(source.unit()) == target.unit();
  f.multiplicative = true;
  std::vector<Coords<F>> images;
  images.reserve(source.dim());
  for (std::size_t i = 0; i < source.dim(); ++i)
    images.push_back(map.apply(source.basis_element(i)));
  for (std::size_t i = 0; i < source.dim() && f.multiplicative; ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      const Coords<F> lhs = map.apply(source.multiply(
          source.basis_element(i), source.basis_element(j)));
      if (lhs != target.multiply(images[i], images[j])) {
        f.multiplicative = false;
        break;
      }
    }
  f.invertible =
      map.rows() == map.cols() && invert(map).has_value();
  return f;
}

/// Verified morphism or a structured error naming the first failure.
template <Field F>
Morphism<F> check_morphism(const Algebra<F>& source, const Algebra<F>& target,
                           const Matrix<F>& map) {
  Morphism<F> f = probe_morphism(source, target, map);
  if (!f.unital) throw NotUnitalError("morphism does not send unit to unit");
  if (!f.multiplicative) {
    for (std::size_t i = 0; i < source.dim(); ++i)
      for (std::size_t j = 0; j < source.dim(); ++j) {
        const Coords<F> lhs = map.apply(source.multiply(
            source.basis_element(i), source.basis_element(j)));
        const Coords<F> rhs =
            target.multiply(map.apply(source.basis_element(i)),
                            map.apply(source.basis_element(j)));
        if (lhs != rhs) throw NotMultiplicativeError(i, j);
      }
  }
  return f;
}

template <Field F>
struct DirectProductResult {
  Algebra<F> algebra;
  Morphism<F> embed_first, embed_second;  // multiplicative, not unital
};

/// A x B with componentwise product; basis of A first, then basis of B.
/// Unit is (1_A, 1_B). Labels become "(a,0)" and "(0,b)".
template <Field F>
DirectProductResult<F> direct_product(const Algebra<F>& a,
                                      const Algebra<F>& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatchError("direct product over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<StructureConstant<F>> table;
  for (const auto& sc : a.table_entries())
    table.push_back({sc.i, sc.j, sc.k, sc.value});
  for (const auto& sc : b.table_entries())
    table.push_back({na + sc.i, na + sc.j, na + sc.k, sc.value});
  Coords<F> unit(n, a.field().zero());
  for (std::size_t i = 0; i < na; ++i) unit[i] = a.unit()[i];
  for (std::size_t j = 0; j < nb; ++j) unit[na + j] = b.unit()[j];
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    labels.push_back("(" + a.label(i) + ",0)");
  for (std::size_t j = 0; j < nb; ++j)
    labels.push_back("(0," + b.label(j) + ")");
  Algebra<F> prod =
      build_algebra(a.field(), n, table, unit, std::move(labels));

  Matrix<F> ea(a.field(), n, na);
  for (std::size_t i = 0; i < na; ++i) ea.at(i, i) = a.field().one();
  Matrix<F> eb(a.field(), n, nb);
  for (std::size_t j = 0; j < nb; ++j) eb.at(na + j, j) = a.field().one();
  return {prod, probe_morphism(a, prod, ea), probe_morphism(b, prod, eb)};
}

/// A (x) B with (a(x)b)(c(x)d) = ac (x) bd. Basis pair (i, j) sits at index
/// i * dim(B) + j; labels become "a*b".
template <Field F>
Algebra<F> tensor_product(const Algebra<F>& a, const Algebra<F>& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatchError("tensor product over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<StructureConstant<F>> table;
  for (const auto& sa : a.table_entries())
    for (const auto& sb : b.table_entries())
      table.push_back({sa.i * nb + sb.i, sa.j * nb + sb.j, sa.k * nb + sb.k,
                       sa.value * sb.value});
  Coords<F> unit(n, a.field().zero());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels.push_back(a.label(i) + "*" + b.label(j));
  return build_algebra(a.field(), n, table, unit, std::move(labels));
}

/// Subspace of an algebra, stored as the canonical RREF basis (rows).
template <Field F>
struct Subspace {
  Matrix<F> basis_rows;
  std::size_t dim() const { return basis_rows.rows(); }
  std::size_t ambient_dim() const { return basis_rows.cols(); }
};

template <Field F>
Subspace<F> make_subspace(const F& field, std::size_t ambient,
                          const std::vector<Coords<F>>& vectors) {
  const RrefResult<F> rr =
      rref(Matrix<F>::from_rows(field, vectors, ambient));
  Matrix<F> basis(field, rr.rank(), ambient);
  for (std::size_t r = 0; r < rr.rank(); ++r)
    for (std::size_t c = 0; c < ambient; ++c)
      basis.at(r, c) = rr.reduced.at(r, c);
  return {std::move(basis)};
}

/// Residue of v after eliminating the subspace pivots; zero iff v lies in
/// the subspace.
template <Field F>
Coords<F> reduce_mod(const Subspace<F>& s, Coords<F> v) {
  const Matrix<F>& rows = s.basis_rows;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::size_t p = 0;
    while (p < rows.cols() && rows.at(r, p).is_zero()) ++p;
    if (p == rows.cols()) continue;
    const auto f = v[p];
    if (f.is_zero()) continue;
    for (std::size_t c = p; c < rows.cols(); ++c)
      if (!rows.at(r, c).is_zero()) v[c] = v[c] - f * rows.at(r, c);
  }
  return v;
}

template <Field F>
bool subspace_contains(const Subspace<F>& s, const Coords<F>& v) {
  for (const auto& e : reduce_mod(s, v))
    if (!e.is_zero()) return false;
  return true;
}

/// Smallest subspace containing the generators and closed under left and
/// right multiplication by every basis element; span saturation to a fixed
/// point.
template <Field F>
Subspace<F> ideal_closure(const Algebra<F>& a,
                          const std::vector<Coords<F>>& generators) {
  for (const auto& g : generators) a.check_element(g);
  std::vector<Coords<F>> span = generators;
  Subspace<F> current = make_subspace(a.field(), a.dim(), span);
  for (;;) {
    std::vector<Coords<F>> next;
    for (std::size_t r = 0; r < current.dim(); ++r)
      next.push_back(current.basis_rows.row(r));
    const std::size_t before = current.dim();
    for (std::size_t r = 0; r < before; ++r) {
      const Coords<F> v = current.basis_rows.row(r);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        next.push_back(a.multiply(a.basis_element(i), v));
        next.push_back(a.multiply(v, a.basis_element(i)));
      }
    }
    Subspace<F> grown = make_subspace(a.field(), a.dim(), next);
    if (grown.dim() == before) return grown;
    current = std::move(grown);
  }
}

template <Field F>
struct QuotientResult {
  Algebra<F> algebra;
  Morphism<F> projection;  // verified surjective morphism
};

/// Quotient by a two-sided ideal. The complement basis is the set of
/// non-pivot coordinates of the ideal's RREF basis; representatives are the
/// reductions against that basis.
template <Field F>
QuotientResult<F> quotient(const Algebra<F>& a, const Subspace<F>& ideal) {
  if (ideal.ambient_dim() != a.dim())
    throw DimensionError("ideal lives in a different ambient space");
  // re-run the closure condition
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const Coords<F> v = ideal.basis_rows.row(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!subspace_contains(ideal, a.multiply(a.basis_element(i), v)) ||
          !subspace_contains(ideal, a.multiply(v, a.basis_element(i))))
        throw NotAnIdealError("subspace is not closed under multiplication");
    }
  }
  if (ideal.dim() == a.dim())
    throw Error("quotient by the whole algebra is not an algebra");

  std::vector<bool> is_pivot(a.dim(), false);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    std::size_t p = 0;
    while (p < a.dim() && ideal.basis_rows.at(r, p).is_zero()) ++p;
    if (p < a.dim()) is_pivot[p] = true;
  }
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < a.dim(); ++c)
    if (!is_pivot[c]) complement.push_back(c);
  const std::size_t m = complement.size();

  auto project = [&](const Coords<F>& x) {
    const Coords<F> red = reduce_mod(ideal, x);
    Coords<F> out(m, a.field().zero());
    for (std::size_t c = 0; c < m; ++c) out[c] = red[complement[c]];
    return out;
  };

  std::vector<StructureConstant<F>> table;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Coords<F> prod = project(a.multiply(
          a.basis_element(complement[i]), a.basis_element(complement[j])));
      for (std::size_t k = 0; k < m; ++k)
        if (!prod[k].is_zero()) table.push_back({i, j, k, prod[k]});
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t c : complement) labels.push_back(a.label(c));
  Algebra<F> q = build_algebra(a.field(), m, table, project(a.unit()),
                               std::move(labels));

  Matrix<F> pmat(a.field(), m, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Coords<F> col = project(a.basis_element(j));
    for (std::size_t i = 0; i < m; ++i) pmat.at(i, j) = col[i];
  }
  Morphism<F> pi = probe_morphism(a, q, pmat);
  if (!pi.multiplicative || !pi.unital)
    throw InternalCheckError("quotient projection failed verification");
  return {std::move(q), std::move(pi)};
}

}  // namespace frobkit
