#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/algebra.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"

namespace frobkit {

/// Quiver arrow; vertices are 0-based.
struct Arrow {
  std::string label;
  std::size_t src, tgt;
};

/// One term of a relation: coeff * (arrow sequence). Paths compose left to
/// right: "ab" means a then b.
template <Field F>
struct PathTerm {
  typename F::Element coeff;
  std::vector<std::size_t> arrows;  // arrow indices
};

template <Field F>
struct Relation {
  std::vector<PathTerm<F>> terms;
};

template <Field F>
struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation<F>> relations;
};

namespace detail {

inline bool quiver_has_cycle(std::size_t vertices,
                             const std::vector<Arrow>& arrows) {
  std::vector<std::vector<std::size_t>> out(vertices);
  for (const Arrow& a : arrows) out[a.src].push_back(a.tgt);
  std::vector<int> color(vertices, 0);
  // iterative DFS, 0 = white, 1 = on stack, 2 = done
  for (std::size_t root = 0; root < vertices; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        std::size_t w = out[v][next++];
        if (color[w] == 1) return true;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace detail

/// Path algebra kQ, optionally modulo the quiver's relations. Basis: vertex
/// idempotents e_1..e_m first, then paths by increasing length in
/// enumeration order. A cyclic quiver needs a bound; the computation then
/// works in the truncation by paths longer than the bound and certifies that
/// every path of exactly the bound length dies in the relation ideal. For
/// admissible relation ideals (the ideal contains all long-enough paths)
/// that certificate makes the result equal to the untruncated quotient;
/// ideals that only become cofinite in the path-length topology are not
/// supported. If some bound-length path survives, the dimension cannot be
/// certified finite and construction fails.
template <Field F>
Algebra<F> path_algebra(const F& field, const Quiver<F>& quiver,
                        std::optional<std::size_t> bound = std::nullopt) {
  const std::size_t nv = quiver.vertices;
  if (nv == 0) throw Error("quiver needs at least one vertex");
  for (const Arrow& a : quiver.arrows)
    if (a.src >= nv || a.tgt >= nv)
      throw Error("arrow endpoint out of range");
  if (bound && *bound == 0) throw Error("path length bound must be positive");

  const bool cyclic = detail::quiver_has_cycle(nv, quiver.arrows);
  if (cyclic && !bound)
    throw InfiniteDimensionalError(
        "quiver has a cycle; the path algebra is infinite dimensional "
        "unless a bound and truncating relations are given");

  // enumerate paths by increasing length; index 0..nv-1 are trivial paths
  struct Path {
    std::size_t src, tgt;
    std::vector<std::size_t> arrows;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < nv; ++v) paths.push_back({v, v, {}});
  std::map<std::vector<std::size_t>, std::size_t> index_of;
  std::size_t level_begin = 0, level_end = paths.size();
  std::size_t max_len = 0;
  while (level_end > level_begin) {
    if (bound && max_len == *bound) break;
    // arrow-major extension keeps declaration order within each length
    for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai)
      for (std::size_t p = level_begin; p < level_end; ++p) {
        if (quiver.arrows[ai].src != paths[p].tgt) continue;
        Path ext{paths[p].src, quiver.arrows[ai].tgt, paths[p].arrows};
        ext.arrows.push_back(ai);
        index_of.emplace(ext.arrows, paths.size());
        paths.push_back(std::move(ext));
      }
    level_begin = level_end;
    level_end = paths.size();
    if (level_end > level_begin) ++max_len;
  }
  const std::size_t n = paths.size();

  // product = concatenation when composable; paths beyond the enumerated
  // length are truncated to zero (certified below)
  std::vector<StructureConstant<F>> table;
  const auto one = field.one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Path& p = paths[i];
      const Path& q = paths[j];
      if (p.tgt != q.src) continue;
      if (p.arrows.empty()) {
        table.push_back({i, j, j, one});
        continue;
      }
      if (q.arrows.empty()) {
        table.push_back({i, j, i, one});
        continue;
      }
      std::vector<std::size_t> seq = p.arrows;
      seq.insert(seq.end(), q.arrows.begin(), q.arrows.end());
      auto it = index_of.find(seq);
      if (it != index_of.end()) table.push_back({i, j, it->second, one});
    }
  Coords<F> unit(n, field.zero());
  for (std::size_t v = 0; v < nv; ++v) unit[v] = one;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < nv; ++v)
    labels.push_back("e" + std::to_string(v + 1));
  for (std::size_t p = nv; p < n; ++p) {
    std::string l;
    for (std::size_t ai : paths[p].arrows) l += quiver.arrows[ai].label;
    labels.push_back(l);
  }
  Algebra<F> truncated = build_algebra(field, n, table, unit, labels);

  // relations as elements of the truncated algebra
  std::vector<Coords<F>> generators;
  for (const Relation<F>& rel : quiver.relations) {
    if (rel.terms.empty()) throw Error("empty relation");
    Coords<F> g(n, field.zero());
    std::optional<std::pair<std::size_t, std::size_t>> endpoints;
    for (const PathTerm<F>& term : rel.terms) {
      if (term.arrows.empty()) throw Error("relation term has empty path");
      for (std::size_t ai : term.arrows)
        if (ai >= quiver.arrows.size())
          throw Error("relation refers to an unknown arrow");
      std::size_t src = quiver.arrows[term.arrows.front()].src;
      std::size_t tgt = quiver.arrows[term.arrows.front()].tgt;
      for (std::size_t s = 1; s < term.arrows.size(); ++s) {
        if (quiver.arrows[term.arrows[s]].src != tgt)
          throw Error("relation path is not composable");
        tgt = quiver.arrows[term.arrows[s]].tgt;
      }
      if (!endpoints)
        endpoints = {src, tgt};
      else if (endpoints->first != src || endpoints->second != tgt)
        throw Error("relation terms do not share source and target");
      auto it = index_of.find(term.arrows);
      if (it == index_of.end())
        throw Error("relation path exceeds the length bound");
      g[it->second] += term.coeff;
    }
    generators.push_back(std::move(g));
  }

  if (generators.empty() && !(bound && max_len == *bound)) return truncated;

  Subspace<F> ideal = ideal_closure(truncated, generators);
  // stabilization: every path of maximal enumerated length must die
  if (bound && max_len == *bound) {
    for (std::size_t p = nv; p < n; ++p) {
      if (paths[p].arrows.size() != max_len) continue;
      Coords<F> v(n, field.zero());
      v[p] = one;
      if (!subspace_contains(ideal, v))
        throw InfiniteDimensionalError(
            "dimension does not stabilize within bound " +
            std::to_string(*bound) + ": path " + labels[p] + " survives");
    }
  }
  if (ideal.dim() == 0) return truncated;
  return quotient(truncated, ideal).algebra;
}

namespace detail {

inline std::string cyclic_generator_letter(std::size_t position) {
  if (position == 0) return "g";
  if (position == 1) return "h";
  return "g" + std::to_string(position + 1);
}

template <Field F>
Algebra<F> cyclic_group_algebra(const F& field, std::size_t order,
                                const std::string& letter) {
  std::vector<StructureConstant<F>> table;
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table.push_back({i, j, (i + j) % order, field.one()});
  Coords<F> unit(order, field.zero());
  unit[0] = field.one();
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (i == 0)
      labels.push_back("1");
    else if (i == 1)
      labels.push_back(letter);
    else
      labels.push_back(letter + "^" + std::to_string(i));
  }
  return build_algebra(field, order, table, unit, std::move(labels));
}

}  // namespace detail

/// Group algebra of Z_{n_1} x ... x Z_{n_p}, built as the tensor product of
/// cyclic group algebras k[g]/(g^n - 1) in the given order.
template <Field F>
Algebra<F> abelian_group_algebra(const F& field,
                                 const std::vector<std::size_t>& factors) {
  if (factors.empty()) throw Error("need at least one invariant factor");
  for (std::size_t n : factors)
    if (n == 0) throw Error("invariant factors must be at least 1");
  Algebra<F> acc = detail::cyclic_group_algebra(
      field, factors[0], detail::cyclic_generator_letter(0));
  for (std::size_t f = 1; f < factors.size(); ++f)
    acc = tensor_product(acc, detail::cyclic_group_algebra(
                                  field, factors[f],
                                  detail::cyclic_generator_letter(f)));
  return acc;
}

/// M_n(k) on the matrix units E_{ij} (row-major), E_{ij} E_{kl} =
/// delta_{jk} E_{il}.
template <Field F>
Algebra<F> matrix_algebra(const F& field, std::size_t n) {
  if (n == 0) throw Error("matrix algebra needs n >= 1");
  std::vector<StructureConstant<F>> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        table.push_back({i * n + j, j * n + l, i * n + l, field.one()});
  Coords<F> unit(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = field.one();
  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  return build_algebra(field, n * n, table, unit, std::move(labels));
}

/// k[x]/(x^{n+1}) on 1, x, ..., x^n.
template <Field F>
Algebra<F> truncated_polynomial(const F& field, std::size_t n) {
  const std::size_t dim = n + 1;
  std::vector<StructureConstant<F>> table;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (i + j < dim) table.push_back({i, j, i + j, field.one()});
  Coords<F> unit(dim, field.zero());
  unit[0] = field.one();
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i == 0)
      labels.push_back("1");
    else if (i == 1)
      labels.push_back("x");
    else
      labels.push_back("x^" + std::to_string(i));
  }
  return build_algebra(field, dim, table, unit, std::move(labels));
}

}  // namespace frobkit
