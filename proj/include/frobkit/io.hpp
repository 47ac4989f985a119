#pragma once

// Text formats, one directive per line, '#' starts a comment.
//
// Algebra file:            Tensor file:          Quiver file:
//   field Q | field Fp 5     tensor dim N          vertex N
//   dim N                    i j coeff             arrow label src tgt
//   label I NAME             ...                   relation a.b-2*c.d
//   unit I:C I:C ...
//   mul I J K:C K:C ...    Generators file:
//                            gen I:C I:C ...
//
// Unlisted mul lines mean zero product. Rationals print as "p/q" in lowest
// terms ("p" when q = 1); F_p residues print as bare integers. Quiver
// vertices are 1-based in files, arrows compose left to right.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobkit/algebra.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/zoo.hpp"

namespace frobkit {

using AnyAlgebra = std::variant<Algebra<RationalField>, Algebra<PrimeField>>;

namespace detail {

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string raw = text.substr(pos, eol - pos);
    if (std::size_t hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
        ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r')
        ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    ++number;
    pos = eol + 1;
  }
  return lines;
}

inline std::size_t parse_index(const Line& line, const std::string& token,
                               std::size_t limit, const char* what) {
  if (token.empty()) throw ParseError(line.number, std::string(what) + " missing");
  for (char c : token)
    if (c < '0' || c > '9')
      throw ParseError(line.number,
                       std::string(what) + " '" + token + "' is not a number");
  unsigned long long v = 0;
  try {
    v = std::stoull(token);
  } catch (...) {
    throw ParseError(line.number, std::string(what) + " out of range");
  }
  if (v >= limit)
    throw ParseError(line.number,
                     std::string(what) + " " + token + " out of range");
  return static_cast<std::size_t>(v);
}

template <Field F>
typename F::Element parse_coeff(const F& field, const Line& line,
                                const std::string& token) {
  const auto parsed = field.parse_element(token);
  if (!parsed)
    throw ParseError(line.number, "bad coefficient '" + token + "' over " +
                                      field.name());
  return *parsed;
}

// "I:C" with I < dim
template <Field F>
std::pair<std::size_t, typename F::Element> parse_indexed_coeff(
    const F& field, const Line& line, const std::string& token,
    std::size_t dim) {
  const std::size_t colon = token.find(':');
  if (colon == std::string::npos)
    throw ParseError(line.number,
                     "expected index:coefficient, got '" + token + "'");
  const std::size_t idx =
      parse_index(line, token.substr(0, colon), dim, "basis index");
  return {idx, parse_coeff(field, line, token.substr(colon + 1))};
}

inline void check_label(std::size_t line, const std::string& label) {
  if (label.empty()) throw ParseError(line, "empty label");
  for (char c : label)
    if (c == '#' || c == ' ' || c == '\t')
      throw ParseError(line, "label '" + label + "' contains a disallowed character");
}

template <Field F>
Algebra<F> parse_algebra_body(const F& field, const std::vector<Line>& lines,
                              std::size_t start) {
  std::optional<std::size_t> dim;
  std::size_t dim_line = lines.empty() ? 1 : lines[0].number;
  std::map<std::size_t, std::string> labels;
  std::optional<Coords<F>> unit;
  std::size_t unit_line = 0;
  std::vector<StructureConstant<F>> table;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mul_lines;

  for (std::size_t li = start; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& head = line.tokens[0];
    if (head == "field") {
      throw ParseError(line.number, "duplicate field directive");
    } else if (head == "dim") {
      if (dim) throw ParseError(line.number, "duplicate dim directive");
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "usage: dim N");
      const std::size_t n = parse_index(line, line.tokens[1],
                                        std::size_t(1) << 20, "dimension");
      if (n == 0) throw ParseError(line.number, "dimension must be at least 1");
      dim = n;
      dim_line = line.number;
    } else if (head == "label") {
      if (!dim) throw ParseError(line.number, "label before dim");
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "usage: label INDEX NAME");
      const std::size_t idx =
          parse_index(line, line.tokens[1], *dim, "basis index");
      if (labels.count(idx))
        throw ParseError(line.number, "duplicate label for index " +
                                          std::to_string(idx));
      check_label(line.number, line.tokens[2]);
      labels[idx] = line.tokens[2];
    } else if (head == "unit") {
      if (!dim) throw ParseError(line.number, "unit before dim");
      if (unit) throw ParseError(line.number, "duplicate unit directive");
      if (line.tokens.size() < 2)
        throw ParseError(line.number, "unit needs at least one index:coeff");
      Coords<F> u(*dim, field.zero());
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const auto [idx, c] =
            parse_indexed_coeff(field, line, line.tokens[t], *dim);
        u[idx] += c;
      }
      unit = std::move(u);
      unit_line = line.number;
    } else if (head == "mul") {
      if (!dim) throw ParseError(line.number, "mul before dim");
      if (line.tokens.size() < 3)
        throw ParseError(line.number, "usage: mul I J [K:C ...]");
      const std::size_t i = parse_index(line, line.tokens[1], *dim, "basis index");
      const std::size_t j = parse_index(line, line.tokens[2], *dim, "basis index");
      if (mul_lines.count({i, j}))
        throw ParseError(line.number,
                         "duplicate mul directive for (" + std::to_string(i) +
                             ", " + std::to_string(j) + ")");
      mul_lines[{i, j}] = line.number;
      for (std::size_t t = 3; t < line.tokens.size(); ++t) {
        const auto [k, c] =
            parse_indexed_coeff(field, line, line.tokens[t], *dim);
        table.push_back({i, j, k, c});
      }
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!dim) throw ParseError(dim_line, "missing dim directive");
  if (!unit) throw ParseError(dim_line, "missing unit directive");
  std::vector<std::string> label_list;
  label_list.reserve(*dim);
  for (std::size_t i = 0; i < *dim; ++i) {
    auto it = labels.find(i);
    label_list.push_back(it != labels.end() ? it->second
                                            : "b" + std::to_string(i));
  }
  try {
    return build_algebra(field, *dim, table, *unit, std::move(label_list));
  } catch (const AssociativityError& e) {
    auto it = mul_lines.find({e.i, e.j});
    if (it == mul_lines.end()) it = mul_lines.find({e.j, e.k});
    throw SemanticError(it != mul_lines.end() ? it->second : dim_line,
                        e.what());
  } catch (const UnitError& e) {
    throw SemanticError(unit_line, e.what());
  } catch (const Error& e) {
    throw SemanticError(dim_line, e.what());
  }
}

}  // namespace detail

/// Parse an algebra description. The field directive must come first.
inline AnyAlgebra parse_algebra(const std::string& text) {
  const std::vector<detail::Line> lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty algebra description");
  const detail::Line& first = lines[0];
  if (first.tokens[0] != "field")
    throw ParseError(first.number, "first directive must be 'field'");
  if (first.tokens.size() == 2 && first.tokens[1] == "Q")
    return detail::parse_algebra_body(RationalField{}, lines, 1);
  if (first.tokens.size() == 3 && first.tokens[1] == "Fp") {
    const std::size_t p = detail::parse_index(
        first, first.tokens[2], std::size_t(1) << 62, "modulus");
    try {
      return detail::parse_algebra_body(PrimeField(p), lines, 1);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(first.number, e.what());
    }
  }
  throw ParseError(first.number, "usage: 'field Q' or 'field Fp P'");
}

/// Canonical printer; parse(print(a)) == a, and printing a parsed canonical
/// file reproduces it byte for byte.
template <Field F>
std::string print_algebra(const Algebra<F>& a) {
  for (const std::string& l : a.labels()) detail::check_label(0, l);
  std::string out = "field " + a.field().name() + "\n";
  out += "dim " + std::to_string(a.dim()) + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    out += "label " + std::to_string(i) + " " + a.label(i) + "\n";
  out += "unit";
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.unit()[i].is_zero())
      out += " " + std::to_string(i) + ":" + a.field().to_string(a.unit()[i]);
  out += "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& row = a.basis_product(i, j);
      if (row.empty()) continue;
      out += "mul " + std::to_string(i) + " " + std::to_string(j);
      for (const auto& [k, c] : row)
        out += " " + std::to_string(k) + ":" + a.field().to_string(c);
      out += "\n";
    }
  return out;
}

/// Parse a file of one or more tensor blocks over a known field.
template <Field F>
std::vector<Matrix<F>> parse_tensors(const F& field, const std::string& text,
                                     std::optional<std::size_t> expect_dim) {
  const std::vector<detail::Line> lines = detail::tokenize(text);
  std::vector<Matrix<F>> tensors;
  std::optional<std::size_t> dim;
  std::vector<std::vector<bool>> seen;
  for (const detail::Line& line : lines) {
    if (line.tokens[0] == "tensor") {
      if (line.tokens.size() != 3 || line.tokens[1] != "dim")
        throw ParseError(line.number, "usage: tensor dim N");
      const std::size_t n = detail::parse_index(
          line, line.tokens[2], std::size_t(1) << 20, "dimension");
      if (n == 0) throw ParseError(line.number, "tensor dimension must be >= 1");
      if (expect_dim && n != *expect_dim)
        throw ParseError(line.number,
                         "tensor dimension " + std::to_string(n) +
                             " does not match the algebra dimension " +
                             std::to_string(*expect_dim));
      dim = n;
      tensors.emplace_back(field, n, n);
      seen.assign(n, std::vector<bool>(n, false));
    } else {
      if (!dim)
        throw ParseError(line.number, "entry before 'tensor dim N' header");
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "usage: I J COEFF");
      const std::size_t i =
          detail::parse_index(line, line.tokens[0], *dim, "row index");
      const std::size_t j =
          detail::parse_index(line, line.tokens[1], *dim, "column index");
      if (seen[i][j])
        throw ParseError(line.number, "duplicate tensor entry (" +
                                          std::to_string(i) + ", " +
                                          std::to_string(j) + ")");
      seen[i][j] = true;
      tensors.back().at(i, j) =
          detail::parse_coeff(field, line, line.tokens[2]);
    }
  }
  if (tensors.empty()) throw ParseError(1, "no tensor block found");
  return tensors;
}

template <Field F>
Matrix<F> parse_tensor(const F& field, const std::string& text,
                       std::optional<std::size_t> expect_dim) {
  std::vector<Matrix<F>> tensors = parse_tensors(field, text, expect_dim);
  if (tensors.size() != 1)
    throw ParseError(1, "expected exactly one tensor block");
  return std::move(tensors.front());
}

/// Sparse row-major printer, canonical for round trips.
template <Field F>
std::string print_tensor(const Matrix<F>& t) {
  if (t.rows() != t.cols()) throw DimensionError("tensor must be square");
  std::string out = "tensor dim " + std::to_string(t.rows()) + "\n";
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t.at(i, j).is_zero())
        out += std::to_string(i) + " " + std::to_string(j) + " " +
               t.field().to_string(t.at(i, j)) + "\n";
  return out;
}

namespace detail {

inline bool valid_arrow_label(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                       (c >= '0' && c <= '9') || c == '_';
    if (!alnum) return false;
  }
  const char c0 = label[0];
  return !(c0 >= '0' && c0 <= '9');
}

// "2*a.b" or "a.b" -> (coefficient, arrow index list)
template <Field F>
PathTerm<F> parse_path_term(const F& field, const Line& line,
                            const std::string& term,
                            const std::map<std::string, std::size_t>& arrows) {
  std::string coeff_text = "1";
  std::string path_text = term;
  if (const std::size_t star = term.find('*'); star != std::string::npos) {
    coeff_text = term.substr(0, star);
    path_text = term.substr(star + 1);
  }
  PathTerm<F> out{parse_coeff(field, line, coeff_text), {}};
  std::size_t pos = 0;
  while (pos <= path_text.size()) {
    std::size_t dot = path_text.find('.', pos);
    if (dot == std::string::npos) dot = path_text.size();
    const std::string label = path_text.substr(pos, dot - pos);
    auto it = arrows.find(label);
    if (it == arrows.end())
      throw ParseError(line.number, "unknown arrow '" + label + "'");
    out.arrows.push_back(it->second);
    pos = dot + 1;
    if (dot == path_text.size()) break;
  }
  if (out.arrows.empty())
    throw ParseError(line.number, "empty path in relation");
  return out;
}

}  // namespace detail

/// Quiver description: vertex count, labelled arrows (1-based endpoints) and
/// optional relations, e.g. "relation a.b-g.d" or "relation x.x.x".
template <Field F>
Quiver<F> parse_quiver(const F& field, const std::string& text) {
  const std::vector<detail::Line> lines = detail::tokenize(text);
  Quiver<F> q;
  std::map<std::string, std::size_t> arrow_index;
  bool have_vertices = false;
  for (const detail::Line& line : lines) {
    const std::string& head = line.tokens[0];
    if (head == "vertex") {
      if (have_vertices)
        throw ParseError(line.number, "duplicate vertex directive");
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "usage: vertex N");
      q.vertices = detail::parse_index(line, line.tokens[1],
                                       std::size_t(1) << 20, "vertex count");
      if (q.vertices == 0)
        throw ParseError(line.number, "need at least one vertex");
      have_vertices = true;
    } else if (head == "arrow") {
      if (!have_vertices) throw ParseError(line.number, "arrow before vertex");
      if (line.tokens.size() != 4)
        throw ParseError(line.number, "usage: arrow LABEL SRC TGT");
      const std::string& label = line.tokens[1];
      if (!detail::valid_arrow_label(label))
        throw ParseError(line.number, "bad arrow label '" + label + "'");
      if (arrow_index.count(label))
        throw ParseError(line.number, "duplicate arrow label '" + label + "'");
      const std::size_t src = detail::parse_index(
          line, line.tokens[2], q.vertices + 1, "source vertex");
      const std::size_t tgt = detail::parse_index(
          line, line.tokens[3], q.vertices + 1, "target vertex");
      if (src == 0 || tgt == 0)
        throw ParseError(line.number, "vertices are 1-based");
      arrow_index[label] = q.arrows.size();
      q.arrows.push_back({label, src - 1, tgt - 1});
    } else if (head == "relation") {
      if (line.tokens.size() < 2)
        throw ParseError(line.number, "usage: relation TERM[+-TERM...]");
      std::string expr;
      for (std::size_t t = 1; t < line.tokens.size(); ++t)
        expr += line.tokens[t];
      Relation<F> rel;
      std::size_t pos = 0;
      bool negative = false;
      if (!expr.empty() && (expr[0] == '+' || expr[0] == '-')) {
        negative = expr[0] == '-';
        pos = 1;
      }
      while (pos < expr.size()) {
        std::size_t end = pos;
        while (end < expr.size() && expr[end] != '+' && expr[end] != '-')
          ++end;
        if (end == pos) throw ParseError(line.number, "empty relation term");
        PathTerm<F> term = detail::parse_path_term(
            field, line, expr.substr(pos, end - pos), arrow_index);
        if (negative) term.coeff = -term.coeff;
        rel.terms.push_back(std::move(term));
        if (end == expr.size()) break;
        negative = expr[end] == '-';
        pos = end + 1;
        if (pos >= expr.size())
          throw ParseError(line.number, "dangling sign in relation");
      }
      if (rel.terms.empty())
        throw ParseError(line.number, "empty relation");
      q.relations.push_back(std::move(rel));
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!have_vertices) throw ParseError(1, "missing vertex directive");
  return q;
}

/// Generators file for quotients: one sparse element per "gen" line.
template <Field F>
std::vector<Coords<F>> parse_generators(const F& field,
                                        const std::string& text,
                                        std::size_t dim) {
  const std::vector<detail::Line> lines = detail::tokenize(text);
  std::vector<Coords<F>> gens;
  for (const detail::Line& line : lines) {
    if (line.tokens[0] != "gen")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] +
                                        "' (expected 'gen')");
    Coords<F> g(dim, field.zero());
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const auto [idx, c] =
          detail::parse_indexed_coeff(field, line, line.tokens[t], dim);
      g[idx] += c;
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace frobkit
