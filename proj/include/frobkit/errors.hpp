#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobkit {

/// Base class for all frobkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mixing scalars, matrices or algebras over different fields.
class FieldMismatchError : public Error {
public:
  using Error::Error;
};

/// Incompatible shapes in matrix or element operations.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Structure-constant table fails (b_i b_j) b_k = b_i (b_j b_k).
class AssociativityError : public Error {
public:
  AssociativityError(std::size_t i_, std::size_t j_, std::size_t k_,
                     const std::string& detail)
      : Error("associativity violated at (" + std::to_string(i_) + ", " +
              std::to_string(j_) + ", " + std::to_string(k_) + "): " + detail),
        i(i_), j(j_), k(k_) {}
  std::size_t i, j, k;
};

/// Claimed unit does not act as a two-sided identity on a basis vector.
class UnitError : public Error {
public:
  explicit UnitError(std::size_t index_)
      : Error("unit law violated on basis index " + std::to_string(index_)),
        index(index_) {}
  std::size_t index;
};

/// Subspace handed to quotient() is not a two-sided ideal.
class NotAnIdealError : public Error {
public:
  using Error::Error;
};

class NotUnitalError : public Error {
public:
  using Error::Error;
};

class NotMultiplicativeError : public Error {
public:
  NotMultiplicativeError(std::size_t i_, std::size_t j_)
      : Error("morphism is not multiplicative on basis pair (" +
              std::to_string(i_) + ", " + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
  std::size_t i, j;
};

/// Transport along a morphism that is not a verified isomorphism.
class MorphismError : public Error {
public:
  using Error::Error;
};

/// A theorem the library relies on failed to hold; always a bug.
class InternalCheckError : public Error {
public:
  using Error::Error;
};

class UnsupportedFieldError : public Error {
public:
  using Error::Error;
};

/// Path algebra is not (or cannot be certified) finite dimensional.
class InfiniteDimensionalError : public Error {
public:
  using Error::Error;
};

/// Malformed input text; `line` is 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  std::size_t line;
};

/// Syntactically valid input that fails algebra validation (associativity,
/// unit law, field consistency), located at the most relevant line.
class SemanticError : public ParseError {
public:
  using ParseError::ParseError;
};

}  // namespace frobkit
