#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "frobkit/errors.hpp"
#include "frobkit/prime_field.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

/// An exact field usable as a coefficient domain. The field object is the
/// descriptor; it mints zero/one and parses/prints scalars.
template <typename F>
concept Field = requires(const F f, const typename F::Element a,
                         const typename F::Element b, std::int64_t n,
                         std::string_view text) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_int(n) } -> std::convertible_to<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.admits(a) } -> std::convertible_to<bool>;
  { f.parse_element(text) } -> std::convertible_to<std::optional<typename F::Element>>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.name() } -> std::convertible_to<std::string>;
  { f == f } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<typename F::Element>;
  { a - b } -> std::convertible_to<typename F::Element>;
  { a * b } -> std::convertible_to<typename F::Element>;
  { a / b } -> std::convertible_to<typename F::Element>;
  { -a } -> std::convertible_to<typename F::Element>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(); }
  Element one() const { return Rational(1); }
  Element from_int(std::int64_t n) const { return Rational(n); }
  std::uint64_t characteristic() const { return 0; }
  bool admits(const Element&) const { return true; }
  std::optional<Element> parse_element(std::string_view text) const {
    return Rational::parse(text);
  }
  std::string to_string(const Element& e) const { return e.str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) {
    return true;
  }
  friend bool operator!=(const RationalField&, const RationalField&) {
    return false;
  }
};

class PrimeField {
public:
  using Element = Fp;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    if (p >> 62) throw Error("modulus too large");
  }

  std::uint64_t modulus() const { return p_; }
  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_int(std::int64_t n) const { return Fp::from_signed(n, p_); }
  std::uint64_t characteristic() const { return p_; }
  bool admits(const Element& e) const { return e.modulus() == p_; }

  /// Bare integers only (optionally negative); reduced mod p.
  std::optional<Element> parse_element(std::string_view text) const {
    if (text.empty()) return std::nullopt;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c == '-' && pos == 0 && text.size() > 1) continue;
      if (c < '0' || c > '9') return std::nullopt;
    }
    mpz_class z(std::string(text), 10);
    mpz_class m = z % mpz_class(static_cast<unsigned long>(p_));
    if (m < 0) m += mpz_class(static_cast<unsigned long>(p_));
    return Fp(m.get_ui(), p_);
  }
  std::string to_string(const Element& e) const { return e.str(); }
  std::string name() const { return "Fp " + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) {
    return !(a == b);
  }

private:
  std::uint64_t p_;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

}  // namespace frobkit
