#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "frobkit/errors.hpp"

namespace frobkit {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator. All arithmetic is exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
  Rational(std::int64_t num, std::int64_t den)
      : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" (q nonzero). Returns nullopt on anything else.
  static std::optional<Rational> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c == '-') {
        if (pos != 0 && text[pos - 1] != '/') return std::nullopt;
      } else if (c == '/') {
        if (seen_slash || !seen_digit) return std::nullopt;
        seen_slash = true;
      } else if (c >= '0' && c <= '9') {
        seen_digit = true;
      } else {
        return std::nullopt;
      }
    }
    if (!seen_digit || text.back() == '/' || text.back() == '-')
      return std::nullopt;
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, std::string(text).c_str(), 10) != 0) {
      mpq_clear(q);
      return std::nullopt;
    }
    mpq_class v(q);
    mpq_clear(q);
    if (v.get_den() == 0) return std::nullopt;
    return Rational(std::move(v));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  /// "p/q" in lowest terms, "p" when q = 1.
  std::string str() const { return v_.get_str(); }

  const mpq_class& value() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return wrap(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return wrap(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return wrap(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

private:
  // Operands are canonical, so GMP results are canonical; skip the re-scan.
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  mpq_class v_;
};

}  // namespace frobkit
