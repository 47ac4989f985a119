#pragma once

#include <cstdint>
#include <string>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e,
                            std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Residue in F_p. Each value carries its modulus so mixed-field arithmetic
/// is caught at the scalar level.
class Fp {
public:
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static Fp from_signed(std::int64_t value, std::uint64_t p) {
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1 % p_; }
  std::string str() const { return std::to_string(v_); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(detail::mulmod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    a.check(b);
    return a * b.inverse();
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (v_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_),
                 new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw FieldMismatchError("arithmetic between F_" + std::to_string(p_) +
                               " and F_" + std::to_string(o.p_));
  }

  std::uint64_t v_, p_;
};

}  // namespace frobkit
