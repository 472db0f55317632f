#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qhalg {

/// Exact field element: either an arbitrary-precision rational or a residue
/// modulo a small prime p.
///
/// A value constructed without a modulus is "field agnostic": integer
/// rationals combine freely with residues of any prime, and adopt that
/// prime on the first mixed operation. Mixing two different primes throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Scalar residue(long v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  /// Value as a rational; residues map to their representative in [0, p).
  mpq_class to_rational() const { return p_ ? mpq_class(r_) : q_; }
  /// Decimal rendering: "3", "-1/2"; residues render as their representative.
  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

  std::size_t hash() const;

 private:
  // Brings an agnostic rational into F_p; throws if the denominator is
  // divisible by p.
  static std::uint32_t reduce(const mpq_class& q, std::uint32_t p);
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);
  std::uint32_t residue_in(std::uint32_t p) const;

  mpq_class q_{0};
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
};

/// The coefficient field of a computation: Q (p == 0) or F_p.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const { return p ? Scalar::residue(v, p) : Scalar(v); }
  /// Brings any scalar (e.g. a parsed rational coefficient) into this field.
  Scalar embed(const Scalar& s) const;
  /// Parses "3", "-2", "1/2".
  Scalar parse(const std::string& text) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
};

}  // namespace qhalg

template <>
struct std::hash<qhalg::Scalar> {
  std::size_t operator()(const qhalg::Scalar& s) const { return s.hash(); }
};
