#include "qhalg/scalar.hpp"

#include <stdexcept>

namespace qhalg {

namespace {

std::uint32_t mod_long(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Scalar Scalar::residue(long v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = mod_long(v, p);
  return s;
}

std::uint32_t Scalar::reduce(const mpq_class& q, std::uint32_t p) {
  mpz_class pz(p);
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0) throw std::domain_error("rational has no image in F_" + std::to_string(p));
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  return static_cast<std::uint32_t>(std::uint64_t{n} * mod_inverse(d, p) % p);
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_)
    throw std::logic_error("mixing scalars from different prime fields");
  return a.p_ ? a.p_ : b.p_;
}

std::uint32_t Scalar::residue_in(std::uint32_t p) const {
  return p_ ? r_ : reduce(q_, p);
}

std::string Scalar::str() const {
  return p_ ? std::to_string(r_) : q_.get_str();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (p_)
    s.r_ = mod_inverse(r_, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  Scalar s;
  if (p) {
    s.p_ = p;
    s.r_ = static_cast<std::uint32_t>((std::uint64_t{a.residue_in(p)} + b.residue_in(p)) % p);
  } else {
    s.q_ = a.q_ + b.q_;
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  Scalar s;
  if (p) {
    s.p_ = p;
    s.r_ = static_cast<std::uint32_t>(std::uint64_t{a.residue_in(p)} * b.residue_in(p) % p);
  } else {
    s.q_ = a.q_ * b.q_;
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  if (p) return a * Scalar::residue(b.residue_in(p), p).inverse();
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  if (p) return a.residue_in(p) == b.residue_in(p);
  return a.q_ == b.q_;
}

std::size_t Scalar::hash() const {
  if (p_) return std::hash<std::uint32_t>{}(r_);
  // Agnostic integers must hash like their residues would not; callers only
  // hash within one field, so rationals hash by their decimal form.
  return std::hash<std::string>{}(q_.get_str());
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > 65521) throw std::invalid_argument("unsupported field characteristic " + std::to_string(p));
  return Field{p};
}

Scalar Field::embed(const Scalar& s) const {
  if (!p) {
    if (s.modulus()) throw std::logic_error("cannot embed a residue into Q");
    return s;
  }
  if (s.modulus() == p) return s;
  if (s.modulus()) throw std::logic_error("mixing scalars from different prime fields");
  return s * one();
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return embed(Scalar(q));
}

std::string Field::name() const { return p ? "F" + std::to_string(p) : "Q"; }

}  // namespace qhalg
