#pragma once

#include <gmpxx.h>

#include <string>

namespace lpa {

using Coef = mpq_class;

enum class RingKind { Integers, IntegersMod, Rationals, PrimeField };

// Exact coefficient ring. Residue rings store canonical representatives in [0, n).
class Ring {
 public:
  Ring() = default;
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring integers_mod(unsigned long n);
  static Ring prime_field(unsigned long p);
  // Accepts "Z", "Q", "Zmod:N", "GF:P".
  static Ring parse(const std::string& text);

  RingKind kind() const { return kind_; }
  unsigned long modulus() const { return modulus_; }
  bool is_field() const;
  std::string name() const;

  Coef canon(const Coef& c) const;
  Coef add(const Coef& a, const Coef& b) const { return canon(a + b); }
  Coef sub(const Coef& a, const Coef& b) const { return canon(a - b); }
  Coef mul(const Coef& a, const Coef& b) const { return canon(a * b); }
  Coef neg(const Coef& a) const { return canon(-a); }
  // Multiplicative inverse; throws RingMismatch when a is not a unit.
  Coef inv(const Coef& a) const;
  bool is_zero(const Coef& a) const { return sgn(a) == 0; }
  // True when the printed form should use a leading minus sign.
  bool is_negative(const Coef& a) const;
  std::string format(const Coef& a) const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(RingKind k, unsigned long m) : kind_(k), modulus_(m) {}
  RingKind kind_ = RingKind::Rationals;
  unsigned long modulus_ = 0;
};

}  // namespace lpa
