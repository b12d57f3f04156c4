#include "lpa/ring.hpp"

#include "lpa/errors.hpp"

namespace lpa {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UniverseMismatch: return "universe-mismatch";
    case ErrorKind::TruncationExceeded: return "truncation-exceeded";
    case ErrorKind::NotReachable: return "not-reachable";
    case ErrorKind::MissingGeneratorAssignment: return "missing-generator";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::EngineMismatch: return "engine-mismatch";
    case ErrorKind::SigmaStrategyFailed: return "sigma-strategy-failed";
    case ErrorKind::ZeroElement: return "zero-element";
    case ErrorKind::NotAcyclic: return "not-acyclic";
    case ErrorKind::WrongShape: return "wrong-shape";
    case ErrorKind::InvalidStructure: return "invalid-structure";
    case ErrorKind::TooLarge: return "too-large";
  }
  return "unknown";
}

Ring Ring::integers_mod(unsigned long n) {
  if (n < 2) throw Error(ErrorKind::RingMismatch, "modulus must be at least 2");
  return Ring(RingKind::IntegersMod, n);
}

Ring Ring::prime_field(unsigned long p) {
  mpz_class z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::RingMismatch, "GF modulus must be prime: " + std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  auto number_after = [&](std::size_t prefix) -> unsigned long {
    std::string digits = text.substr(prefix);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::RingMismatch, "bad ring descriptor: " + text);
    return std::stoul(digits);
  };
  if (text.rfind("Zmod:", 0) == 0) return integers_mod(number_after(5));
  if (text.rfind("GF:", 0) == 0) return prime_field(number_after(3));
  throw Error(ErrorKind::RingMismatch, "bad ring descriptor: " + text);
}

bool Ring::is_field() const {
  return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Zmod:" + std::to_string(modulus_);
    case RingKind::PrimeField: return "GF:" + std::to_string(modulus_);
  }
  return "?";
}

Coef Ring::canon(const Coef& c) const {
  Coef r = c;
  r.canonicalize();
  switch (kind_) {
    case RingKind::Rationals:
      return r;
    case RingKind::Integers:
      if (r.get_den() != 1) throw Error(ErrorKind::RingMismatch, "non-integer coefficient over Z");
      return r;
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class n(modulus_);
      mpz_class num = r.get_num();
      mpz_class den = r.get_den();
      if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0)
          throw Error(ErrorKind::RingMismatch, "denominator not invertible in " + name());
        num *= inv;
      }
      mpz_class rem;
      mpz_fdiv_r(rem.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
      return Coef(rem);
    }
  }
  return r;
}

Coef Ring::inv(const Coef& a) const {
  if (is_zero(a)) throw Error(ErrorKind::RingMismatch, "zero is not invertible");
  switch (kind_) {
    case RingKind::Rationals:
      return Coef(1) / a;
    case RingKind::Integers:
      if (a == 1 || a == -1) return a;
      throw Error(ErrorKind::RingMismatch, "not a unit in Z");
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class n(modulus_), num = a.get_num(), out;
      if (mpz_invert(out.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t()) == 0)
        throw Error(ErrorKind::RingMismatch, "not a unit in " + name());
      return Coef(out);
    }
  }
  return a;
}

bool Ring::is_negative(const Coef& a) const {
  return (kind_ == RingKind::Integers || kind_ == RingKind::Rationals) && sgn(a) < 0;
}

std::string Ring::format(const Coef& a) const { return a.get_str(); }

}  // namespace lpa
