#pragma once

#include <gmpxx.h>

#include <string>

#include "cobar/errors.hpp"

namespace cobar {

// Ground ring of a computation session: Z, Q, or F_p with p prime.
// The ring is fixed when a structure is built and tagged on every value.
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring prime_field(unsigned long p);  // validates primality

  // Parses "Z", "Q", "Fp:5".
  static Ring parse(const std::string& text);

  Kind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(Kind k, unsigned long p) : kind_(k), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

// Exact scalar in a fixed ring. Invariants: den > 0 and gcd(num, den) = 1;
// den == 1 unless the ring is Q; over F_p, 0 <= num < p.
class Coefficient {
 public:
  Coefficient() : ring_(Ring::integers()), num_(0), den_(1) {}
  Coefficient(Ring r, long v);
  Coefficient(Ring r, mpz_class v);

  static Coefficient zero(Ring r) { return Coefficient(r, 0); }
  static Coefficient one(Ring r) { return Coefficient(r, 1); }
  static Coefficient fraction(Ring r, mpz_class num, mpz_class den);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_unit() const;

  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  // Z/F_p values only.
  const mpz_class& integer_value() const;

  Coefficient operator-() const;
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  // Multiplicative inverse; throws validation_error for non-units.
  Coefficient inverse() const;
  // Exact division; throws if the quotient leaves the ring.
  Coefficient divide(const Coefficient& o) const;

  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void reduce();
  Ring ring_;
  mpz_class num_;
  mpz_class den_;
};

}  // namespace cobar
