#include "cobar/ring.hpp"

namespace cobar {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(unsigned long p) {
  if (!is_prime(p)) throw validation_error("Fp modulus must be prime, got " + std::to_string(p));
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("bad ring spec '" + text + "'");
    return prime_field(std::stoul(digits));
  }
  throw input_error("bad ring spec '" + text + "' (expected Z, Q, or Fp:<p>)");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Coefficient::Coefficient(Ring r, long v) : Coefficient(r, mpz_class(v)) {}

Coefficient::Coefficient(Ring r, mpz_class v) : ring_(r), num_(std::move(v)), den_(1) {
  if (ring_.kind() == Ring::Kind::PrimeField) {
    num_ %= mpz_class(ring_.modulus());
    if (num_ < 0) num_ += ring_.modulus();
  }
}

Coefficient Coefficient::fraction(Ring r, mpz_class num, mpz_class den) {
  if (den == 0) throw validation_error("zero denominator");
  if (r.kind() != Ring::Kind::Rationals) {
    Coefficient c(r, std::move(num));
    return c.divide(Coefficient(r, std::move(den)));
  }
  Coefficient c(r, std::move(num));
  c.den_ = std::move(den);
  c.reduce();
  return c;
}

void Coefficient::reduce() {
  if (den_ < 0) { num_ = -num_; den_ = -den_; }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) { num_ /= g; den_ /= g; }
  if (num_ == 0) den_ = 1;
}

bool Coefficient::is_unit() const {
  if (is_zero()) return false;
  if (ring_.kind() == Ring::Kind::Integers) return num_ == 1 || num_ == -1;
  return true;
}

const mpz_class& Coefficient::integer_value() const {
  if (ring_.kind() == Ring::Kind::Rationals && den_ != 1)
    throw validation_error("coefficient " + to_string() + " is not integral");
  return num_;
}

Coefficient Coefficient::operator-() const {
  Coefficient c(*this);
  c.num_ = -c.num_;
  if (ring_.kind() == Ring::Kind::PrimeField && c.num_ != 0) c.num_ += ring_.modulus();
  return c;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (ring_ != o.ring_) throw validation_error("ring mismatch in +");
  Coefficient c(ring_, 0);
  switch (ring_.kind()) {
    case Ring::Kind::Integers:
      c.num_ = num_ + o.num_;
      break;
    case Ring::Kind::PrimeField:
      c.num_ = (num_ + o.num_) % mpz_class(ring_.modulus());
      break;
    case Ring::Kind::Rationals:
      c.num_ = num_ * o.den_ + o.num_ * den_;
      c.den_ = den_ * o.den_;
      c.reduce();
      break;
  }
  return c;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (ring_ != o.ring_) throw validation_error("ring mismatch in *");
  Coefficient c(ring_, 0);
  switch (ring_.kind()) {
    case Ring::Kind::Integers:
      c.num_ = num_ * o.num_;
      break;
    case Ring::Kind::PrimeField:
      c.num_ = (num_ * o.num_) % mpz_class(ring_.modulus());
      break;
    case Ring::Kind::Rationals:
      c.num_ = num_ * o.num_;
      c.den_ = den_ * o.den_;
      c.reduce();
      break;
  }
  return c;
}

Coefficient Coefficient::inverse() const {
  if (!is_unit()) throw validation_error("no inverse for " + to_string() + " in " + ring_.name());
  Coefficient c(ring_, 0);
  switch (ring_.kind()) {
    case Ring::Kind::Integers:
      c.num_ = num_;  // +-1
      break;
    case Ring::Kind::Rationals:
      c.num_ = den_;
      c.den_ = num_;
      c.reduce();
      break;
    case Ring::Kind::PrimeField: {
      mpz_class p(ring_.modulus());
      if (mpz_invert(c.num_.get_mpz_t(), num_.get_mpz_t(), p.get_mpz_t()) == 0)
        throw validation_error("no inverse mod p");
      break;
    }
  }
  return c;
}

Coefficient Coefficient::divide(const Coefficient& o) const {
  if (ring_ != o.ring_) throw validation_error("ring mismatch in /");
  if (o.is_zero()) throw validation_error("division by zero");
  if (ring_.kind() == Ring::Kind::Integers) {
    if (num_ % o.num_ != 0)
      throw validation_error("non-exact division " + to_string() + " / " + o.to_string() + " over Z");
    return Coefficient(ring_, mpz_class(num_ / o.num_));
  }
  return *this * o.inverse();
}

bool Coefficient::operator==(const Coefficient& o) const {
  return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_;
}

std::string Coefficient::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

}  // namespace cobar
