#include "supermorita/scalar.hpp"

#include <ostream>

namespace supermorita {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero("inverse of 0 in F" + std::to_string(p));
  return mod_pow(a, p - 2, p);  // p prime
}

std::uint64_t reduce_big(const BigInt& v, std::uint64_t p) {
  BigInt r = v % BigInt(p);
  if (r < 0) r += BigInt(p);
  return r.convert_to<std::uint64_t>();
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p == 2) throw ParseError("characteristic 2 is not supported (the sign conventions require char != 2)");
  if (p >= (std::uint64_t{1} << 31)) throw ParseError("prime modulus too large (must be < 2^31)");
  if (!is_prime_u64(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p);
}

FieldSpec parse_field(const std::string& text) {
  if (text == "Q" || text == "q") return FieldSpec::rationals();
  std::string body;
  if (text.rfind("Fp:", 0) == 0)
    body = text.substr(3);
  else if (text.rfind("F", 0) == 0)
    body = text.substr(1);
  else
    throw ParseError("cannot parse field '" + text + "' (expected Q or Fp:<p>)");
  try {
    return FieldSpec::prime_field(std::stoull(body));
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse field modulus in '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("field modulus out of range in '" + text + "'");
  }
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long v) { return of_big(f, BigInt(v)); }

Scalar Scalar::of_big(const FieldSpec& f, const BigInt& v) {
  Scalar s;
  s.f_ = f;
  if (f.is_rationals())
    s.q_ = BigRational(v);
  else
    s.r_ = reduce_big(v, f.p);
  return s;
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Scalar s;
  s.f_ = FieldSpec::rationals();
  s.q_ = BigRational(num, den);  // cpp_rational canonicalizes
  return s;
}

bool Scalar::is_zero() const { return f_.is_rationals() ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return f_.is_rationals() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (f_ != o.f_)
    throw FieldMismatch("scalars over " + f_.str() + " and " + o.f_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.f_ = f_;
  if (f_.is_rationals())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.f_ = f_;
  if (f_.is_rationals())
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + f_.p - o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.f_ = f_;
  if (f_.is_rationals())
    s.q_ = q_ * o.q_;
  else
    s.r_ = r_ * o.r_ % f_.p;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.f_ = f_;
  if (f_.is_rationals())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s;
  s.f_ = f_;
  if (f_.is_rationals()) {
    if (q_.is_zero()) throw DivisionByZero("inverse of 0 in Q");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, f_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  return f_ == o.f_ && (f_.is_rationals() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
  if (!f_.is_rationals()) return std::to_string(r_);
  const BigInt num = numerator(q_), den = denominator(q_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar literal");
  auto parse_int = [](const std::string& t) -> BigInt {
    std::size_t i = 0;
    bool neg = false;
    if (t[i] == '+' || t[i] == '-') {
      neg = t[i] == '-';
      ++i;
    }
    if (i == t.size()) throw ParseError("bad integer literal '" + t + "'");
    BigInt v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw ParseError("bad integer literal '" + t + "'");
      v = v * 10 + (t[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return of_big(f, parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  if (f.is_rationals()) return rational(num, den);
  return of_big(f, num) / of_big(f, den);
}

const BigRational& Scalar::rational_value() const {
  if (!f_.is_rationals()) throw FieldMismatch("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (f_.is_rationals()) throw FieldMismatch("not a prime-field scalar");
  return r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar koszul(int p, int q, const FieldSpec& f) {
  return Scalar::of_int(f, koszul_sign(p, q));
}

}  // namespace supermorita
