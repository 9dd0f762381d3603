#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "supermorita/errors.hpp"

namespace supermorita {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

// Ground field: ℚ or 𝔽_p with p an odd prime (char 2 breaks the sign yoga,
// so p = 2 is rejected up front). p is capped below 2^31 so that products of
// residues fit in uint64.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

// "Q" or "Fp:5" (also accepts "F5").
FieldSpec parse_field(const std::string& text);

// Immutable exact field element. ℚ values are stored in lowest terms with
// positive denominator, 𝔽_p values as residues in [0, p); equality is
// therefore structural.
class Scalar {
 public:
  Scalar() : f_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long long v);
  static Scalar of_big(const FieldSpec& f, const BigInt& v);
  static Scalar rational(const BigInt& num, const BigInt& den);

  const FieldSpec& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical string form: "a/b" for ℚ (b > 0, lowest terms, b = 1 printed
  // as plain "a"), decimal residue for 𝔽_p.
  std::string str() const;
  static Scalar parse(const FieldSpec& f, const std::string& text);

  // ℚ accessors (value must belong to ℚ).
  const BigRational& rational_value() const;
  std::uint64_t residue_value() const;

 private:
  FieldSpec f_;
  BigRational q_;        // Rationals payload
  std::uint64_t r_ = 0;  // PrimeField payload, reduced

  void require_same_field(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// The sign (−1)^{p·q} attached to transposing two homogeneous symbols.
Scalar koszul(int p, int q, const FieldSpec& f);
inline int koszul_sign(int p, int q) { return (p & q & 1) ? -1 : 1; }

}  // namespace supermorita
