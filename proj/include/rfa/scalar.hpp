#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rfa/error.hpp"

namespace rfa {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// An exact coefficient field: a prime field F_p, a cyclotomic field Q(zeta_m),
/// or a small extension F_{p^k} (used when F_p lacks required roots of unity).
struct FieldSpec {
  enum class Kind : std::uint8_t { Prime, Cyclotomic, Galois };

  Kind kind = Kind::Prime;
  std::int64_t modulus = 2;  // p for prime and Galois fields, m for cyclotomic ones
  int ext = 1;               // k for F_{p^k}

  static FieldSpec prime(std::int64_t p);
  static FieldSpec cyclotomic(std::int64_t m);
  /// F_{p^k}; k = 1 gives prime(p). Limited to p^k <= 2^16.
  static FieldSpec galois(std::int64_t p, int k);
  /// F_q for a prime power q.
  static FieldSpec finite(std::int64_t q);

  bool is_prime() const { return kind == Kind::Prime; }
  bool is_galois() const { return kind == Kind::Galois; }
  bool is_finite() const { return kind != Kind::Cyclotomic; }
  std::int64_t characteristic() const { return is_finite() ? modulus : 0; }
  /// number of elements of a finite field
  std::int64_t size() const;
  /// Degree over the prime field (1 for F_p, phi(m) for Q(zeta_m), k for F_{p^k}).
  int degree() const;
  /// Largest k such that the field contains a primitive k-th root of unity
  /// reachable through root_of_unity(); every order dividing it is available.
  std::int64_t root_capacity() const;

  std::string name() const;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime_number(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Integer coefficients (lowest degree first) of the m-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

/// Immutable exact field element. Equality is structural: canonical forms
/// are unique, so two scalars are equal iff their representations agree.
class Scalar {
 public:
  Scalar() = default;  // zero of F_2; only meaningful as a placeholder

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, std::int64_t n);
  static Scalar from_big(const FieldSpec& f, const BigInt& n);
  /// Cyclotomic field element from coefficients in the power basis of zeta_m.
  static Scalar from_coeffs(const FieldSpec& f, std::vector<Rational> coeffs);
  /// zeta_m itself (cyclotomic fields only).
  static Scalar zeta(const FieldSpec& f);
  /// Element of F_{p^k} from its coordinates c_0 + c_1 x + ... in the field's fixed basis.
  static Scalar from_digits(const FieldSpec& f, const std::vector<std::int64_t>& digits);
  /// Element of a finite field by its index in [0, q): base-p digits of the coordinates.
  static Scalar from_code(const FieldSpec& f, std::int64_t code);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// residue for F_p, element code for F_{p^k}
  std::int64_t residue() const { return residue_; }
  std::vector<std::int64_t> digits() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::int64_t residue_ = 0;     // prime fields; code (base-p digits) for F_{p^k}
  std::vector<Rational> coeffs_;  // cyclotomic fields, length phi(m)

  void check_same(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The fixed primitive root of unity of the requested order.
/// Prime fields use g^((p-1)/k) for the least primitive root g; cyclotomic
/// fields use powers of zeta_m, or of -zeta_m when m is odd; F_{p^k} uses powers
/// of x for its primitive defining polynomial. Roots are compatible:
/// root(k)^(k/j) = root(j).
Scalar root_of_unity(const FieldSpec& f, std::int64_t order);

/// Image of n under Z -> field.
Scalar integer_in_field(const FieldSpec& f, std::int64_t n);
bool is_invertible_integer(const FieldSpec& f, std::int64_t n);

/// Smallest primitive root modulo the prime p.
std::int64_t primitive_root(std::int64_t p);

}  // namespace rfa
