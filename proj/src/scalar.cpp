#include "rfa/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rfa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::OrderUnavailable: return "OrderUnavailable";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotSemisimpleField: return "NotSemisimpleField";
    case ErrorKind::NonSplit: return "NonSplit";
    case ErrorKind::NotScalar: return "NotScalar";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotRigidFrobenius: return "NotRigidFrobenius";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime_number(p) || p >= (std::int64_t{1} << 31))
    throw Error(ErrorKind::InvalidData, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::cyclotomic(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidData, "cyclotomic order must be positive");
  return FieldSpec{Kind::Cyclotomic, m};
}

FieldSpec FieldSpec::galois(std::int64_t p, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidData, "extension degree must be positive");
  if (k == 1) return prime(p);
  if (!is_prime_number(p)) throw Error(ErrorKind::InvalidData, std::to_string(p) + " is not prime");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1 << 16)) throw Error(ErrorKind::InvalidData, "extension fields are limited to 2^16 elements");
  }
  return FieldSpec{Kind::Galois, p, k};
}

FieldSpec FieldSpec::finite(std::int64_t q) {
  for (std::int64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime_number(p)) break;
    int k = 0;
    std::int64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return galois(p, k);
  }
  throw Error(ErrorKind::InvalidData, std::to_string(q) + " is not a prime power");
}

std::int64_t FieldSpec::size() const {
  if (!is_finite()) throw Error(ErrorKind::FieldMismatch, "field is infinite");
  std::int64_t q = 1;
  for (int i = 0; i < ext; ++i) q *= modulus;
  return q;
}

int FieldSpec::degree() const {
  if (is_prime()) return 1;
  if (is_galois()) return ext;
  return static_cast<int>(euler_phi(modulus));
}

std::int64_t FieldSpec::root_capacity() const {
  if (is_finite()) return size() - 1;
  return modulus % 2 == 0 ? modulus : 2 * modulus;
}

std::string FieldSpec::name() const {
  if (is_finite()) return "F_" + std::to_string(size());
  return "Q(zeta_" + std::to_string(modulus) + ")";
}

namespace {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // p prime
  return mod_pow(a, p - 2, p);
}

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den monic, division exact
  std::size_t dd = den.size() - 1;
  std::size_t nd = num.size() - 1;
  IntPoly q(nd - dd + 1, 0);
  for (std::size_t k = nd - dd + 1; k-- > 0;) {
    std::int64_t c = num[k + dd];
    q[k] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  return q;
}

// F_{p^k} as F_p[x]/(f) with f the least monic polynomial for which x is a
// primitive element; elements are coded by the base-p digits of their coordinates.
struct GfTables {
  std::int64_t p = 0, q = 0;
  int k = 0;
  std::vector<std::int64_t> exp;  // exp[i] = code of x^i, i < q - 1
  std::vector<std::int64_t> log;  // log[code], -1 for zero
  std::vector<std::int64_t> poly;  // f, lowest degree first, monic
};

std::mutex g_gf_mutex;
std::map<std::pair<std::int64_t, int>, std::unique_ptr<GfTables>> g_gf_cache;

const GfTables& gf_tables(const FieldSpec& f) {
  std::lock_guard<std::mutex> lock(g_gf_mutex);
  auto key = std::make_pair(f.modulus, f.ext);
  auto it = g_gf_cache.find(key);
  if (it != g_gf_cache.end()) return *it->second;
  auto t = std::make_unique<GfTables>();
  const std::int64_t p = f.modulus;
  const int k = f.ext;
  t->p = p;
  t->k = k;
  t->q = f.size();
  const std::int64_t q = t->q;
  for (std::int64_t c = 0; c < q; ++c) {
    std::vector<std::int64_t> poly(k + 1, 0);
    std::int64_t r = c;
    for (int i = 0; i < k; ++i) {
      poly[i] = r % p;
      r /= p;
    }
    poly[k] = 1;
    if (poly[0] == 0) continue;
    // powers of x
    std::vector<std::int64_t> cur(k, 0);
    cur[0] = 1;
    std::vector<std::int64_t> exps;
    std::vector<std::int64_t> logs(q, -1);
    bool primitive = true;
    for (std::int64_t i = 0; i < q - 1; ++i) {
      std::int64_t code = 0;
      for (int j = k; j-- > 0;) code = code * p + cur[j];
      if (logs[code] >= 0) {
        primitive = false;
        break;
      }
      logs[code] = i;
      exps.push_back(code);
      // multiply by x
      std::int64_t top = cur[k - 1];
      for (int j = k - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      for (int j = 0; j < k; ++j) cur[j] = ((cur[j] - top * poly[j]) % p + p) % p;
    }
    if (!primitive) continue;
    t->exp = std::move(exps);
    t->log = std::move(logs);
    t->poly = poly;
    break;
  }
  if (t->exp.empty()) throw Error(ErrorKind::InternalInconsistency, "no primitive polynomial found");
  return *g_gf_cache.emplace(key, std::move(t)).first->second;
}

std::int64_t gf_add(const GfTables& t, std::int64_t a, std::int64_t b, bool subtract) {
  std::int64_t out = 0, scale = 1;
  for (int i = 0; i < t.k; ++i) {
    std::int64_t da = a % t.p, db = b % t.p;
    a /= t.p;
    b /= t.p;
    std::int64_t d = subtract ? (da - db + t.p) % t.p : (da + db) % t.p;
    out += d * scale;
    scale *= t.p;
  }
  return out;
}

std::int64_t gf_mul(const GfTables& t, std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return t.exp[static_cast<std::size_t>((t.log[a] + t.log[b]) % (t.q - 1))];
}

std::recursive_mutex g_cyclo_mutex;
std::map<std::int64_t, IntPoly> g_cyclo_cache;

// Reduce a polynomial (coeff vector, arbitrary length) modulo the monic phi.
void reduce_mod(std::vector<Rational>& c, const IntPoly& phi) {
  std::size_t d = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] != 0) {
      Rational lead = c[i];
      for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= lead * phi[j];
    }
  }
  c.resize(d);
}

std::vector<Rational> poly_mul_mod(const std::vector<Rational>& a, const std::vector<Rational>& b, const IntPoly& phi) {
  std::vector<Rational> r(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  reduce_mod(r, phi);
  return r;
}

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Inverse of a modulo phi using the extended Euclidean algorithm over Q[x].
std::vector<Rational> poly_inverse(const std::vector<Rational>& a, const IntPoly& phi) {
  std::size_t d = phi.size() - 1;
  std::vector<Rational> r0(phi.begin(), phi.end()), r1 = a;
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    // q, rem = r0 / r1
    std::vector<Rational> rem = r0;
    trim(rem);
    std::vector<Rational> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
      trim(rem);
    }
    // s2 = s0 - q*s1
    std::vector<Rational> qs(q.size() + s1.size(), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    std::vector<Rational> s2(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since phi is irreducible
  if (r0.size() != 1) throw Error(ErrorKind::InternalInconsistency, "cyclotomic inverse: gcd is not constant");
  Rational c = r0[0];
  for (auto& x : s0) x /= c;
  s0.resize(std::max(s0.size(), d), Rational(0));
  reduce_mod(s0, phi);
  return s0;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
  std::lock_guard<std::recursive_mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(m);
  if (it != g_cyclo_cache.end()) return it->second;
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic_polynomial(d));
  }
  // std::map references stay valid across later insertions
  return g_cyclo_cache.emplace(m, num).first->second;
}

std::int64_t primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t n = p - 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(ErrorKind::InternalInconsistency, "no primitive root");
}

// ---------------------------------------------------------------------------

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (!f.is_finite()) s.coeffs_.assign(static_cast<std::size_t>(f.degree()), Rational(0));
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
  Scalar s = zero(f);
  if (f.is_finite()) {
    s.residue_ = n % f.modulus;
    if (s.residue_ < 0) s.residue_ += f.modulus;
  } else {
    s.coeffs_[0] = Rational(n);
  }
  return s;
}

Scalar Scalar::from_big(const FieldSpec& f, const BigInt& n) {
  Scalar s = zero(f);
  if (f.is_finite()) {
    BigInt r = n % f.modulus;
    if (r < 0) r += f.modulus;
    s.residue_ = static_cast<std::int64_t>(r);
  } else {
    s.coeffs_[0] = Rational(n);
  }
  return s;
}

Scalar Scalar::from_coeffs(const FieldSpec& f, std::vector<Rational> coeffs) {
  if (f.is_galois()) {
    Scalar s = zero(f);
    Scalar x = from_code(f, f.modulus);  // the generator x
    Scalar xp = one(f);
    for (const auto& c : coeffs) {
      Scalar num = from_big(f, boost::multiprecision::numerator(c));
      Scalar den = from_big(f, boost::multiprecision::denominator(c));
      s += num / den * xp;
      xp = xp * x;
    }
    return s;
  }
  if (f.is_prime()) {
    if (coeffs.size() > 1)
      for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) throw Error(ErrorKind::InvalidData, "prime field scalar given polynomial coefficients");
    Scalar s = zero(f);
    if (!coeffs.empty()) {
      const Rational& c = coeffs[0];
      Scalar num = from_big(f, boost::multiprecision::numerator(c));
      Scalar den = from_big(f, boost::multiprecision::denominator(c));
      s = num / den;
    }
    return s;
  }
  Scalar s;
  s.field_ = f;
  const auto& phi = cyclotomic_polynomial(f.modulus);
  if (coeffs.size() < phi.size()) coeffs.resize(phi.size(), Rational(0));
  reduce_mod(coeffs, phi);
  s.coeffs_ = std::move(coeffs);
  return s;
}

Scalar Scalar::from_digits(const FieldSpec& f, const std::vector<std::int64_t>& digits) {
  if (!f.is_finite()) throw Error(ErrorKind::FieldMismatch, "digits describe finite field elements");
  if (static_cast<int>(digits.size()) > f.degree()) throw Error(ErrorKind::InvalidData, "too many digits");
  std::int64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    std::int64_t d = digits[i] % f.modulus;
    if (d < 0) d += f.modulus;
    code = code * f.modulus + d;
  }
  return from_code(f, code);
}

Scalar Scalar::from_code(const FieldSpec& f, std::int64_t code) {
  if (!f.is_finite()) throw Error(ErrorKind::FieldMismatch, "codes describe finite field elements");
  if (code < 0 || code >= f.size()) throw Error(ErrorKind::InvalidData, "element code out of range");
  Scalar s = zero(f);
  s.residue_ = code;
  return s;
}

std::vector<std::int64_t> Scalar::digits() const {
  if (!field_.is_finite()) throw Error(ErrorKind::FieldMismatch, "digits of a cyclotomic scalar");
  std::vector<std::int64_t> d(static_cast<std::size_t>(field_.degree()));
  std::int64_t r = residue_;
  for (auto& x : d) {
    x = r % field_.modulus;
    r /= field_.modulus;
  }
  return d;
}

Scalar Scalar::zeta(const FieldSpec& f) {
  if (f.is_finite()) throw Error(ErrorKind::FieldMismatch, "zeta is only defined for cyclotomic fields");
  std::vector<Rational> c(2, Rational(0));
  c[1] = 1;
  return from_coeffs(f, c);
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return residue_ == 0;
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return residue_ == 1 % field_.modulus;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != (i == 0 ? 1 : 0)) return false;
  return true;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_galois()) {
    residue_ = gf_add(gf_tables(field_), residue_, o.residue_, false);
  } else if (field_.is_prime()) {
    residue_ += o.residue_;
    if (residue_ >= field_.modulus) residue_ -= field_.modulus;
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_galois()) {
    residue_ = gf_add(gf_tables(field_), residue_, o.residue_, true);
  } else if (field_.is_prime()) {
    residue_ -= o.residue_;
    if (residue_ < 0) residue_ += field_.modulus;
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_galois()) {
    r.residue_ = gf_mul(gf_tables(field_), residue_, o.residue_);
  } else if (field_.is_prime()) {
    r.residue_ = residue_ * o.residue_ % field_.modulus;
  } else {
    r.coeffs_ = poly_mul_mod(coeffs_, o.coeffs_, cyclotomic_polynomial(field_.modulus));
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = zero(field_);
  r -= *this;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + field_.name());
  Scalar r;
  r.field_ = field_;
  if (field_.is_galois()) {
    const auto& t = gf_tables(field_);
    r.residue_ = t.exp[static_cast<std::size_t>((t.q - 1 - t.log[residue_]) % (t.q - 1))];
  } else if (field_.is_prime()) {
    r.residue_ = mod_inv(residue_, field_.modulus);
  } else {
    r.coeffs_ = poly_inverse(coeffs_, cyclotomic_polynomial(field_.modulus));
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (field_.is_galois()) {
    if (e == 0) return one(field_);
    if (is_zero()) return *this;
    const auto& t = gf_tables(field_);
    Scalar r = *this;
    r.residue_ = t.exp[static_cast<std::size_t>((t.log[residue_] % (t.q - 1)) * (e % (t.q - 1)) % (t.q - 1))];
    return r;
  }
  if (field_.is_prime()) {
    Scalar r = *this;
    r.residue_ = mod_pow(residue_, e, field_.modulus);
    return r;
  }
  Scalar result = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.is_finite()) return residue_ == o.residue_;
  return coeffs_ == o.coeffs_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue_);
  std::ostringstream os;
  if (field_.is_galois()) {
    auto d = digits();
    bool first = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || d[i] != 1) os << d[i];
      if (i >= 1) os << "x";
      if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) a = -c;
    } else if (c < 0) {
      os << "-";
      a = -c;
    }
    first = false;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar root_of_unity(const FieldSpec& f, std::int64_t order) {
  if (order < 1) throw Error(ErrorKind::OrderUnavailable, "root of unity order must be positive");
  if (f.is_prime()) {
    std::int64_t p = f.modulus;
    if ((p - 1) % order != 0)
      throw Error(ErrorKind::OrderUnavailable,
                  "F_" + std::to_string(p) + " has no primitive root of unity of order " + std::to_string(order));
    return Scalar::from_int(f, mod_pow(primitive_root(p), (p - 1) / order, p));
  }
  if (f.is_galois()) {
    const auto& t = gf_tables(f);
    if ((t.q - 1) % order != 0)
      throw Error(ErrorKind::OrderUnavailable,
                  f.name() + " has no primitive root of unity of order " + std::to_string(order));
    return Scalar::from_code(f, t.exp[static_cast<std::size_t>(((t.q - 1) / order) % (t.q - 1))]);
  }
  std::int64_t m = f.modulus;
  // powers of a generator of all roots of unity in the field, so that
  // root(k)^(k/j) = root(j) whenever j | k
  if (m % 2 == 0) {
    if (m % order == 0) return Scalar::zeta(f).pow(m / order);
  } else if ((2 * m) % order == 0) {
    Scalar w = -Scalar::zeta(f);  // order 2m
    return w.pow(2 * m / order);
  }
  throw Error(ErrorKind::OrderUnavailable,
              f.name() + " has no primitive root of unity of order " + std::to_string(order));
}

Scalar integer_in_field(const FieldSpec& f, std::int64_t n) { return Scalar::from_int(f, n); }

bool is_invertible_integer(const FieldSpec& f, std::int64_t n) { return !integer_in_field(f, n).is_zero(); }

}  // namespace rfa
