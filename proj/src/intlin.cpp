#include "rfa/intlin.hpp"

#include <numeric>

#include "rfa/error.hpp"

namespace rfa {

namespace {

std::int64_t md(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

// g = s a + t b with g = gcd(a, b) >= 0
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t qq = a / b;
    std::int64_t r = a - qq * b;
    a = b;
    b = r;
    std::int64_t s2 = s0 - qq * s1, t2 = t0 - qq * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

// unit u with u * a = gcd(a, q) mod q
std::int64_t normalizing_unit(std::int64_t a, std::int64_t q) {
  std::int64_t g = std::gcd(a, q);
  if (g == 0) return 1;
  std::int64_t qg = q / g, ag = a / g;
  // need u with u*ag = 1 mod qg and gcd(u, q) = 1
  std::int64_t s, t;
  xgcd(md(ag, qg == 0 ? 1 : qg), qg, s, t);
  std::int64_t u = qg == 1 ? 1 : md(s, qg);
  while (std::gcd(u, q) != 1) u += qg;
  return md(u, q);
}

}  // namespace

HowellSpan::HowellSpan(std::int64_t modulus, std::size_t width) : q_(modulus), w_(width), rows_(width) {
  if (modulus < 1) throw Error(ErrorKind::InvalidData, "modulus must be positive");
}

void HowellSpan::insert(IntVec v) {
  if (v.size() != w_) throw Error(ErrorKind::ShapeMismatch, "Howell insert width");
  for (auto& x : v) x = md(x, q_);
  finalized_ = false;
  insert_from(std::move(v), 0);
}

void HowellSpan::insert_from(IntVec v, std::size_t start) {
  std::size_t c = start;
  while (true) {
    while (c < w_ && v[c] == 0) ++c;
    if (c >= w_) return;
    if (!rows_[c]) {
      std::int64_t u = normalizing_unit(v[c], q_);
      for (std::size_t j = c; j < w_; ++j) v[j] = md(v[j] * u, q_);
      std::int64_t a = v[c];
      rows_[c] = v;
      // annihilator multiple keeps the Howell property
      IntVec ann(w_, 0);
      std::int64_t f = q_ / a;
      bool nz = false;
      for (std::size_t j = c + 1; j < w_; ++j) {
        ann[j] = md(v[j] * f, q_);
        nz = nz || ann[j] != 0;
      }
      if (nz) insert_from(std::move(ann), c + 1);
      return;
    }
    IntVec& r = *rows_[c];
    std::int64_t a = r[c], b = v[c];
    std::int64_t s, t;
    std::int64_t g = xgcd(a, b, s, t);
    if (g == a) {
      // b is a multiple of a: eliminate v with r
      std::int64_t f = b / a;
      for (std::size_t j = c; j < w_; ++j) v[j] = md(v[j] - f * r[j], q_);
      continue;
    }
    IntVec np(w_, 0), rest(w_, 0);
    for (std::size_t j = c; j < w_; ++j) {
      np[j] = md(s * r[j] + t * v[j], q_);
      rest[j] = md((a / g) * v[j] - (b / g) * r[j], q_);
    }
    // normalize leading entry of the new pivot row
    std::int64_t u = normalizing_unit(np[c], q_);
    for (std::size_t j = c; j < w_; ++j) np[j] = md(np[j] * u, q_);
    rows_[c] = np;
    // {np, rest} spans the same module as {old row, v}; np also needs its annihilator
    IntVec ann(w_, 0);
    std::int64_t f = q_ / np[c];
    bool nz = false;
    for (std::size_t j = c + 1; j < w_; ++j) {
      ann[j] = md(np[j] * f, q_);
      nz = nz || ann[j] != 0;
    }
    if (nz) insert_from(std::move(ann), c + 1);
    v = std::move(rest);
    ++c;
  }
}

void HowellSpan::finalize() {
  for (std::size_t p = 0; p < w_; ++p) {
    if (!rows_[p]) continue;
    IntVec& r = *rows_[p];
    for (std::size_t c = p + 1; c < w_; ++c) {
      if (!rows_[c]) continue;
      const IntVec& pr = *rows_[c];
      std::int64_t k = r[c] / pr[c];
      if (k == 0) continue;
      for (std::size_t j = c; j < w_; ++j) r[j] = md(r[j] - k * pr[j], q_);
    }
  }
  finalized_ = true;
}

IntVec HowellSpan::reduce(IntVec v) const {
  if (v.size() != w_) throw Error(ErrorKind::ShapeMismatch, "Howell reduce width");
  for (auto& x : v) x = md(x, q_);
  for (std::size_t c = 0; c < w_; ++c) {
    if (!rows_[c]) continue;
    const IntVec& r = *rows_[c];
    std::int64_t k = v[c] / r[c];
    if (k == 0) continue;
    for (std::size_t j = c; j < w_; ++j) v[j] = md(v[j] - k * r[j], q_);
  }
  return v;
}

bool HowellSpan::contains(const IntVec& v) const {
  IntVec r = reduce(v);
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

std::vector<IntVec> HowellSpan::rows() const {
  std::vector<IntVec> out;
  for (const auto& r : rows_)
    if (r) out.push_back(*r);
  return out;
}

std::int64_t HowellSpan::pivot(std::size_t c) const { return rows_[c] ? (*rows_[c])[c] : q_; }

std::vector<IntVec> kernel_mod(const std::vector<IntVec>& M, std::size_t k, std::int64_t q) {
  const std::size_t m = M.size();
  HowellSpan span(q, m + k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVec row(m + k, 0);
    for (std::size_t e = 0; e < m; ++e) row[e] = M[e][i];
    row[m + i] = 1;
    span.insert(std::move(row));
  }
  span.finalize();
  std::vector<IntVec> out;
  for (const auto& r : span.rows()) {
    bool head_zero = true;
    for (std::size_t e = 0; e < m; ++e)
      if (r[e] != 0) {
        head_zero = false;
        break;
      }
    if (head_zero) out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
  }
  return out;
}

std::optional<IntVec> solve_mod(const std::vector<IntVec>& M, std::size_t k, const IntVec& rhs, std::int64_t q) {
  const std::size_t m = M.size();
  if (rhs.size() != m) throw Error(ErrorKind::ShapeMismatch, "solve_mod rhs");
  HowellSpan span(q, m + k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVec row(m + k, 0);
    for (std::size_t e = 0; e < m; ++e) row[e] = M[e][i];
    row[m + i] = 1;
    span.insert(std::move(row));
  }
  span.finalize();
  IntVec v(m + k, 0);
  for (std::size_t e = 0; e < m; ++e) v[e] = rhs[e];
  IntVec r = span.reduce(v);
  for (std::size_t e = 0; e < m; ++e)
    if (r[e] != 0) return std::nullopt;
  IntVec x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = md(-r[m + i], q);
  return x;
}

}  // namespace rfa
