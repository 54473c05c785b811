#include "fusionlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fusionlab {

namespace {

std::vector<long> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Φ_d for every proper divisor d of n.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
      const long c = num[k];  // den is monic
      quot[k - dd] = c;
      for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
      if (k == dd) break;
    }
    num = std::move(quot);
  }
  return num;
}

// Reduces a coefficient vector of arbitrary length modulo Φ_level.
std::vector<mpq_class> reduce_poly(std::vector<mpq_class> poly, unsigned level) {
  const auto& phi = cyclotomic_polynomial(level);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    const mpq_class c = poly[k];
    for (std::size_t i = 0; i < deg; ++i)
      if (phi[i] != 0) poly[k - deg + i] -= c * phi[i];
    poly[k] = 0;
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

unsigned euler_phi(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

CycScalar::CycScalar(unsigned level) : level_(level), coeffs_(cyclotomic_polynomial(level).size() - 1) {}

CycScalar::CycScalar(unsigned level, const mpq_class& rational) : CycScalar(level) {
  coeffs_[0] = rational;
  coeffs_[0].canonicalize();
}

CycScalar CycScalar::root(unsigned level, long k) {
  CycScalar out(level);
  const long e = ((k % static_cast<long>(level)) + level) % level;
  std::vector<mpq_class> poly(e + 1);
  poly[e] = 1;
  out.coeffs_ = reduce_poly(std::move(poly), level);
  return out;
}

CycScalar CycScalar::from_unit_root(const UnitRoot& u) {
  const unsigned level = static_cast<unsigned>(u.order());
  const long k = u.exponent().get_num().get_si();
  return root(level, k);
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycScalar CycScalar::lift(unsigned new_level) const {
  if (new_level == level_) return *this;
  if (new_level % level_ != 0) throw std::invalid_argument("cyclotomic lift needs a multiple of the level");
  const unsigned step = new_level / level_;
  std::vector<mpq_class> poly(new_level);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[(j * step) % new_level] += coeffs_[j];
  CycScalar out(new_level);
  out.coeffs_ = reduce_poly(std::move(poly), new_level);
  return out;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar out = *this;
  out += o;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (o.level_ != level_) {
    const unsigned l = std::lcm(level_, o.level_);
    *this = lift(l);
    return *this += o.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar CycScalar::operator-(const CycScalar& o) const { return *this + (-o); }

CycScalar CycScalar::operator*(const CycScalar& o) const {
  if (o.level_ != level_) {
    const unsigned l = std::lcm(level_, o.level_);
    return lift(l) * o.lift(l);
  }
  const std::size_t d = coeffs_.size();
  std::vector<mpq_class> poly(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (o.coeffs_[j] != 0) poly[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  CycScalar out(level_);
  out.coeffs_ = reduce_poly(std::move(poly), level_);
  return out;
}

CycScalar CycScalar::operator*(const mpq_class& r) const {
  mpq_class f = r;
  f.canonicalize();
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c *= f;
  return out;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) { return *this = *this * o; }

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in a cyclotomic field");
  const std::size_t d = coeffs_.size();
  // Column j of the multiplication matrix is this * ξ^j; solve M x = e_0.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    CycScalar col = *this * root(level_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycScalar out(level_);
  for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = m[i][d];
  return out;
}

bool CycScalar::operator==(const CycScalar& o) const {
  if (level_ == o.level_) return coeffs_ == o.coeffs_;
  const unsigned l = std::lcm(level_, o.level_);
  return lift(l).coeffs_ == o.lift(l).coeffs_;
}

std::string CycScalar::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]@" + std::to_string(level_);
}

}  // namespace fusionlab
