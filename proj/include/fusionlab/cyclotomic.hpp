#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "fusionlab/cochain.hpp"

namespace fusionlab {

/// Exact element of Q(ξ_N), ξ_N = exp(2πi/N).
///
/// Stored as rational coefficients of 1, ξ, ..., ξ^{φ(N)-1}, i.e. reduced
/// modulo the N-th cyclotomic polynomial, so equality is coefficientwise.
/// Operands of different levels are lifted to the lcm of their levels.
class CycScalar {
public:
  CycScalar() : CycScalar(1) {}
  explicit CycScalar(unsigned level);
  CycScalar(unsigned level, const mpq_class& rational);

  /// ξ_N^k.
  static CycScalar root(unsigned level, long k);
  /// exp(2πi q) for a root of unity u, at the level of u's denominator.
  static CycScalar from_unit_root(const UnitRoot& u);

  unsigned level() const { return level_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  /// The same number expressed at a multiple of the current level.
  CycScalar lift(unsigned new_level) const;

  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar operator*(const mpq_class& r) const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  /// Throws std::domain_error on zero.
  CycScalar inverse() const;
  CycScalar operator/(const CycScalar& o) const { return *this * o.inverse(); }

  /// Equality as complex numbers (levels may differ).
  bool operator==(const CycScalar& o) const;

  std::string str() const;

private:
  unsigned level_;
  std::vector<mpq_class> coeffs_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

}  // namespace fusionlab
