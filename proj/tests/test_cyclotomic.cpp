#include <doctest.h>

#include <random>

#include "fusionlab/cyclotomic.hpp"

using namespace fusionlab;

namespace {

CycScalar random_scalar(unsigned level, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  CycScalar out(level);
  for (unsigned k = 0; k < level; ++k) out += CycScalar::root(level, k) * mpq_class(num(rng), den(rng));
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (unsigned n = 1; n <= 40; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("roots of unity") {
  for (unsigned n : {1u, 2u, 3u, 5u, 8u, 9u, 12u, 15u}) {
    auto xi = CycScalar::root(n, 1);
    CycScalar pow(n, 1);
    for (unsigned k = 0; k < n; ++k) pow *= xi;
    CHECK(pow == CycScalar(n, 1));

    // Φ_n(ξ) = 0
    CycScalar phi(n);
    const auto& poly = cyclotomic_polynomial(n);
    for (std::size_t k = 0; k < poly.size(); ++k) phi += CycScalar::root(n, static_cast<long>(k)) * mpq_class(poly[k]);
    CHECK(phi.is_zero());

    if (n > 1) {
      CycScalar sum(n);
      for (unsigned k = 0; k < n; ++k) sum += CycScalar::root(n, k);
      CHECK(sum.is_zero());
    }
  }
  CHECK(CycScalar::root(6, 2) == CycScalar::root(3, 1));
  CHECK(CycScalar::root(4, 2) == CycScalar(1, -1));
  CHECK(CycScalar::root(5, -1) == CycScalar::root(5, 4));
  CHECK(CycScalar::from_unit_root(UnitRoot(3, 4)) == CycScalar::root(4, 3));
  CHECK(CycScalar::root(3, 1).lift(12) == CycScalar::root(12, 4));
  CHECK_THROWS(CycScalar::root(3, 1).lift(8));
  CHECK_FALSE(CycScalar::root(7, 1).is_rational());
  CHECK((CycScalar::root(3, 1) + CycScalar::root(3, 2)).is_rational());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(1);
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    for (int rep = 0; rep < 15; ++rep) {
      auto a = random_scalar(n, rng), b = random_scalar(n, rng), c = random_scalar(n, rng);
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()) == CycScalar(n, 1));
      if (!b.is_zero()) CHECK(((a / b) * b) == a);
    }
  }
  CHECK_THROWS_AS(CycScalar(5).inverse(), std::domain_error);
  // mixed levels
  auto s = CycScalar::root(3, 1) * CycScalar::root(4, 1);
  CHECK(s.level() == 12);
  CHECK(s == CycScalar::root(12, 7));
}
