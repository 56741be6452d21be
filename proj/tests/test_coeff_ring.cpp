#include <doctest.h>

#include <complex>
#include <random>

#include "lgn/cyclo.hpp"
#include "lgn/laurent.hpp"
#include "lgn/scalar.hpp"

using namespace lgn;
using cd = std::complex<double>;

namespace {

Laurent q(int half) { return Laurent::q(half); }

Laurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-12, 12), c(-4, 4), n(0, 5);
  Laurent x;
  for (int i = n(rng); i > 0; --i) x += Laurent::monomial(c(rng), e(rng));
  return x;
}

cd zeta(int p) { return std::polar(1.0, 2 * M_PI / (8 * p)); }

cd eval(const Laurent& x, int p) {
  cd s = 0;
  for (auto [h, c] : x.terms()) s += double(c) * std::pow(zeta(p), h);
  return s;
}

cd eval(const Cyclo& x) {
  cd s = 0;
  for (size_t k = 0; k < x.coeffs().size(); ++k) s += x.coeffs()[k].get_d() * std::pow(zeta(x.p()), double(k));
  return s;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK((q(1) + q(-1)) * (q(1) - q(-1)) == q(2) - q(-2));
  CHECK((q(4) + Laurent(2) + q(-4)) - (q(2) + q(-2)) * (q(2) + q(-2)) == Laurent());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Laurent x = random_laurent(rng);
    CHECK(x + Laurent() == x);
    Laurent y = random_laurent(rng), z = random_laurent(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("laurent normalization") {
  Laurent x = q(3) + Laurent::monomial(2, -1) - q(3);
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms()[0] == Laurent::Term{-1, 2});
  for (auto& t : (q(2) - q(2)).terms()) CHECK(t.second != 0);
  CHECK(Laurent::parse("q^{3/2} - 2 q^-2 + 1") == q(3) - Laurent::monomial(2, -4) + Laurent(1));
  CHECK(Laurent::parse((q(3) - q(-5)).str()) == q(3) - q(-5));
  CHECK(q(4).str() == "q^2");
  CHECK(q(-4).str() == "q^-2");
  CHECK(q(3).str() == "q^{3/2}");
}

TEST_CASE("laurent overflow is detected") {
  CHECK_THROWS(checked_mul(std::int64_t(1) << 62, 4));
  CHECK_THROWS(checked_add(INT64_MAX, 1));
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer_laurent(1) == Laurent(1));
  CHECK(quantum_integer_laurent(2) == q(4) + q(-4));
  for (int p = 2; p <= 6; ++p) CHECK(quantum_integer_cyclo(p, p).is_zero());
  for (int p = 2; p <= 6; ++p)
    for (int k = 1; k < p; ++k) CHECK_FALSE(quantum_integer_cyclo(k, p).is_zero());
}

TEST_CASE("cyclotomic field") {
  for (int p = 2; p <= 5; ++p) {
    CHECK(Cyclo::one(p).coeffs().size() == static_cast<size_t>(euler_phi(8 * p)));
    CHECK(specialize(Laurent(1), p).is_one());
    CHECK(specialize(q(8 * p), p).is_one());
    CHECK(specialize(q(4 * p), p) == -Cyclo::one(p));
  }
  CHECK(specialize(q(4) + q(-4), 2).is_zero());
  Cyclo z = Cyclo::zeta_pow(3, 5);
  CHECK((z * z.inverse()).is_one());
  CHECK_THROWS(Cyclo::zero(3).inverse());
}

TEST_CASE("specialization against a floating-point oracle") {
  std::mt19937_64 rng(11);
  for (int p = 2; p <= 4; ++p)
    for (int i = 0; i < 40; ++i) {
      Laurent x = random_laurent(rng), y = random_laurent(rng);
      Cyclo sx = specialize(x, p);
      CHECK(std::abs(eval(sx) - eval(x, p)) < 1e-9);
      CHECK(specialize(x * y, p) == sx * specialize(y, p));
      CHECK(specialize(x + y, p) == sx + specialize(y, p));
    }
}

TEST_CASE("scalar variant") {
  Ring g{}, r{3};
  CHECK(Scalar::q(4, g).str() == "q^2");
  CHECK((Scalar::q(2, g) * Scalar::q(-2, g)).is_one());
  CHECK((Scalar::q(2, r) * Scalar::q(-2, r)).is_one());
  CHECK(Scalar::q(3, g).inverse() == Scalar::q(-3, g));
  CHECK_THROWS((Scalar::q(1, g) + Scalar::one(g)).inverse());
  Scalar c = quantum_integer(2, r);
  CHECK((c * c.inverse()).is_one());
  CHECK(Scalar::parse("q^2 - 1", g) == Scalar::q(4, g) - Scalar::one(g));
  CHECK_THROWS(Scalar::q(1, g) + Scalar::q(1, r));
}
