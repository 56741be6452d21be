#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "lgn/laurent.hpp"

namespace lgn {

// Element of Q(zeta), zeta = exp(2 pi i / 8p), stored as coefficients of
// 1, zeta, ..., zeta^{phi(8p)-1}. q^{1/2} specializes to zeta, so
// eps = exp(i pi / 2p) = zeta^2.
class Cyclo {
 public:
  Cyclo() = default;  // invalid until assigned; p() == 0
  static Cyclo zero(int p);
  static Cyclo one(int p) { return from_int(p, 1); }
  static Cyclo from_int(int p, long v);
  static Cyclo from_rational(int p, const mpq_class& v);
  static Cyclo zeta_pow(int p, long k);

  int p() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  Cyclo scaled(const mpq_class& f) const;
  Cyclo inverse() const;  // throws on zero

  std::string str() const;  // polynomial in "z" = zeta_{8p}
  static Cyclo parse(std::string_view s, int p);

 private:
  Cyclo(int p, std::vector<mpq_class> c) : p_(p), c_(std::move(c)) {}
  void check(const Cyclo& o) const;
  int p_ = 0;
  std::vector<mpq_class> c_;
};

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

Cyclo specialize(const Laurent& x, int p);
Cyclo quantum_integer_cyclo(int k, int p);

}  // namespace lgn
