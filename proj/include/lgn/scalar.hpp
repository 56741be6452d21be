#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "lgn/cyclo.hpp"
#include "lgn/laurent.hpp"

namespace lgn {

// p == 0: generic ring Z[q^{±1/2}]; p >= 2: Q(zeta_{8p}) with q = eps = zeta_{8p}^2.
struct Ring {
  int p = 0;
  bool generic() const { return p == 0; }
  friend bool operator==(Ring a, Ring b) { return a.p == b.p; }
  std::string str() const { return generic() ? "generic" : "restricted(p=" + std::to_string(p) + ")"; }
};

class Scalar {
 public:
  Scalar() : v_(Laurent{}) {}
  Scalar(Laurent x) : v_(std::move(x)) {}  // NOLINT
  Scalar(Cyclo x) : v_(std::move(x)) {}    // NOLINT

  static Scalar zero(Ring r);
  static Scalar one(Ring r) { return from_int(1, r); }
  static Scalar from_int(long v, Ring r);
  static Scalar from_laurent(const Laurent& x, Ring r);
  static Scalar q(int half, Ring r) { return from_laurent(Laurent::q(half), r); }

  Ring ring() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_laurent() const { return std::holds_alternative<Laurent>(v_); }
  const Laurent& laurent() const { return std::get<Laurent>(v_); }
  const Cyclo& cyclo() const { return std::get<Cyclo>(v_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Inverse of a unit (Laurent) or of a nonzero field element (cyclotomic).
  Scalar inverse() const;
  bool is_invertible() const;

  std::string str() const;
  // single-term scalars need no parentheses when used as a coefficient
  bool is_monomial() const;
  static Scalar parse(std::string_view s, Ring r);

 private:
  std::variant<Laurent, Cyclo> v_;
};

enum class RingOp { add, sub, mul };
Scalar ring_op(const Scalar& a, const Scalar& b, RingOp op);
Scalar quantum_integer(int k, Ring r);

}  // namespace lgn
