#include "lgn/scalar.hpp"

#include <stdexcept>

namespace lgn {

namespace {

[[noreturn]] void mismatch() { throw std::invalid_argument("ring mismatch between scalars"); }

}  // namespace

Scalar Scalar::zero(Ring r) { return r.generic() ? Scalar(Laurent{}) : Scalar(Cyclo::zero(r.p)); }

Scalar Scalar::from_int(long v, Ring r) {
  return r.generic() ? Scalar(Laurent(v)) : Scalar(Cyclo::from_int(r.p, v));
}

Scalar Scalar::from_laurent(const Laurent& x, Ring r) {
  return r.generic() ? Scalar(x) : Scalar(specialize(x, r.p));
}

Ring Scalar::ring() const { return is_laurent() ? Ring{0} : Ring{cyclo().p()}; }

bool Scalar::is_zero() const { return is_laurent() ? laurent().is_zero() : cyclo().is_zero(); }

bool Scalar::is_one() const { return is_laurent() ? laurent().is_one() : cyclo().is_one(); }

Scalar Scalar::operator-() const {
  return is_laurent() ? Scalar(-laurent()) : Scalar(-cyclo());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_laurent() != o.is_laurent()) mismatch();
  if (is_laurent())
    std::get<Laurent>(v_) += o.laurent();
  else
    std::get<Cyclo>(v_) += o.cyclo();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_laurent() != o.is_laurent()) mismatch();
  if (is_laurent())
    std::get<Laurent>(v_) -= o.laurent();
  else
    std::get<Cyclo>(v_) -= o.cyclo();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_laurent() != o.is_laurent()) mismatch();
  if (is_laurent())
    std::get<Laurent>(v_) *= o.laurent();
  else
    std::get<Cyclo>(v_) *= o.cyclo();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_laurent() != b.is_laurent()) mismatch();
  return a.is_laurent() ? a.laurent() == b.laurent() : a.cyclo() == b.cyclo();
}

Scalar Scalar::inverse() const {
  return is_laurent() ? Scalar(laurent().unit_inverse()) : Scalar(cyclo().inverse());
}

bool Scalar::is_invertible() const { return is_laurent() ? laurent().is_unit() : !cyclo().is_zero(); }

std::string Scalar::str() const { return is_laurent() ? laurent().str() : cyclo().str(); }

bool Scalar::is_monomial() const {
  if (is_laurent()) return laurent().terms().size() <= 1;
  int nz = 0;
  for (auto& c : cyclo().coeffs()) nz += c != 0;
  return nz <= 1;
}

Scalar Scalar::parse(std::string_view s, Ring r) {
  return r.generic() ? Scalar(Laurent::parse(s)) : Scalar(Cyclo::parse(s, r.p));
}

Scalar ring_op(const Scalar& a, const Scalar& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown ring op");
}

Scalar quantum_integer(int k, Ring r) { return Scalar::from_laurent(quantum_integer_laurent(k), r); }

}  // namespace lgn
