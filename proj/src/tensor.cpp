#include "lgn/tensor.hpp"

#include <stdexcept>

#include "lgn/linsolve.hpp"

namespace lgn {

Tensor::Tensor(int in, int out, Ring r)
    : in_(in), out_(out), ring_(r), e_(size_t{1} << (in + out), Scalar::zero(r)) {}

Tensor Tensor::operator*(const Scalar& s) const {
  Tensor t = *this;
  for (auto& x : t.e_) x *= s;
  return t;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (in_ != o.in_ || out_ != o.out_) throw std::invalid_argument("tensor sum: arity mismatch");
  Tensor t = *this;
  for (size_t k = 0; k < e_.size(); ++k) t.e_[k] += o.e_[k];
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o * Scalar::from_int(-1, o.ring_); }

bool operator==(const Tensor& a, const Tensor& b) {
  return a.in_ == b.in_ && a.out_ == b.out_ && a.e_ == b.e_;
}

Tensor Tensor::specialized(Ring r) const {
  if (ring_ == r) return *this;
  if (!ring_.generic()) throw std::invalid_argument("can only specialize generic tensors");
  Tensor t(in_, out_, r);
  for (size_t k = 0; k < e_.size(); ++k) t.e_[k] = Scalar::from_laurent(e_[k].laurent(), r);
  return t;
}

std::string Tensor::str() const {
  std::string s;
  for (size_t o = 0; o < rows(); ++o)
    for (size_t i = 0; i < cols(); ++i) {
      if (at(o, i).is_zero()) continue;
      s += "(" + state_string(o, out_) + ", " + state_string(i, in_) + ") " + at(o, i).str() + "\n";
    }
  return s;
}

Tensor compose(const Tensor& top, const Tensor& bottom) {
  if (top.in() != bottom.out())
    throw std::invalid_argument("compose: arity mismatch (" + std::to_string(top.in()) + " vs " +
                                std::to_string(bottom.out()) + ")");
  Tensor t(bottom.in(), top.out(), top.ring());
  for (size_t o = 0; o < top.rows(); ++o)
    for (size_t m = 0; m < top.cols(); ++m) {
      const Scalar& a = top.at(o, m);
      if (a.is_zero()) continue;
      for (size_t i = 0; i < bottom.cols(); ++i) {
        const Scalar& b = bottom.at(m, i);
        if (!b.is_zero()) t.at(o, i) += a * b;
      }
    }
  return t;
}

Tensor hcat(const Tensor& left, const Tensor& right) {
  Tensor t(left.in() + right.in(), left.out() + right.out(), left.ring());
  for (size_t o1 = 0; o1 < left.rows(); ++o1)
    for (size_t i1 = 0; i1 < left.cols(); ++i1) {
      const Scalar& a = left.at(o1, i1);
      if (a.is_zero()) continue;
      for (size_t o2 = 0; o2 < right.rows(); ++o2)
        for (size_t i2 = 0; i2 < right.cols(); ++i2) {
          const Scalar& b = right.at(o2, i2);
          if (!b.is_zero()) t.at((o1 << right.out()) | o2, (i1 << right.in()) | i2) = a * b;
        }
    }
  return t;
}

Tensor identity(int k, Ring r) {
  Tensor t(k, k, r);
  for (size_t i = 0; i < t.rows(); ++i) t.at(i, i) = Scalar::one(r);
  return t;
}

Tensor on_strands(const Tensor& t, int width, int i, int j) {
  if (t.in() != 2 || t.out() != 2) throw std::invalid_argument("on_strands needs a 2-strand tensor");
  Tensor out(width, width, t.ring());
  const int si = width - 1 - i, sj = width - 1 - j;
  for (size_t in = 0; in < out.cols(); ++in) {
    size_t li = 2 * ((in >> si) & 1) + ((in >> sj) & 1);
    size_t rest = in & ~((size_t{1} << si) | (size_t{1} << sj));
    for (size_t lo = 0; lo < 4; ++lo) {
      const Scalar& c = t.at(lo, li);
      if (c.is_zero()) continue;
      out.at(rest | ((lo >> 1) << si) | ((lo & 1) << sj), in) = c;
    }
  }
  return out;
}

namespace {

Scalar L(const Laurent& x, Ring r) { return Scalar::from_laurent(x, r); }

Tensor r_matrix(Ring r) {
  Tensor t(2, 2, r);
  t.at(0, 0) = L(Laurent::q(2), r);
  t.at(1, 1) = L(Laurent::q(-2), r);
  t.at(1, 2) = L(Laurent::q(2) - Laurent::q(-6), r);
  t.at(2, 2) = L(Laurent::q(-2), r);
  t.at(3, 3) = L(Laurent::q(2), r);
  return t;
}

Tensor r_inverse(Ring r) {
  Tensor t(2, 2, r);
  t.at(0, 0) = L(Laurent::q(-2), r);
  t.at(1, 1) = L(Laurent::q(2), r);
  t.at(1, 2) = L(Laurent::q(-2) - Laurent::q(6), r);
  t.at(2, 2) = L(Laurent::q(2), r);
  t.at(3, 3) = L(Laurent::q(-2), r);
  return t;
}

Tensor flip(Ring r) {
  Tensor t(2, 2, r);
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b) t.at(2 * b + a, 2 * a + b) = Scalar::one(r);
  return t;
}

// printed isomorphism D: V* -> V, columns indexed by the dual basis
Tensor d_matrix(Ring r) {
  Tensor t(1, 1, r);
  t.at(1, 0) = L(Laurent::monomial(-1, 5), r);
  t.at(0, 1) = L(Laurent::q(1), r);
  return t;
}

// the transpose fixed by the generator dictionary (equal to -Dᵀ)
Tensor d_transpose(Ring r) {
  Tensor t(1, 1, r);
  t.at(0, 1) = L(Laurent::q(5), r);
  t.at(1, 0) = L(Laurent::monomial(-1, 1), r);
  return t;
}

Tensor cup(Ring r) {
  Tensor t(0, 2, r);
  Tensor td = d_transpose(r);
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b) t.at(2 * a + b, 0) = td.at(a, b);
  return t;
}

Tensor cap(Ring r) {
  Tensor t(2, 0, r);
  t.at(0, 1) = L(Laurent::monomial(-1, -1), r);
  t.at(0, 2) = L(Laurent::q(-5), r);
  return t;
}

Tensor pivotal(Ring r) {
  Tensor t(1, 1, r);
  t.at(0, 0) = L(Laurent::monomial(-1, 4), r);
  t.at(1, 1) = L(Laurent::monomial(-1, -4), r);
  return t;
}

}  // namespace

Tensor builtin(const std::string& name, Ring r) {
  if (name == "r") return r_matrix(r);
  if (name == "r_inv") return r_inverse(r);
  if (name == "r21") return compose(flip(r), compose(r_matrix(r), flip(r)));
  if (name == "flip") return flip(r);
  if (name == "cross_pos") return compose(flip(r), r_matrix(r));
  if (name == "cross_neg") return compose(r_inverse(r), flip(r));
  if (name == "cup") return cup(r);
  if (name == "cap") return cap(r);
  if (name == "d") return d_matrix(r);
  if (name == "d_transpose") return d_transpose(r);
  if (name == "pivotal") return pivotal(r);
  if (name == "id") return identity(1, r);
  throw std::invalid_argument("unknown builtin tensor '" + name + "'");
}

KauffmanCoefficients kauffman_solve(Ring r) {
  Tensor x = builtin("cross_pos", r);
  Tensor id = identity(2, r);
  Tensor cc = compose(builtin("cup", r), builtin("cap", r));
  LinearSystem sys(2, r);
  for (size_t o = 0; o < 4; ++o)
    for (size_t i = 0; i < 4; ++i) sys.add_equation({id.at(o, i), cc.at(o, i)}, x.at(o, i));
  auto sol = sys.solve();
  return {sol[0], sol[1]};
}

size_t state_index(const std::string& states) {
  size_t idx = 0;
  for (char c : states) {
    if (c != '-' && c != '+') throw std::invalid_argument("state must be '-' or '+'");
    idx = (idx << 1) | (c == '+');
  }
  return idx;
}

std::string state_string(size_t index, int width) {
  std::string s(width, '-');
  for (int k = 0; k < width; ++k)
    if (index >> (width - 1 - k) & 1) s[k] = '+';
  return s;
}

}  // namespace lgn
