#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgn/scalar.hpp"

namespace lgn {

// Linear map V^{⊗in} -> V^{⊗out}, V = span(v-, v+). State - is 0, + is 1;
// a multi-index reads left strand first (most significant bit).
class Tensor {
 public:
  Tensor() = default;
  Tensor(int in, int out, Ring r);

  int in() const { return in_; }
  int out() const { return out_; }
  Ring ring() const { return ring_; }
  size_t rows() const { return size_t{1} << out_; }
  size_t cols() const { return size_t{1} << in_; }

  Scalar& at(size_t o, size_t i) { return e_[o * cols() + i]; }
  const Scalar& at(size_t o, size_t i) const { return e_[o * cols() + i]; }

  Tensor operator*(const Scalar& s) const;
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  friend bool operator==(const Tensor& a, const Tensor& b);

  Tensor specialized(Ring r) const;  // generic -> restricted
  // sparse listing "out-states in-states : scalar"
  std::string str() const;

 private:
  int in_ = 0, out_ = 0;
  Ring ring_;
  std::vector<Scalar> e_;
};

Tensor compose(const Tensor& top, const Tensor& bottom);
Tensor hcat(const Tensor& left, const Tensor& right);
// 2-strand tensor t acting on strands i, j (0 = leftmost) of width strands
Tensor on_strands(const Tensor& t, int width, int i, int j);

// r, r_inv, r21, cross_pos, cross_neg, cup, cap, d, d_transpose, pivotal,
// flip, id(k) written "id" with k given separately.
Tensor builtin(const std::string& name, Ring r = {});
Tensor identity(int k, Ring r = {});

struct KauffmanCoefficients {
  Scalar alpha, beta;
};
KauffmanCoefficients kauffman_solve(Ring r = {});

// states as a string of '-'/'+' -> index
size_t state_index(const std::string& states);
std::string state_string(size_t index, int width);

}  // namespace lgn
