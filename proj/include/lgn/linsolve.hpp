#pragma once

#include <stdexcept>
#include <vector>

#include "lgn/scalar.hpp"

namespace lgn {

struct StructuralInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact solver for A x = b over the generic ring (exact division required)
// or over a cyclotomic field. Requires a unique solution.
class LinearSystem {
 public:
  LinearSystem(size_t unknowns, Ring r) : n_(unknowns), ring_(r) {}
  void add_equation(std::vector<Scalar> coeffs, Scalar rhs);
  std::vector<Scalar> solve() const;
  size_t equations() const { return rows_.size(); }

 private:
  size_t n_;
  Ring ring_;
  std::vector<std::vector<Scalar>> rows_;  // n_ coefficients then rhs
};

// Rank of a list of vectors over the cyclotomic field (or generic ring,
// treated as its fraction field).
size_t rank_of(std::vector<std::vector<Scalar>> vectors);

}  // namespace lgn
