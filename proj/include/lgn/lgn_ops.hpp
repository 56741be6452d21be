#pragma once

#include <vector>

#include "lgn/lgn.hpp"
#include "lgn/oq.hpp"

namespace lgn {

// R' on V^{⊗m} ⊗ V: the flip of R_{V, V^{⊗m}} = R_{1,m+1} ... R_{1,2}
Tensor r_prime(int m, Ring r, bool inverse = false);

// X^{(m)} for m parallel strands through one handle; 2^m x 2^m, memoized.
const PolyMatrix& fusion_matrix(const LgnAlgebra& alg, int block, int m);
const PolyMatrix& fusion_matrix(const LgnAlgebra& alg, Family f, int handle, int m);
PolyMatrix matrix_inverse(const LgnAlgebra& alg, Family f, int handle);
// sum_s (g^{⊗m} mat)^s_s; mat is 2^m x 2^m
Poly quantum_trace(const PolyMatrix& mat, Ring r);

// Omega(x) as sum of (O-word, L-word) pairs.
MultiSum coaction(const LgnAlgebra& alg, const Poly& x);
MultiSum coaction_parallel(const LgnAlgebra& alg, const Poly& x);
bool is_invariant(const LgnAlgebra& alg, const Poly& x);
// (Delta ⊗ id) Omega and (id ⊗ Omega) Omega, three legs each
MultiSum coaction_then_coproduct(const LgnAlgebra& alg, const Poly& x);
MultiSum coaction_twice(const LgnAlgebra& alg, const Poly& x);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Irreducible monomials of a restricted algebra, in normal order.
std::vector<Word> basis_enumerate(const LgnAlgebra& alg, size_t budget = 1'000'000);

}  // namespace lgn
