#pragma once

#include <functional>
#include <vector>

#include "lgn/poly.hpp"
#include "lgn/tensor.hpp"

namespace lgn {

// Square matrices with Poly entries; the product of entries is supplied so
// the same code serves the free algebra and the reduced algebras.
using PolyMatrix = std::vector<std::vector<Poly>>;
using EntryProduct = std::function<Poly(const Poly&, const Poly&)>;

PolyMatrix scalar_matrix(const Tensor& t);  // t must be square (in == out)
PolyMatrix zero_matrix(size_t n, Ring r);
PolyMatrix identity_matrix(size_t n, Ring r);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const EntryProduct& prod);
PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b, const EntryProduct& prod);
// 2x2 matrix of single generators of one block
PolyMatrix generator_matrix(int block, Ring r);

Poly free_product(const Poly& a, const Poly& b);

// componentwise relations
std::vector<Poly> reflection_relations(int block, Ring r);
Poly qdet_relation(int block, Ring r);
std::vector<Poly> exchange_relations(int x_block, int y_block, Ring r);  // R X1 R^-1 Y2 = Y2 R X1 R^-1
std::vector<Poly> l10_relations(int b_block, int a_block, Ring r);      // R B1 R21 A2 = A2 R B1 R^-1
std::vector<Poly> rtt_relations(Ring r);                                 // R T1 T2 = T2 T1 R
Poly oq_det_relation(Ring r);

std::vector<Poly> flatten(const PolyMatrix& m);

// Two-sided inverse of x with entries in span(basis), equality tested after nf.
PolyMatrix solve_matrix_inverse(const PolyMatrix& x, const std::vector<Word>& basis,
                                const std::function<Poly(const Word&)>& nf, Ring r);

}  // namespace lgn
