#include "lgn/matrix.hpp"

#include <map>
#include <stdexcept>

#include "lgn/linsolve.hpp"

namespace lgn {

PolyMatrix zero_matrix(size_t n, Ring r) { return PolyMatrix(n, std::vector<Poly>(n, Poly(r))); }

PolyMatrix identity_matrix(size_t n, Ring r) {
  PolyMatrix m = zero_matrix(n, r);
  for (size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(Scalar::one(r));
  return m;
}

PolyMatrix scalar_matrix(const Tensor& t) {
  if (t.in() != t.out()) throw std::invalid_argument("scalar_matrix needs a square tensor");
  PolyMatrix m = zero_matrix(t.rows(), t.ring());
  for (size_t i = 0; i < t.rows(); ++i)
    for (size_t j = 0; j < t.cols(); ++j)
      if (!t.at(i, j).is_zero()) m[i][j] = Poly::constant(t.at(i, j));
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const EntryProduct& prod) {
  size_t n = a.size();
  Ring r = a[0][0].ring();
  PolyMatrix c = zero_matrix(n, r);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += prod(a[i][k], b[k][j]);
    }
  return c;
}

PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) c[i][j] -= b[i][j];
  return c;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b, const EntryProduct& prod) {
  size_t na = a.size(), nb = b.size();
  Ring r = a[0][0].ring();
  PolyMatrix c = zero_matrix(na * nb, r);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t k = 0; k < nb; ++k)
        for (size_t l = 0; l < nb; ++l)
          if (!b[k][l].is_zero()) c[i * nb + k][j * nb + l] = prod(a[i][j], b[k][l]);
    }
  return c;
}

PolyMatrix generator_matrix(int block, Ring r) {
  PolyMatrix m = zero_matrix(2, r);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = Poly::word(Word(1, code(block, letter_of(i, j))), r);
  return m;
}

Poly free_product(const Poly& a, const Poly& b) { return a.concat(b); }

std::vector<Poly> flatten(const PolyMatrix& m) {
  std::vector<Poly> out;
  for (auto& row : m)
    for (auto& e : row) out.push_back(e);
  return out;
}

namespace {

PolyMatrix first(const PolyMatrix& x) { return kron(x, identity_matrix(2, x[0][0].ring()), free_product); }
PolyMatrix second(const PolyMatrix& x) { return kron(identity_matrix(2, x[0][0].ring()), x, free_product); }

PolyMatrix chain(std::initializer_list<PolyMatrix> ms) {
  auto it = ms.begin();
  PolyMatrix acc = *it++;
  for (; it != ms.end(); ++it) acc = mat_mul(acc, *it, free_product);
  return acc;
}

}  // namespace

std::vector<Poly> reflection_relations(int block, Ring r) {
  PolyMatrix R = scalar_matrix(builtin("r", r)), R21 = scalar_matrix(builtin("r21", r));
  PolyMatrix X = generator_matrix(block, r);
  PolyMatrix X1 = first(X), X2 = second(X);
  return flatten(mat_sub(chain({R, X1, R21, X2}), chain({X2, R, X1, R21})));
}

Poly qdet_relation(int block, Ring r) {
  auto g = [&](int l) { return Poly::word(Word(1, code(block, l)), r); };
  return g(kA).concat(g(kD)) - g(kB).concat(g(kC)) * Scalar::q(8, r) - Poly::constant(Scalar::one(r));
}

std::vector<Poly> exchange_relations(int x_block, int y_block, Ring r) {
  PolyMatrix R = scalar_matrix(builtin("r", r)), Ri = scalar_matrix(builtin("r_inv", r));
  PolyMatrix X1 = first(generator_matrix(x_block, r)), Y2 = second(generator_matrix(y_block, r));
  return flatten(mat_sub(chain({R, X1, Ri, Y2}), chain({Y2, R, X1, Ri})));
}

std::vector<Poly> l10_relations(int b_block, int a_block, Ring r) {
  PolyMatrix R = scalar_matrix(builtin("r", r)), Ri = scalar_matrix(builtin("r_inv", r));
  PolyMatrix R21 = scalar_matrix(builtin("r21", r));
  PolyMatrix B1 = first(generator_matrix(b_block, r)), A2 = second(generator_matrix(a_block, r));
  return flatten(mat_sub(chain({R, B1, R21, A2}), chain({A2, R, B1, Ri})));
}

std::vector<Poly> rtt_relations(Ring r) {
  PolyMatrix R = scalar_matrix(builtin("r", r));
  PolyMatrix T = generator_matrix(0, r);
  PolyMatrix T1 = first(T), T2 = second(T);
  return flatten(mat_sub(chain({R, T1, T2}), chain({T2, T1, R})));
}

Poly oq_det_relation(Ring r) {
  auto g = [&](int l) { return Poly::word(Word(1, code(0, l)), r); };
  return g(kA).concat(g(kD)) - g(kB).concat(g(kC)) * Scalar::q(-4, r) - Poly::constant(Scalar::one(r));
}

PolyMatrix solve_matrix_inverse(const PolyMatrix& x, const std::vector<Word>& basis,
                                const std::function<Poly(const Word&)>& nf, Ring r) {
  const size_t n = x.size(), nb = basis.size();
  auto unknown = [&](size_t m, size_t k, size_t b) { return (n * m + k) * nb + b; };
  LinearSystem sys(n * n * nb, r);
  auto add_side = [&](bool x_left) {
    for (size_t s = 0; s < n; ++s)
      for (size_t t = 0; t < n; ++t) {
        std::map<Word, std::vector<Scalar>> eqs;
        eqs[Word{}].assign(n * n * nb, Scalar::zero(r));
        for (size_t k = 0; k < n; ++k) {
          const Poly& xe = x_left ? x[s][k] : x[k][t];
          for (auto& [xw, xc] : xe.terms())
            for (size_t b = 0; b < nb; ++b) {
              Poly red = nf(x_left ? xw + basis[b] : basis[b] + xw);
              size_t u = x_left ? unknown(k, t, b) : unknown(s, k, b);
              for (auto& [word, c] : red.terms()) {
                auto& row = eqs[word];
                if (row.empty()) row.assign(n * n * nb, Scalar::zero(r));
                row[u] += xc * c;
              }
            }
        }
        for (auto& [word, row] : eqs)
          sys.add_equation(row, word.empty() && s == t ? Scalar::one(r) : Scalar::zero(r));
      }
  };
  add_side(true);
  add_side(false);
  auto sol = sys.solve();
  PolyMatrix y = zero_matrix(n, r);
  for (size_t m = 0; m < n; ++m)
    for (size_t k = 0; k < n; ++k)
      for (size_t b = 0; b < nb; ++b) y[m][k].add(basis[b], sol[unknown(m, k, b)]);
  return y;
}

}  // namespace lgn
