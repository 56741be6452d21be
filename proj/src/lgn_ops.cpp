#include "lgn/lgn_ops.hpp"

#include <map>
#include <mutex>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lgn {

Tensor r_prime(int m, Ring r, bool inverse) {
  Tensor rr = builtin(inverse ? "r_inv" : "r", r);
  Tensor rvm = identity(m + 1, r);
  for (int k = 1; k <= m; ++k) {
    Tensor f = on_strands(rr, m + 1, 0, k);
    rvm = inverse ? compose(rvm, f) : compose(f, rvm);
  }
  Tensor out(m + 1, m + 1, r);
  const size_t hi = size_t{1} << m;
  auto flip = [&](size_t idx) { return (idx & 1) * hi + (idx >> 1); };
  for (size_t o = 0; o < out.rows(); ++o)
    for (size_t i = 0; i < out.cols(); ++i) out.at(o, i) = rvm.at(flip(o), flip(i));
  return out;
}

const PolyMatrix& fusion_matrix(const LgnAlgebra& alg, int block, int m) {
  if (m < 1) throw std::invalid_argument("fusion needs m >= 1");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int, int>, PolyMatrix> cache;
  auto key = std::make_tuple(alg.surface().g, alg.surface().n, alg.ring().p, block, m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Ring r = alg.ring();
  PolyMatrix out;
  if (m == 1) {
    out = alg.block_matrix(block);
  } else {
    const PolyMatrix& prev = fusion_matrix(alg, block, m - 1);
    auto prod = alg.product();
    PolyMatrix x1 = kron(prev, identity_matrix(2, r), free_product);
    PolyMatrix x2 = kron(identity_matrix(prev.size(), r), alg.block_matrix(block), free_product);
    PolyMatrix rp = scalar_matrix(r_prime(m - 1, r)), rpi = scalar_matrix(r_prime(m - 1, r, true));
    out = mat_mul(mat_mul(mat_mul(x1, rp, free_product), x2, prod), rpi, free_product);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

const PolyMatrix& fusion_matrix(const LgnAlgebra& alg, Family f, int handle, int m) {
  return fusion_matrix(alg, alg.block(f, handle), m);
}

PolyMatrix matrix_inverse(const LgnAlgebra& alg, Family f, int handle) {
  int b = alg.block(f, handle);
  std::vector<Word> basis = {Word{}};
  for (int l = 0; l < 4; ++l) basis.push_back(Word(1, code(b, l)));
  return solve_matrix_inverse(alg.block_matrix(b), basis, [&](const Word& w) { return alg.normal_form(w); },
                              alg.ring());
}

Poly quantum_trace(const PolyMatrix& mat, Ring r) {
  Poly out(r);
  int m = 0;
  while ((size_t{1} << m) < mat.size()) ++m;
  for (size_t s = 0; s < mat.size(); ++s) {
    int plus = __builtin_popcountll(s);
    // g v- = -q^2 v-, g v+ = -q^-2 v+
    Scalar g = Scalar::q(4 * (m - plus) - 4 * plus, r);
    if (m % 2) g = -g;
    out += mat[s][s] * g;
  }
  return out;
}

namespace {

void coact_word(const LgnAlgebra& alg, const OqAlgebra& O, const Word& w, const Scalar& c, MultiSum& out) {
  const PolyMatrix& S = O.antipode_matrix();
  MultiSum acc;
  acc[{Word{}, Word{}}] = c;
  for (char ch : w) {
    int b = block_of(ch), l = letter_of_code(ch);
    int j = letter_row(l), k = letter_col(l);
    MultiSum next;
    for (auto& [key, e] : acc)
      for (int lr = 0; lr < 2; ++lr)
        for (int mc = 0; mc < 2; ++mc) {
          Poly lpart = alg.normal_form(key[1] + code(b, letter_of(lr, mc)));
          for (auto& [sw, sc] : S[mc][k].terms()) {
            Poly opart = O.rewriter().reduce(key[0] + code(0, letter_of(j, lr)) + sw);
            for (auto& [ow, oc] : opart.terms())
              for (auto& [lw, lc] : lpart.terms()) multisum_add(next, {ow, lw}, e * sc * oc * lc);
          }
        }
    acc = std::move(next);
  }
  for (auto& [key, e] : acc) multisum_add(out, key, e);
}

}  // namespace

MultiSum coaction(const LgnAlgebra& alg, const Poly& x) {
  const OqAlgebra& O = OqAlgebra::get(alg.ring());
  MultiSum out;
  for (auto& [w, c] : x.terms()) coact_word(alg, O, w, c, out);
  return out;
}

MultiSum coaction_parallel(const LgnAlgebra& alg, const Poly& x) {
  const OqAlgebra& O = OqAlgebra::get(alg.ring());
  std::vector<std::pair<const Word*, const Scalar*>> terms;
  for (auto& [w, c] : x.terms()) terms.emplace_back(&w, &c);
  std::vector<MultiSum> partial;
#pragma omp parallel
  {
#ifdef _OPENMP
    int nt = omp_get_num_threads(), id = omp_get_thread_num();
#else
    int nt = 1, id = 0;
#endif
#pragma omp single
    partial.resize(nt);
#pragma omp for schedule(dynamic, 1)
    for (long k = 0; k < static_cast<long>(terms.size()); ++k)
      coact_word(alg, O, *terms[k].first, *terms[k].second, partial[id]);
  }
  MultiSum out;
  for (auto& p : partial)
    for (auto& [key, e] : p) multisum_add(out, key, e);
  return out;
}

bool is_invariant(const LgnAlgebra& alg, const Poly& x) {
  MultiSum expect;
  for (auto& [w, c] : x.terms()) multisum_add(expect, {Word{}, w}, c);
  return coaction_parallel(alg, x) == expect;
}

MultiSum coaction_then_coproduct(const LgnAlgebra& alg, const Poly& x) {
  const OqAlgebra& O = OqAlgebra::get(alg.ring());
  MultiSum out;
  for (auto& [key, c] : coaction(alg, x))
    for (auto& [k2, e] : O.coproduct(Poly::word(key[0], alg.ring()))) multisum_add(out, {k2[0], k2[1], key[1]}, c * e);
  return out;
}

MultiSum coaction_twice(const LgnAlgebra& alg, const Poly& x) {
  MultiSum out;
  for (auto& [key, c] : coaction(alg, x))
    for (auto& [k2, e] : coaction(alg, Poly::word(key[1], alg.ring()))) multisum_add(out, {key[0], k2[0], k2[1]}, c * e);
  return out;
}

std::vector<Word> basis_enumerate(const LgnAlgebra& alg, size_t budget) {
  if (!alg.restricted()) throw std::invalid_argument("basis enumeration needs restricted mode");
  const int p = alg.ring().p;
  // sorted candidates b^i a^j d^k c^l, one step past every restricted bound
  std::vector<Word> local;
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 2 * p; ++k)
        for (int l = 0; l <= p; ++l) {
          Word w = Word(i, static_cast<char>(kB)) + Word(j, static_cast<char>(kA)) + Word(k, static_cast<char>(kD)) +
                   Word(l, static_cast<char>(kC));
          if (alg.local().is_normal(w)) local.push_back(w);
        }
  const int nb = alg.surface().blocks();
  double total = 1;
  for (int b = 0; b < nb; ++b) total *= static_cast<double>(local.size());
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("basis has " + std::to_string(static_cast<long long>(total)) + " elements, budget " +
                         std::to_string(budget));
  std::vector<Word> out = {Word{}};
  for (int b = 0; b < nb; ++b) {
    std::vector<Word> next;
    next.reserve(out.size() * local.size());
    for (auto& prefix : out)
      for (auto& w : local) {
        Word coded = w;
        for (auto& ch : coded) ch = code(b, ch);
        next.push_back(prefix + coded);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace lgn
