#include <doctest.h>

#include <random>

#include "lgn/lgn.hpp"
#include "lgn/lgn_ops.hpp"
#include "lgn/matrix.hpp"
#include "lgn/oq.hpp"
#include "lgn/random_gen.hpp"
#include "lgn/tensor.hpp"

using namespace lgn;

namespace {

Scalar q(int half) { return Scalar::q(half, Ring{}); }

std::shared_ptr<const LgnAlgebra> alg(int g, int n, int p = 0) { return LgnAlgebra::get({g, n}, Ring{p}); }

Poly gen(const LgnAlgebra& a, Family f, int h, int s, int t) { return a.generator({f, h, s, t}); }

}  // namespace

TEST_CASE("surface validation") {
  CHECK_THROWS(LgnAlgebra({0, 0}, Ring{}));
  CHECK_THROWS(LgnAlgebra({-1, 2}, Ring{}));
  CHECK_THROWS(LgnAlgebra({0, 1}, Ring{1}));
  auto a = alg(1, 1);
  CHECK_THROWS(a->block(Family::M, 1));
  CHECK(a->block(Family::M, 2) == 2);
  CHECK(a->block(Family::A, 1) == 0);
  CHECK(a->block(Family::B, 1) == 1);
}

TEST_CASE("relation counts") {
  CHECK(alg(0, 1)->defining_relations().size() == 17);
  CHECK(alg(1, 0)->defining_relations().size() == 50);
  CHECK(alg(0, 2)->defining_relations().size() == 50);
  CHECK(alg(1, 1)->defining_relations().size() == 99);
  CHECK(alg(2, 0)->defining_relations().size() == 164);
}

TEST_CASE("qdet relation and normal form") {
  auto a = alg(0, 1);
  Poly mm = gen(*a, Family::M, 1, 0, 0), mp = gen(*a, Family::M, 1, 0, 1), pm = gen(*a, Family::M, 1, 1, 0),
       pp = gen(*a, Family::M, 1, 1, 1);
  Poly qdet = qdet_relation(0, Ring{});
  CHECK(qdet == mm.concat(pp) - mp.concat(pm) * q(8) - a->one());
  CHECK(a->mul(mm, pp) == a->one() + a->mul(mp, pm) * q(8));
  CHECK(a->normal_form(mp.concat(pm)) == mp.concat(pm));
  CHECK(a->mul(a->one(), mp) == mp);
}

TEST_CASE("every defining relation reduces to zero") {
  for (auto [g, n] : {std::pair{0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}}) {
    auto a = alg(g, n);
    for (auto& r : a->defining_relations()) CHECK(a->normal_form(r).is_zero());
  }
  for (int p : {2, 3}) {
    auto a = alg(0, 1, p);
    for (auto& r : a->defining_relations()) CHECK(a->normal_form(r).is_zero());
  }
}

TEST_CASE("restricted exponent bounds") {
  for (int p : {2, 3}) {
    auto a = alg(0, 1, p);
    Word b(p, code(0, 0)), c(p, code(0, 3)), d(2 * p, code(0, 2));
    CHECK(a->normal_form(b).is_zero());
    CHECK(a->normal_form(c).is_zero());
    CHECK(a->normal_form(d) == a->one());
    CHECK(a->is_normal(Word(p - 1, code(0, 0))));
  }
}

TEST_CASE("exchange relation between the handle matrices") {
  auto a = alg(1, 0);
  Poly b = gen(*a, Family::B, 1, 0, 1), c = gen(*a, Family::A, 1, 1, 0);
  Poly prod = a->mul(b, c);
  CHECK_FALSE(prod.is_zero());
  for (auto& r : l10_relations(a->block(Family::B, 1), a->block(Family::A, 1), Ring{}))
    CHECK(a->normal_form(r).is_zero());
}

TEST_CASE("associativity and idempotence on random input") {
  Rng rng(3);
  for (auto [g, n] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
    auto a = alg(g, n);
    for (int i = 0; i < 30; ++i) {
      Poly x = random_element(*a, rng, 2, 3), y = random_element(*a, rng, 2, 3), z = random_element(*a, rng, 2, 3);
      CHECK(a->mul(a->mul(x, y), z) == a->mul(x, a->mul(y, z)));
      Poly nx = a->normal_form(x);
      CHECK(a->normal_form(nx) == nx);
    }
  }
}

TEST_CASE("element parsing and printing") {
  auto a = alg(1, 1);
  LgnElement x = parse_element("q^2 * B1[-,+] A1[+,-] - 3", a);
  CHECK(parse_element(x.str(), a) == x);
  CHECK_THROWS(parse_element("M1[-,+]", a));
  CHECK_THROWS(parse_element("B1[-,+", a));
  CHECK(parse_element("M2[+,+]", a).str() == "M2[+,+]");
  CHECK_THROWS(parse_element("M2[+,+]", alg(0, 2)) * parse_element("B1[-,-]", a));
}

TEST_CASE("fusion matrices") {
  auto a = alg(0, 1);
  CHECK(fusion_matrix(*a, Family::M, 1, 1) == a->block_matrix(0));
  const PolyMatrix& x = fusion_matrix(*a, 0, 2);
  for (auto name : {"cross_pos", "cross_neg"}) {
    PolyMatrix c = scalar_matrix(builtin(name));
    PolyMatrix d = mat_sub(mat_mul(c, x, free_product), mat_mul(x, c, free_product));
    for (auto& row : d)
      for (auto& e : row) CHECK(a->normal_form(e).is_zero());
  }
  CHECK(is_invariant(*a, quantum_trace(x, Ring{})));
}

TEST_CASE("matrix inverse") {
  auto a = alg(0, 1);
  PolyMatrix y = matrix_inverse(*a, Family::M, 1);
  PolyMatrix xy = mat_mul(a->block_matrix(0), y, [&](const Poly& u, const Poly& v) { return a->mul(u, v); });
  PolyMatrix yx = mat_mul(y, a->block_matrix(0), [&](const Poly& u, const Poly& v) { return a->mul(u, v); });
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(xy[i][j] == (i == j ? a->one() : Poly(Ring{})));
      CHECK(yx[i][j] == (i == j ? a->one() : Poly(Ring{})));
    }
  CHECK(y[0][1] == gen(*a, Family::M, 1, 0, 1) * -q(8));
}

TEST_CASE("quantum trace") {
  Ring r{};
  CHECK(quantum_trace(identity_matrix(2, r), r) == Poly::constant(-q(4) - q(-4)));
  auto a = alg(1, 0);
  CHECK(quantum_trace(a->block_matrix(a->block(Family::B, 1)), r) ==
        gen(*a, Family::B, 1, 0, 0) * -q(4) - gen(*a, Family::B, 1, 1, 1) * q(-4));
  PolyMatrix m1 = a->block_matrix(0), m2 = a->block_matrix(1);
  PolyMatrix sum = m1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sum[i][j] += m2[i][j];
  CHECK(quantum_trace(sum, r) == quantum_trace(m1, r) + quantum_trace(m2, r));
}

TEST_CASE("coaction") {
  auto a = alg(0, 1);
  MultiSum one = coaction(*a, a->one());
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->first == std::vector<Word>{Word{}, Word{}});
  CHECK(is_invariant(*a, a->one()));
  CHECK_FALSE(is_invariant(*a, gen(*a, Family::M, 1, 0, 1)));
  CHECK(is_invariant(*a, quantum_trace(a->block_matrix(0), Ring{})));

  // Ω(X^j_k) = T^j_l S(T)^m_k ⊗ X^l_m
  auto& O = OqAlgebra::get();
  const PolyMatrix& s = O.antipode_matrix();
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      MultiSum expect;
      for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
          Poly left = O.mul(O.generator(j, l), s[m][k]);
          Word right = gen(*a, Family::M, 1, l, m).terms().begin()->first;
          for (auto& [w, c] : left.terms()) multisum_add(expect, {w, right}, c);
        }
      CHECK(coaction(*a, gen(*a, Family::M, 1, j, k)) == expect);
    }
}

TEST_CASE("coaction is multiplicative and coassociative") {
  auto a = alg(1, 0);
  auto& O = OqAlgebra::get();
  Rng rng(5);
  for (int i = 0; i < 15; ++i) {
    Poly x = random_element(*a, rng, 1, 2), y = random_element(*a, rng, 1, 2);
    MultiSum ox = coaction(*a, x), oy = coaction(*a, y), prod;
    for (auto& [lx, cx] : ox)
      for (auto& [ly, cy] : oy) {
        Poly left = O.mul(Poly::word(lx[0], Ring{}), Poly::word(ly[0], Ring{}));
        Poly right = a->mul(Poly::word(lx[1], Ring{}), Poly::word(ly[1], Ring{}));
        for (auto& [wl, cl] : left.terms())
          for (auto& [wr, cr] : right.terms()) multisum_add(prod, {wl, wr}, cx * cy * cl * cr);
      }
    CHECK(coaction(*a, a->mul(x, y)) == prod);
    CHECK(coaction_then_coproduct(*a, x) == coaction_twice(*a, x));
  }
}

TEST_CASE("restricted basis enumeration") {
  CHECK(basis_enumerate(*alg(0, 1, 2)).size() == 16);
  CHECK(basis_enumerate(*alg(0, 1, 3)).size() == 54);
  CHECK(basis_enumerate(*alg(1, 0, 2)).size() == 256);
  CHECK_THROWS_AS(basis_enumerate(*alg(1, 0, 2), 10), BudgetExceeded);
  CHECK_THROWS(basis_enumerate(*alg(0, 1)));
}
