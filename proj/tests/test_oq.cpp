#include <doctest.h>

#include "lgn/matrix.hpp"
#include "lgn/oq.hpp"

using namespace lgn;

TEST_CASE("O_q normal forms") {
  auto& O = OqAlgebra::get();
  Poly x = O.parse("T[-,-] T[+,+]");
  CHECK(x == O.parse("1 + q^-2 T[-,+] T[+,-]"));
  Poly y = O.parse("T[+,-] T[-,+] + 3 T[-,-]");
  CHECK(O.mul(O.one(), y) == O.normal_form(y));
  for (auto& rel : O.defining_relations()) CHECK(O.normal_form(rel).is_zero());
  CHECK(rtt_relations(Ring{}).size() == 16);
}

TEST_CASE("antipode") {
  auto& O = OqAlgebra::get();
  PolyMatrix s = O.antipode_matrix();
  auto prod = [&](const Poly& a, const Poly& b) { return O.mul(a, b); };
  PolyMatrix ts = mat_mul(O.t_matrix(), s, prod), st = mat_mul(s, O.t_matrix(), prod);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Poly expect = i == j ? O.one() : Poly(Ring{});
      CHECK(ts[i][j] == expect);
      CHECK(st[i][j] == expect);
      CHECK(s[i][j].size() == 1);
      CHECK(s[i][j].terms().begin()->first.size() == 1);
    }
}

TEST_CASE("coproduct") {
  auto& O = OqAlgebra::get();
  MultiSum d = O.coproduct(O.generator(0, 1));
  MultiSum expect;
  multisum_add(expect, {O.generator(0, 0).terms().begin()->first, O.generator(0, 1).terms().begin()->first},
               Scalar::one(Ring{}));
  multisum_add(expect, {O.generator(0, 1).terms().begin()->first, O.generator(1, 1).terms().begin()->first},
               Scalar::one(Ring{}));
  CHECK(d == expect);
  MultiSum one = O.coproduct(O.one());
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->first == std::vector<Word>{Word{}, Word{}});
  CHECK(O.counit(O.generator(0, 0)).is_one());
  CHECK(O.counit(O.generator(0, 1)).is_zero());
}

TEST_CASE("coassociativity on generators") {
  auto& O = OqAlgebra::get();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      MultiSum left, right;
      for (auto& [legs, c] : O.coproduct(O.generator(i, j))) {
        for (auto& [l2, c2] : O.coproduct(Poly::word(legs[0], Ring{})))
          multisum_add(left, {l2[0], l2[1], legs[1]}, c * c2);
        for (auto& [r2, c2] : O.coproduct(Poly::word(legs[1], Ring{})))
          multisum_add(right, {legs[0], r2[0], r2[1]}, c * c2);
      }
      CHECK(left == right);
    }
}

TEST_CASE("O_q text round trip") {
  auto& O = OqAlgebra::get();
  Poly x = O.parse("q^{3/2} T[+,-] - T[-,+] T[+,+]");
  CHECK(O.parse(O.str(x)) == x);
}
