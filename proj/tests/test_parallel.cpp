#include <doctest.h>

#include "lgn/lgn_ops.hpp"
#include "lgn/random_gen.hpp"

using namespace lgn;

TEST_CASE("parallel and serial multiplication agree") {
  Rng rng(41);
  for (auto [g, n] : {std::pair{0, 2}, {1, 1}, {2, 0}}) {
    auto a = LgnAlgebra::get({g, n});
    for (int i = 0; i < 10; ++i) {
      Poly x = random_element(*a, rng, 6, 3), y = random_element(*a, rng, 6, 3);
      CHECK(a->mul_parallel(x, y) == a->mul(x, y));
    }
  }
}

TEST_CASE("parallel and serial coaction agree") {
  Rng rng(43);
  auto a = LgnAlgebra::get({1, 0});
  for (int i = 0; i < 10; ++i) {
    Poly x = a->normal_form(random_element(*a, rng, 5, 3));
    CHECK(coaction_parallel(*a, x) == coaction(*a, x));
  }
}
