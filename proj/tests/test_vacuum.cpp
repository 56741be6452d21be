#include <doctest.h>

#include "lgn/holonomy.hpp"
#include "lgn/lgn_ops.hpp"
#include "lgn/random_gen.hpp"
#include "lgn/vacuum.hpp"
#include "lgn/verify.hpp"

using namespace lgn;

namespace {

struct Pair {
  std::shared_ptr<const LgnAlgebra> l0g, lg0;
};

Pair algebras(int g) { return {LgnAlgebra::get({0, g}), LgnAlgebra::get({g, 0})}; }

}  // namespace

TEST_CASE("vacuum projection") {
  auto [l01, l10] = algebras(1);
  Poly amp = l10->generator({Family::A, 1, 0, 1});
  Poly w = l10->generator({Family::B, 1, 1, 0});
  CHECK(vacuum_project(*l10, amp.concat(w)).is_zero());
  Poly amm = l10->generator({Family::A, 1, 0, 0}), bpp = l10->generator({Family::B, 1, 1, 1});
  CHECK(vacuum_project(*l10, l10->mul(amm, bpp)) == l01->generator({Family::M, 1, 1, 1}));
  CHECK(vacuum_project(*l10, l10->one()) == l01->one());
}

TEST_CASE("vacuum action basics") {
  for (int g : {1, 2}) {
    auto [l0g, lg0] = algebras(g);
    Rng rng(g);
    for (int i = 0; i < 10; ++i) {
      Poly x = l0g->normal_form(random_element(*l0g, rng, 2, 2));
      CHECK(vacuum_act(*l0g, *lg0, x, lg0->one()) == x);
    }
    for (int h = 1; h <= g; ++h)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          CHECK(vacuum_act(*l0g, *lg0, l0g->one(), lg0->generator({Family::A, h, s, t})) ==
                (s == t ? l0g->one() : Poly(Ring{})));
  }
  CHECK_THROWS(vacuum_act(*LgnAlgebra::get({0, 1}), *LgnAlgebra::get({2, 0}), Poly(Ring{}), Poly(Ring{})));
}

TEST_CASE("module law, diagram pairs and boundary slide") {
  for (int g : {1, 2}) {
    VerifyOptions o;
    o.surface = {g, 0};
    o.count = g == 1 ? 100 : 40;
    VerifyReport r = verify_vacuum(o);
    CHECK(r.ok());
  }
}

TEST_CASE("S under T on hand-built pairs") {
  DiagramIR e0 = DiagramIR::empty({0, 1}), e1 = DiagramIR::empty({1, 0});
  CHECK(stack_act_check(e0, e1));
  DiagramIR m = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["cap"]]})");
  DiagramIR b = parse_diagram(R"({"surface":{"g":1,"n":0},"handle_strands":[1,0],"slices":[["cap"]]})");
  CHECK(stack_act_check(m, b));
  DiagramIR mm = parse_diagram(R"({"surface":{"g":0,"n":2},"handle_strands":[1,1],"slices":[["cap","cap"]]})");
  DiagramIR a = parse_diagram(R"({"surface":{"g":2,"n":0},"handle_strands":[0,1,0,0],"slices":[["cap"]]})");
  CHECK(stack_act_check(mm, a));
  CHECK_THROWS(stack_act(m, a));
}

TEST_CASE("invariants stay invariant") {
  auto [l01, l10] = algebras(1);
  Poly x = quantum_trace(l01->block_matrix(0), Ring{});
  Poly y = quantum_trace(l10->block_matrix(l10->block(Family::A, 1)), Ring{});
  Poly z = quantum_trace(l10->block_matrix(l10->block(Family::B, 1)), Ring{});
  CHECK(is_invariant(*l01, vacuum_act(*l01, *l10, x, y)));
  CHECK(is_invariant(*l01, vacuum_act(*l01, *l10, x, l10->mul(y, z))));
}
