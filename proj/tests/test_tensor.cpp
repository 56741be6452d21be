#include <doctest.h>

#include "lgn/linsolve.hpp"
#include "lgn/tensor.hpp"

using namespace lgn;

namespace {

Scalar q(int half) { return Scalar::q(half, Ring{}); }

}  // namespace

TEST_CASE("R-matrix entries") {
  Tensor r = builtin("r");
  CHECK(r.at(state_index("-+"), state_index("-+")) == q(-2));
  CHECK(r.at(state_index("--"), state_index("--")) == q(2));
  CHECK(r.at(state_index("-+"), state_index("+-")) == q(2) - q(-6));
  CHECK(r.at(state_index("+-"), state_index("-+")).is_zero());
  CHECK(compose(r, builtin("r_inv")) == identity(2));
  CHECK(compose(builtin("r21"), builtin("flip")) == compose(builtin("flip"), r));
}

TEST_CASE("duality isomorphism and pivotal element") {
  Tensor d = builtin("d");
  CHECK(d.at(state_index("+"), state_index("-")) == -q(5));
  CHECK(d.at(state_index("-"), state_index("+")) == q(1));
  Tensor g = builtin("pivotal");
  CHECK(g.at(0, 0) == -q(4));
}

TEST_CASE("cup and cap") {
  Tensor cup = builtin("cup"), cap = builtin("cap");
  CHECK(cup.in() == 0);
  CHECK(cup.out() == 2);
  CHECK(cup.rows() * cup.cols() == 4);
  CHECK(cup.at(state_index("-+"), 0) == q(5));
  CHECK(cup.at(state_index("+-"), 0) == -q(1));
  CHECK(cap.at(0, state_index("-+")) == -q(-1));
  CHECK(cap.at(0, state_index("+-")) == q(-5));
  Tensor loop = compose(cap, cup);
  CHECK(loop.at(0, 0) == -q(4) - q(-4));
}

TEST_CASE("zig-zag identities") {
  Tensor id1 = identity(1), cup = builtin("cup"), cap = builtin("cap");
  CHECK(compose(hcat(cap, id1), hcat(id1, cup)) == id1);
  CHECK(compose(hcat(id1, cap), hcat(cup, id1)) == id1);
}

TEST_CASE("braiding") {
  Tensor c = builtin("cross_pos"), ci = builtin("cross_neg"), id1 = identity(1);
  CHECK(compose(c, ci) == identity(2));
  CHECK(compose(ci, c) == identity(2));
  Tensor a = hcat(c, id1), b = hcat(id1, c);
  CHECK(compose(compose(a, b), a) == compose(compose(b, a), b));
  Tensor ai = hcat(ci, id1), bi = hcat(id1, ci);
  CHECK(compose(compose(ai, bi), ai) == compose(compose(bi, ai), bi));
}

TEST_CASE("arity checks") {
  CHECK_THROWS(compose(builtin("cup"), builtin("cup")));
  CHECK_THROWS(builtin("nope"));
  Tensor t = builtin("cross_pos");
  CHECK(on_strands(t, 2, 0, 1) == t);
  CHECK(on_strands(t, 3, 1, 2) == hcat(identity(1), t));
}

TEST_CASE("Kauffman coefficients") {
  auto k = kauffman_solve();
  CHECK(k.alpha == q(2));
  CHECK(k.beta == q(-2));
  Tensor smooth = compose(builtin("cup"), builtin("cap"));
  CHECK(builtin("cross_pos") == identity(2) * k.alpha + smooth * k.beta);
  CHECK(-(k.alpha * k.alpha) - k.alpha.inverse() * k.alpha.inverse() == -q(4) - q(-4));
  for (int p : {2, 3}) {
    auto kr = kauffman_solve(Ring{p});
    CHECK(kr.alpha == Scalar::q(2, Ring{p}));
  }
}

TEST_CASE("restricted specialization commutes with composition") {
  Ring r{3};
  Tensor a = builtin("cross_pos"), b = builtin("r");
  CHECK(compose(a, b).specialized(r) == compose(a.specialized(r), b.specialized(r)));
  CHECK(builtin("cup", r) == builtin("cup").specialized(r));
}
