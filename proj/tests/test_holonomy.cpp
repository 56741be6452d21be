#include <doctest.h>

#include "lgn/holonomy.hpp"
#include "lgn/lgn_ops.hpp"
#include "lgn/random_gen.hpp"
#include "lgn/tensor.hpp"
#include "lgn/verify.hpp"

using namespace lgn;

namespace {

Scalar q(int half) { return Scalar::q(half, Ring{}); }

std::string text(const Surface& s, const Poly& p) {
  auto a = LgnAlgebra::get(s);
  return render(p, [&](char c) { return a->gen_name(c); });
}

}  // namespace

TEST_CASE("diagram parsing") {
  DiagramIR d = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["cap"]]})");
  CHECK(d.top_width() == 0);
  DiagramIR arc = parse_diagram(R"({"surface":{"g":1,"n":0},"handle_strands":[1,0]})");
  CHECK(arc.top_width() == 2);
  CHECK(parse_diagram(diagram_to_json(d)).slices.size() == 1);
  CHECK_THROWS_AS(parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["id"]]})"), DiagramError);
  CHECK_THROWS_AS(parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1,0]})"), DiagramError);
  CHECK_THROWS_AS(parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["twist"]]})"),
                  DiagramError);
  CHECK_THROWS_AS(parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"bogus":1})"), DiagramError);
  CHECK_THROWS_AS(parse_diagram(R"({"surface":{"g":0,"n":1},)"), DiagramError);
  try {
    parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["id","id"],["cap","id"]]})");
    FAIL("expected a width error");
  } catch (const DiagramError& e) {
    CHECK(std::string(e.what()).find("slice 1") != std::string::npos);
  }
}

TEST_CASE("closed diagrams") {
  Surface s{0, 1};
  DiagramIR m = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["cap"]]})");
  CHECK(text(s, wilson_loop(m)) == "-q^2 * M1[-,-] - q^-2 * M1[+,+]");
  DiagramIR u = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[0],"slices":[["cup"],["cap"]]})");
  CHECK(wilson_loop(u) == Poly::constant(-q(4) - q(-4)));
  DiagramIR k = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[0],
    "slices":[["cup"],["cup","id","id"],["id","x+","id"],["id","id","cap"],["cap"]]})");
  CHECK(wilson_loop(k) == Poly::constant(-q(6) * (-q(4) - q(-4))));
  DiagramIR arc = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1]})");
  CHECK_THROWS_AS(wilson_loop(arc), DiagramError);
}

TEST_CASE("generator loops") {
  Surface s{1, 0};
  auto a = LgnAlgebra::get(s);
  DiagramIR b = handle_loop_open(s, Family::B, 1);
  b.slices.push_back({Atom::cap()});
  CHECK(wilson_loop(b) == quantum_trace(a->block_matrix(a->block(Family::B, 1)), Ring{}));
  DiagramIR x = handle_loop_open(s, Family::A, 1);
  x.slices.push_back({Atom::cap()});
  CHECK(wilson_loop(x) == quantum_trace(a->block_matrix(a->block(Family::A, 1)), Ring{}));
}

TEST_CASE("generator arcs carry X tD") {
  Tensor td = builtin("d_transpose");
  for (auto [g, n] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
    Surface s{g, n};
    auto a = LgnAlgebra::get(s);
    for (int b = 0; b < s.blocks(); ++b) {
      PolyMatrix x = a->block_matrix(b);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Poly expect(Ring{});
          for (int k = 0; k < 2; ++k) expect += x[i][k] * td.at(k, j);
          auto arc = generator_arc(s, a->block_family(b), a->block_handle(b), i, j);
          CHECK(hol_stated(arc) == expect);
        }
    }
  }
}

TEST_CASE("dictionary round trip") {
  for (auto [g, n] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
    VerifyOptions o;
    o.surface = {g, n};
    VerifyReport r = verify_iso(o);
    CHECK(r.cases == static_cast<size_t>(4 * o.surface.blocks()));
    CHECK(r.ok());
  }
}

TEST_CASE("stack product") {
  Surface s{0, 1};
  auto a = LgnAlgebra::get(s);
  DiagramIR m = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["cap"]]})");
  CHECK(stack(DiagramIR::empty(s), m).slices.size() == m.slices.size());
  CHECK(wilson_loop(stack(m, m)) == a->mul(wilson_loop(m), wilson_loop(m)));
  CHECK_THROWS(stack(m, DiagramIR::empty({1, 0})));

  Surface t{1, 0};
  auto b = LgnAlgebra::get(t);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int t1 = 0; t1 < 2; ++t1) {
      auto ub = generator_arc(t, Family::B, 1, s1, t1);
      auto ua = generator_arc(t, Family::A, 1, t1, s1);
      CHECK(hol_stated(stack(ub, ua)) == b->mul(hol_stated(ub), hol_stated(ua)));
      CHECK(hol_stated(stack(ua, ub)) == b->mul(hol_stated(ua), hol_stated(ub)));
    }
}

TEST_CASE("random stack pairs") {
  for (auto [g, n] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
    VerifyOptions o;
    o.surface = {g, n};
    o.seed = 17;
    o.count = 20;
    CHECK(verify_stack(o).ok());
  }
}

TEST_CASE("isotopy corpus") {
  for (auto [g, n] : {std::pair{0, 1}, {1, 0}, {0, 2}}) {
    VerifyOptions o;
    o.surface = {g, n};
    o.seed = 23;
    VerifyReport r = verify_isotopy(o);
    CHECK(r.cases > 40);
    CHECK(r.ok());
  }
}

TEST_CASE("boundary and Kauffman relations in context") {
  VerifyOptions o;
  o.surface = {1, 1};
  o.seed = 29;
  VerifyReport r = verify_skein(o);
  CHECK(r.ok());
  CHECK(r.cases >= 60);
}

TEST_CASE("Wilson loops are invariant") {
  for (auto [g, n] : {std::pair{1, 0}, {0, 2}}) {
    VerifyOptions o;
    o.surface = {g, n};
    CHECK(verify_invariance(o).ok());
  }
}

TEST_CASE("fused handle against a two-strand loop") {
  Surface s{0, 1};
  auto a = LgnAlgebra::get(s);
  DiagramIR d = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[2],"slices":[["id","cap","id"],["cap"]]})");
  CHECK(wilson_loop(d) == a->normal_form(quantum_trace(fusion_matrix(*a, 0, 2), Ring{})));
}

TEST_CASE("restricted evaluation") {
  Ring r{3};
  DiagramIR u = parse_diagram(R"({"surface":{"g":0,"n":1},"handle_strands":[0],"slices":[["cup"],["cap"]]})");
  CHECK(wilson_loop(u, r) == Poly::constant(-quantum_integer(2, r)));
  Tensor p2 = jones_wenzl(2, r);
  CHECK(compose(p2, p2) == p2);
  CHECK(compose(builtin("cap", r), p2) == Tensor(2, 0, r));
  CHECK_THROWS(jones_wenzl(3, r));
  CHECK_THROWS(jones_wenzl(2, Ring{}));
}
