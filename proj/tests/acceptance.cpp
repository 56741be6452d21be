#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lgn/lgn_ops.hpp"
#include "lgn/tensor.hpp"
#include "lgn/verify.hpp"

using namespace lgn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const std::vector<Surface> kSurfaces{{0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};

void absorb(Outcome& out, const VerifyReport& r) {
  if (!r.ok()) {
    out.ok = false;
    out.detail += " [" + r.suite + " " + r.scope + ": " + std::to_string(r.failures.size()) + " failures, first " +
                  r.failures.front() + "]";
  }
}

Outcome relations() {
  Outcome o;
  size_t cases = 0;
  for (Surface s : kSurfaces) {
    VerifyOptions v;
    v.surface = s;
    VerifyReport r = verify_relations(v);
    cases += r.cases;
    absorb(o, r);
  }
  for (int p : {2, 3})
    for (Surface s : {Surface{0, 1}, Surface{1, 0}, Surface{0, 2}}) {
      VerifyOptions v;
      v.surface = s;
      v.ring = Ring{p};
      VerifyReport r = verify_relations(v);
      cases += r.cases;
      absorb(o, r);
    }
  o.detail = std::to_string(cases) + " relations" + o.detail;
  return o;
}

Outcome dimensions() {
  Outcome o;
  struct Case {
    Surface s;
    int p;
    size_t want;
  };
  for (auto c : {Case{{0, 1}, 2, 16}, Case{{0, 1}, 3, 54}, Case{{1, 0}, 2, 256}}) {
    size_t got = basis_enumerate(*LgnAlgebra::get(c.s, Ring{c.p})).size();
    o.detail += (o.detail.empty() ? "" : ", ") + c.s.str() + " p=" + std::to_string(c.p) + ": " + std::to_string(got);
    o.ok = o.ok && got == c.want;
  }
  return o;
}

Outcome tensors() {
  Outcome o;
  Ring r{};
  Tensor c = builtin("cross_pos"), id1 = identity(1), cup = builtin("cup"), cap = builtin("cap");
  Tensor a = hcat(c, id1), b = hcat(id1, c);
  auto need = [&](bool cond, const char* what) {
    if (!cond) {
      o.ok = false;
      o.detail += std::string(" ") + what;
    }
  };
  need(compose(compose(a, b), a) == compose(compose(b, a), b), "braid");
  need(compose(builtin("r"), builtin("r_inv")) == identity(2), "R-inverse");
  need(compose(c, builtin("cross_neg")) == identity(2), "R2");
  need(compose(hcat(cap, id1), hcat(id1, cup)) == id1, "zigzag-left");
  need(compose(hcat(id1, cap), hcat(cup, id1)) == id1, "zigzag-right");
  Scalar loop = -(Scalar::q(4, r) + Scalar::q(-4, r));
  need(compose(cap, cup).at(0, 0) == loop, "loop");
  auto k = kauffman_solve(r);
  need(k.alpha == Scalar::q(2, r) && k.beta == Scalar::q(-2, r), "kauffman");
  need(-(k.alpha * k.alpha) - k.beta * k.beta == loop, "kauffman-loop");
  if (o.ok) o.detail = "braid, R R^-1, zig-zags, loop, Kauffman (q, q^-1)";
  return o;
}

Outcome skein() {
  Outcome o;
  size_t cases = 0;
  for (Surface s : {Surface{0, 1}, Surface{1, 0}, Surface{1, 1}}) {
    VerifyOptions v;
    v.surface = s;
    VerifyReport iso = verify_iso(v);
    v.count = 20;
    v.seed = 101;
    VerifyReport sk = verify_skein(v);
    cases += iso.cases + sk.cases;
    absorb(o, iso);
    absorb(o, sk);
  }
  o.detail = std::to_string(cases) + " cases" + o.detail;
  return o;
}

Outcome stacking() {
  Outcome o;
  size_t cases = 0;
  for (Surface s : {Surface{0, 1}, Surface{1, 0}, Surface{1, 1}}) {
    VerifyOptions v;
    v.surface = s;
    v.count = 50;
    v.seed = 202;
    VerifyReport r = verify_stack(v);
    cases += r.cases;
    absorb(o, r);
  }
  o.detail = std::to_string(cases) + " pairs" + o.detail;
  return o;
}

Outcome invariance() {
  Outcome o;
  size_t cases = 0;
  for (Surface s : {Surface{1, 0}, Surface{0, 2}}) {
    VerifyOptions v;
    v.surface = s;
    v.count = 10;
    v.seed = 303;
    VerifyReport r = verify_invariance(v);
    cases += r.cases;
    absorb(o, r);
  }
  o.detail = std::to_string(cases) + " checks" + o.detail;
  return o;
}

Outcome vacuum() {
  Outcome o;
  size_t cases = 0;
  for (int g : {1, 2}) {
    VerifyOptions v;
    v.surface = {g, 0};
    v.count = 100;
    v.seed = 404;
    VerifyReport r = verify_vacuum(v);
    cases += r.cases;
    absorb(o, r);
  }
  o.detail = std::to_string(cases) + " checks" + o.detail;
  return o;
}

Outcome torus() {
  Outcome o;
  for (int p : {2, 3}) {
    VerifyOptions v;
    v.ring = Ring{p};
    VerifyReport r = verify_torus(v);
    absorb(o, r);
    for (auto& [k, val] : r.info) o.detail += " p=" + std::to_string(p) + " " + k + "=" + val;
  }
  return o;
}

Outcome rewriting() {
  Outcome o;
  size_t cases = 0;
  for (Surface s : kSurfaces) {
    VerifyOptions v;
    v.surface = s;
    v.seed = 505;
    VerifyReport r = verify_rewriting(v);
    cases += r.cases;
    absorb(o, r);
  }
  o.detail = std::to_string(cases) + " checks" + o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "relation suite", 60, relations},
      {2, "dimension count", 10, dimensions},
      {3, "tensor structure", 10, tensors},
      {4, "stated skein isomorphism evidence", 120, skein},
      {5, "stack homomorphism", 120, stacking},
      {6, "invariance of Wilson loops", 60, invariance},
      {7, "vacuum representation", 60, vacuum},
      {8, "torus at roots of unity", 60, torus},
      {9, "rewriting soundness", 60, rewriting},
  };
  int failed = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && secs < c.limit_s;
    if (!ok) ++failed;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
