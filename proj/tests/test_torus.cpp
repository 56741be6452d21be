#include <doctest.h>

#include "lgn/linsolve.hpp"
#include "lgn/torus.hpp"

using namespace lgn;

namespace {

SLFVector chi(int p, int s, int a) { return SLFVector::basis(p, chi_index(p, s, a)); }
SLFVector gvec(int p, int s) { return SLFVector::basis(p, g_index(p, s)); }

SLFVector combo(int p, std::initializer_list<std::pair<Scalar, SLFVector>> terms) {
  SLFVector v = SLFVector::zero(p);
  for (auto& [c, w] : terms)
    for (size_t i = 0; i < v.coords.size(); ++i) v.coords[i] += c * w.coords[i];
  return v;
}

}  // namespace

TEST_CASE("basis layout") {
  CHECK(slf_dim(2) == 5);
  CHECK(SLFVector::zero(3).coords.size() == 8);
  CHECK(chi_index(3, 1, 1) == 0);
  CHECK(chi_index(3, 1, -1) == 1);
  CHECK(g_index(3, 2) == 7);
  CHECK_THROWS(g_index(3, 3));
  CHECK_THROWS(SLFVector::zero(1));
  CHECK(slf_basis_name(2, 4) == "G_1");
}

TEST_CASE("generator action at p = 2") {
  Ring r{2};
  CHECK(act_generator('a', chi(2, 1, 1)).is_zero());
  CHECK(act_generator('a', chi(2, 2, -1)) == combo(2, {{Scalar::from_int(-2, r), chi(2, 2, -1)}}));
  CHECK(act_generator('b', chi(2, 2, 1)) ==
        combo(2, {{Scalar::from_int(2, r), chi(2, 1, 1)}, {Scalar::from_int(2, r), chi(2, 1, -1)}}));
  CHECK(act_generator('b', gvec(2, 1)).is_zero());
  CHECK_THROWS(act_generator('c', chi(2, 1, 1)));
}

TEST_CASE("generator action at p = 3") {
  Ring r{3};
  CHECK(act_generator('b', gvec(3, 1)) == combo(3, {{quantum_integer(2, r), gvec(3, 2)}}));
  SLFVector v = chi(3, 1, 1);
  CHECK(act_word("", v) == v);
  CHECK_FALSE(act_word("ab", v) == act_word("ba", v));
}

TEST_CASE("a is diagonal on characters") {
  for (int p = 2; p <= 5; ++p) {
    Ring r{p};
    for (int s = 1; s <= p; ++s)
      for (int al : {1, -1}) {
        Scalar e = Scalar(Cyclo::zeta_pow(p, 4 * s)) + Scalar(Cyclo::zeta_pow(p, -4 * s));
        Scalar lambda = al > 0 ? -e : e;
        CHECK(act_generator('a', chi(p, s, al)) == combo(p, {{lambda, chi(p, s, al)}}));
      }
  }
}

TEST_CASE("J1 is stable under long words") {
  for (int p : {2, 3, 4}) {
    auto j1 = factor_specs(p)[0].basis;
    std::vector<std::vector<Scalar>> span;
    for (auto& v : j1) span.push_back(v.coords);
    size_t d = rank_of(span);
    for (auto& v : j1)
      for (std::string w : {"abbaab", "bbbbbb", "aabbab"}) {
        auto s2 = span;
        s2.push_back(act_word(w, v).coords);
        CHECK(rank_of(s2) == d);
      }
  }
}

TEST_CASE("composition series report") {
  TorusReport r2 = composition_series_report(2);
  CHECK(r2.ok());
  REQUIRE(r2.factors.size() == 3);
  CHECK(r2.factors[0].dim == 3);
  CHECK(r2.factors[1].dim == 1);
  CHECK(r2.factors[2].dim == 1);
  CHECK(r2.factors[0].burnside_dim == 9);
  TorusReport r3 = composition_series_report(3);
  CHECK(r3.ok());
  CHECK(r3.factors[0].burnside_dim == 16);
  CHECK(r3.factors[1].burnside_dim == 4);
  CHECK(r3.factors[2].burnside_dim == 4);
  for (int p = 2; p <= 6; ++p) {
    TorusReport t = composition_series_report(p);
    size_t total = 0;
    for (auto& f : t.factors) total += f.dim;
    CHECK(total == slf_dim(p));
    CHECK(t.j1_invariant);
  }
}

TEST_CASE("Burnside span diagnostic") {
  Ring r{2};
  Scalar z = Scalar::zero(r), o = Scalar::one(r);
  CycloMatrix diag{{o, z}, {z, Scalar::from_int(2, r)}};
  BurnsideResult b = burnside_span({diag}, 2, r);
  CHECK(b.rank == 2);
}
