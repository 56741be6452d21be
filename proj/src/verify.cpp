#include "lgn/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lgn/holonomy.hpp"
#include "lgn/linsolve.hpp"
#include "lgn/lgn_ops.hpp"
#include "lgn/random_gen.hpp"
#include "lgn/torus.hpp"
#include "lgn/vacuum.hpp"

namespace lgn {

void VerifyReport::check(bool passed, const std::string& id, const std::string& what) {
  ++cases;
  if (!passed) failures.push_back(what.empty() ? id : id + ": " + what);
}

void VerifyReport::merge(const VerifyReport& o) {
  cases += o.cases;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  info.insert(info.end(), o.info.begin(), o.info.end());
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["scope"] = scope;
  j["cases"] = cases;
  std::vector<std::string> f = failures;
  std::sort(f.begin(), f.end());
  j["failures"] = f;
  for (auto& [k, v] : info) j["info"][k] = v;
  return j.dump(2);
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << suite << " " << scope << ": " << cases << " cases, " << failures.size() << " failures\n";
  std::vector<std::string> f = failures;
  std::sort(f.begin(), f.end());
  for (auto& x : f) os << "  FAIL " << x << "\n";
  for (auto& [k, v] : info) os << "  " << k << ": " << v << "\n";
  return os.str();
}

namespace {

std::string scope_of(const VerifyOptions& o) { return o.surface.str() + " " + o.ring.str(); }

std::string case_id(const std::string& stem, size_t i) {
  std::ostringstream os;
  os << stem << "-" << std::setw(3) << std::setfill('0') << i;
  return os.str();
}

HolTensor ht_scaled(HolTensor t, const Scalar& c) {
  for (auto& p : t.v) p = p * c;
  return t;
}

HolTensor ht_sum(HolTensor a, const HolTensor& b) {
  if (a.k != b.k) throw std::logic_error("tensor arity mismatch");
  for (size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
  return a;
}

int slice_in(const Slice& s) {
  int w = 0;
  for (auto& a : s) w += a.in();
  return w;
}

int slice_out(const Slice& s) {
  int w = 0;
  for (auto& a : s) w += a.out();
  return w;
}

int width_at(const DiagramIR& d, size_t level) {
  return level == 0 ? d.handle_width() : slice_out(d.slices[level - 1]);
}

// atoms placed from strand i, identity elsewhere; `width` is the input width
Slice place(int width, int i, std::initializer_list<Atom> atoms) {
  Slice s(i, Atom::id());
  s.insert(s.end(), atoms.begin(), atoms.end());
  s.resize(s.size() + (width - slice_in(s)), Atom::id());
  return s;
}

DiagramIR inserted(DiagramIR d, size_t level, const std::vector<Slice>& add) {
  d.slices.insert(d.slices.begin() + static_cast<long>(level), add.begin(), add.end());
  return d;
}

Atom random_crossing(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) ? Atom::xpos() : Atom::xneg(); }

// an insertion point with at least `need` strands
bool pick_site(const DiagramIR& d, Rng& rng, int need, size_t& level, int& pos) {
  std::vector<size_t> ok;
  for (size_t l = 0; l <= d.slices.size(); ++l)
    if (width_at(d, l) >= need) ok.push_back(l);
  if (ok.empty()) return false;
  level = ok[std::uniform_int_distribution<size_t>(0, ok.size() - 1)(rng)];
  pos = std::uniform_int_distribution<int>(0, width_at(d, level) - need)(rng);
  return true;
}

DiagramShape open_shape(const VerifyOptions& o) {
  DiagramShape sh;
  sh.max_handle_strands = o.surface.blocks() > 2 ? 2 : 3;
  return sh;
}

Scalar qh(int half, Ring r) { return Scalar::q(half, r); }

// j(X^s_t) = c U^s_{t'}: the arc state and coefficient for column t
std::pair<int, Scalar> j_entry(int col, Ring r) {
  return col == 0 ? std::make_pair(1, qh(-5, r)) : std::make_pair(0, -qh(-1, r));
}

Poly hol_of_word(const LgnAlgebra& alg, const Word& w) {
  Ring r = alg.ring();
  if (w.empty()) return alg.one();
  Scalar c = Scalar::one(r);
  std::optional<StatedDiagram> acc;
  for (char ch : w) {
    int b = block_of(ch), l = letter_of_code(ch);
    auto [col, k] = j_entry(letter_col(l), r);
    c *= k;
    StatedDiagram arc = generator_arc(alg.surface(), alg.block_family(b), alg.block_handle(b), letter_row(l), col);
    acc = acc ? stack(*acc, arc) : arc;
  }
  return hol_stated(*acc, r) * c;
}

std::vector<DiagramIR> sample_links(Surface s, Rng& rng, size_t count) {
  std::vector<DiagramIR> out;
  auto alg = LgnAlgebra::get(s);
  for (int b = 0; b < s.blocks() && out.size() < count; ++b) {
    DiagramIR d = handle_loop_open(s, alg->block_family(b), alg->block_handle(b));
    d.slices.push_back({Atom::cap()});
    out.push_back(d);
  }
  DiagramShape sh;
  sh.closed = true;
  sh.max_per_handle = 2;
  sh.max_handle_strands = 4;
  sh.max_slices = 2;
  while (out.size() < count) {
    DiagramIR d = random_diagram(s, rng, sh);
    if (d.handle_width() > 0) out.push_back(d);
  }
  return out;
}

}  // namespace

VerifyReport verify_relations(const VerifyOptions& o) {
  VerifyReport rep{"relations", scope_of(o)};
  auto alg = LgnAlgebra::get(o.surface, o.ring);
  auto rels = alg->defining_relations();
  for (size_t i = 0; i < rels.size(); ++i) rep.check(alg->normal_form(rels[i]).is_zero(), case_id("rel", i));
  return rep;
}

VerifyReport verify_rewriting(const VerifyOptions& o) {
  VerifyReport rep{"rewriting", scope_of(o)};
  auto alg = LgnAlgebra::get(o.surface, o.ring);
  Rng rng(o.seed);
  int len = o.budget ? static_cast<int>(o.budget) : 3;
  size_t triples = o.count ? o.count : 200;
  size_t words = o.count ? o.count : 500;
  for (size_t i = 0; i < triples; ++i) {
    Poly x = random_element(*alg, rng, 2, len), y = random_element(*alg, rng, 2, len),
         z = random_element(*alg, rng, 2, len);
    rep.check(alg->mul(alg->mul(x, y), z) == alg->mul(x, alg->mul(y, z)), case_id("assoc", i));
  }
  for (size_t i = 0; i < words; ++i) {
    Poly n = alg->normal_form(random_word(*alg, rng, 2 * len));
    bool normal = true;
    for (auto& [w, c] : n.terms()) normal = normal && alg->is_normal(w);
    rep.check(normal && alg->normal_form(n) == n, case_id("idem", i));
  }
  return rep;
}

VerifyReport verify_isotopy(const VerifyOptions& o) {
  VerifyReport rep{"isotopy", scope_of(o)};
  Rng rng(o.seed);
  Ring r = o.ring;
  size_t n = o.count ? o.count : 10;
  DiagramShape sh = open_shape(o);
  auto draw = [&](int need) {
    for (;;) {
      DiagramIR d = random_diagram(o.surface, rng, sh);
      size_t level;
      int pos;
      if (pick_site(d, rng, need, level, pos)) return std::make_tuple(d, level, pos);
    }
  };
  for (size_t i = 0; i < n; ++i) {
    auto [d, l, p] = draw(2);
    int w = width_at(d, l);
    Atom x = random_crossing(rng);
    Atom y = x.kind == Atom::XPos ? Atom::xneg() : Atom::xpos();
    DiagramIR e = inserted(d, l, {place(w, p, {x}), place(w, p, {y})});
    rep.check(eval_diagram(e, r) == eval_diagram(d, r), case_id("r2", i));
  }
  for (size_t i = 0; i < n; ++i) {
    auto [d, l, p] = draw(3);
    int w = width_at(d, l);
    Atom x = random_crossing(rng);
    Slice s1 = place(w, p, {x, Atom::id()}), s2 = place(w, p, {Atom::id(), x});
    DiagramIR a = inserted(d, l, {s1, s2, s1}), b = inserted(d, l, {s2, s1, s2});
    rep.check(eval_diagram(a, r) == eval_diagram(b, r), case_id("r3", i));
  }
  for (size_t i = 0; i < n; ++i) {
    auto [d, l, p] = draw(4);
    int w = width_at(d, l);
    int q = std::uniform_int_distribution<int>(p + 2, w - 2)(rng);
    Atom x = random_crossing(rng), y = random_crossing(rng);
    Slice both(p, Atom::id());
    both.push_back(x);
    both.resize(both.size() + (q - p - 2), Atom::id());
    both.push_back(y);
    both.resize(both.size() + (w - q - 2), Atom::id());
    HolTensor t0 = eval_diagram(inserted(d, l, {both}), r);
    HolTensor t1 = eval_diagram(inserted(d, l, {place(w, p, {x}), place(w, q, {y})}), r);
    HolTensor t2 = eval_diagram(inserted(d, l, {place(w, q, {y}), place(w, p, {x})}), r);
    rep.check(t0 == t1 && t1 == t2, case_id("commute", i));
  }
  for (size_t i = 0; i < n; ++i) {
    auto [d, l, p] = draw(1);
    int w = width_at(d, l);
    HolTensor base = eval_diagram(d, r);
    DiagramIR left = inserted(d, l, {place(w, p, {Atom::id(), Atom::cup()}), place(w + 2, p, {Atom::cap(), Atom::id()})});
    DiagramIR right = inserted(d, l, {place(w, p, {Atom::cup(), Atom::id()}), place(w + 2, p, {Atom::id(), Atom::cap()})});
    rep.check(eval_diagram(left, r) == base && eval_diagram(right, r) == base, case_id("zigzag", i));
  }
  {
    // a curl on one strand multiplies by the framing factor
    DiagramIR d = DiagramIR::empty(o.surface);
    d.slices = {{Atom::cup()}, place(2, 0, {Atom::cup(), Atom::id(), Atom::id()}), place(4, 1, {Atom::xpos()}),
                place(4, 2, {Atom::cap()}), {Atom::cap()}};
    Scalar loop = -(qh(4, r) + qh(-4, r));
    rep.check(wilson_loop(d, r) == Poly::constant(-qh(6, r) * loop), "kink");
  }
  return rep;
}

VerifyReport verify_skein(const VerifyOptions& o) {
  VerifyReport rep{"skein", scope_of(o)};
  Ring r = o.ring;
  Rng rng(o.seed);
  size_t n = o.count ? o.count : 20;
  DiagramShape sh = open_shape(o);
  auto kc = kauffman_solve(r);
  Tensor cup = builtin("cup", r);
  for (size_t i = 0; i < n; ++i) {
    DiagramIR c = random_diagram(o.surface, rng, sh);
    const int w = c.top_width();
    HolTensor hc = eval_diagram(c, r);

    // returning arc at the boundary
    int p = std::uniform_int_distribution<int>(0, w)(rng);
    DiagramIR arc = c;
    arc.slices.push_back(place(w, p, {Atom::cup()}));
    HolTensor ha = eval_diagram(arc, r);
    bool ok = ha.k == w + 2;
    for (size_t idx = 0; ok && idx < ha.v.size(); ++idx) {
      int k = w + 2;
      size_t pair = (idx >> (k - p - 2)) & 3;
      size_t hi = idx >> (k - p), lo = idx & ((size_t{1} << (k - p - 2)) - 1);
      size_t rest = (hi << (k - p - 2)) | lo;
      ok = ha.v[idx] == hc.v[rest] * cup.at(pair, 0);
    }
    rep.check(ok, case_id("arc", i));

    // state exchange at two adjacent boundary points
    if (w >= 2) {
      int e = std::uniform_int_distribution<int>(0, w - 2)(rng);
      DiagramIR capped = c;
      capped.slices.push_back(place(w, e, {Atom::cap()}));
      HolTensor hcap = eval_diagram(capped, r);
      bool good = true;
      for (size_t rest = 0; rest < hcap.v.size(); ++rest) {
        size_t hi = rest >> (w - e - 2), lo = rest & ((size_t{1} << (w - e - 2)) - 1);
        auto at = [&](size_t pair) { return hc.v[(((hi << 2) | pair) << (w - e - 2)) | lo]; };
        good = good && at(1) == at(2) * qh(-4, r) - hcap.v[rest] * qh(1, r);
      }
      rep.check(good, case_id("exchange", i));
    }

    // Kauffman relation at an interior point
    size_t level;
    int pos;
    if (pick_site(c, rng, 2, level, pos)) {
      int ww = width_at(c, level);
      HolTensor cross = eval_diagram(inserted(c, level, {place(ww, pos, {Atom::xpos()})}), r);
      HolTensor smooth =
          eval_diagram(inserted(c, level, {place(ww, pos, {Atom::cap()}), place(ww - 2, pos, {Atom::cup()})}), r);
      rep.check(cross == ht_sum(ht_scaled(hc, kc.alpha), ht_scaled(smooth, kc.beta)), case_id("kauffman", i));
    }
  }
  if (o.ring.generic()) {
    auto alg = LgnAlgebra::get(o.surface, r);
    auto rels = alg->defining_relations();
    for (size_t i = 0; i < rels.size(); ++i) {
      Poly sum(r);
      for (auto& [w, c] : rels[i].terms()) sum += hol_of_word(*alg, w) * c;
      rep.check(alg->normal_form(sum).is_zero(), case_id("presentation", i));
    }
  }
  return rep;
}

VerifyReport verify_iso(const VerifyOptions& o) {
  VerifyReport rep{"iso", scope_of(o)};
  auto alg = LgnAlgebra::get(o.surface, o.ring);
  for (int b = 0; b < o.surface.blocks(); ++b)
    for (int l = 0; l < 4; ++l) {
      char ch = code(b, l);
      rep.check(hol_of_word(*alg, Word(1, ch)) == Poly::word(Word(1, ch), o.ring), "j " + alg->gen_name(ch));
    }
  return rep;
}

VerifyReport verify_stack(const VerifyOptions& o) {
  VerifyReport rep{"stack", scope_of(o)};
  Ring r = o.ring;
  auto alg = LgnAlgebra::get(o.surface, r);
  Rng rng(o.seed);
  size_t n = o.count ? o.count : 50;
  if (o.surface.g >= 1) {
    for (int s1 = 0; s1 < 2; ++s1)
      for (int t1 = 0; t1 < 2; ++t1)
        for (int s2 = 0; s2 < 2; ++s2)
          for (int t2 = 0; t2 < 2; ++t2) {
            auto ub = generator_arc(o.surface, Family::B, 1, s1, t1);
            auto ua = generator_arc(o.surface, Family::A, 1, s2, t2);
            Poly lhs = hol_stated(stack(ub, ua), r);
            Poly rhs = alg->mul(hol_stated(ub, r), hol_stated(ua, r));
            rep.check(lhs == rhs, "pin-b1a1-" + state_string(size_t(2 * s1 + t1), 2) + state_string(size_t(2 * s2 + t2), 2));
          }
  }
  DiagramShape sh = open_shape(o);
  sh.max_per_handle = 2;
  sh.max_handle_strands = 2;
  for (size_t i = 0; i < n; ++i) {
    DiagramIR d1 = random_diagram(o.surface, rng, sh), d2 = random_diagram(o.surface, rng, sh);
    HolTensor lhs = eval_diagram(stack(d1, d2), r);
    HolTensor rhs = odot(*alg, eval_diagram(d1, r), eval_diagram(d2, r));
    rep.check(lhs == rhs, case_id("pair", i));
  }
  return rep;
}

VerifyReport verify_invariance(const VerifyOptions& o) {
  VerifyReport rep{"invariance", scope_of(o)};
  auto alg = LgnAlgebra::get(o.surface);
  Rng rng(o.seed);
  auto links = sample_links(o.surface, rng, o.count ? o.count : 10);
  for (size_t i = 0; i < links.size(); ++i) rep.check(is_invariant(*alg, wilson_loop(links[i])), case_id("link", i));
  Poly nonInv = alg->generator({alg->block_family(0), alg->block_handle(0), 0, 1});
  rep.check(!is_invariant(*alg, nonInv), "generator-not-invariant");
  return rep;
}

namespace {

DiagramIR pd(const char* s) { return parse_diagram(s); }

std::vector<std::pair<DiagramIR, DiagramIR>> vacuum_pairs(int g) {
  if (g == 1)
    return {
        {pd(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["cap"]]})"),
         pd(R"({"surface":{"g":1,"n":0},"handle_strands":[1,0],"slices":[["cap"]]})")},
        {pd(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"slices":[["cap"]]})"),
         pd(R"({"surface":{"g":1,"n":0},"handle_strands":[0,1],"slices":[["cap"]]})")},
        {pd(R"({"surface":{"g":0,"n":1},"handle_strands":[1],"states":["-","+"]})"),
         pd(R"({"surface":{"g":1,"n":0},"handle_strands":[0,1],"states":["+","-"]})")},
        {pd(R"({"surface":{"g":0,"n":1},"handle_strands":[1]})"), pd(R"({"surface":{"g":1,"n":0},"handle_strands":[1,0]})")},
        {pd(R"({"surface":{"g":0,"n":1},"handle_strands":[1]})"), pd(R"({"surface":{"g":1,"n":0},"handle_strands":[0,1]})")},
        {pd(R"({"surface":{"g":0,"n":1},"handle_strands":[1]})"), pd(R"({"surface":{"g":1,"n":0},"handle_strands":[1,1]})")},
    };
  if (g == 2)
    return {
        {pd(R"({"surface":{"g":0,"n":2},"handle_strands":[1,1],"slices":[["id","cap","id"]],"states":["+","-"]})"),
         pd(R"({"surface":{"g":2,"n":0},"handle_strands":[0,1,0,0],"slices":[["cap"]]})")},
        {pd(R"({"surface":{"g":0,"n":2},"handle_strands":[1,1],"slices":[["cap","cap"]]})"),
         pd(R"({"surface":{"g":2,"n":0},"handle_strands":[0,0,1,1]})")},
        {pd(R"({"surface":{"g":0,"n":2},"handle_strands":[1,1]})"),
         pd(R"({"surface":{"g":2,"n":0},"handle_strands":[1,0,0,1]})")},
    };
  return {};
}

}  // namespace

VerifyReport verify_vacuum(const VerifyOptions& o) {
  const int g = o.surface.g > 0 ? o.surface.g : 1;
  VerifyReport rep{"vacuum", "g=" + std::to_string(g) + " " + o.ring.str()};
  Ring r = o.ring;
  auto l0g = LgnAlgebra::get({0, g}, r);
  auto lg0 = LgnAlgebra::get({g, 0}, r);
  Rng rng(o.seed);
  int len = o.budget ? static_cast<int>(o.budget) : 2;

  for (int h = 1; h <= g; ++h)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        Poly y = vacuum_act(*l0g, *lg0, l0g->one(), lg0->generator({Family::A, h, s, t}));
        rep.check(y == (s == t ? l0g->one() : Poly(r)), "delta A" + std::to_string(h) + state_string(size_t(2 * s + t), 2));
      }

  size_t n = o.count ? o.count : 100;
  for (size_t i = 0; i < n; ++i) {
    Poly x = l0g->normal_form(random_element(*l0g, rng, 2, len));
    Poly y = random_element(*lg0, rng, 2, len), z = random_element(*lg0, rng, 2, len);
    Poly lhs = vacuum_act(*l0g, *lg0, vacuum_act(*l0g, *lg0, x, y), z);
    Poly rhs = vacuum_act(*l0g, *lg0, x, lg0->mul(y, z));
    rep.check(lhs == rhs, case_id("module", i));
  }

  auto pairs = vacuum_pairs(g);
  for (size_t i = 0; i < pairs.size(); ++i)
    rep.check(stack_act_check(pairs[i].first, pairs[i].second, r), case_id("stack-act", i));

  if (g == 1 && r.generic()) {
    DiagramIR boundary = pd(
        R"({"surface":{"g":1,"n":0},"handle_strands":[2,2],"slices":[["id","cap","cap","cap","id"],["cap"]]})");
    DiagramIR unknot = pd(R"({"surface":{"g":1,"n":0},"handle_strands":[0,0],"slices":[["cup"],["cap"]]})");
    Poly w1 = wilson_loop(boundary), w2 = wilson_loop(unknot);
    rep.check(is_invariant(*lg0, w1), "boundary-loop-invariant");
    Poly qt = quantum_trace(l0g->block_matrix(0), r);
    std::vector<Poly> xs{l0g->one(), qt, l0g->mul(qt, qt)};
    for (auto& link : sample_links({0, 1}, rng, 4)) xs.push_back(wilson_loop(link));
    for (auto& x : xs) rep.check(is_invariant(*l0g, x), "slide-input-invariant");
    for (size_t i = 0; i < xs.size(); ++i)
      rep.check(vacuum_act(*l0g, *lg0, xs[i], w1) == vacuum_act(*l0g, *lg0, xs[i], w2), case_id("slide", i));
    Poly act = vacuum_act(*l0g, *lg0, qt, wilson_loop(sample_links({1, 0}, rng, 1)[0]));
    rep.check(is_invariant(*l0g, act), "invariant-stable");
  }
  return rep;
}

VerifyReport verify_torus(const VerifyOptions& o) {
  int p = o.ring.generic() ? 2 : o.ring.p;
  VerifyReport rep{"torus", "p=" + std::to_string(p)};
  TorusReport t = composition_series_report(p);
  rep.check(t.j1_invariant, "j1-invariant");
  rep.check(t.j2_invariant, "descends");
  rep.check(t.eigenvalues_match, "a-eigenvalues");
  std::vector<size_t> want{static_cast<size_t>(p + 1), static_cast<size_t>(p - 1), static_cast<size_t>(p - 1)};
  std::string dims;
  size_t total = 0;
  for (size_t i = 0; i < t.factors.size(); ++i) {
    auto& f = t.factors[i];
    rep.check(f.dim == want[i], "dim " + factor_label_name(f.label));
    rep.check(f.absolutely_irreducible, "burnside " + factor_label_name(f.label), f.diagnostic);
    dims += (i ? "," : "") + std::to_string(f.dim);
    total += f.dim;
  }
  rep.check(total == slf_dim(p), "total-dim");
  rep.info.push_back({"factor_dims", "[" + dims + "]"});
  std::string bd;
  for (size_t i = 0; i < t.factors.size(); ++i) bd += (i ? "," : "") + std::to_string(t.factors[i].burnside_dim);
  rep.info.push_back({"burnside_dims", "[" + bd + "]"});

  SLFVector v = SLFVector::basis(p, chi_index(p, 1, 1));
  rep.check(!(act_word("ab", v) == act_word("ba", v)), "noncommutative");
  auto j1 = factor_specs(p)[0].basis;
  Rng rng(o.seed);
  bool stays = true;
  for (auto& b : j1) {
    std::string word;
    for (int i = 0; i < 6; ++i) word += std::uniform_int_distribution<int>(0, 1)(rng) ? 'a' : 'b';
    SLFVector w = act_word(word, b);
    std::vector<std::vector<Scalar>> span;
    for (auto& x : j1) span.push_back(x.coords);
    size_t before = rank_of(span);
    span.push_back(w.coords);
    stays = stays && rank_of(span) == before;
  }
  rep.check(stays, "j1-words");
  return rep;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"relations", "rewriting", "isotopy", "skein", "iso",
                                              "stack",     "invariance", "vacuum", "torus"};
  return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "relations") return verify_relations(o);
  if (name == "rewriting") return verify_rewriting(o);
  if (name == "isotopy") return verify_isotopy(o);
  if (name == "skein") return verify_skein(o);
  if (name == "iso") return verify_iso(o);
  if (name == "stack") return verify_stack(o);
  if (name == "invariance") return verify_invariance(o);
  if (name == "vacuum") return verify_vacuum(o);
  if (name == "torus") return verify_torus(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lgn
