#include "lgn/vacuum.hpp"

#include <algorithm>

namespace lgn {

namespace {

// the a-arcs of T loop around the whole m bunch (S and T strands) with
// positive crossings
constexpr Atom::Kind kRing = Atom::XPos;

void check_pair(const LgnAlgebra& l0g, const LgnAlgebra& lg0) {
  if (l0g.surface().g != 0 || lg0.surface().n != 0 || l0g.surface().n != lg0.surface().g)
    throw std::invalid_argument("vacuum representation needs surfaces (0,g) and (g,0)");
  if (!(l0g.ring() == lg0.ring())) throw std::invalid_argument("vacuum representation: ring mismatch");
}

}  // namespace

Poly vacuum_project(const LgnAlgebra& lg0, const Poly& x) {
  const int g = lg0.surface().g;
  if (lg0.surface().n != 0) throw std::invalid_argument("vacuum_project needs a surface (g,0)");
  auto l0g = LgnAlgebra::get({0, g}, lg0.ring());
  Poly out(lg0.ring());
  for (auto& [w, c] : x.terms()) {
    Word rest;
    bool zero = false;
    for (char ch : w) {
      int b = block_of(ch), l = letter_of_code(ch);
      if (b < g) {
        if (letter_row(l) != letter_col(l)) {
          zero = true;
          break;
        }
      } else {
        rest.push_back(code(b - g, l));
      }
    }
    if (!zero) out.add(rest, c);
  }
  return l0g->normal_form(out);
}

Poly vacuum_embed(const LgnAlgebra& l0g, const LgnAlgebra& lg0, const Poly& x) {
  check_pair(l0g, lg0);
  const int g = lg0.surface().g;
  Poly out(lg0.ring());
  for (auto& [w, c] : x.terms()) {
    Word e = w;
    for (auto& ch : e) ch = code(block_of(ch) + g, letter_of_code(ch));
    out.add(e, c);
  }
  return lg0.normal_form(out);
}

Poly vacuum_act(const LgnAlgebra& l0g, const LgnAlgebra& lg0, const Poly& x, const Poly& y) {
  check_pair(l0g, lg0);
  return vacuum_project(lg0, lg0.mul(vacuum_embed(l0g, lg0, x), y));
}

HolTensor vacuum_act(const LgnAlgebra& l0g, const LgnAlgebra& lg0, const HolTensor& x, const HolTensor& y) {
  HolTensor out{x.k + y.k, std::vector<Poly>(size_t{1} << (x.k + y.k), Poly(l0g.ring()))};
  for (size_t i = 0; i < x.v.size(); ++i)
    for (size_t j = 0; j < y.v.size(); ++j)
      if (!x.v[i].is_zero() && !y.v[j].is_zero()) out.v[(i << y.k) | j] = vacuum_act(l0g, lg0, x.v[i], y.v[j]);
  return out;
}

namespace {

// Slice sequence on a row of labelled strands.
class Braider {
 public:
  explicit Braider(std::vector<int> labels) : labels_(std::move(labels)) {}
  int width() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<Slice>& slices() { return slices_; }

  void cross(int pos, Atom::Kind k) {
    Slice s(pos, Atom::id());
    s.push_back({k, nullptr, {}});
    s.resize(width() - 1, Atom::id());
    slices_.push_back(std::move(s));
    std::swap(labels_[pos], labels_[pos + 1]);
  }
  void cup(int pos, int label) {
    Slice s(pos, Atom::id());
    s.push_back(Atom::cup());
    s.resize(width() + 1, Atom::id());
    slices_.push_back(std::move(s));
    labels_.insert(labels_.begin() + pos, 2, label);
  }
  // block [at+w1, at+w1+w2) moves left past [at, at+w1)
  void swap_blocks(int at, int w1, int w2, Atom::Kind k) {
    for (int t = 0; t < w2; ++t)
      for (int p = at + w1 + t - 1; p >= at + t; --p) cross(p, k);
  }
  // stable partition: labels in `right` move to the right end
  void separate(int moving, Atom::Kind k) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i + 1 < width(); ++i)
        if (labels_[i] == moving && labels_[i + 1] != moving) {
          cross(i, k);
          moved = true;
        }
    }
  }

 private:
  std::vector<int> labels_;
  std::vector<Slice> slices_;
};

}  // namespace

DiagramIR stack_act(const DiagramIR& s, const DiagramIR& t) {
  s.validate();
  t.validate();
  const int g = t.surface.g;
  if (s.surface.g != 0 || t.surface.n != 0 || s.surface.n != g)
    throw DiagramError("stack_act needs S on (0,g) and T on (g,0)");
  if (s.is_empty() && t.is_empty()) return s;
  enum { kS = 1, kT = 2 };
  DiagramIR out;
  out.surface = s.surface;
  out.routing = Routing::Explicit;
  std::vector<int> labels;
  for (int j = 0; j < g; ++j) {
    int ms = s.handle_strands[j], mb = t.handle_strands[2 * j];
    out.handle_strands.push_back(ms + mb);
    labels.insert(labels.end(), mb, kT);
    labels.insert(labels.end(), 2 * ms, kS);
    labels.insert(labels.end(), mb, kT);
  }
  Braider br(labels);
  int pos = 0;
  for (int j = 0; j < g; ++j) {
    int ms = s.handle_strands[j], mb = t.handle_strands[2 * j], ma = t.handle_strands[2 * j + 1];
    pos += 2 * mb + 2 * ms;
    if (ma > 0) {
      int enc = ms + mb;
      for (int c = 0; c < ma; ++c) br.cup(pos + c, kT);
      // left legs loop around the right feet of the bunch
      br.swap_blocks(pos - enc, enc, ma, kRing);
      br.swap_blocks(pos - enc, ma, enc, kRing);
    }
    pos += 2 * ma;
  }
  br.separate(kT, Atom::XPos);
  const int wt = static_cast<int>(std::count(br.labels().begin(), br.labels().end(), kT));
  out.slices = br.slices();
  auto pad = [](const Slice& sl, int left, int right) {
    Slice p(left, Atom::id());
    p.insert(p.end(), sl.begin(), sl.end());
    p.resize(p.size() + right, Atom::id());
    return p;
  };
  for (auto& sl : s.slices) out.slices.push_back(pad(sl, 0, wt));
  const int ks = s.top_width();
  std::vector<Slice> ts;
  if (t.routing == Routing::Canonical) ts = routing_slices(t.surface, t.handle_strands);
  ts.insert(ts.end(), t.slices.begin(), t.slices.end());
  for (auto& sl : ts) out.slices.push_back(pad(sl, ks, 0));
  out.validate();
  return out;
}

bool stack_act_check(const DiagramIR& s, const DiagramIR& t, Ring r) {
  auto l0g = LgnAlgebra::get(s.surface, r);
  auto lg0 = LgnAlgebra::get(t.surface, r);
  HolTensor lhs = vacuum_act(*l0g, *lg0, eval_diagram(s, r), eval_diagram(t, r));
  return lhs == eval_diagram(stack_act(s, t), r);
}

}  // namespace lgn
