#include "lgn/random_gen.hpp"

namespace lgn {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int slice_out(const Slice& s) {
  int w = 0;
  for (auto& a : s) w += a.out();
  return w;
}

}  // namespace

Slice random_slice(int width, Rng& rng, int max_width) {
  Slice s;
  int out = 0;
  int pos = 0;
  while (pos < width) {
    int left = width - pos;
    int roll = uniform(rng, 0, 9);
    if (left >= 2 && roll < 3) {
      s.push_back(roll == 0 ? Atom::xneg() : Atom::xpos());
      pos += 2;
      out += 2;
    } else if (left >= 2 && roll == 3) {
      s.push_back(Atom::cap());
      pos += 2;
    } else if (roll == 4 && out + (width - pos) + 2 <= max_width) {
      s.push_back(Atom::cup());
      out += 2;
    } else {
      s.push_back(Atom::id());
      ++pos;
      ++out;
    }
  }
  if (width == 0 && max_width >= 2) s.push_back(Atom::cup());
  return s;
}

std::vector<Slice> random_closure(int width, Rng& rng) {
  std::vector<Slice> out;
  while (width > 0) {
    if (width >= 2 && uniform(rng, 0, 2) == 0) {
      int i = uniform(rng, 0, width - 2);
      Slice s(i, Atom::id());
      s.push_back(uniform(rng, 0, 1) ? Atom::xpos() : Atom::xneg());
      s.resize(width - 1, Atom::id());
      out.push_back(std::move(s));
    }
    int i = uniform(rng, 0, width - 2);
    Slice s(i, Atom::id());
    s.push_back(Atom::cap());
    s.resize(width - 1, Atom::id());
    out.push_back(std::move(s));
    width -= 2;
  }
  return out;
}

DiagramIR random_diagram(Surface s, Rng& rng, const DiagramShape& shape) {
  DiagramIR d = DiagramIR::empty(s);
  int total = 0;
  for (auto& h : d.handle_strands) {
    h = std::min(uniform(rng, 0, shape.max_per_handle), shape.max_handle_strands - total);
    total += h;
  }
  if (shape.allow_explicit && uniform(rng, 0, 3) == 0) d.routing = Routing::Explicit;
  int width = d.handle_width();
  int n = uniform(rng, 0, shape.max_slices);
  for (int i = 0; i < n; ++i) {
    Slice sl = random_slice(width, rng, shape.max_width);
    width = slice_out(sl);
    d.slices.push_back(std::move(sl));
  }
  if (shape.closed)
    for (auto& sl : random_closure(width, rng)) d.slices.push_back(std::move(sl));
  return d;
}

Word random_word(const LgnAlgebra& alg, Rng& rng, int max_len) {
  int len = uniform(rng, 0, max_len);
  int letters = 4 * alg.surface().blocks();
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(uniform(rng, 0, letters - 1)));
  return w;
}

Poly random_element(const LgnAlgebra& alg, Rng& rng, int max_terms, int max_len) {
  Ring r = alg.ring();
  Poly p(r);
  int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    Scalar c = Scalar::q(2 * uniform(rng, -2, 2), r);
    if (uniform(rng, 0, 1)) c = -c;
    p.add(random_word(alg, rng, max_len), c);
  }
  return p;
}

}  // namespace lgn
