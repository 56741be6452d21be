#include "lgn/holonomy.hpp"

#include <json.hpp>

#include <map>
#include <mutex>

#include "lgn/lgn_ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lgn {

namespace {

// b_R bunch meets a_L bunch: the a strands pass over.
constexpr Atom::Kind kRoutingCrossing = Atom::XNeg;
// left strand over right strand
constexpr Atom::Kind kOverLeft = Atom::XPos;

const Tensor& atom_tensor(Atom::Kind k, Ring r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Tensor> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(k), r.p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const char* name = k == Atom::Cup ? "cup" : k == Atom::Cap ? "cap" : k == Atom::XPos ? "cross_pos" : "cross_neg";
  return cache.emplace(key, builtin(name, r)).first->second;
}

Tensor coupon_in_ring(const Tensor& t, Ring r) {
  if (t.ring() == r) return t;
  if (t.ring().generic()) return t.specialized(r);
  throw DiagramError("coupon tensor lives in " + t.ring().str() + ", diagram evaluated in " + r.str());
}

int log2_exact(size_t n) {
  int k = 0;
  while ((size_t{1} << k) < n) ++k;
  if ((size_t{1} << k) != n) return -1;
  return k;
}

}  // namespace

Atom Atom::make_coupon(Tensor t, std::string label) {
  return {Coupon, std::make_shared<const Tensor>(std::move(t)), std::move(label)};
}

int Atom::in() const {
  switch (kind) {
    case Id: return 1;
    case Cup: return 0;
    case Cap: return 2;
    case XPos:
    case XNeg: return 2;
    case Coupon: return coupon->in();
  }
  return 0;
}

int Atom::out() const {
  switch (kind) {
    case Id: return 1;
    case Cup: return 2;
    case Cap: return 0;
    case XPos:
    case XNeg: return 2;
    case Coupon: return coupon->out();
  }
  return 0;
}

std::string Atom::name() const {
  switch (kind) {
    case Id: return "id";
    case Cup: return "cup";
    case Cap: return "cap";
    case XPos: return "x+";
    case XNeg: return "x-";
    case Coupon: return "coupon";
  }
  return "?";
}

// ---- IR ----

DiagramIR DiagramIR::empty(Surface s) {
  DiagramIR d;
  d.surface = s;
  d.handle_strands.assign(s.blocks(), 0);
  return d;
}

int DiagramIR::handle_width() const {
  int w = 0;
  for (int m : handle_strands) w += 2 * m;
  return w;
}

bool DiagramIR::is_empty() const { return handle_width() == 0 && slices.empty(); }

void DiagramIR::validate() const {
  if (surface.g < 0 || surface.n < 0 || surface.g + surface.n < 1)
    throw DiagramError("surface needs g, n >= 0 and g + n >= 1");
  if (static_cast<int>(handle_strands.size()) != surface.blocks())
    throw DiagramError("handle_strands has " + std::to_string(handle_strands.size()) + " entries, surface " +
                       surface.str() + " needs " + std::to_string(surface.blocks()));
  for (size_t i = 0; i < handle_strands.size(); ++i)
    if (handle_strands[i] < 0) throw DiagramError("handle_strands[" + std::to_string(i) + "] is negative");
  int w = handle_width();
  for (size_t s = 0; s < slices.size(); ++s) {
    int in = 0, out = 0;
    for (auto& a : slices[s]) {
      in += a.in();
      out += a.out();
    }
    if (in != w)
      throw DiagramError("width mismatch at slice " + std::to_string(s) + ": slice consumes " + std::to_string(in) +
                         " strands, " + std::to_string(w) + " arrive");
    w = out;
  }
  if (states && static_cast<int>(states->size()) != w)
    throw DiagramError("states has " + std::to_string(states->size()) + " entries, diagram has " +
                       std::to_string(w) + " boundary points");
}

int DiagramIR::top_width() const {
  validate();
  int w = handle_width();
  for (auto& sl : slices) {
    w = 0;
    for (auto& a : sl) w += a.out();
  }
  return w;
}

// ---- JSON ----

namespace {

using nlohmann::json;

Atom parse_atom(const json& j, size_t s, size_t a) {
  auto where = [&] { return "slice " + std::to_string(s) + ", atom " + std::to_string(a) + ": "; };
  if (j.is_string()) {
    std::string n = j.get<std::string>();
    if (n == "id") return Atom::id();
    if (n == "cup") return Atom::cup();
    if (n == "cap") return Atom::cap();
    if (n == "x+") return Atom::xpos();
    if (n == "x-") return Atom::xneg();
    throw DiagramError(where() + "unknown atom \"" + n + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("coupon")) {
    const json& c = j["coupon"];
    if (c.is_string()) {
      std::string n = c.get<std::string>();
      try {
        return Atom::make_coupon(builtin(n), n);
      } catch (const std::exception&) {
        throw DiagramError(where() + "unknown coupon \"" + n + "\"");
      }
    }
    if (c.is_array() && !c.empty() && c[0].is_array()) {
      int out = log2_exact(c.size()), in = log2_exact(c[0].size());
      if (out < 0 || in < 0) throw DiagramError(where() + "coupon matrix dimensions must be powers of two");
      Tensor t(in, out, Ring{});
      for (size_t o = 0; o < c.size(); ++o) {
        if (!c[o].is_array() || c[o].size() != t.cols()) throw DiagramError(where() + "ragged coupon matrix");
        for (size_t i = 0; i < t.cols(); ++i) {
          const json& e = c[o][i];
          try {
            if (e.is_number_integer()) t.at(o, i) = Scalar::from_int(e.get<long>(), Ring{});
            else if (e.is_string()) t.at(o, i) = Scalar::parse(e.get<std::string>(), Ring{});
            else throw DiagramError("bad entry");
          } catch (const std::exception& ex) {
            throw DiagramError(where() + "coupon entry (" + std::to_string(o) + "," + std::to_string(i) +
                               "): " + ex.what());
          }
        }
      }
      return Atom::make_coupon(std::move(t));
    }
    throw DiagramError(where() + "coupon must be a tensor name or a matrix of scalars");
  }
  throw DiagramError(where() + "atom must be a string or {\"coupon\": ...}");
}

json atom_json(const Atom& a) {
  if (a.kind != Atom::Coupon) return a.name();
  if (!a.label.empty()) return json{{"coupon", a.label}};
  const Tensor& t = *a.coupon;
  json rows = json::array();
  for (size_t o = 0; o < t.rows(); ++o) {
    json row = json::array();
    for (size_t i = 0; i < t.cols(); ++i) row.push_back(t.at(o, i).str());
    rows.push_back(row);
  }
  return json{{"coupon", rows}};
}

}  // namespace

std::vector<int> parse_states(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '-') out.push_back(0);
    else if (c == '+') out.push_back(1);
    else if (c == ',' || c == ' ') continue;
    else throw DiagramError(std::string("bad state character '") + c + "'");
  }
  return out;
}

DiagramIR parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line/column
    size_t pos = e.byte == 0 ? 0 : e.byte - 1, line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw DiagramError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!j.is_object()) throw DiagramError("diagram must be a JSON object");
  DiagramIR d;
  if (!j.contains("surface") || !j["surface"].is_object()) throw DiagramError("missing \"surface\" object");
  const json& s = j["surface"];
  if (!s.contains("g") || !s.contains("n") || !s["g"].is_number_integer() || !s["n"].is_number_integer())
    throw DiagramError("surface needs integer \"g\" and \"n\"");
  d.surface = {s["g"].get<int>(), s["n"].get<int>()};
  if (!j.contains("handle_strands") || !j["handle_strands"].is_array())
    throw DiagramError("missing \"handle_strands\" array");
  for (auto& h : j["handle_strands"]) {
    if (!h.is_number_integer()) throw DiagramError("handle_strands entries must be integers");
    d.handle_strands.push_back(h.get<int>());
  }
  if (j.contains("routing")) {
    std::string r = j["routing"].is_string() ? j["routing"].get<std::string>() : "";
    if (r == "canonical") d.routing = Routing::Canonical;
    else if (r == "explicit") d.routing = Routing::Explicit;
    else throw DiagramError("routing must be \"canonical\" or \"explicit\"");
  }
  if (j.contains("slices")) {
    if (!j["slices"].is_array()) throw DiagramError("\"slices\" must be an array");
    for (size_t si = 0; si < j["slices"].size(); ++si) {
      const json& sl = j["slices"][si];
      if (!sl.is_array()) throw DiagramError("slice " + std::to_string(si) + ": must be an array of atoms");
      Slice slice;
      for (size_t ai = 0; ai < sl.size(); ++ai) slice.push_back(parse_atom(sl[ai], si, ai));
      d.slices.push_back(std::move(slice));
    }
  }
  if (j.contains("states")) {
    std::vector<int> st;
    for (auto& x : j["states"]) {
      std::string v = x.is_string() ? x.get<std::string>() : "";
      if (v != "-" && v != "+") throw DiagramError("states entries must be \"-\" or \"+\"");
      st.push_back(v == "+");
    }
    d.states = st;
  }
  for (auto& [key, val] : j.items())
    if (key != "surface" && key != "handle_strands" && key != "routing" && key != "slices" && key != "states")
      throw DiagramError("unknown field \"" + key + "\"");
  d.validate();
  return d;
}

std::string diagram_to_json(const DiagramIR& d) {
  json j;
  j["surface"] = {{"g", d.surface.g}, {"n", d.surface.n}};
  j["handle_strands"] = d.handle_strands;
  j["routing"] = d.routing == Routing::Canonical ? "canonical" : "explicit";
  json sl = json::array();
  for (auto& s : d.slices) {
    json row = json::array();
    for (auto& a : s) row.push_back(atom_json(a));
    sl.push_back(row);
  }
  j["slices"] = sl;
  if (d.states) {
    json st = json::array();
    for (int s : *d.states) st.push_back(s ? "+" : "-");
    j["states"] = st;
  }
  return j.dump();
}

// ---- evaluation ----

HolTensor handle_tensor(const LgnAlgebra& alg, int block, int m) {
  Ring r = alg.ring();
  HolTensor h{2 * m, std::vector<Poly>(size_t{1} << (2 * m), Poly(r))};
  if (m == 0) {
    h.v[0] = alg.one();
    return h;
  }
  const PolyMatrix& x = fusion_matrix(alg, block, m);
  Tensor td = builtin("d_transpose", r);
  const size_t n = size_t{1} << m;
  for (size_t i = 0; i < n; ++i)
    for (size_t jr = 0; jr < n; ++jr) {
      // jr lists j_m ... j_1; strand r of k pairs with j_r
      size_t k = 0;
      Scalar c = Scalar::one(r);
      for (int s = 0; s < m; ++s) {
        int js = (jr >> s) & 1;  // j_{s+1}
        int ks = 1 - js;
        c *= td.at(ks, js);
        k |= static_cast<size_t>(ks) << (m - 1 - s);
      }
      h.v[(i << m) | jr] = x[i][k] * c;
    }
  return h;
}

namespace {

std::vector<Slice> block_swap(int width, int offset, int w1, int w2, Atom::Kind kind) {
  std::vector<Slice> out;
  for (int t = 0; t < w2; ++t)
    for (int pos = offset + w1 + t - 1; pos >= offset + t; --pos) {
      Slice s(pos, Atom::id());
      s.push_back({kind, nullptr, {}});
      s.resize(width - 1, Atom::id());
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace

std::vector<Slice> routing_slices(Surface s, const std::vector<int>& hs) {
  int width = 0;
  for (int m : hs) width += 2 * m;
  std::vector<Slice> out;
  int offset = 0;
  for (int i = 0; i < s.g; ++i) {
    int mb = hs[2 * i], ma = hs[2 * i + 1];
    auto sw = block_swap(width, offset + mb, mb, ma, kRoutingCrossing);
    out.insert(out.end(), sw.begin(), sw.end());
    offset += 2 * mb + 2 * ma;
  }
  return out;
}

std::vector<Poly> apply_slice(const std::vector<Poly>& v, int width, const Slice& slice, Ring r) {
  std::vector<Poly> cur = v;
  int w = width, pos = 0;
  for (const Atom& atom : slice) {
    if (atom.kind == Atom::Id) {
      ++pos;
      continue;
    }
    Tensor owned;
    const Tensor* t;
    if (atom.kind == Atom::Coupon) {
      owned = coupon_in_ring(*atom.coupon, r);
      t = &owned;
    } else {
      t = &atom_tensor(atom.kind, r);
    }
    const int a = t->in(), b = t->out();
    const int right = w - pos - a;
    const int nw = w - a + b;
    std::vector<Poly> next(size_t{1} << nw, Poly(r));
    const size_t amask = (size_t{1} << a) - 1, rmask = (size_t{1} << right) - 1;
    for (size_t idx = 0; idx < cur.size(); ++idx) {
      if (cur[idx].is_zero()) continue;
      size_t left = idx >> (right + a), li = (idx >> right) & amask, rr = idx & rmask;
      for (size_t lo = 0; lo < t->rows(); ++lo) {
        const Scalar& c = t->at(lo, li);
        if (c.is_zero()) continue;
        next[(left << (b + right)) | (lo << right) | rr] += cur[idx] * c;
      }
    }
    cur = std::move(next);
    w = nw;
    pos += b;
  }
  return cur;
}

HolTensor odot(const LgnAlgebra& alg, const HolTensor& a, const HolTensor& b) {
  HolTensor out{a.k + b.k, std::vector<Poly>(size_t{1} << (a.k + b.k), Poly(alg.ring()))};
  const long na = static_cast<long>(a.v.size()), nb = static_cast<long>(b.v.size());
#pragma omp parallel for schedule(dynamic, 1) collapse(2)
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j) {
      if (a.v[i].is_zero() || b.v[j].is_zero()) continue;
      out.v[(static_cast<size_t>(i) << b.k) | static_cast<size_t>(j)] = alg.mul(a.v[i], b.v[j]);
    }
  return out;
}

HolTensor eval_diagram(const DiagramIR& d, Ring r) {
  d.validate();
  auto alg = LgnAlgebra::get(d.surface, r);
  HolTensor row{0, {alg->one()}};
  for (int slot = 0; slot < d.surface.blocks(); ++slot) {
    int m = d.handle_strands[slot];
    if (m == 0) continue;
    row = odot(*alg, row, handle_tensor(*alg, alg->slot_block(slot), m));
  }
  std::vector<Poly> v = std::move(row.v);
  int w = row.k;
  std::vector<Slice> all;
  if (d.routing == Routing::Canonical) all = routing_slices(d.surface, d.handle_strands);
  all.insert(all.end(), d.slices.begin(), d.slices.end());
  for (auto& s : all) {
    v = apply_slice(v, w, s, r);
    w = 0;
    for (auto& a : s) w += a.out();
  }
  return {w, std::move(v)};
}

Poly hol_stated(const DiagramIR& d, const std::vector<int>& states, Ring r) {
  HolTensor h = eval_diagram(d, r);
  if (static_cast<int>(states.size()) != h.k)
    throw DiagramError("got " + std::to_string(states.size()) + " states for " + std::to_string(h.k) +
                       " boundary points");
  size_t idx = 0;
  for (int s : states) idx = (idx << 1) | static_cast<size_t>(s);
  return h.v[idx];
}

Poly hol_stated(const StatedDiagram& sd, Ring r) { return hol_stated(sd.diagram, sd.states, r); }

Poly wilson_loop(const DiagramIR& d, Ring r) {
  HolTensor h = eval_diagram(d, r);
  if (h.k != 0) throw DiagramError("diagram is not closed: " + std::to_string(h.k) + " boundary points");
  return h.v[0];
}

namespace {

// bottom-edge owners after the canonical braid; d1 is the inner bunch
std::vector<int> merged_owners(Surface s, const std::vector<int>& h1, const std::vector<int>& h2) {
  std::vector<int> owner;
  auto left = [&](int slot) {
    owner.insert(owner.end(), h2[slot], 2);
    owner.insert(owner.end(), h1[slot], 1);
  };
  auto right = [&](int slot) {
    owner.insert(owner.end(), h1[slot], 1);
    owner.insert(owner.end(), h2[slot], 2);
  };
  for (int i = 0; i < s.g; ++i) {
    left(2 * i);
    left(2 * i + 1);
    right(2 * i);
    right(2 * i + 1);
  }
  for (int slot = 2 * s.g; slot < s.blocks(); ++slot) {
    left(slot);
    right(slot);
  }
  return owner;
}

// slices of d read from the bottom edge in braid order
std::vector<Slice> slices_from_routed(const DiagramIR& d) {
  std::vector<Slice> out;
  if (d.routing == Routing::Explicit) {
    auto r = routing_slices(d.surface, d.handle_strands);
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
      Slice s = *it;
      for (auto& a : s)
        if (a.kind == Atom::XPos || a.kind == Atom::XNeg) a.kind = a.kind == Atom::XPos ? Atom::XNeg : Atom::XPos;
      out.push_back(std::move(s));
    }
  }
  out.insert(out.end(), d.slices.begin(), d.slices.end());
  return out;
}

}  // namespace

DiagramIR stack(const DiagramIR& d1, const DiagramIR& d2) {
  if (!(d1.surface == d2.surface)) throw DiagramError("stack: surface mismatch");
  d1.validate();
  d2.validate();
  if (d1.is_empty()) return d2;
  if (d2.is_empty()) return d1;
  DiagramIR out;
  out.surface = d1.surface;
  out.routing = Routing::Canonical;
  for (size_t h = 0; h < d1.handle_strands.size(); ++h)
    out.handle_strands.push_back(d1.handle_strands[h] + d2.handle_strands[h]);
  std::vector<int> owner = merged_owners(d1.surface, d1.handle_strands, d2.handle_strands);
  const int width = static_cast<int>(owner.size());
  // stable partition by adjacent swaps: d2 strands pass over d1 strands
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < width; ++i)
      if (owner[i] == 2 && owner[i + 1] == 1) {
        Slice s(i, Atom::id());
        s.push_back({kOverLeft, nullptr, {}});
        s.resize(width - 1, Atom::id());
        out.slices.push_back(std::move(s));
        std::swap(owner[i], owner[i + 1]);
        moved = true;
      }
  }
  const int w2 = d2.handle_width();
  auto pad = [](const Slice& s, int left, int right) {
    Slice p(left, Atom::id());
    p.insert(p.end(), s.begin(), s.end());
    p.resize(p.size() + right, Atom::id());
    return p;
  };
  for (auto& s : slices_from_routed(d1)) out.slices.push_back(pad(s, 0, w2));
  const int k1 = d1.top_width();
  for (auto& s : slices_from_routed(d2)) out.slices.push_back(pad(s, k1, 0));
  if (d1.states && d2.states) {
    std::vector<int> st = *d1.states;
    st.insert(st.end(), d2.states->begin(), d2.states->end());
    out.states = st;
  }
  out.validate();
  return out;
}

StatedDiagram stack(const StatedDiagram& d1, const StatedDiagram& d2) {
  StatedDiagram out{stack(d1.diagram, d2.diagram), d1.states};
  out.states.insert(out.states.end(), d2.states.begin(), d2.states.end());
  return out;
}

DiagramIR handle_loop_open(Surface s, Family f, int handle) {
  auto alg = LgnAlgebra::get(s);
  DiagramIR d = DiagramIR::empty(s);
  int b = alg->block(f, handle);
  for (int slot = 0; slot < s.blocks(); ++slot)
    if (alg->slot_block(slot) == b) d.handle_strands[slot] = 1;
  return d;
}

StatedDiagram generator_arc(Surface s, Family f, int handle, int row, int col) {
  if (row < 0 || row > 1 || col < 0 || col > 1) throw DiagramError("generator arc: bad states");
  StatedDiagram sd{handle_loop_open(s, f, handle), {row, col}};
  sd.diagram.states = sd.states;
  return sd;
}

Tensor jones_wenzl(int n, Ring r) {
  if (n < 1) throw std::invalid_argument("jones_wenzl needs n >= 1");
  Tensor p = identity(1, r);
  for (int k = 1; k < n; ++k) {
    Scalar qk = quantum_integer(k, r), qk1 = quantum_integer(k + 1, r);
    if (!qk1.is_invertible()) throw std::invalid_argument("jones_wenzl: [" + std::to_string(k + 1) + "] not invertible in " + r.str());
    Tensor pk = hcat(p, identity(1, r));
    Tensor e = hcat(identity(k - 1, r), compose(builtin("cup", r), builtin("cap", r)));
    // loop value is -[2], hence the sign
    Tensor corr = compose(pk, compose(e, pk)) * (qk * qk1.inverse());
    p = pk + corr;
  }
  return p;
}

}  // namespace lgn
