#include "lgn/lgn.hpp"

#include "lgn/linsolve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lgn {

namespace {

Poly specialize_poly(const Poly& p, Ring r) {
  if (r.generic()) return p;
  Poly out(r);
  for (auto& [w, c] : p.terms()) out.add(w, Scalar::from_laurent(c.laurent(), r));
  return out;
}

const std::vector<std::pair<Word, Poly>>& generic_local_rules() {
  static const auto rules = [] {
    auto rels = reflection_relations(0, Ring{});
    rels.push_back(qdet_relation(0, Ring{}));
    return orient_relations(rels);
  }();
  return rules;
}

// rules hi*lo -> sum lo*hi with lo = block 0, hi = block 1
const std::vector<std::pair<Word, Poly>>& generic_swap_rules(int type) {
  static const auto all = [] {
    std::vector<std::vector<std::pair<Word, Poly>>> v;
    v.push_back(orient_relations(exchange_relations(0, 1, Ring{})));
    v.push_back(orient_relations(exchange_relations(1, 0, Ring{})));
    v.push_back(orient_relations(l10_relations(1, 0, Ring{})));
    return v;
  }();
  return all[type];
}

std::vector<std::pair<Word, Poly>> local_rules(Ring r) {
  std::vector<std::pair<Word, Poly>> out;
  if (r.generic()) return generic_local_rules();
  int p = r.p;
  Word dpow(2 * p - 1, static_cast<char>(kD));
  Poly a_sub(r);
  a_sub.add(dpow, Scalar::one(r));
  a_sub.add(Word{static_cast<char>(kB), static_cast<char>(kC)} + dpow, Scalar::q(8, r));
  out.emplace_back(Word(1, static_cast<char>(kA)), a_sub);
  out.emplace_back(Word(p, static_cast<char>(kB)), Poly(r));
  out.emplace_back(Word(p, static_cast<char>(kC)), Poly(r));
  out.emplace_back(Word(2 * p, static_cast<char>(kD)), Poly::constant(Scalar::one(r)));
  for (auto& [lhs, rhs] : generic_local_rules()) {
    if (lhs.find(static_cast<char>(kA)) != Word::npos) continue;
    for (auto& [w, c] : rhs.terms())
      if (w.find(static_cast<char>(kA)) != Word::npos)
        throw StructuralInconsistency("restricted rule set would reintroduce X^-_-");
    out.emplace_back(lhs, specialize_poly(rhs, r));
  }
  return out;
}

Word with_block(const Word& letters, int block) {
  Word w = letters;
  for (auto& ch : w) ch = code(block, ch);
  return w;
}

Word letters_of(const Word& codes) {
  Word w = codes;
  for (auto& ch : w) ch = static_cast<char>(letter_of_code(ch));
  return w;
}

}  // namespace

std::shared_ptr<const LgnAlgebra> LgnAlgebra::get(Surface s, Ring r) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const LgnAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(s.g, s.n, r.p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<const LgnAlgebra>(s, r);
  cache[key] = alg;
  return alg;
}

LgnAlgebra::LgnAlgebra(Surface s, Ring r) : surface_(s), ring_(r) {
  if (s.g < 0 || s.n < 0 || s.g + s.n < 1)
    throw std::invalid_argument("surface needs g, n >= 0 and g + n >= 1");
  if (s.blocks() > 31) throw std::invalid_argument("too many handles");
  if (!r.generic() && r.p < 2) throw std::invalid_argument("restricted mode needs p >= 2");
  local_ = std::make_unique<Rewriter>(local_rules(r), r);
  for (int t = 0; t < 3; ++t) {
    for (auto& [lhs, rhs] : generic_swap_rules(t)) {
      if (lhs.size() != 2 || block_of(lhs[0]) != 1 || block_of(lhs[1]) != 0)
        throw StructuralInconsistency("exchange relations did not orient to high-low swaps");
      int y = letter_of_code(lhs[0]), x = letter_of_code(lhs[1]);
      Poly sp = specialize_poly(rhs, r);
      for (auto& [w, c] : sp.terms()) {
        if (w.size() != 2 || block_of(w[0]) != 0 || block_of(w[1]) != 1)
          throw StructuralInconsistency("exchange rule with unexpected right-hand side");
        swaps_[t][y][x].push_back({letter_of_code(w[0]), letter_of_code(w[1]), c});
      }
    }
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 4; ++x)
        if (swaps_[t][y][x].empty()) throw StructuralInconsistency("incomplete exchange table");
  }
}

int LgnAlgebra::block(Family f, int handle) const {
  int g = surface_.g, n = surface_.n;
  switch (f) {
    case Family::A:
      if (handle < 1 || handle > g) break;
      return handle - 1;
    case Family::B:
      if (handle < 1 || handle > g) break;
      return g + handle - 1;
    case Family::M:
      if (handle <= g || handle > g + n) break;
      return 2 * g + handle - g - 1;
  }
  throw std::invalid_argument("generator handle out of range for surface " + surface_.str());
}

Family LgnAlgebra::block_family(int b) const {
  if (b < surface_.g) return Family::A;
  if (b < 2 * surface_.g) return Family::B;
  return Family::M;
}

int LgnAlgebra::block_handle(int b) const {
  if (b < surface_.g) return b + 1;
  if (b < 2 * surface_.g) return b - surface_.g + 1;
  return b - 2 * surface_.g + surface_.g + 1;
}

int LgnAlgebra::slot_block(int slot) const {
  int g = surface_.g;
  if (slot < 2 * g) return slot % 2 == 0 ? g + slot / 2 : slot / 2;
  return slot;
}

char LgnAlgebra::gen_code(const GeneratorId& id) const {
  if (id.row < 0 || id.row > 1 || id.col < 0 || id.col > 1) throw std::invalid_argument("bad state");
  return code(block(id.family, id.handle), letter_of(id.row, id.col));
}

GeneratorId LgnAlgebra::decode(char c) const {
  int b = block_of(c), l = letter_of_code(c);
  return {block_family(b), block_handle(b), letter_row(l), letter_col(l)};
}

std::string LgnAlgebra::gen_name(char c) const {
  GeneratorId id = decode(c);
  const char* f = id.family == Family::A ? "A" : id.family == Family::B ? "B" : "M";
  return std::string(f) + std::to_string(id.handle) + "[" + (id.row ? "+" : "-") + "," +
         (id.col ? "+" : "-") + "]";
}

LgnAlgebra::PairType LgnAlgebra::pair_type(int lo, int hi) const {
  int hl = block_handle(lo), hh = block_handle(hi);
  if (hl == hh) return kL10;
  return hl < hh ? kForward : kBackward;
}

bool LgnAlgebra::is_normal(const Word& w) const {
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    int b = block_of(w[i]);
    while (j < w.size() && block_of(w[j]) == b) ++j;
    if (j < w.size() && block_of(w[j]) < b) return false;
    if (!local_->is_normal(letters_of(w.substr(i, j - i)))) return false;
    i = j;
  }
  return true;
}

const std::vector<LgnAlgebra::Moved>& LgnAlgebra::move_past(PairType t, int x,
                                                            const Word& y_letters) const {
  Word key = Word(1, static_cast<char>(t)) + static_cast<char>(x) + y_letters;
  {
    std::shared_lock lock(move_mu_);
    auto it = move_memo_.find(key);
    if (it != move_memo_.end()) return it->second;
  }
  std::map<std::pair<int, Word>, Scalar> states;
  states.emplace(std::make_pair(x, Word{}), Scalar::one(ring_));
  for (size_t k = y_letters.size(); k-- > 0;) {
    int y = y_letters[k];
    std::map<std::pair<int, Word>, Scalar> next;
    for (auto& [st, c] : states) {
      for (const Swap& s : swaps_[t][y][st.first]) {
        auto key2 = std::make_pair(s.x, Word(1, static_cast<char>(s.y)) + st.second);
        auto [it, fresh] = next.emplace(key2, c * s.c);
        if (!fresh) it->second += c * s.c;
      }
    }
    std::erase_if(next, [](auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  std::map<std::pair<int, Word>, Scalar> reduced;
  for (auto& [st, c] : states) {
    Poly red = local_->reduce(st.second);
    for (auto& [w, e] : red.terms()) {
      auto [it, fresh] = reduced.emplace(std::make_pair(st.first, w), c * e);
      if (!fresh) it->second += c * e;
    }
  }
  std::vector<Moved> out;
  for (auto& [st, c] : reduced)
    if (!c.is_zero()) out.push_back({st.first, st.second, c});
  std::unique_lock lock(move_mu_);
  return move_memo_.emplace(key, std::move(out)).first->second;
}

Poly LgnAlgebra::mul_letter(const Word& u, char xc) const {
  int beta = block_of(xc);
  size_t p_end = 0;
  while (p_end < u.size() && block_of(u[p_end]) < beta) ++p_end;
  size_t u_end = p_end;
  while (u_end < u.size() && block_of(u[u_end]) == beta) ++u_end;
  // segments of strictly higher blocks
  std::vector<std::pair<int, Word>> segs;
  for (size_t i = u_end; i < u.size();) {
    size_t j = i;
    int b = block_of(u[i]);
    while (j < u.size() && block_of(u[j]) == b) ++j;
    segs.emplace_back(b, letters_of(u.substr(i, j - i)));
    i = j;
  }
  std::map<std::pair<int, Word>, Scalar> states;
  states.emplace(std::make_pair(letter_of_code(xc), Word{}), Scalar::one(ring_));
  for (size_t s = segs.size(); s-- > 0;) {
    auto& [b, letters] = segs[s];
    PairType t = pair_type(beta, b);
    std::map<std::pair<int, Word>, Scalar> next;
    for (auto& [st, c] : states)
      for (const Moved& m : move_past(t, st.first, letters)) {
        auto key = std::make_pair(m.x, with_block(m.y, b) + st.second);
        auto [it, fresh] = next.emplace(key, c * m.c);
        if (!fresh) it->second += c * m.c;
      }
    std::erase_if(next, [](auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  Poly out(ring_);
  Word prefix = u.substr(0, p_end);
  Word own = letters_of(u.substr(p_end, u_end - p_end));
  for (auto& [st, c] : states) {
    Poly red = local_->reduce(own + static_cast<char>(st.first));
    for (auto& [w, e] : red.terms()) out.add(prefix + with_block(w, beta) + st.second, c * e);
  }
  return out;
}

Poly LgnAlgebra::normal_form(const Word& w) const {
  for (char c : w)
    if (block_of(c) >= surface_.blocks()) throw std::invalid_argument("generator outside surface");
  if (is_normal(w)) return Poly::word(w, ring_);
  {
    std::shared_lock lock(nf_mu_);
    auto it = nf_memo_.find(w);
    if (it != nf_memo_.end()) return it->second;
  }
  Poly head = normal_form(w.substr(0, w.size() - 1));
  Poly out(ring_);
  for (auto& [u, c] : head.terms()) out += mul_letter(u, w.back()) * c;
  std::unique_lock lock(nf_mu_);
  nf_memo_.emplace(w, out);
  return out;
}

Poly LgnAlgebra::normal_form(const Poly& p) const {
  Poly out(ring_);
  for (auto& [w, c] : p.terms()) out += normal_form(w) * c;
  return out;
}

Poly LgnAlgebra::mul(const Poly& x, const Poly& y) const {
  Poly out(ring_);
  for (auto& [u, c] : x.terms())
    for (auto& [v, d] : y.terms()) out += normal_form(u + v) * (c * d);
  return out;
}

Poly LgnAlgebra::mul_parallel(const Poly& x, const Poly& y) const {
  std::vector<std::pair<const Word*, const Scalar*>> xs, ys;
  for (auto& [w, c] : x.terms()) xs.emplace_back(&w, &c);
  for (auto& [w, c] : y.terms()) ys.emplace_back(&w, &c);
  const long total = static_cast<long>(xs.size() * ys.size());
  std::vector<Poly> partial;
#pragma omp parallel
  {
#ifdef _OPENMP
    int nt = omp_get_num_threads(), id = omp_get_thread_num();
#else
    int nt = 1, id = 0;
#endif
#pragma omp single
    partial.assign(nt, Poly(ring_));
    Poly& acc = partial[id];
#pragma omp for schedule(dynamic, 4)
    for (long k = 0; k < total; ++k) {
      auto& [u, c] = xs[k / ys.size()];
      auto& [v, d] = ys[k % ys.size()];
      acc += normal_form(*u + *v) * (*c * *d);
    }
  }
  Poly out(ring_);
  for (auto& p : partial) out += p;
  return out;
}

Poly LgnAlgebra::generator(const GeneratorId& g) const { return Poly::word(Word(1, gen_code(g)), ring_); }

EntryProduct LgnAlgebra::product() const {
  return [this](const Poly& a, const Poly& b) { return mul(a, b); };
}

std::vector<Poly> LgnAlgebra::defining_relations() const {
  std::vector<Poly> out;
  int nb = surface_.blocks();
  for (int b = 0; b < nb; ++b) {
    for (auto& r : reflection_relations(b, ring_)) out.push_back(r);
    out.push_back(qdet_relation(b, ring_));
  }
  for (int lo = 0; lo < nb; ++lo)
    for (int hi = lo + 1; hi < nb; ++hi) {
      std::vector<Poly> rels;
      switch (pair_type(lo, hi)) {
        case kForward: rels = exchange_relations(lo, hi, ring_); break;
        case kBackward: rels = exchange_relations(hi, lo, ring_); break;
        case kL10: rels = l10_relations(hi, lo, ring_); break;
      }
      for (auto& r : rels) out.push_back(r);
    }
  if (restricted()) {
    int p = ring_.p;
    for (int b = 0; b < nb; ++b) {
      out.push_back(Poly::word(Word(p, code(b, kB)), ring_));
      out.push_back(Poly::word(Word(p, code(b, kC)), ring_));
      out.push_back(Poly::word(Word(2 * p, code(b, kD)), ring_) - Poly::constant(Scalar::one(ring_)));
    }
  }
  return out;
}

Poly normal_form(const std::vector<GeneratorId>& word, Surface s, Ring r) {
  auto alg = LgnAlgebra::get(s, r);
  Word w;
  for (auto& g : word) w.push_back(alg->gen_code(g));
  return alg->normal_form(w);
}

// ---- elements ----

LgnElement::LgnElement(std::shared_ptr<const LgnAlgebra> alg, Poly p) : alg_(std::move(alg)), p_(std::move(p)) {}

LgnElement LgnElement::one(std::shared_ptr<const LgnAlgebra> alg) {
  Poly p = alg->one();
  return LgnElement(std::move(alg), std::move(p));
}

LgnElement LgnElement::scalar(std::shared_ptr<const LgnAlgebra> alg, const Scalar& s) {
  return LgnElement(std::move(alg), Poly::constant(s));
}

LgnElement LgnElement::generator(std::shared_ptr<const LgnAlgebra> alg, const GeneratorId& g) {
  Poly p = alg->generator(g);
  return LgnElement(std::move(alg), std::move(p));
}

void LgnElement::check(const LgnElement& o) const {
  if (!(alg_->surface() == o.alg_->surface()) || !(alg_->ring() == o.alg_->ring()))
    throw std::invalid_argument("surface/mode mismatch between elements");
}

LgnElement LgnElement::operator+(const LgnElement& o) const {
  check(o);
  return LgnElement(alg_, p_ + o.p_);
}

LgnElement LgnElement::operator-(const LgnElement& o) const {
  check(o);
  return LgnElement(alg_, p_ - o.p_);
}

LgnElement LgnElement::operator*(const LgnElement& o) const {
  check(o);
  return LgnElement(alg_, alg_->mul(p_, o.p_));
}

LgnElement LgnElement::operator*(const Scalar& s) const { return LgnElement(alg_, p_ * s); }

bool operator==(const LgnElement& a, const LgnElement& b) {
  a.check(b);
  return a.p_ == b.p_;
}

std::string LgnElement::str() const {
  return render(p_, [this](char c) { return alg_->gen_name(c); });
}

LgnElement parse_element(const std::string& text, std::shared_ptr<const LgnAlgebra> alg) {
  GeneratorReader reader;
  reader.starts = [](const std::string& t, size_t i) {
    return (t[i] == 'A' || t[i] == 'B' || t[i] == 'M') && i + 1 < t.size() &&
           std::isdigit(static_cast<unsigned char>(t[i + 1]));
  };
  reader.read = [&](const std::string& t, size_t& i) {
    char f = t[i++];
    Family fam = f == 'A' ? Family::A : f == 'B' ? Family::B : Family::M;
    size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    int h = std::stoi(t.substr(i, j - i));
    i = j;
    auto [row, col] = read_state_pair(t, i);
    return alg->gen_code({fam, h, row, col});
  };
  Poly raw = parse_poly(text, alg->ring(), reader);
  return LgnElement(alg, alg->normal_form(raw));
}

}  // namespace lgn
