#include "lgn/oq.hpp"

#include <mutex>
#include <set>


namespace lgn {

void multisum_add(MultiSum& s, const std::vector<Word>& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = s.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

std::string oq_gen_name(char c) {
  int l = letter_of_code(c);
  return std::string("T[") + (letter_row(l) ? "+" : "-") + "," + (letter_col(l) ? "+" : "-") + "]";
}

const OqAlgebra& OqAlgebra::get(Ring r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<OqAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[r.p];
  if (!slot) slot = std::make_unique<OqAlgebra>(r);
  return *slot;
}

OqAlgebra::OqAlgebra(Ring r) : ring_(r) {
  auto rels = rtt_relations(r);
  rels.push_back(oq_det_relation(r));
  rw_ = std::make_unique<Rewriter>(orient_relations(rels), r);

  const std::vector<Word> basis = {Word{}, Word(1, code(0, kB)), Word(1, code(0, kA)), Word(1, code(0, kD)),
                                   Word(1, code(0, kC))};
  antipode_ = solve_matrix_inverse(generator_matrix(0, r), basis, [this](const Word& w) { return rw_->reduce(w); }, r);
}

Poly OqAlgebra::generator(int row, int col) const { return Poly::word(Word(1, code(0, letter_of(row, col))), ring_); }

Poly OqAlgebra::mul(const Poly& x, const Poly& y) const {
  Poly out(ring_);
  for (auto& [u, c] : x.terms())
    for (auto& [v, d] : y.terms()) out += rw_->reduce(u + v) * (c * d);
  return out;
}

std::vector<Poly> OqAlgebra::defining_relations() const {
  auto rels = rtt_relations(ring_);
  rels.push_back(oq_det_relation(ring_));
  return rels;
}

MultiSum OqAlgebra::coproduct(const Poly& x) const {
  MultiSum out;
  for (auto& [w, c] : x.terms()) {
    MultiSum acc;
    acc[{Word{}, Word{}}] = c;
    for (char ch : w) {
      int l = letter_of_code(ch);
      MultiSum next;
      for (auto& [key, e] : acc)
        for (int k = 0; k < 2; ++k) {
          char g1 = code(0, letter_of(letter_row(l), k)), g2 = code(0, letter_of(k, letter_col(l)));
          Poly left = rw_->reduce(key[0] + g1), right = rw_->reduce(key[1] + g2);
          for (auto& [lw, lc] : left.terms())
            for (auto& [rw, rc] : right.terms()) multisum_add(next, {lw, rw}, e * lc * rc);
        }
      acc = std::move(next);
    }
    for (auto& [key, e] : acc) multisum_add(out, key, e);
  }
  return out;
}

Scalar OqAlgebra::counit(const Poly& x) const {
  Scalar s = Scalar::zero(ring_);
  for (auto& [w, c] : x.terms()) {
    bool diag = std::all_of(w.begin(), w.end(), [](char ch) {
      int l = letter_of_code(ch);
      return letter_row(l) == letter_col(l);
    });
    if (diag) s += c;
  }
  return s;
}

std::string OqAlgebra::str(const Poly& x) const { return render(x, oq_gen_name); }

Poly OqAlgebra::parse(const std::string& text) const {
  GeneratorReader reader;
  reader.starts = [](const std::string& t, size_t i) { return t[i] == 'T' && i + 1 < t.size() && t[i + 1] == '['; };
  reader.read = [this](const std::string& t, size_t& i) {
    ++i;
    auto [row, col] = read_state_pair(t, i);
    return code(0, letter_of(row, col));
  };
  return rw_->reduce(parse_poly(text, ring_, reader));
}

}  // namespace lgn
