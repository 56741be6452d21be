#include "lgn/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "lgn/linsolve.hpp"

namespace lgn {

int letter_of(int row, int col) {
  static const int table[2][2] = {{kA, kB}, {kC, kD}};
  return table[row][col];
}

int letter_row(int letter) { return letter == kC || letter == kD; }

int letter_col(int letter) { return letter == kB || letter == kD; }

Poly Poly::constant(const Scalar& s) {
  Poly p(s.ring());
  p.add(Word{}, s);
  return p;
}

Poly Poly::word(const Word& w, Ring r) {
  Poly p(r);
  p.add(w, Scalar::one(r));
  return p;
}

void Poly::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [w, c] : o.t_) add(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [w, c] : o.t_) add(w, -c);
  return *this;
}

Poly Poly::operator*(const Scalar& s) const {
  Poly r(ring_);
  if (s.is_zero()) return r;
  for (auto& [w, c] : t_) r.t_.emplace_hint(r.t_.end(), w, c * s);
  return r;
}

Poly Poly::operator-() const { return *this * Scalar::from_int(-1, ring_); }

Poly Poly::concat(const Poly& o) const {
  Poly r(ring_);
  for (auto& [w1, c1] : t_)
    for (auto& [w2, c2] : o.t_) r.add(w1 + w2, c1 * c2);
  return r;
}

Scalar Poly::coefficient(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar::zero(ring_) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [w, c] : t_) d = std::max<int>(d, static_cast<int>(w.size()));
  return d;
}

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::pair<Word, Poly>> orient_relations(const std::vector<Poly>& relations) {
  if (relations.empty()) return {};
  Ring ring = relations[0].ring();
  std::vector<Word> cols;
  for (auto& r : relations)
    for (auto& [w, c] : r.terms()) cols.push_back(w);
  std::sort(cols.begin(), cols.end(), [](const Word& a, const Word& b) { return deglex_less(b, a); });
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::map<Word, size_t> col_of;
  for (size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = k;

  std::vector<std::vector<Scalar>> m;
  for (auto& r : relations) {
    std::vector<Scalar> row(cols.size(), Scalar::zero(ring));
    for (auto& [w, c] : r.terms()) row[col_of[w]] = c;
    m.push_back(std::move(row));
  }
  std::vector<std::pair<Word, Poly>> rules;
  size_t row = 0;
  for (size_t c = 0; c < cols.size() && row < m.size(); ++c) {
    size_t piv = m.size();
    bool any = false;
    for (size_t r = row; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      any = true;
      if (m[r][c].is_invertible()) {
        piv = r;
        break;
      }
    }
    if (piv == m.size()) {
      if (any) throw StructuralInconsistency("relation orientation needs a non-unit pivot");
      continue;
    }
    std::swap(m[row], m[piv]);
    Scalar inv = m[row][c].inverse();
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Scalar f = m[r][c];
      for (size_t k = c; k < cols.size(); ++k)
        if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
    }
    ++row;
  }
  for (size_t r = 0; r < row; ++r) {
    size_t lead = 0;
    while (m[r][lead].is_zero()) ++lead;
    Poly rhs(ring);
    for (size_t k = lead + 1; k < cols.size(); ++k)
      if (!m[r][k].is_zero()) rhs.add(cols[k], -m[r][k]);
    rules.emplace_back(cols[lead], std::move(rhs));
  }
  return rules;
}

namespace {

// split at top-level '+'/'-' that are not exponent signs
std::vector<std::pair<int, std::string>> split_terms(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&] {
    bool blank = std::all_of(cur.begin(), cur.end(), [](unsigned char ch) { return std::isspace(ch); });
    if (!blank) out.emplace_back(sign, cur);
    else if (!out.empty() || sign != 1) throw std::invalid_argument("element parse error: empty term");
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    bool exponent_sign = false;
    if ((ch == '-' || ch == '+') && depth == 0) {
      size_t k = i;
      while (k > 0 && std::isspace(static_cast<unsigned char>(text[k - 1]))) --k;
      exponent_sign = k > 0 && text[k - 1] == '^';
    }
    if ((ch == '+' || ch == '-') && depth == 0 && !exponent_sign) {
      if (!cur.empty() || !out.empty()) flush();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  flush();
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n\r"), e = s.find_last_not_of(" \t\n\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::pair<int, int> read_state_pair(const std::string& t, size_t& i) {
  if (i + 5 > t.size() || t[i] != '[' || t[i + 2] != ',' || t[i + 4] != ']')
    throw std::invalid_argument("element parse error: expected [s,t] after generator");
  auto st = [](char ch) {
    if (ch != '-' && ch != '+') throw std::invalid_argument("element parse error: bad state");
    return ch == '+' ? 1 : 0;
  };
  std::pair<int, int> out{st(t[i + 1]), st(t[i + 3])};
  i += 5;
  return out;
}

Poly parse_poly(const std::string& text, Ring r, const GeneratorReader& reader) {
  Poly total(r);
  for (auto& [sign, term] : split_terms(text)) {
    size_t gpos = std::string::npos;
    for (size_t i = 0; i < term.size(); ++i)
      if (reader.starts(term, i)) {
        gpos = i;
        break;
      }
    std::string coef = trim(term.substr(0, gpos == std::string::npos ? term.size() : gpos));
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    if (coef.size() >= 2 && coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
    Scalar c = coef.empty() ? Scalar::one(r) : Scalar::parse(coef, r);
    Word w;
    if (gpos != std::string::npos) {
      std::string rest = term.substr(gpos);
      size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i])) || rest[i] == '*') {
          ++i;
          continue;
        }
        if (!reader.starts(rest, i))
          throw std::invalid_argument("element parse error: unexpected '" + rest.substr(i, 1) + "'");
        w.push_back(reader.read(rest, i));
      }
    }
    total.add(w, sign < 0 ? -c : c);
  }
  return total;
}

std::string render(const Poly& p, const std::function<std::string(char)>& name) {
  if (p.is_zero()) return "0";
  if (p.size() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second.str();
  std::vector<const std::pair<const Word, Scalar>*> terms;
  for (auto& t : p.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(),
                   [](auto* a, auto* b) { return deglex_less(a->first, b->first); });
  std::string s;
  for (auto* t : terms) {
    const Word& w = t->first;
    const Scalar& c = t->second;
    std::string coef;
    bool neg = false;
    if (c.is_monomial()) {
      std::string cs = c.str();
      if (cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      coef = cs;
    } else {
      coef = "(" + c.str() + ")";
    }
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string gens;
    for (char ch : w) gens += (gens.empty() ? "" : " ") + name(ch);
    if (w.empty())
      s += coef;
    else if (coef == "1")
      s += gens;
    else
      s += coef + " * " + gens;
  }
  return s;
}

}  // namespace lgn
