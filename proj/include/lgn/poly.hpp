#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lgn/scalar.hpp"

namespace lgn {

// A word is a sequence of generator codes; code = 4*block + letter with
// letters ranked b=0, a=1, d=2, c=3 (the per-block PBW order), so string
// order refines the normal order.
using Word = std::string;

enum Letter : int { kB = 0, kA = 1, kD = 2, kC = 3 };
// (row, col) states with - = 0, + = 1
int letter_of(int row, int col);
int letter_row(int letter);
int letter_col(int letter);

inline char code(int block, int letter) { return static_cast<char>(4 * block + letter); }
inline int block_of(char c) { return static_cast<unsigned char>(c) >> 2; }
inline int letter_of_code(char c) { return static_cast<unsigned char>(c) & 3; }

// Finite linear combination of words (no reduction).
class Poly {
 public:
  using Map = std::map<Word, Scalar>;

  Poly() = default;
  explicit Poly(Ring r) : ring_(r) {}
  static Poly constant(const Scalar& s);
  static Poly word(const Word& w, Ring r);

  Ring ring() const { return ring_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  void add(const Word& w, const Scalar& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    return r += o;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    return r -= o;
  }
  Poly operator*(const Scalar& s) const;
  Poly operator-() const;
  // free (concatenation) product
  Poly concat(const Poly& o) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  Scalar coefficient(const Word& w) const;
  int degree() const;

 private:
  Ring ring_;
  Map t_;
};

// Degree-lex comparison (longer words are larger; equal length by code).
bool deglex_less(const Word& a, const Word& b);

// Left-to-right oriented rules lhs -> rhs obtained by reducing a list of
// relations (each implicitly = 0) to row-echelon form with the largest word
// of every row as its pivot. Throws if a pivot is not a unit.
std::vector<std::pair<Word, Poly>> orient_relations(const std::vector<Poly>& relations);

// Canonical text of a Poly with a generator namer; terms in degree-lex order.
std::string render(const Poly& p, const std::function<std::string(char)>& name);

// Text form "coeff * g g ... + ...": the reader recognises and consumes one
// generator token.
struct GeneratorReader {
  std::function<bool(const std::string&, size_t)> starts;
  std::function<char(const std::string&, size_t&)> read;
};
Poly parse_poly(const std::string& text, Ring r, const GeneratorReader& reader);
// "[s,t]" with s, t in {-,+}
std::pair<int, int> read_state_pair(const std::string& t, size_t& i);

}  // namespace lgn
