#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgn/matrix.hpp"
#include "lgn/poly.hpp"
#include "lgn/rewriter.hpp"

namespace lgn {

struct Surface {
  int g = 0, n = 0;
  int blocks() const { return 2 * g + n; }
  friend bool operator==(Surface a, Surface b) { return a.g == b.g && a.n == b.n; }
  std::string str() const { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }
};

enum class Family { A, B, M };

struct GeneratorId {
  Family family;
  int handle;  // A, B: 1..g; M: g+1..g+n
  int row, col;
};

// L_{g,n}(U_{q^2}(sl2)) for one surface and one coefficient ring. Blocks are
// numbered in normal order A(1..g), B(1..g), M(g+1..g+n).
class LgnAlgebra {
 public:
  static std::shared_ptr<const LgnAlgebra> get(Surface s, Ring r = {});
  LgnAlgebra(Surface s, Ring r);

  Surface surface() const { return surface_; }
  Ring ring() const { return ring_; }
  bool restricted() const { return !ring_.generic(); }

  int block(Family f, int handle) const;
  Family block_family(int block) const;
  int block_handle(int block) const;
  // block of the k-th handle in the order b1, a1, ..., bg, ag, m(g+1), ...
  int slot_block(int slot) const;
  char gen_code(const GeneratorId& g) const;
  GeneratorId decode(char c) const;
  std::string gen_name(char c) const;

  bool is_normal(const Word& w) const;
  Poly normal_form(const Word& w) const;
  Poly normal_form(const Poly& p) const;
  Poly mul(const Poly& x, const Poly& y) const;
  Poly mul_parallel(const Poly& x, const Poly& y) const;
  Poly generator(const GeneratorId& g) const;
  Poly one() const { return Poly::constant(Scalar::one(ring_)); }

  std::vector<Poly> defining_relations() const;
  const Rewriter& local() const { return *local_; }
  PolyMatrix block_matrix(int block) const { return generator_matrix(block, ring_); }
  EntryProduct product() const;

 private:
  enum PairType { kForward = 0, kBackward = 1, kL10 = 2 };
  struct Swap {
    int x, y;  // letters after the move: x (low block) then y (high block)
    Scalar c;
  };
  using SwapTable = std::vector<Swap>[3][4][4];  // [type][y][x]
  struct Moved {
    int x;
    Word y;  // letters of the high block, normal
    Scalar c;
  };

  PairType pair_type(int lo, int hi) const;
  Poly mul_letter(const Word& u, char x) const;
  const std::vector<Moved>& move_past(PairType t, int x, const Word& y_letters) const;

  Surface surface_;
  Ring ring_;
  std::unique_ptr<Rewriter> local_;
  SwapTable swaps_;
  mutable std::shared_mutex nf_mu_, move_mu_;
  mutable std::unordered_map<Word, Poly> nf_memo_;
  mutable std::unordered_map<Word, std::vector<Moved>> move_memo_;
};

// Immutable handle pairing a Poly with its algebra.
class LgnElement {
 public:
  LgnElement() = default;
  LgnElement(std::shared_ptr<const LgnAlgebra> alg, Poly p);
  static LgnElement one(std::shared_ptr<const LgnAlgebra> alg);
  static LgnElement scalar(std::shared_ptr<const LgnAlgebra> alg, const Scalar& s);
  static LgnElement generator(std::shared_ptr<const LgnAlgebra> alg, const GeneratorId& g);

  const std::shared_ptr<const LgnAlgebra>& algebra() const { return alg_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  LgnElement operator+(const LgnElement& o) const;
  LgnElement operator-(const LgnElement& o) const;
  LgnElement operator*(const LgnElement& o) const;
  LgnElement operator*(const Scalar& s) const;
  friend bool operator==(const LgnElement& a, const LgnElement& b);

  std::string str() const;

 private:
  void check(const LgnElement& o) const;
  std::shared_ptr<const LgnAlgebra> alg_;
  Poly p_;
};

LgnElement parse_element(const std::string& text, std::shared_ptr<const LgnAlgebra> alg);
Poly normal_form(const std::vector<GeneratorId>& word, Surface s, Ring r = {});

}  // namespace lgn
