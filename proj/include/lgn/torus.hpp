#pragma once

#include <string>
#include <vector>

#include "lgn/scalar.hpp"

namespace lgn {

// Coordinates over the ordered basis chi+_1, chi-_1, ..., chi+_p, chi-_p, G_1, ..., G_{p-1}.
struct SLFVector {
  int p = 2;
  std::vector<Scalar> coords;

  static SLFVector zero(int p);
  static SLFVector basis(int p, size_t index);
  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const SLFVector& a, const SLFVector& b) { return a.p == b.p && a.coords == b.coords; }
};

size_t slf_dim(int p);
// alpha is +1 or -1, 1 <= s <= p
size_t chi_index(int p, int s, int alpha);
// 1 <= s <= p-1
size_t g_index(int p, int s);
std::string slf_basis_name(int p, size_t index);

SLFVector act_generator(char gen, const SLFVector& v);
SLFVector act_word(const std::string& word, SLFVector v);

// column j holds the image of basis vector j
using CycloMatrix = std::vector<std::vector<Scalar>>;
CycloMatrix action_matrix(char gen, int p);

enum class FactorLabel { J1, J2modJ1, J3modJ2 };
std::string factor_label_name(FactorLabel l);

struct FactorSpec {
  FactorLabel label;
  std::vector<SLFVector> basis;
};
std::vector<FactorSpec> factor_specs(int p);

struct FactorReport {
  FactorLabel label;
  size_t dim = 0;
  size_t burnside_dim = 0;
  size_t word_length = 0;  // length at which the word span stabilized
  bool absolutely_irreducible = false;
  std::string diagnostic;
};

struct EigenRow {
  int s;
  int alpha;
  Scalar expected;
  Scalar actual;
};

struct TorusReport {
  int p = 2;
  bool j1_invariant = false;
  bool j2_invariant = false;
  bool eigenvalues_match = false;
  std::vector<FactorReport> factors;
  std::vector<EigenRow> eigenvalues;

  bool ok() const;
  std::string to_json() const;
  std::string to_text() const;
};

// Burnside rank of the algebra generated by the given square matrices (with identity).
struct BurnsideResult {
  size_t rank = 0;
  size_t length = 0;
};
BurnsideResult burnside_span(const std::vector<CycloMatrix>& gens, size_t d, Ring r);

TorusReport composition_series_report(int p);

}  // namespace lgn
