#pragma once

#include <random>

#include "lgn/holonomy.hpp"
#include "lgn/lgn.hpp"

namespace lgn {

using Rng = std::mt19937_64;

struct DiagramShape {
  int max_per_handle = 1;
  int max_handle_strands = 3;
  int max_slices = 3;
  int max_width = 6;
  bool allow_explicit = true;
  bool closed = false;
};

// a random slice on the given input width; output width stays <= max_width
Slice random_slice(int width, Rng& rng, int max_width);
DiagramIR random_diagram(Surface s, Rng& rng, const DiagramShape& shape = {});
// slices that cap everything off; width must be even
std::vector<Slice> random_closure(int width, Rng& rng);

Word random_word(const LgnAlgebra& alg, Rng& rng, int max_len);
// small sum of random words with coefficients +-q^k
Poly random_element(const LgnAlgebra& alg, Rng& rng, int max_terms, int max_len);

}  // namespace lgn
