#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lgn/matrix.hpp"
#include "lgn/poly.hpp"
#include "lgn/rewriter.hpp"

namespace lgn {

// Sums of pure tensors of words, one word per tensor leg.
using MultiSum = std::map<std::vector<Word>, Scalar>;
void multisum_add(MultiSum& s, const std::vector<Word>& key, const Scalar& c);

// O_{q^2}: generators T^s_t (block 0), RTT relations and det_q = 1.
class OqAlgebra {
 public:
  static const OqAlgebra& get(Ring r = {});
  explicit OqAlgebra(Ring r);

  Ring ring() const { return ring_; }
  const Rewriter& rewriter() const { return *rw_; }
  Poly generator(int row, int col) const;
  Poly one() const { return Poly::constant(Scalar::one(ring_)); }
  Poly normal_form(const Poly& p) const { return rw_->reduce(p); }
  Poly mul(const Poly& x, const Poly& y) const;
  std::vector<Poly> defining_relations() const;

  const PolyMatrix& antipode_matrix() const { return antipode_; }
  PolyMatrix t_matrix() const { return generator_matrix(0, ring_); }
  MultiSum coproduct(const Poly& x) const;
  Scalar counit(const Poly& x) const;

  std::string str(const Poly& x) const;
  Poly parse(const std::string& text) const;

 private:
  Ring ring_;
  std::unique_ptr<Rewriter> rw_;
  PolyMatrix antipode_;
};

std::string oq_gen_name(char c);

}  // namespace lgn
