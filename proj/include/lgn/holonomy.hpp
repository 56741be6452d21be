#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgn/lgn.hpp"
#include "lgn/tensor.hpp"

namespace lgn {

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Atom {
  enum Kind { Id, Cup, Cap, XPos, XNeg, Coupon };
  Kind kind = Id;
  std::shared_ptr<const Tensor> coupon;  // generic-ring payload for Coupon
  std::string label;                     // coupon name, for serialization

  static Atom id() { return {Id, nullptr, {}}; }
  static Atom cup() { return {Cup, nullptr, {}}; }
  static Atom cap() { return {Cap, nullptr, {}}; }
  static Atom xpos() { return {XPos, nullptr, {}}; }
  static Atom xneg() { return {XNeg, nullptr, {}}; }
  static Atom make_coupon(Tensor t, std::string label = {});
  int in() const;
  int out() const;
  std::string name() const;
};
using Slice = std::vector<Atom>;

enum class Routing { Canonical, Explicit };

// Handle feet sit on the bottom edge in slot order b1, a1, ..., bg, ag,
// m(g+1), ..., each bunch contributing its left feet then its right feet.
// Slices are read bottom to top; the top edge carries the boundary points in
// increasing height.
struct DiagramIR {
  Surface surface;
  std::vector<int> handle_strands;
  Routing routing = Routing::Canonical;
  std::vector<Slice> slices;
  std::optional<std::vector<int>> states;

  static DiagramIR empty(Surface s);
  int handle_width() const;
  int top_width() const;  // validates
  void validate() const;
  bool is_empty() const;
};

struct StatedDiagram {
  DiagramIR diagram;
  std::vector<int> states;
};

DiagramIR parse_diagram(const std::string& json_text);
std::string diagram_to_json(const DiagramIR& d);
std::vector<int> parse_states(const std::string& s);  // "-+" or "-,+"

// Element-valued tensor over {-,+}^k, left boundary point most significant.
struct HolTensor {
  int k = 0;
  std::vector<Poly> v;
  friend bool operator==(const HolTensor& a, const HolTensor& b) { return a.k == b.k && a.v == b.v; }
};

// Row of fused handle tensors and the canonical inter-handle braid.
HolTensor handle_tensor(const LgnAlgebra& alg, int block, int m);
std::vector<Slice> routing_slices(Surface s, const std::vector<int>& handle_strands);

HolTensor eval_diagram(const DiagramIR& d, Ring r = {});
Poly hol_stated(const DiagramIR& d, const std::vector<int>& states, Ring r = {});
Poly hol_stated(const StatedDiagram& sd, Ring r = {});
DiagramIR stack(const DiagramIR& d1, const DiagramIR& d2);
StatedDiagram stack(const StatedDiagram& d1, const StatedDiagram& d2);
// coefficientwise product, legs of a then legs of b
HolTensor odot(const LgnAlgebra& alg, const HolTensor& a, const HolTensor& b);
Poly wilson_loop(const DiagramIR& d, Ring r = {});
StatedDiagram generator_arc(Surface s, Family f, int handle, int row, int col);
// bare bunch of one strand through the handle, no slices
DiagramIR handle_loop_open(Surface s, Family f, int handle);

// applies one slice to an element-valued vector of the given width
std::vector<Poly> apply_slice(const std::vector<Poly>& v, int width, const Slice& slice, Ring r);

// Jones-Wenzl projector on n strands by the standard recursion; needs [k]
// invertible for k <= n, so only in restricted mode with n < p.
Tensor jones_wenzl(int n, Ring r);

}  // namespace lgn
