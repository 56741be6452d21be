#pragma once

#include "lgn/holonomy.hpp"
#include "lgn/lgn.hpp"

namespace lgn {

// A(i)^s_t -> delta^s_t on the A-prefix of each normal word, B(i) -> M(i).
Poly vacuum_project(const LgnAlgebra& lg0, const Poly& x);
// M(i) -> B(i)
Poly vacuum_embed(const LgnAlgebra& l0g, const LgnAlgebra& lg0, const Poly& x);
Poly vacuum_act(const LgnAlgebra& l0g, const LgnAlgebra& lg0, const Poly& x, const Poly& y);
HolTensor vacuum_act(const LgnAlgebra& l0g, const LgnAlgebra& lg0, const HolTensor& x, const HolTensor& y);

// S on (0,g) below T on (g,0), drawn on (0,g).
DiagramIR stack_act(const DiagramIR& s, const DiagramIR& t);
bool stack_act_check(const DiagramIR& s, const DiagramIR& t, Ring r = {});

}  // namespace lgn
