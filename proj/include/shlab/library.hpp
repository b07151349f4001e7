#pragma once

#include <vector>

#include "shlab/algebra.hpp"

namespace shlab {

// All embedded algebras in fixed listing order:
//   2e, 2be; L1..L10; L1dm..L10dm; L1dp..L10dp; D1..D3;
//   Ch2..Ch5; Ch2dm..Ch5dm; Ch2dp..Ch5dp.
const std::vector<FiniteAlgebra>& library();

// nullptr when no algebra carries that name.
const FiniteAlgebra* library_find(const std::string& name);

// The 25 dually hemimorphic members: 2e, 2be, the twenty 3-element
// expansions, and D1..D3.
std::vector<const FiniteAlgebra*> library_dhmsh();

// Library members that are totally ordered and satisfy (x&y)->x = 1,
// i.e. the chains whose -> is the relative pseudocomplement.
std::vector<const FiniteAlgebra*> library_heyting_chains();

}  // namespace shlab
