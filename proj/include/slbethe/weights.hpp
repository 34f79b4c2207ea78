#pragma once

#include <vector>

#include "slbethe/grading.hpp"

namespace slbethe {

// Weight-lattice coordinates: a vector has r+1 "plus" coordinates followed
// by s+1 "minus" coordinates, and the invariant form is the signature
// (r+1, s+1) diagonal form. Each grading assigns basis vectors v_1..v_{r+s+2}
// by consuming plus coordinates for +1 signs and minus coordinates for -1
// signs, in order; the simple roots are the consecutive differences.
using WVec = std::vector<int>;

long bilinear_form(const Grading& g, const WVec& x, const WVec& y);

std::vector<WVec> basis_vectors(const Grading& g);
std::vector<WVec> simple_roots(const Grading& g);

// reflection of a root system in an odd root alpha (alpha odd means
// (alpha|alpha) = 0 here): alpha goes to -alpha, any other root beta goes to
// beta + alpha if (alpha|beta) != 0 and is fixed otherwise
std::vector<WVec> reflect_simple_system(const Grading& g, int b);

}  // namespace slbethe
