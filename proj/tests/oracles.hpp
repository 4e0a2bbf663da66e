#pragma once
// Independent reference computations used only by tests: slow, simple,
// implemented along different routes than the library under test.

#include <vector>

#include "brancher/intmat.hpp"
#include "brancher/pdcode.hpp"

namespace brancher::oracles {

// gcd of all k x k minors (0 if all vanish); d_1 ... d_k of the Smith form
// must multiply to this value.
Int minors_gcd(const IMat& m, size_t k);

// Link determinant via the Kauffman bracket state sum evaluated at the
// primitive 8th root of unity, computed exactly in Z[zeta_8]. The loop
// value is 0 there, so only single-circle states contribute and the
// bracket norm equals det(L)^2. Exponential-time; diagrams should stay
// small (n <= ~16).
Int kauffman_det(const PDCode& d);

}  // namespace brancher::oracles
