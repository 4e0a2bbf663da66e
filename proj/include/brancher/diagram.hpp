#pragma once
// Checkerboard-surface invariants of link diagrams: Goeritz forms, the
// corrected signature, linking numbers, determinants, branched double cover
// homology.

#include "brancher/intmat.hpp"
#include "brancher/pdcode.hpp"

namespace brancher {

// Goeritz data for one checkerboard color.
struct GoeritzForm {
  IMat unreduced;          // indexed by regions of the chosen color
  IMat reduced;            // base region (last index) deleted
  std::vector<int> region_faces;  // face id of each region
  int color = 0;
  std::vector<int> eta;    // per crossing: +-1, or 0 when both shaded
                           // quadrants lie in the same region (nugatory)
  std::vector<int> shade;  // s(c) = +1 if corners 1,3 are the shaded pair
};

// Requires a connected diagram; throws std::invalid_argument otherwise.
GoeritzForm goeritz_form(const PDCode& d, int color);

// |det| of the reduced Goeritz form; 0 for split diagrams; 1 for unknots.
Int determinant(const PDCode& d);
bool is_ramifiable(const PDCode& d);

// H_1 of the double branched cover: cokernel of the reduced Goeritz form.
AbelianGroup h1_branched_cover(const PDCode& d);

// Crossing sign under a quasi-orientation: +1 iff the under-strand exit
// direction is the +90deg (counterclockwise) rotation of the over-strand
// exit direction.
int crossing_sign(const DiagramInfo& info, const QuasiOrientation& q, size_t v);

// Linking number of components i != j (halved signed crossing count).
Int linking_number(const PDCode& d, const QuasiOrientation& q, int i, int j);
// Sum of linking numbers over unordered pairs.
Int total_linking(const PDCode& d, const QuasiOrientation& q);

// Signature of the oriented link via the Gordon-Litherland correction;
// both checkerboard colors are computed and must agree.
long gl_signature(const PDCode& d, const QuasiOrientation& q);

// Quasi-orientation-independent signature: sigma(l) + sum of linking
// numbers. Requires a connected non-split diagram.
Int murasugi_xi(const PDCode& d);
// Same value as the average of gl_signature over all quasi-orientations
// (exactness of the average is asserted); used as a cross-check.
Rat murasugi_xi_average(const PDCode& d);

}  // namespace brancher
