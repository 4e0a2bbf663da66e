#pragma once
// Continued fractions, Montesinos/Seifert-fibered bookkeeping: first
// homology orders, longitude divisibility, admissible six-tuples, and
// resolution data for skein triangles of Montesinos links.

#include <optional>
#include <vector>

#include "brancher/farey.hpp"
#include "brancher/intmat.hpp"

namespace brancher {

// Canonical expansion x = t1 - 1/(t2 - 1/(... - 1/tk)) by nearest-integer
// rounding (ties toward +infinity); |ti| >= 2 for i >= 2. x must be finite.
std::vector<Int> cf_expand(const ExtRational& x);
// Evaluates the continued fraction; empty list is invalid.
ExtRational cf_eval(const std::vector<Int>& ts);
// Subtractive expansion with every term >= 2, for p/q > 1 in lowest terms:
// x = a1 - 1/(a2 - ...); used for negative-definite linear chains.
std::vector<Int> cf_minus_all_ge2(const ExtRational& x);

// Largest c with 2^c | m; m must be nonzero.
int div2(const Int& m);

// |H_1| of the double branched cover of K(a1/b1, a2/b2, a3/b3):
// |b1 a2 a3 + a1 b2 a3 + a1 a2 b3|.
Int montesinos_h1_order(const ExtRational& r1, const ExtRational& r2, const ExtRational& r3);

// --- Trident complements Y(n, a/b, *) and Y(r1, r2, *) ---------------------

// Presentation of H_1 on generators (x1, x2, x3, h): rows are relations.
IMat h1_presentation(const ExtRational& r1, const ExtRational& r2);

// Boundary classes are written in the basis ([x3], [h]) of H_1(T^2), with
// intersection number #(x3, h) = -1 (orientation convention).
struct BoundaryFraming {
  std::vector<Int> l;  // Z-longitude, primitive, dies rationally in Y
  std::vector<Int> m;  // dual class, #(m, l) = -1
  Int t;               // divisibility: t * [l] = 0 in H_1(Y), minimal t > 0
  int s;               // 0 iff [l] = 0 in H_1(Y; F_2)
};
// Requires b_1(Y) = 1 (throws otherwise). r1, r2 finite.
BoundaryFraming boundary_framing(const ExtRational& r1, const ExtRational& r2);

// Closed form for Y(n, a/b): t = gcd((a+bn)/g, na/g), g = gcd(n, a).
Int t_divisibility(const Int& n, const Int& a, const Int& b);

// Admissible six-tuple (p0,q0,p1,q1,p2,q2) per the four atomic conditions.
struct SixTuple {
  Int p0, q0, p1, q1, p2, q2;
  int s;  // parity type of the framing
};
bool is_admissible_six_tuple(const SixTuple& st);

// sign(p_j * p_{j+1}): the sign of the cup-product square on the elementary
// cobordism between consecutive fillings (0 when either filling slope has
// p = 0).
int cobordism_signature(const Int& pj, const Int& pj1);

// Resolution data for a skein triangle of Montesinos links
// K(r1, r2, g0), K(r1, r2, g1), K(r1, r2, g2) where {g0, g1, g2} is a Farey
// triangle and g2 is the distinguished (one-more-component) slope:
// the filling slopes in the (m, l) basis, signed so that gamma_0 + gamma_1
// + gamma_2 = 0 and p0 q1 - p1 q0 = +1, with the anchor condition on
// gamma_2 fixed by s.
struct ResolutionData {
  SixTuple tuple;
  BoundaryFraming framing;
};
ResolutionData resolution_data(const ExtRational& r1, const ExtRational& r2,
                               const ExtRational& g0, const ExtRational& g1,
                               const ExtRational& g2);

}  // namespace brancher
