#pragma once
// Assembles the cross-module identities: predicted Lefschetz numbers, the
// chi defect, the thin-link signature identity, skein-triangle relations,
// and the concordance invariant L(K) = sigma/8 - h.

#include <optional>
#include <string>
#include <vector>

#include "brancher/diagram.hpp"
#include "brancher/lattice.hpp"
#include "brancher/montesinos.hpp"
#include "brancher/pdcode.hpp"

namespace brancher {

// Per-spin-class h = -d/2 from the negative definite checkerboard color of
// a connected ramifiable diagram; sorted. Throws std::invalid_argument when
// neither color's reduced Goeritz form is negative definite (the lattice
// value is only trusted as exact for the definite color).
std::vector<Rat> spin_h_values(const PDCode& d);

// (2^|L| / 16) * xi(L) - sum(h); for a knot this is sigma/8 - h.
Rat predicted_lefschetz(const PDCode& d, const std::vector<Rat>& h_values);

// (sum(h) + lef) / 2^(|L|-1) - xi/8; zero iff lef matches the prediction.
Rat chi(const PDCode& d, const std::vector<Rat>& h_values, const Rat& lef);

// sigma(K)/8 - h for a knot; throws on multi-component input.
Rat lefschetz_concordance(const PDCode& knot, const Rat& h);

// A skein triangle: l2 with a distinguished crossing joining two of its
// components, and its two resolutions l0, l1 (one fewer component each).
// `data` carries the branched-cover surgery six-tuple when derivable.
struct SkeinTriple {
  PDCode l2, l0, l1;
  std::optional<SixTuple> data;
};

// Triple obtained by resolving crossing idx of d both ways (no surgery data).
SkeinTriple resolve_triple(const PDCode& d, size_t idx);

// Skein triangle of the Montesinos links K(r1, r2, g) over the Farey
// triangle {ga, gb, gc}: the slope whose link has one more component than
// the other two becomes l2. Returns nullopt when the component counts do
// not fit, a diagram degenerates, or the resolution data is not realizable.
std::optional<SkeinTriple> montesinos_skein_triple(const ExtRational& r1,
                                                   const ExtRational& r2,
                                                   const ExtRational& ga,
                                                   const ExtRational& gb,
                                                   const ExtRational& gc);

// 2*xi(l2) = xi(l0) + xi(l1) + sgn(W1) - sgn(W2) with the cobordism signs
// from the six-tuple. Requires data and the component-count pattern; throws
// std::invalid_argument otherwise.
bool check_murasugi_skein(const SkeinTriple& t);

// Some choice of signs makes det(l0) +- det(l1) +- det(l2) vanish.
bool check_det_skein(const SkeinTriple& t);

// One thin-corpus check: sum of spin h values = 2^|L| xi / 16, the vanishing
// of the predicted Lefschetz number; for knots this reads xi = 8 * h.
struct ThinCheck {
  std::string id;
  Int xi;
  Rat sum_spin_h;
  size_t num_spin = 0;
  bool ok = false;
};
ThinCheck check_thin_identity(const std::string& id, const PDCode& d);

// Full invariant bundle for reports; lef is an input (defaulting to 0 for
// thin entries), never derived from Floer data.
struct InvariantReport {
  std::string id;
  int components = 0;
  Int det;
  Int xi;
  bool exact = false;      // a negative definite Goeritz color exists
  std::vector<Rat> spin_h;  // populated when exact
  Rat sum_h;
  std::optional<Rat> lef;        // input
  std::optional<Rat> predicted;  // when exact
  std::optional<Rat> defect;     // chi; when exact and lef present
};
InvariantReport make_report(const std::string& id, const PDCode& d,
                            std::optional<Rat> lef_input);

}  // namespace brancher
