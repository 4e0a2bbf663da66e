#pragma once
// Diagram generators: braid closures, torus knots, rational (two-bridge)
// tangles and their closures, Montesinos links.

#include "brancher/montesinos.hpp"
#include "brancher/pdcode.hpp"

namespace brancher {

// Closure of a braid word on `strands` strands; letter +i / -i is the
// positive / negative elementary braid on positions (i, i+1), 1 <= i <
// strands. Positive means the strand entering from the left passes over.
PDCode braid_closure(int strands, const std::vector<int>& word);

// Torus link T(p,q) as the closure of (s1 ... s_{p-1})^q, right-handed for
// the chirality with negative signature (the (2,3) case is the trefoil with
// signature -2).
PDCode torus_link(int p, int q, bool right_handed);

// Two-bridge link b(p,q) from the all-positive continued fraction of p/q;
// alternating by construction. Requires p > q >= 1, gcd = 1. The mirror is
// produced for negative q.
PDCode two_bridge(const Int& p, const Int& q);

// Montesinos link K(a1/b1, ..., ak/bk): row closure of the tangles of slope
// bi/ai, so integer parameters give the pretzel K(n1, ..., nk).
// At most one tangle may be infinity; entries may be negative.
PDCode montesinos_diagram(const std::vector<ExtRational>& tangles);

}  // namespace brancher
