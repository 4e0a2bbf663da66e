#pragma once
// d-invariants of negative definite lattices: characteristic coset enumeration,
// spin classes, exact concave maximization, lens space recursion, chain lattices.

#include <vector>

#include "brancher/intmat.hpp"
#include "brancher/rational.hpp"

namespace brancher {

struct CharClass {
  std::vector<Int> chi;    // representative characteristic covector
  std::vector<Int> label;  // coset label in Smith coordinates (canonical)
  bool spin = false;       // self-conjugate class
  ExtRational d;           // max over class of (chi^T G^{-1} chi + n) / 4
};

struct LatticeDInvariants {
  std::vector<CharClass> classes;  // |det G| entries, sorted by label
  size_t num_spin = 0;
};

// G must be symmetric negative definite. Exact over Q throughout.
LatticeDInvariants d_invariants(const IMat& g);

// Sorted multiset of d over spin classes only.
std::vector<ExtRational> spin_d_multiset(const IMat& g);

// Sorted multiset of d over all |det G| classes.
std::vector<ExtRational> all_d_multiset(const IMat& g);

// Negative definite chain lattice for p/q > 1: diagonal -a_i from the
// all-(>=2) minus continued fraction, +1 off the diagonal.
IMat chain_lattice(const Int& p, const Int& q);

// d(L(p,q), i) for 0 <= i < p via the standard recursion; d(1,0,0) = 0.
ExtRational d_lens(const Int& p, const Int& q, const Int& i);

// Sorted multiset {d(L(p,q), i) : 0 <= i < p}.
std::vector<ExtRational> lens_d_multiset(const Int& p, const Int& q);

// Brute-force oracle: max of (chi^T G^{-1} chi + n)/4 over chi in the class of
// chi0 with each coordinate of the k-shift bounded by box. Testing only.
ExtRational d_of_class_bruteforce(const IMat& g, const std::vector<Int>& chi0,
                                  long box);

}  // namespace brancher
