#pragma once
// Exact integer/rational matrix utilities: determinants, Smith normal form,
// signatures of symmetric forms, definiteness tests.

#include <vector>

#include "brancher/rational.hpp"

namespace brancher {

using IMat = std::vector<std::vector<Int>>;   // row-major, rectangular
using QMat = std::vector<std::vector<Rat>>;

IMat identity_mat(size_t n);
IMat mat_mul(const IMat& a, const IMat& b);
IMat transpose(const IMat& a);
bool is_symmetric(const IMat& a);

// Exact determinant (square input; empty matrix has det 1).
Int det(const IMat& m);

// U m V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r >= 0.
struct SmithResult {
  IMat u, d, v;
  std::vector<Int> diagonal;  // min(rows, cols) entries, trailing zeros kept
  size_t rank = 0;            // number of nonzero diagonal entries
};
SmithResult smith_normal_form(const IMat& m);

// Invariant factors > 1 of the cokernel Z^cols / rowspan(m), plus free rank.
struct AbelianGroup {
  std::vector<Int> torsion;  // each > 1, divisibility chain
  size_t free_rank = 0;
  Int order() const;  // 0 if free_rank > 0
  std::string str() const;
};
AbelianGroup cokernel(const IMat& m);

// Signature data of a symmetric integer matrix, computed exactly.
struct Inertia {
  size_t pos = 0, neg = 0, null = 0;
  long signature() const { return (long)pos - (long)neg; }
};
Inertia inertia(const IMat& m);

bool is_negative_definite(const IMat& m);

// Solve m x = b over Q for square nonsingular m.
std::vector<Rat> solve_q(const IMat& m, const std::vector<Rat>& b);

// x^T m^{-1} x for square nonsingular symmetric m and integer x.
Rat quad_inv(const IMat& m, const std::vector<Int>& x);

}  // namespace brancher
