#include "brancher/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace brancher {

IMat identity_mat(size_t n) {
  IMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  IMat c(n, std::vector<Int>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
  return c;
}

IMat transpose(const IMat& a) {
  size_t n = a.size(), m = n ? a[0].size() : 0;
  IMat t(m, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

bool is_symmetric(const IMat& a) {
  size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

Int det(const IMat& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("det of non-square matrix");
  // Fraction-free Bareiss elimination.
  IMat a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

SmithResult smith_normal_form(const IMat& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  if (rows == 0 || cols == 0) {
    SmithResult r;
    r.u = identity_mat(rows);
    r.v = identity_mat(cols);
    r.d = m;
    return r;
  }
  IMat a = m, u = identity_mat(rows), v = identity_mat(cols);

  auto row_swap = [&](size_t i, size_t j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); };
  auto col_swap = [&](size_t i, size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  };
  auto row_add = [&](size_t dst, size_t src, const Int& f) {
    for (size_t k = 0; k < cols; ++k) a[dst][k] += f * a[src][k];
    for (size_t k = 0; k < rows; ++k) u[dst][k] += f * u[src][k];
  };
  auto col_add = [&](size_t dst, size_t src, const Int& f) {
    for (size_t k = 0; k < rows; ++k) a[k][dst] += f * a[k][src];
    for (size_t k = 0; k < cols; ++k) v[k][dst] += f * v[k][src];
  };
  auto row_neg = [&](size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };

  size_t t = 0;
  size_t lim = std::min(rows, cols);
  for (; t < lim; ++t) {
    // Find pivot: smallest nonzero |entry| in the remaining block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 &&
            (!found || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i; pj = j; found = true;
        }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          Int q = a[i][t] / a[t][t];  // C++ truncation is fine: iterate
          row_add(i, t, -q);
          if (a[i][t] != 0) { row_swap(t, i); clean = false; }
        }
      for (size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          Int q = a[t][j] / a[t][t];
          col_add(j, t, -q);
          if (a[t][j] != 0) { col_swap(t, j); clean = false; }
        }
    }
    if (a[t][t] < 0) row_neg(t);
  }
  // Enforce the divisibility chain on adjacent pairs until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < t; ++i) {
      size_t j = i + 1;
      if (a[j][j] % a[i][i] == 0) continue;
      changed = true;
      // Fold a[j][j] into column i, then Euclid within the 2x2 block.
      col_add(i, j, 1);
      bool clean = false;
      while (!clean) {
        clean = true;
        if (a[j][i] != 0) {
          Int q = a[j][i] / a[i][i];
          row_add(j, i, -q);
          if (a[j][i] != 0) { row_swap(i, j); clean = false; }
        }
        if (a[i][j] != 0) {
          Int q = a[i][j] / a[i][i];
          col_add(j, i, -q);
          if (a[i][j] != 0) { col_swap(i, j); clean = false; }
        }
      }
      if (a[i][i] < 0) row_neg(i);
      if (a[j][j] < 0) row_neg(j);
    }
  }
  SmithResult res;
  res.u = u;
  res.v = v;
  res.d = a;
  res.rank = t;
  for (size_t i = 0; i < lim; ++i) res.diagonal.push_back(a[i][i]);
  return res;
}

Int AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  Int o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  for (size_t i = 0; i < free_rank; ++i) {
    if (!first) os << " + ";
    os << "Z";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroup cokernel(const IMat& m) {
  AbelianGroup g;
  if (m.empty()) { g.free_rank = 0; return g; }
  size_t cols = m[0].size();
  SmithResult s = smith_normal_form(m);
  for (size_t i = 0; i < s.rank; ++i)
    if (s.d[i][i] > 1) g.torsion.push_back(s.d[i][i]);
  g.free_rank = cols - s.rank;
  return g;
}

Inertia inertia(const IMat& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("inertia requires a symmetric matrix");
  size_t n = m.size();
  QMat a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  Inertia res;
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  size_t k = 0;
  auto swap_rc = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    for (auto& r : a) std::swap(r[i], r[j]);
  };
  while (k < n) {
    size_t piv = n;
    for (size_t i = k; i < n; ++i)
      if (a[i][i] != 0) { piv = i; break; }
    if (piv == n) {
      // All remaining diagonal entries are zero; find off-diagonal.
      size_t oi = n, oj = n;
      for (size_t i = k; i < n && oi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) { oi = i; oj = j; break; }
      if (oi == n) { res.null += n - k; break; }
      // Congruence row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0.
      for (size_t t = 0; t < n; ++t) a[oi][t] += a[oj][t];
      for (size_t t = 0; t < n; ++t) a[t][oi] += a[t][oj];
      continue;
    }
    if (piv != k) swap_rc(piv, k);
    if (a[k][k] > 0) ++res.pos; else ++res.neg;
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
    ++k;
  }
  return res;
}

bool is_negative_definite(const IMat& m) {
  Inertia in = inertia(m);
  return in.neg == m.size();
}

std::vector<Rat> solve_q(const IMat& m, const std::vector<Rat>& b) {
  size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch in solve");
  QMat a(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix in solve");
    std::swap(a[k], a[piv]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

Rat quad_inv(const IMat& m, const std::vector<Int>& x) {
  std::vector<Rat> b(x.size());
  for (size_t i = 0; i < x.size(); ++i) b[i] = Rat(x[i]);
  std::vector<Rat> y = solve_q(m, b);
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += b[i] * y[i];
  return s;
}

}  // namespace brancher
