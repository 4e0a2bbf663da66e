#include "brancher/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "brancher/montesinos.hpp"

namespace brancher {

namespace {

Rat rat(const Int& n) { return Rat(n); }

// LDL^T of a positive definite rational matrix: a = l * diag(d) * l^T,
// l unit lower triangular.
void ldl(const QMat& a, QMat& l, std::vector<Rat>& d) {
  size_t n = a.size();
  l.assign(n, std::vector<Rat>(n, Rat(0)));
  d.assign(n, Rat(0));
  for (size_t j = 0; j < n; j++) {
    Rat dj = a[j][j];
    for (size_t k = 0; k < j; k++) dj -= l[j][k] * l[j][k] * d[k];
    if (sgn(dj) <= 0) throw std::invalid_argument("lattice: form not definite");
    d[j] = dj;
    l[j][j] = 1;
    for (size_t i = j + 1; i < n; i++) {
      Rat v = a[i][j];
      for (size_t k = 0; k < j; k++) v -= l[i][k] * l[j][k] * d[k];
      l[i][j] = v / dj;
    }
  }
}

Int round_rat(const Rat& x) {
  // nearest integer, ties toward +inf
  Int num = x.get_num(), den = x.get_den();
  Int two_num = 2 * num + den;
  Int two_den = 2 * den;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), two_num.get_mpz_t(), two_den.get_mpz_t());
  return q;
}

// Minimize (k - c)^T A (k - c) over k in Z^n for positive definite A,
// by depth-first zig-zag enumeration on the LDL^T factorization.
struct Cvp {
  size_t n;
  const QMat& l;
  const std::vector<Rat>& d;
  const std::vector<Rat>& c;
  std::vector<Rat> shift;    // per level: accumulated L-offset
  std::vector<Int> cur, best;
  Rat best_val;

  Cvp(const QMat& l_, const std::vector<Rat>& d_, const std::vector<Rat>& c_)
      : n(l_.size()), l(l_), d(d_), c(c_), shift(n, Rat(0)), cur(n), best(n),
        best_val(-1) {}

  // Levels run from n-1 down to 0; y_i = (k_i - c_i) + sum_{j>i} L_ji (k_j - c_j).
  void go(size_t lev, const Rat& partial) {
    size_t i = lev;
    Rat t(0);
    for (size_t j = i + 1; j < n; j++) t += l[j][i] * (rat(cur[j]) - c[j]);
    Rat center = c[i] - t;
    Int k0 = round_rat(center);
    for (int dir = 0; dir < 2; dir++) {
      for (Int k = dir ? k0 - 1 : k0;; dir ? --k : ++k) {
        Rat y = rat(k) - center;
        Rat val = partial + d[i] * y * y;
        // the seed already achieves best_val, and descending only adds
        // nonnegative terms, so ties can be pruned along with worse branches
        if (val >= best_val) break;
        cur[i] = k;
        if (i == 0) {
          best_val = val;
          best = cur;
        } else {
          go(i - 1, val);
        }
      }
    }
  }

  void run() {
    // Seed with the rounded center so pruning is active immediately.
    for (size_t i = 0; i < n; i++) cur[i] = round_rat(c[i]);
    best = cur;
    best_val = Rat(0);
    {
      // exact value at the seed
      Rat v(0);
      for (size_t ii = n; ii-- > 0;) {
        Rat t(0);
        for (size_t j = ii + 1; j < n; j++) t += l[j][ii] * (rat(cur[j]) - c[j]);
        Rat y = rat(cur[ii]) - c[ii] + t;
        v += d[ii] * y * y;
      }
      best_val = v;
    }
    go(n - 1, Rat(0));
  }
};

bool is_tridiagonal(const IMat& g) {
  for (size_t i = 0; i < g.size(); i++)
    for (size_t j = i + 2; j < g.size(); j++)
      if (g[i][j] != 0 || g[j][i] != 0) return false;
  return true;
}

// Chain DP for tridiagonal forms: with L bidiagonal the cost splits into
// sum_i D_i ((k_i - c_i) + b_i (k_{i+1} - c_{i+1}))^2, a chain-structured
// minimization solved exactly by per-level value tables. Polynomial even when
// the optimum is massively degenerate (unlike branch-and-bound enumeration).
std::vector<Int> cvp_chain(const QMat& l, const std::vector<Rat>& d,
                           const std::vector<Rat>& c) {
  size_t n = l.size();
  // Babai nearest-plane upper bound
  std::vector<Int> babai(n);
  Rat ub(0);
  for (size_t i = n; i-- > 0;) {
    Rat center = c[i];
    if (i + 1 < n) center -= l[i + 1][i] * (Rat(babai[i + 1]) - c[i + 1]);
    babai[i] = round_rat(center);
    Rat y = Rat(babai[i]) - center;
    ub += d[i] * y * y;
  }
  struct Entry { Rat cost; Int succ; };
  std::vector<std::map<Int, Entry>> table(n);
  // level n-1 seeds
  {
    Int k0 = round_rat(c[n - 1]);
    for (int dir = 0; dir < 2; dir++)
      for (Int k = dir ? k0 - 1 : k0;; dir ? --k : ++k) {
        Rat y = Rat(k) - c[n - 1];
        Rat v = d[n - 1] * y * y;
        if (v > ub) break;
        table[n - 1][k] = {v, 0};
      }
  }
  for (size_t i = n - 1; i-- > 0;) {
    for (const auto& [s1, e1] : table[i + 1]) {
      Rat center = c[i] - l[i + 1][i] * (Rat(s1) - c[i + 1]);
      Int k0 = round_rat(center);
      for (int dir = 0; dir < 2; dir++)
        for (Int k = dir ? k0 - 1 : k0;; dir ? --k : ++k) {
          Rat y = Rat(k) - center;
          Rat v = e1.cost + d[i] * y * y;
          if (v > ub) break;
          auto it = table[i].find(k);
          if (it == table[i].end() || v < it->second.cost)
            table[i][k] = {v, s1};
        }
    }
  }
  // trace back the best chain
  Int bk;
  bool first = true;
  Rat bv(0);
  for (const auto& [s, e] : table[0])
    if (first || e.cost < bv) { bv = e.cost; bk = s; first = false; }
  std::vector<Int> out(n);
  out[0] = bk;
  for (size_t i = 0; i + 1 < n; i++) out[i + 1] = table[i].at(out[i]).succ;
  return out;
}

// Vertex order making g tridiagonal when the off-diagonal support graph is a
// disjoint union of paths; empty when it is not.
std::vector<size_t> path_order(const IMat& g) {
  size_t n = g.size();
  std::vector<std::vector<size_t>> adj(n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = i + 1; j < n; j++)
      if (g[i][j] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (const auto& a : adj)
    if (a.size() > 2) return {};
  std::vector<size_t> order;
  std::vector<char> used(n, 0);
  for (size_t s = 0; s < n; s++) {
    if (used[s] || adj[s].size() == 2) continue;  // start at endpoints only
    size_t cur = s, prev = n;
    while (true) {
      used[cur] = 1;
      order.push_back(cur);
      size_t next = n;
      for (size_t nb : adj[cur])
        if (nb != prev) next = nb;
      if (next == n) break;
      prev = cur;
      cur = next;
    }
  }
  if (order.size() != n) return {};  // some component is a cycle
  return order;
}

Rat quad_form(const IMat& g, const std::vector<Int>& x) {
  Rat s(0);
  for (size_t i = 0; i < g.size(); i++)
    for (size_t j = 0; j < g.size(); j++) s += rat(g[i][j] * x[i] * x[j]);
  return s;
}

// max over k of chi^T G^{-1} chi with chi = chi0 + 2Gk, G negative definite:
// chi^T G^{-1} chi = chi0^T G^{-1} chi0 + 4 (k^T G k + chi0^T k).
ExtRational d_of_class(const IMat& g, const std::vector<Int>& chi0,
                       std::vector<Int>* chi_opt) {
  size_t n = g.size();
  if (!is_tridiagonal(g)) {
    // A hidden chain (permuted tridiagonal) form: solve in path order.
    std::vector<size_t> perm = path_order(g);
    if (!perm.empty()) {
      IMat gp(n, std::vector<Int>(n));
      std::vector<Int> cp(n);
      for (size_t t = 0; t < n; t++) {
        cp[t] = chi0[perm[t]];
        for (size_t u = 0; u < n; u++) gp[t][u] = g[perm[t]][perm[u]];
      }
      std::vector<Int> co;
      ExtRational r = d_of_class(gp, cp, chi_opt ? &co : nullptr);
      if (chi_opt) {
        chi_opt->assign(n, Int(0));
        for (size_t t = 0; t < n; t++) (*chi_opt)[perm[t]] = co[t];
      }
      return r;
    }
  }
  // minimize k^T A k - chi0^T k, A = -G; complete the square about c = A^{-1} chi0 / 2
  QMat a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) a[i][j] = rat(-g[i][j]);
  std::vector<Rat> rhs(n);
  for (size_t i = 0; i < n; i++) rhs[i] = rat(chi0[i]) / 2;
  std::vector<Rat> c = solve_q(g, rhs);
  for (auto& x : c) x = -x;  // c = (-G)^{-1} chi0 / 2
  QMat l;
  std::vector<Rat> dd;
  ldl(a, l, dd);
  std::vector<Int> k;
  if (is_tridiagonal(g)) {
    k = cvp_chain(l, dd, c);
  } else {
    Cvp cvp(l, dd, c);
    cvp.run();
    k = cvp.best;
  }
  if (chi_opt) {
    chi_opt->assign(n, Int(0));
    for (size_t i = 0; i < n; i++) {
      (*chi_opt)[i] = chi0[i];
      for (size_t j = 0; j < n; j++) (*chi_opt)[i] += 2 * g[i][j] * k[j];
    }
  }
  Rat lin(0);
  for (size_t i = 0; i < n; i++) lin += rat(chi0[i] * k[i]);
  Rat q0 = quad_inv(g, chi0);
  Rat qk = quad_form(g, k);
  Rat total = q0 + 4 * (qk + lin) + rat(Int(n));
  total /= 4;
  return ExtRational(total.get_num(), total.get_den());
}

}  // namespace

ExtRational d_of_class_bruteforce(const IMat& g, const std::vector<Int>& chi0,
                                  long box) {
  size_t n = g.size();
  // center the box at the continuous optimum -G^{-1} chi0 / 2
  std::vector<Rat> rhs(n);
  for (size_t i = 0; i < n; i++) rhs[i] = rat(chi0[i]) / 2;
  std::vector<Rat> c = solve_q(g, rhs);
  std::vector<Int> k0(n);
  for (size_t i = 0; i < n; i++) k0[i] = round_rat(-c[i]);
  std::vector<long> k(n, -box);
  bool first = true;
  Rat best(0);
  for (;;) {
    std::vector<Int> chi(chi0);
    for (size_t i = 0; i < n; i++)
      for (size_t j = 0; j < n; j++) chi[i] += 2 * g[i][j] * (k0[j] + Int(k[j]));
    Rat v = quad_inv(g, chi);
    if (first || v > best) { best = v; first = false; }
    size_t i = 0;
    while (i < n && k[i] == box) k[i++] = -box;
    if (i == n) break;
    k[i]++;
  }
  Rat total = (best + rat(Int(n))) / 4;
  return ExtRational(total.get_num(), total.get_den());
}

LatticeDInvariants d_invariants(const IMat& g) {
  if (!is_symmetric(g)) throw std::invalid_argument("lattice: not symmetric");
  if (!is_negative_definite(g))
    throw std::invalid_argument("lattice: not negative definite");
  size_t n = g.size();
  SmithResult snf = smith_normal_form(g);
  Int vol = abs(det(g));
  // Characteristic covectors: chi = chi0 + 2e, chi0_i = G_ii mod 2 in {0,1};
  // classes chi ~ chi + 2Gk, so e runs over Z^n / G Z^n labeled by U e mod D.
  std::vector<Int> chi0(n);
  for (size_t i = 0; i < n; i++) chi0[i] = ((g[i][i] % 2) + 2) % 2;
  auto label_of = [&](const std::vector<Int>& e) {
    std::vector<Int> lab(n);
    for (size_t i = 0; i < n; i++) {
      Int s(0);
      for (size_t j = 0; j < n; j++) s += snf.u[i][j] * e[j];
      Int m = snf.diagonal[i];
      if (m < 0) m = -m;
      if (m != 0) mpz_fdiv_r(lab[i].get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
      else lab[i] = s;
    }
    return lab;
  };
  // Enumerate reps e = V-free inverse image of y over the torus box.
  // U e = y mod D with e = U^{-1} y; build U^{-1} once.
  IMat uinv(n, std::vector<Int>(n));
  {
    QMat cols(n, std::vector<Rat>(n));
    for (size_t j = 0; j < n; j++) {
      std::vector<Rat> b(n, Rat(0));
      b[j] = 1;
      std::vector<Rat> x = solve_q(snf.u, b);
      for (size_t i = 0; i < n; i++) {
        if (x[i].get_den() != 1)
          throw std::logic_error("lattice: U not unimodular");
        uinv[i][j] = x[i].get_num();
      }
    }
  }
  std::vector<Int> dpos(n);
  for (size_t i = 0; i < n; i++) dpos[i] = abs(snf.diagonal[i]);
  LatticeDInvariants out;
  std::map<std::vector<Int>, size_t> index;
  std::vector<Int> y(n, 0);
  for (Int count(0); count < vol;) {
    std::vector<Int> e(n, 0);
    for (size_t i = 0; i < n; i++)
      for (size_t j = 0; j < n; j++) e[i] += uinv[i][j] * y[j];
    std::vector<Int> chi(n);
    for (size_t i = 0; i < n; i++) chi[i] = chi0[i] + 2 * e[i];
    CharClass cc;
    cc.chi = chi;
    cc.label = label_of(e);
    index[cc.label] = out.classes.size();
    out.classes.push_back(std::move(cc));
    count++;
    size_t i = 0;
    while (i < n) {
      y[i]++;
      if (dpos[i] == 0 || y[i] < dpos[i]) break;
      y[i] = 0;
      i++;
    }
    if (i == n) break;
  }
  if (Int(out.classes.size()) != vol)
    throw std::logic_error("lattice: class enumeration mismatch");
  for (auto& cc : out.classes) {
    // conjugate: chi -> -chi, i.e. e -> -e - chi0
    std::vector<Int> e(g.size()), econj(g.size());
    for (size_t i = 0; i < n; i++) {
      e[i] = (cc.chi[i] - chi0[i]) / 2;
      econj[i] = -e[i] - chi0[i];
    }
    cc.spin = (label_of(econj) == cc.label);
    if (cc.spin) out.num_spin++;
    std::vector<Int> chi_opt;
    cc.d = d_of_class(g, cc.chi, &chi_opt);
    cc.chi = chi_opt;  // report the length-maximizing representative
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const CharClass& a, const CharClass& b) { return a.label < b.label; });
  return out;
}

std::vector<ExtRational> spin_d_multiset(const IMat& g) {
  LatticeDInvariants inv = d_invariants(g);
  std::vector<ExtRational> out;
  for (const auto& cc : inv.classes)
    if (cc.spin) out.push_back(cc.d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtRational> all_d_multiset(const IMat& g) {
  LatticeDInvariants inv = d_invariants(g);
  std::vector<ExtRational> out;
  for (const auto& cc : inv.classes) out.push_back(cc.d);
  std::sort(out.begin(), out.end());
  return out;
}

IMat chain_lattice(const Int& p, const Int& q) {
  if (p <= q || q <= 0) throw std::invalid_argument("chain_lattice: need p > q > 0");
  std::vector<Int> a = cf_minus_all_ge2(ExtRational(p, q));
  size_t n = a.size();
  IMat g(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; i++) {
    g[i][i] = -a[i];
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
  }
  return g;
}

ExtRational d_lens(const Int& p, const Int& q, const Int& i) {
  if (p <= 0 || q < 0 || i < 0 || i >= p)
    throw std::invalid_argument("d_lens: need p > 0, 0 <= i < p");
  if (p == 1) return ExtRational(Int(0), Int(1));
  Int num = (2 * i + 1 - p - q);
  num = p * q - num * num;
  ExtRational head(num, 4 * p * q);
  Int pm, im;
  mpz_fdiv_r(pm.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_fdiv_r(im.get_mpz_t(), i.get_mpz_t(), q.get_mpz_t());
  ExtRational tail = d_lens(q, pm, im);
  Rat h = Rat(head.p) / Rat(head.q) - Rat(tail.p) / Rat(tail.q);
  return ExtRational(h.get_num(), h.get_den());
}

std::vector<ExtRational> lens_d_multiset(const Int& p, const Int& q) {
  std::vector<ExtRational> out;
  for (Int i(0); i < p; i++) out.push_back(d_lens(p, q, i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brancher
