#include "brancher/montesinos.hpp"

#include <algorithm>
#include <stdexcept>

namespace brancher {

std::vector<Int> cf_expand(const ExtRational& x) {
  if (x.is_infinity()) throw std::invalid_argument("cf_expand needs a finite rational");
  std::vector<Int> out;
  ExtRational cur = x;
  while (true) {
    // Nearest integer, ties toward +infinity: floor(x + 1/2).
    Int t;
    Int num = 2 * cur.p + cur.q, den = 2 * cur.q;
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(t);
    if (cur == ExtRational(t)) break;
    // x = t - 1/y  =>  y = 1 / (t - x).
    cur = ExtRational(ExtRational(t) - cur).reciprocal();
  }
  return out;
}

ExtRational cf_eval(const std::vector<Int>& ts) {
  if (ts.empty()) throw std::invalid_argument("empty continued fraction");
  ExtRational v(ts.back());
  for (size_t i = ts.size() - 1; i-- > 0;)
    v = ExtRational(ts[i]) - v.reciprocal();
  return v;
}

std::vector<Int> cf_minus_all_ge2(const ExtRational& x) {
  if (x.is_infinity() || x.q == 0) throw std::invalid_argument("finite rational required");
  if (!(ExtRational(1) < x)) throw std::invalid_argument("cf_minus_all_ge2 requires x > 1");
  std::vector<Int> out;
  Int p = x.p, q = x.q;
  while (q != 0) {
    Int a;
    mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(a);
    // x = a - 1/y => y = q / (a q - p)
    Int nq = a * q - p;
    p = q;
    q = nq;
  }
  return out;
}

int div2(const Int& m) {
  if (m == 0) throw std::invalid_argument("div2(0)");
  return (int)mpz_scan1(m.get_mpz_t(), 0);
}

Int montesinos_h1_order(const ExtRational& r1, const ExtRational& r2, const ExtRational& r3) {
  for (const auto& r : {r1, r2, r3})
    if (r.is_infinity()) throw std::invalid_argument("order formula needs finite tangles");
  Int v = r1.q * r2.p * r3.p + r1.p * r2.q * r3.p + r1.p * r2.p * r3.q;
  return abs(v);
}

IMat h1_presentation(const ExtRational& r1, const ExtRational& r2) {
  if (r1.is_infinity() || r2.is_infinity())
    throw std::invalid_argument("presentation needs finite slopes");
  // Generators (x1, x2, x3, h); relations a_i x_i + b_i h = 0, x1+x2+x3 = 0.
  return IMat{{r1.p, 0, 0, r1.q}, {0, r2.p, 0, r2.q}, {1, 1, 1, 0}};
}

namespace {

// Coordinates of the class of `x` in coker(rows of R): x * V, with moduli
// from the Smith diagonal (0 = free coordinate).
struct CokerCtx {
  SmithResult s;
  size_t gens;
  std::vector<Int> coords(const std::vector<Int>& x) const {
    std::vector<Int> w(gens, 0);
    for (size_t j = 0; j < gens; ++j)
      for (size_t i = 0; i < gens; ++i) w[j] += x[i] * s.v[i][j];
    return w;
  }
  Int modulus(size_t j) const {
    if (j < s.rank) return s.d[j][j];
    return 0;
  }
  bool is_torsion(const std::vector<Int>& x) const {
    auto w = coords(x);
    for (size_t j = s.rank; j < gens; ++j)
      if (w[j] != 0) return false;
    return true;
  }
  // Order of the class (must be torsion).
  Int order(const std::vector<Int>& x) const {
    auto w = coords(x);
    Int o = 1;
    for (size_t j = 0; j < s.rank; ++j) {
      Int d = s.d[j][j];
      if (d == 0) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), w[j].get_mpz_t(), d.get_mpz_t());
      Int oj = d / g;
      mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), oj.get_mpz_t());
    }
    return o;
  }
  // Is the class zero in H_1 tensor F_2?
  bool zero_mod2(const std::vector<Int>& x) const {
    auto w = coords(x);
    for (size_t j = 0; j < gens; ++j) {
      Int d = modulus(j);
      if (d == 0) {
        if (w[j] % 2 != 0) return false;
      } else if (d % 2 == 0 && w[j] % 2 != 0) {
        return false;  // 2y = w mod d unsolvable for even d, odd w
      }
    }
    return true;
  }
};

CokerCtx make_ctx(const IMat& rel) {
  CokerCtx c;
  c.gens = rel.empty() ? 0 : rel[0].size();
  c.s = smith_normal_form(rel);
  return c;
}

std::vector<Int> boundary_vec(const Int& u, const Int& v) {
  // u * x3 + v * h on generators (x1, x2, x3, h).
  return {Int(0), Int(0), u, v};
}

}  // namespace

BoundaryFraming boundary_framing(const ExtRational& r1, const ExtRational& r2) {
  IMat rel = h1_presentation(r1, r2);
  CokerCtx ctx = make_ctx(rel);
  size_t b1 = ctx.gens - ctx.s.rank;
  if (b1 != 1) throw std::invalid_argument("expected first Betti number 1");
  size_t jf = ctx.s.rank;  // the single free coordinate
  // Torsion condition on u*x3 + v*h is linear: u*V[2][jf] + v*V[3][jf] = 0.
  Int cu = ctx.s.v[2][jf], cv = ctx.s.v[3][jf];
  if (cu == 0 && cv == 0) throw std::logic_error("degenerate boundary map");
  Int g;
  mpz_gcd(g.get_mpz_t(), cu.get_mpz_t(), cv.get_mpz_t());
  BoundaryFraming fr;
  Int lu = -cv / g, lv = cu / g;
  // Deterministic sign: first nonzero coordinate positive.
  if (lu < 0 || (lu == 0 && lv < 0)) { lu = -lu; lv = -lv; }
  fr.l = {lu, lv};
  fr.t = ctx.order(boundary_vec(lu, lv));
  fr.s = ctx.zero_mod2(boundary_vec(lu, lv)) ? 0 : 1;
  // Complete to a basis with #(m, l) = -1. With #(x3, h) = -1 on the
  // boundary torus, #((u,v), (u',v')) = -(u v' - v u'), so we need
  // m_u * lv - m_v * lu = +1.
  Int mu, mv;
  mpz_gcdext(g.get_mpz_t(), mu.get_mpz_t(), mv.get_mpz_t(), lv.get_mpz_t(), lu.get_mpz_t());
  mv = -mv;  // mu*lv + (-mv)*lu = 1  =>  mu*lv - mv*lu = 1
  if (g != 1) throw std::logic_error("longitude not primitive");
  if (fr.s == 1) {
    // The framing needs m zero mod 2 when l is not; search m + k l.
    bool found = false;
    for (int k = 0; k <= 1 && !found; ++k) {
      if (ctx.zero_mod2(boundary_vec(mu + k * lu, mv + k * lv))) {
        mu += k * lu;
        mv += k * lv;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no even completion for the framing");
  }
  fr.m = {mu, mv};
  return fr;
}

Int t_divisibility(const Int& n, const Int& a, const Int& b) {
  if (n == 0 || a == 0) throw std::invalid_argument("t requires n, a nonzero");
  Int g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), a.get_mpz_t());
  Int u = (a + b * n) / g, v = n * a / g;
  Int t;
  mpz_gcd(t.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return t;
}

bool is_admissible_six_tuple(const SixTuple& st) {
  // Four atomic conditions.
  if (st.p0 * st.q1 - st.p1 * st.q0 != 1) return false;               // (1)
  if (st.p2 != -(st.p0 + st.p1) || st.q2 != -(st.q0 + st.q1)) return false;  // (2)
  if (st.s == 0 && st.p2 % 2 != 0) return false;                      // (3)
  if (st.s == 1 && st.q2 % 2 != 0) return false;                      // (4)
  return true;
}

int cobordism_signature(const Int& pj, const Int& pj1) {
  Int prod = pj * pj1;
  if (prod > 0) return 1;
  if (prod < 0) return -1;
  return 0;
}

ResolutionData resolution_data(const ExtRational& r1, const ExtRational& r2,
                               const ExtRational& g0, const ExtRational& g1,
                               const ExtRational& g2) {
  if (!is_farey_triangle(Triangle(g0, g1, g2)))
    throw std::invalid_argument("slopes do not form a Farey triangle");
  ResolutionData rd;
  rd.framing = boundary_framing(r1, r2);
  const auto& m = rd.framing.m;
  const auto& l = rd.framing.l;
  // Coordinates in the (m, l) basis: (a, b) = p * m + q * l.
  Int det_ml = m[0] * l[1] - m[1] * l[0];  // +-1
  auto coords = [&](const ExtRational& gslope) {
    Int a = gslope.p, b = gslope.q;
    Int p = (a * l[1] - b * l[0]);
    Int q = (m[0] * b - m[1] * a);
    if (det_ml == -1) { p = -p; q = -q; }
    return std::pair<Int, Int>(p, q);
  };
  auto [p0, q0] = coords(g0);
  auto [p1, q1] = coords(g1);
  auto [p2, q2] = coords(g2);
  // Signs: gamma_0 + gamma_1 + gamma_2 = 0 with the anchor on gamma_2, then
  // order (gamma_0, gamma_1) so that p0 q1 - p1 q0 = +1.
  int e0 = 0, e1 = 0;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      if (s0 * p0 + s1 * p1 + p2 == 0 && s0 * q0 + s1 * q1 + q2 == 0) { e0 = s0; e1 = s1; }
  if (e0 == 0) throw std::logic_error("no sign choice sums to zero");
  p0 *= e0; q0 *= e0;
  p1 *= e1; q1 *= e1;
  // Anchor: s = 0 wants #(gamma_2, m) = q2 > 0; s = 1 wants
  // #(gamma_2, l) = -p2 > 0.
  bool flip = (rd.framing.s == 0) ? (q2 < 0) : (p2 > 0);
  if (flip) { p0 = -p0; q0 = -q0; p1 = -p1; q1 = -q1; p2 = -p2; q2 = -q2; }
  if (p0 * q1 - p1 * q0 == -1) { std::swap(p0, p1); std::swap(q0, q1); }
  rd.tuple = SixTuple{p0, q0, p1, q1, p2, q2, rd.framing.s};
  return rd;
}

}  // namespace brancher
