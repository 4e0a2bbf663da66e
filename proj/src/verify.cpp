#include "brancher/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "brancher/genlink.hpp"

namespace brancher {

namespace {

Rat rat_of(const ExtRational& x) {
  if (x.is_infinity()) throw std::invalid_argument("infinite value");
  Rat r(x.p, x.q);
  r.canonicalize();
  return r;
}

Rat pow2(int e) {
  Int v = 1;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
  return Rat(v);
}

}  // namespace

std::vector<Rat> spin_h_values(const PDCode& d) {
  if (d.n() == 0 && d.free_loops == 1) return {Rat(0)};  // unknot: S^3
  for (int color : {0, 1}) {
    GoeritzForm g = goeritz_form(d, color);
    if (!is_negative_definite(g.reduced)) continue;
    std::vector<Rat> hs;
    for (const ExtRational& dv : spin_d_multiset(g.reduced))
      hs.push_back(-rat_of(dv) / 2);
    std::sort(hs.begin(), hs.end());
    return hs;
  }
  throw std::invalid_argument("no negative definite Goeritz color");
}

Rat predicted_lefschetz(const PDCode& d, const std::vector<Rat>& h_values) {
  int nc = num_components(d);
  if (h_values.size() != (size_t)1 << (nc - 1))
    throw std::invalid_argument("need one h per spin class");
  Rat sum(0);
  for (const Rat& h : h_values) sum += h;
  return pow2(nc) / 16 * Rat(murasugi_xi(d)) - sum;
}

Rat chi(const PDCode& d, const std::vector<Rat>& h_values, const Rat& lef) {
  int nc = num_components(d);
  if (h_values.size() != (size_t)1 << (nc - 1))
    throw std::invalid_argument("need one h per spin class");
  Rat sum(0);
  for (const Rat& h : h_values) sum += h;
  return (sum + lef) / pow2(nc - 1) - Rat(murasugi_xi(d)) / 8;
}

Rat lefschetz_concordance(const PDCode& knot, const Rat& h) {
  if (num_components(knot) != 1) throw std::invalid_argument("knot required");
  return Rat(murasugi_xi(knot)) / 8 - h;
}

SkeinTriple resolve_triple(const PDCode& d, size_t idx) {
  SkeinTriple t;
  t.l2 = d;
  t.l0 = resolve_crossing(d, idx, 0);
  t.l1 = resolve_crossing(d, idx, 1);
  return t;
}

std::optional<SkeinTriple> montesinos_skein_triple(const ExtRational& r1,
                                                   const ExtRational& r2,
                                                   const ExtRational& ga,
                                                   const ExtRational& gb,
                                                   const ExtRational& gc) {
  std::array<ExtRational, 3> g{ga, gb, gc};
  std::array<PDCode, 3> d;
  std::array<int, 3> nc{};
  try {
    for (int i = 0; i < 3; ++i) {
      d[i] = montesinos_diagram({r1, r2, g[i]});
      nc[i] = num_components(d[i]);
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  // l2 is the unique slope with one more component than the other two.
  int i2 = -1;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (nc[j] == nc[k] && nc[i] == nc[j] + 1) i2 = i;
  }
  if (i2 < 0) return std::nullopt;
  int i0 = (i2 + 1) % 3, i1 = (i2 + 2) % 3;
  SkeinTriple t;
  t.l2 = d[i2];
  t.l0 = d[i0];
  t.l1 = d[i1];
  try {
    t.data = resolution_data(r1, r2, g[i0], g[i1], g[i2]).tuple;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return t;
}

bool check_murasugi_skein(const SkeinTriple& t) {
  if (!t.data) throw std::invalid_argument("resolution data required");
  int n2 = num_components(t.l2);
  if (num_components(t.l0) != n2 - 1 || num_components(t.l1) != n2 - 1)
    throw std::invalid_argument("triple is not admissible");
  const SixTuple& st = *t.data;
  Int lhs = 2 * murasugi_xi(t.l2);
  Int rhs = murasugi_xi(t.l0) + murasugi_xi(t.l1) +
            cobordism_signature(st.p1, st.p2) - cobordism_signature(st.p2, st.p0);
  return lhs == rhs;
}

bool check_det_skein(const SkeinTriple& t) {
  Int d0 = determinant(t.l0), d1 = determinant(t.l1), d2 = determinant(t.l2);
  return d2 == d0 + d1 || d0 == d1 + d2 || d1 == d0 + d2;
}

ThinCheck check_thin_identity(const std::string& id, const PDCode& d) {
  ThinCheck c;
  c.id = id;
  c.xi = murasugi_xi(d);
  std::vector<Rat> hs = spin_h_values(d);
  c.num_spin = hs.size();
  c.sum_spin_h = Rat(0);
  for (const Rat& h : hs) c.sum_spin_h += h;
  // sum(h) = 2^|L| xi / 16, i.e. a vanishing predicted Lefschetz number;
  // for knots this is the classical xi = 8 sum(h).
  c.ok = pow2(num_components(d)) / 16 * Rat(c.xi) == c.sum_spin_h;
  return c;
}

InvariantReport make_report(const std::string& id, const PDCode& d,
                            std::optional<Rat> lef_input) {
  InvariantReport r;
  r.id = id;
  r.components = num_components(d);
  r.det = determinant(d);
  r.xi = murasugi_xi(d);
  r.sum_h = Rat(0);
  r.lef = std::move(lef_input);
  // The lattice value is only trusted as the exact correction term for the
  // definite color of an alternating diagram.
  if (is_alternating(d)) {
    try {
      r.spin_h = spin_h_values(d);
      r.exact = true;
    } catch (const std::invalid_argument&) {
      r.exact = false;
    }
  }
  if (r.exact) {
    for (const Rat& h : r.spin_h) r.sum_h += h;
    r.predicted = predicted_lefschetz(d, r.spin_h);
    if (r.lef) r.defect = chi(d, r.spin_h, *r.lef);
  }
  return r;
}

}  // namespace brancher
