#include "brancher/genlink.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace brancher {

namespace {

// Shared assembly buffer: crossings over provisional arc ids, plus bare
// (crossingless) strands and end-joins, resolved to a PDCode at the end.
struct Builder {
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> bare;  // crossingless strands (two ends)
  std::map<int, int> parent;
  int next_id = 1;

  int fresh() { return next_id++; }
  int find(int x) {
    if (!parent.count(x)) parent[x] = x;
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  }
  void join(int a, int b) { parent[find(a)] = find(b); }

  PDCode finish() {
    PDCode d;
    for (auto& [x, y] : bare) join(x, y);
    std::map<int, int> count;
    for (const auto& c : crossings)
      for (int s : c.s) ++count[find(s)];
    for (auto& [rep, cnt] : count)
      if (cnt != 2) throw std::logic_error("generator produced a dangling arc");
    std::set<int> loop_reps;
    for (auto& [x, y] : bare) {
      int r = find(x);
      if (!count.count(r)) loop_reps.insert(r);
    }
    d.free_loops = (int)loop_reps.size();
    for (const auto& c : crossings) {
      Crossing nc;
      for (int i = 0; i < 4; ++i) nc.s[i] = find(c.s[i]);
      d.crossings.push_back(nc);
    }
    return canonicalize(d);
  }
};

// A rational tangle in a box with dangling corner ids.
struct Tangle {
  int nw, ne, sw, se;
  ExtRational value{0};
};

Tangle tangle_zero(Builder& b) {
  Tangle t;
  t.nw = t.ne = b.fresh();
  t.sw = t.se = b.fresh();
  // Each of the two horizontal strands is a single bare arc for now; the
  // shared id at both corners encodes that. Nothing to record: the id
  // appearing at two corners is one strand.
  t.value = ExtRational(0);
  return t;
}

Tangle tangle_infinity(Builder& b) {
  Tangle t;
  t.nw = t.sw = b.fresh();
  t.ne = t.se = b.fresh();
  t.value = ExtRational::infinity();
  return t;
}

// One twist on the east side (between ne and se). sign = +1 adds +1 to the
// tangle fraction; the crossing chirality realizing that is fixed by the
// determinant calibration tests.
void twist_east(Builder& b, Tangle& t, int sign) {
  int new_ne = b.fresh(), new_se = b.fresh();
  if (sign > 0) {
    // Under-strand enters at NW: ccw slots (NW, SW, SE, NE).
    b.crossings.push_back(Crossing{{t.ne, t.se, new_se, new_ne}});
  } else {
    // Under-strand enters at SW: ccw slots (SW, SE, NE, NW).
    b.crossings.push_back(Crossing{{t.se, new_se, new_ne, t.ne}});
  }
  t.ne = new_ne;
  t.se = new_se;
  t.value = t.value + ExtRational(sign);
}

// One twist on the south side (between sw and se): v -> 1/(1/v + sign).
void twist_south(Builder& b, Tangle& t, int sign) {
  int new_sw = b.fresh(), new_se = b.fresh();
  if (sign > 0) {
    // Under-strand enters at NW: ccw slots (NW, SW, SE, NE).
    b.crossings.push_back(Crossing{{t.sw, new_sw, new_se, t.se}});
  } else {
    // Under-strand enters at NE: ccw slots (NE, NW, SW, SE).
    b.crossings.push_back(Crossing{{t.se, t.sw, new_sw, new_se}});
  }
  t.sw = new_sw;
  t.se = new_se;
  // v := 1/(1/v + sign) = p / (q + sign * p).
  t.value = ExtRational(t.value.p, t.value.q + sign * t.value.p);
}

// Counterclockwise quarter turn: v -> -1/v.
void rotate_ccw(Tangle& t) {
  int nw = t.nw, ne = t.ne, se = t.se, sw = t.sw;
  t.nw = ne;
  t.ne = se;
  t.se = sw;
  t.sw = nw;
  t.value = ExtRational(-t.value.q, t.value.p);
}

// Tangle of an arbitrary extended rational via the canonical continued
// fraction x = t1 - 1/(t2 - ...): T(x) = twists_east(t1) applied to the
// rotation of T(t2 - 1/(...)).
Tangle tangle_of(Builder& b, const ExtRational& x) {
  if (x.is_infinity()) return tangle_infinity(b);
  std::vector<Int> cf = cf_expand(x);
  Tangle t = tangle_zero(b);
  for (size_t i = cf.size(); i-- > 0;) {
    if (i + 1 < cf.size()) rotate_ccw(t);
    Int n = cf[i];
    int sgn = n > 0 ? 1 : -1;
    for (Int k = 0; k < abs(n); ++k) twist_east(b, t, sgn);
  }
  return t;
}

}  // namespace

PDCode braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("need at least one strand");
  Builder b;
  std::vector<int> init(strands), cur(strands);
  for (int i = 0; i < strands; ++i) init[i] = cur[i] = b.fresh();
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw std::invalid_argument("braid letter out of range");
    int a = cur[i - 1], c = cur[i];  // left, right incoming (SW, SE)
    int na = b.fresh(), nb = b.fresh();  // outgoing at NW (left), NE (right)
    if (letter > 0) {
      // Left strand passes over: under enters at SE: ccw (SE, NE, NW, SW).
      b.crossings.push_back(Crossing{{c, nb, na, a}});
    } else {
      // Left strand passes under: under enters at SW: ccw (SW, SE, NE, NW).
      b.crossings.push_back(Crossing{{a, c, nb, na}});
    }
    cur[i - 1] = na;
    cur[i] = nb;
  }
  for (int i = 0; i < strands; ++i) {
    if (cur[i] == init[i]) b.bare.push_back({cur[i], init[i]});  // untouched strand
    else b.join(cur[i], init[i]);
  }
  return b.finish();
}

PDCode torus_link(int p, int q, bool right_handed) {
  if (p < 2 || q < 2) throw std::invalid_argument("torus link needs p, q >= 2");
  std::vector<int> word;
  for (int rep = 0; rep < q; ++rep)
    for (int i = 1; i < p; ++i) word.push_back(right_handed ? i : -i);
  return braid_closure(p, word);
}

PDCode two_bridge(const Int& p, const Int& q) {
  if (p <= 0) throw std::invalid_argument("two_bridge requires p > 0");
  Int qq = q;
  bool mirrored = false;
  if (qq < 0) { qq = -qq; mirrored = true; }
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qq.get_mpz_t());
  if (p <= qq || g != 1) throw std::invalid_argument("two_bridge requires p > |q| >= 1, coprime");
  // All-positive plus-fraction p/q = a1 + 1/(a2 + 1/(...)).
  std::vector<Int> plus;
  Int num = p, den = qq;
  while (den != 0) {
    plus.push_back(num / den);
    Int r = num % den;
    num = den;
    den = r;
  }
  // Normalize to odd length so the twisting below starts on the east side:
  // [..., c] = [..., c-1, 1] (or fold a trailing 1 into its predecessor).
  if (plus.size() % 2 == 0) {
    if (plus.back() > 1) {
      plus.back() -= 1;
      plus.push_back(1);
    } else {
      plus.pop_back();
      plus.back() += 1;
    }
  }
  Builder b;
  Tangle t = tangle_zero(b);
  // Alternate east and south twist batches, same handedness throughout:
  // this produces the standard alternating 4-plat.
  for (size_t i = plus.size(); i-- > 0;) {
    bool east = (i % 2 == 0);
    for (Int k = 0; k < plus[i]; ++k) {
      if (east) twist_east(b, t, +1);
      else twist_south(b, t, +1);
    }
  }
  if (!(t.value == ExtRational(p, qq)))
    throw std::logic_error("two_bridge tangle fraction mismatch");
  // Numerator closure: join nw-ne and sw-se.
  b.bare.push_back({t.nw, t.ne});
  b.bare.push_back({t.sw, t.se});
  PDCode d = b.finish();
  return mirrored ? mirror(d) : d;
}

PDCode montesinos_diagram(const std::vector<ExtRational>& params) {
  // K(a1/b1, ..., ak/bk): each parameter a/b contributes the tangle of
  // slope b/a, so K(2,-3,-7) is the (2,-3,-7) pretzel.
  int infs = 0;
  for (const auto& r : params)
    if (r.p == 0) ++infs;
  if (infs > 1) throw std::invalid_argument("at most one infinite tangle");
  if (params.empty()) throw std::invalid_argument("need at least one tangle");
  Builder b;
  std::vector<Tangle> ts;
  for (const auto& r : params) ts.push_back(tangle_of(b, r.reciprocal()));
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    b.bare.push_back({ts[i].ne, ts[i + 1].nw});
    b.bare.push_back({ts[i].se, ts[i + 1].sw});
  }
  b.bare.push_back({ts.back().ne, ts.front().nw});
  b.bare.push_back({ts.back().se, ts.front().sw});
  return b.finish();
}

}  // namespace brancher
