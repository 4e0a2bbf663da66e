#include "brancher/farey.hpp"

#include <algorithm>

namespace brancher {

Triangle::Triangle(ExtRational a, ExtRational b, ExtRational c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2])
    throw std::invalid_argument("triangle vertices must be distinct");
}

bool Triangle::contains(const ExtRational& x) const {
  return v[0] == x || v[1] == x || v[2] == x;
}

std::string Triangle::str() const {
  return "{" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "}";
}

bool is_farey_triangle(const Triangle& t) {
  return farey_delta(t.v[0], t.v[1]) == 1 && farey_delta(t.v[1], t.v[2]) == 1 &&
         farey_delta(t.v[0], t.v[2]) == 1;
}

bool triangles_adjacent(const Triangle& a, const Triangle& b) {
  int shared = 0;
  for (const auto& x : a.v)
    if (b.contains(x)) ++shared;
  return shared == 2;
}

Mat2Z normalizing_matrix(const ExtRational& r, const ExtRational& s) {
  if (farey_delta(r, s) != 1) throw std::invalid_argument("endpoints not at Farey distance 1");
  // Row (b, -a) kills r = a/b; row (d, -c) kills s = c/d; det = -+(ad - bc).
  Mat2Z m{r.q, -r.p, s.q, -s.p};
  if (m.c < 0 || (m.c == 0 && m.d < 0)) { m.c = -m.c; m.d = -m.d; }
  if (!m.unimodular()) throw std::logic_error("normalizing matrix not unimodular");
  return m;
}

namespace {

Triangle map_triangle(const Mat2Z& m, const Triangle& t) {
  return Triangle(m.apply(t.v[0]), m.apply(t.v[1]), m.apply(t.v[2]));
}

Int height(const ExtRational& x) { return abs(x.p) + abs(x.q); }

// Chain from the edge (0, inf) to t. The four greedy replacement moves are
// t -> (p-q)/q, (p+q)/q, p/(q-p), p/(q+p); each strictly decreases |p|+|q|
// away from the terminal vertices {0, 1, -1, inf}.
void chain_to(const ExtRational& t, std::vector<Triangle>& out, std::vector<Int>& heights) {
  static const ExtRational zero(0), one(1), minus_one(-1), inf = ExtRational::infinity();
  heights.push_back(height(t));
  if (t == zero || t == inf || t == one) {
    out.emplace_back(zero, one, inf);
    return;
  }
  if (t == minus_one) {
    out.emplace_back(zero, minus_one, inf);
    return;
  }
  struct Move { Mat2Z m; int e; };
  static const std::vector<Move> moves = {
      {{1, -1, 0, 1}, +1},  // (p-q)/q, across edge {1, inf}
      {{1, 1, 0, 1}, -1},   // (p+q)/q, across edge {-1, inf}
      {{1, 0, -1, 1}, +1},  // p/(q-p), across edge {0, 1}
      {{1, 0, 1, 1}, -1},   // p/(q+p), across edge {0, -1}
  };
  const Move* best = nullptr;
  ExtRational best_t;
  Int best_h;
  Int h = height(t);
  for (const auto& mv : moves) {
    ExtRational u = mv.m.apply(t);
    Int hu = height(u);
    if (hu >= h) continue;
    if (!best || hu < best_h) { best = &mv; best_t = u; best_h = hu; }
  }
  if (!best) throw std::logic_error("no descending Farey move; normalization broken");
  std::vector<Triangle> rest;
  chain_to(best_t, rest, heights);
  Triangle s0(zero, ExtRational(best->e), inf);
  Mat2Z minv = best->m.inverse();
  out.push_back(s0);
  for (const auto& tri : rest) {
    Triangle mapped = map_triangle(minv, tri);
    if (mapped == out.back()) continue;  // sub-chain started on our own triangle
    out.push_back(mapped);
  }
}

}  // namespace

FareyChain triangle_chain(const ExtRational& r, const ExtRational& s, const ExtRational& t) {
  if (r == s) throw std::invalid_argument("edge endpoints must differ");
  Mat2Z a = normalizing_matrix(r, s);
  FareyChain ch;
  chain_to(a.apply(t), ch.triangles, ch.descent_heights);
  Mat2Z ainv = a.inverse();
  for (auto& tri : ch.triangles) tri = map_triangle(ainv, tri);
  return ch;
}

bool validate_chain(const FareyChain& ch, const ExtRational& r, const ExtRational& s,
                    const ExtRational& t) {
  if (ch.triangles.empty()) return false;
  if (!ch.triangles.front().contains(r) || !ch.triangles.front().contains(s)) return false;
  if (!ch.triangles.back().contains(t)) return false;
  for (size_t i = 0; i < ch.triangles.size(); ++i) {
    if (!is_farey_triangle(ch.triangles[i])) return false;
    if (i && !triangles_adjacent(ch.triangles[i - 1], ch.triangles[i])) return false;
  }
  for (size_t i = 1; i < ch.descent_heights.size(); ++i)
    if (!(ch.descent_heights[i] < ch.descent_heights[i - 1])) return false;
  return true;
}

}  // namespace brancher
