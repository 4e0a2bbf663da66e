#include "brancher/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace brancher {

GoeritzForm goeritz_form(const PDCode& d, int color) {
  if (color != 0 && color != 1) throw std::invalid_argument("color must be 0 or 1");
  DiagramInfo info = analyze(d);
  if (!info.connected) throw std::invalid_argument("Goeritz form requires a connected diagram");
  GoeritzForm g;
  g.color = color;
  if (d.n() == 0) return g;  // unknot: empty form

  std::vector<int> region_of_face(info.num_faces, -1);
  for (int f = 0; f < info.num_faces; ++f)
    if (info.face_color[f] == color) {
      region_of_face[f] = (int)g.region_faces.size();
      g.region_faces.push_back(f);
    }
  size_t m = g.region_faces.size();
  g.unreduced.assign(m, std::vector<Int>(m, 0));
  g.eta.assign(d.n(), 0);
  g.shade.assign(d.n(), 0);
  for (size_t v = 0; v < d.n(); ++v) {
    // Shaded quadrants are two opposite corners; s = +1 for corners {1,3}.
    int s = (info.face_color[info.face_at((int)v, 1)] == color) ? +1 : -1;
    g.shade[v] = s;
    int ca = (s == +1) ? 1 : 0;
    int f1 = info.face_at((int)v, ca), f2 = info.face_at((int)v, ca + 2);
    int eta = -s;  // slope convention; global sign pinned by the trefoil
    if (f1 == f2) { g.eta[v] = 0; continue; }
    g.eta[v] = eta;
    int r1 = region_of_face[f1], r2 = region_of_face[f2];
    g.unreduced[r1][r2] -= eta;
    g.unreduced[r2][r1] -= eta;
  }
  for (size_t i = 0; i < m; ++i) {
    Int s = 0;
    for (size_t j = 0; j < m; ++j)
      if (j != i) s += g.unreduced[i][j];
    g.unreduced[i][i] = -s;
  }
  g.reduced.assign(m ? m - 1 : 0, std::vector<Int>(m ? m - 1 : 0));
  for (size_t i = 0; i + 1 < m; ++i)
    for (size_t j = 0; j + 1 < m; ++j) g.reduced[i][j] = g.unreduced[i][j];
  return g;
}

Int determinant(const PDCode& d) {
  DiagramInfo info = analyze(d);
  if (!info.connected) {
    if (d.n() == 0) return d.free_loops == 1 ? Int(1) : Int(0);
    return 0;  // split link
  }
  return abs(det(goeritz_form(d, 0).reduced));
}

bool is_ramifiable(const PDCode& d) { return determinant(d) != 0; }

AbelianGroup h1_branched_cover(const PDCode& d) {
  DiagramInfo info = analyze(d);
  if (!info.connected) throw std::invalid_argument("split diagram");
  return cokernel(goeritz_form(d, 0).reduced);
}

int crossing_sign(const DiagramInfo& info, const QuasiOrientation& q, size_t v) {
  const Passage& u = info.under[v];
  const Passage& o = info.over[v];
  int eu = (u.entry_slot + 2) % 4, eo = (o.entry_slot + 2) % 4;
  if (q[u.component]) eu = (eu + 2) % 4;
  if (q[o.component]) eo = (eo + 2) % 4;
  return (eu == (eo + 1) % 4) ? +1 : -1;
}

Int linking_number(const PDCode& d, const QuasiOrientation& q, int i, int j) {
  if (i == j) throw std::invalid_argument("linking number needs distinct components");
  DiagramInfo info = analyze(d);
  Int twice = 0;
  for (size_t v = 0; v < d.n(); ++v) {
    int cu = info.under[v].component, co = info.over[v].component;
    if ((cu == i && co == j) || (cu == j && co == i)) twice += crossing_sign(info, q, v);
  }
  if (twice % 2 != 0) throw std::logic_error("odd signed crossing count between components");
  return twice / 2;
}

Int total_linking(const PDCode& d, const QuasiOrientation& q) {
  DiagramInfo info = analyze(d);
  Int twice = 0;
  for (size_t v = 0; v < d.n(); ++v)
    if (info.under[v].component != info.over[v].component)
      twice += crossing_sign(info, q, v);
  return twice / 2;
}

namespace {

long gl_signature_one_color(const PDCode& d, const DiagramInfo& info, const GoeritzForm& g,
                            const QuasiOrientation& q) {
  long sig = inertia(g.reduced).signature();
  long mu = 0;
  for (size_t v = 0; v < d.n(); ++v) {
    int w = crossing_sign(info, q, v);
    // Type II crossings are those with w(c) * s(c) = -1.
    if (w * g.shade[v] == -1) mu += (g.eta[v] != 0) ? g.eta[v] : -g.shade[v];
  }
  return sig - mu;
}

}  // namespace

long gl_signature(const PDCode& d, const QuasiOrientation& q) {
  DiagramInfo info = analyze(d);
  if (!info.connected) throw std::invalid_argument("signature requires a connected diagram");
  if ((int)q.size() != info.num_link_components)
    throw std::invalid_argument("quasi-orientation size mismatch");
  if (!q.empty() && q[0]) throw std::invalid_argument("component 0 must keep base orientation");
  if (d.n() == 0) return 0;
  long s0 = gl_signature_one_color(d, info, goeritz_form(d, 0), q);
  long s1 = gl_signature_one_color(d, info, goeritz_form(d, 1), q);
  if (s0 != s1) throw std::logic_error("checkerboard colors disagree on signature");
  return s0;
}

Int murasugi_xi(const PDCode& d) {
  DiagramInfo info = analyze(d);
  if (!info.connected) throw std::invalid_argument("xi requires a connected diagram");
  QuasiOrientation q(info.num_link_components, false);
  return Int(gl_signature(d, q)) + total_linking(d, q);
}

Rat murasugi_xi_average(const PDCode& d) {
  DiagramInfo info = analyze(d);
  if (!info.connected) throw std::invalid_argument("xi requires a connected diagram");
  Rat sum = 0;
  auto qs = all_quasi_orientations(info.num_link_components);
  for (const auto& q : qs) sum += Rat(Int(gl_signature(d, q)));
  return sum / Rat(Int((long)qs.size()));
}

}  // namespace brancher
