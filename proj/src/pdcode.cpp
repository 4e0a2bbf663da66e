#include "brancher/pdcode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brancher {

std::string PDCode::str() const {
  std::ostringstream os;
  os << "PD[";
  for (size_t i = 0; i < crossings.size(); ++i) {
    if (i) os << ",";
    os << "X(" << crossings[i].s[0] << "," << crossings[i].s[1] << "," << crossings[i].s[2]
       << "," << crossings[i].s[3] << ")";
  }
  os << "]";
  return os.str();
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("PD: " + msg); }

// Label-compressed occurrence table; every label must appear exactly twice.
struct Occ {
  std::vector<int> labels;  // sorted distinct labels; arc index = position
  std::vector<std::array<std::pair<int, int>, 2>> occ;
  std::map<int, int> index;
};

Occ build_occ(const PDCode& d) {
  Occ o;
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (size_t v = 0; v < d.crossings.size(); ++v)
    for (int i = 0; i < 4; ++i) {
      int lab = d.crossings[v].s[i];
      if (lab <= 0) bad("arc labels must be positive");
      where[lab].push_back({(int)v, i});
    }
  for (auto& [lab, occs] : where) {
    if (occs.size() != 2) bad("arc " + std::to_string(lab) + " does not appear exactly twice");
    o.index[lab] = (int)o.labels.size();
    o.labels.push_back(lab);
    o.occ.push_back({occs[0], occs[1]});
  }
  return o;
}

}  // namespace

DiagramInfo analyze(const PDCode& d) {
  DiagramInfo info;
  Occ occ = build_occ(d);
  size_t n = d.n();
  info.narcs = (int)occ.labels.size();
  if (n > 0 && info.narcs != (int)(2 * n)) bad("expected 2n distinct arcs");
  info.arc_occ = occ.occ;
  info.arc_component.assign(info.narcs, -1);
  info.under.assign(n, Passage{});
  info.over.assign(n, Passage{});

  // Strand tracing: establishes link components and the base orientation.
  std::vector<std::array<bool, 2>> passage_seen(n, {false, false});
  int comp = 0;
  for (int start = 0; start < info.narcs; ++start) {
    if (info.arc_component[start] != -1) continue;
    int arc = start;
    int toward = 1;  // travel toward occurrence #toward of the current arc
    while (info.arc_component[arc] == -1) {
      info.arc_component[arc] = comp;
      auto [v, slot] = info.arc_occ[arc][toward];
      Passage& p = (slot % 2 == 0) ? info.under[v] : info.over[v];
      int axis = slot % 2;  // 0 = under, 1 = over
      if (passage_seen[v][axis]) bad("inconsistent strand structure");
      passage_seen[v][axis] = true;
      p.entry_slot = slot;
      p.component = comp;
      int out_slot = (slot + 2) % 4;
      int next_label = d.crossings[v].s[out_slot];
      int next = occ.index[next_label];
      // Continue toward the occurrence of `next` that is not (v, out_slot).
      toward = (info.arc_occ[next][0] == std::make_pair(v, out_slot)) ? 1 : 0;
      arc = next;
    }
    ++comp;
  }
  for (size_t v = 0; v < n; ++v)
    if (!passage_seen[v][0] || !passage_seen[v][1]) bad("crossing missing a strand passage");
  info.num_link_components = comp + d.free_loops;

  // Connected pieces of the underlying 4-valent graph.
  std::vector<int> piece(n, -1);
  int npieces = 0;
  for (size_t v0 = 0; v0 < n; ++v0) {
    if (piece[v0] != -1) continue;
    std::vector<size_t> stack{v0};
    piece[v0] = npieces;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (int i = 0; i < 4; ++i) {
        int a = occ.index[d.crossings[v].s[i]];
        for (const auto& [w, ws] : info.arc_occ[a])
          if (piece[w] == -1) { piece[w] = npieces; stack.push_back((size_t)w); }
      }
    }
    ++npieces;
  }
  info.num_diagram_pieces = npieces + d.free_loops;
  info.connected = (n == 0) ? (d.free_loops <= 1) : (npieces == 1 && d.free_loops == 0);

  // Face tracing. Corner (v,i) -> follow the arc at slot i+1 to its other
  // end (w,j); the next corner of the same face is (w,j).
  info.corner_face.assign(n, {-1, -1, -1, -1});
  int nfaces = 0;
  for (size_t v0 = 0; v0 < n; ++v0)
    for (int i0 = 0; i0 < 4; ++i0) {
      if (info.corner_face[v0][i0] != -1) continue;
      int v = (int)v0, i = i0;
      while (info.corner_face[v][i] == -1) {
        info.corner_face[v][i] = nfaces;
        int a = occ.index[d.crossings[v].s[(i + 1) % 4]];
        auto other = (info.arc_occ[a][0] == std::make_pair(v, (i + 1) % 4)) ? info.arc_occ[a][1]
                                                                            : info.arc_occ[a][0];
        v = other.first;
        i = other.second;
      }
      if (info.corner_face[v][i] != nfaces) bad("face tracing failed");
      ++nfaces;
    }
  info.num_faces = nfaces;

  // Euler characteristic per connected piece: V - E + F = 2.
  if (n > 0) {
    std::vector<int> pv(npieces, 0), pf_seen(nfaces, -1);
    std::vector<int> pf(npieces, 0);
    for (size_t v = 0; v < n; ++v) {
      ++pv[piece[v]];
      for (int i = 0; i < 4; ++i)
        if (pf_seen[info.corner_face[v][i]] == -1) {
          pf_seen[info.corner_face[v][i]] = 1;
          ++pf[piece[v]];
        }
    }
    for (int p = 0; p < npieces; ++p)
      if (pv[p] - 2 * pv[p] + pf[p] != 2) bad("diagram is not planar (Euler check failed)");
  }

  // Checkerboard coloring (connected diagrams only): faces across an arc
  // get opposite colors; corners (v,i) and (v,i-1) flank the arc at slot i.
  if (info.connected && n > 0) {
    info.face_color.assign(nfaces, -1);
    info.face_color[info.corner_face[0][0]] = 0;
    std::vector<int> stack{info.corner_face[0][0]};
    std::vector<std::vector<std::pair<int, int>>> adj(nfaces);
    for (size_t v = 0; v < n; ++v)
      for (int i = 0; i < 4; ++i) {
        int f1 = info.corner_face[v][i];
        int f2 = info.corner_face[v][(i + 3) % 4];
        adj[f1].push_back({f2, 0});
        adj[f2].push_back({f1, 0});
      }
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto& [g, _] : adj[f]) {
        if (info.face_color[g] == -1) {
          info.face_color[g] = 1 - info.face_color[f];
          stack.push_back(g);
        } else if (info.face_color[g] == info.face_color[f]) {
          bad("checkerboard coloring failed");
        }
      }
    }
  }
  return info;
}

PDCode parse_pd(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.substr(0, 3) != "PD[" || t.back() != ']') bad("expected PD[...]");
  std::string body = t.substr(3, t.size() - 4);
  PDCode d;
  if (body.empty()) {
    d.free_loops = 1;  // PD[] denotes the 0-crossing unknot
    return d;
  }
  size_t pos = 0;
  while (pos < body.size()) {
    if (body.compare(pos, 2, "X(") != 0) bad("expected X(");
    size_t close = body.find(')', pos);
    if (close == std::string::npos) bad("unbalanced parenthesis");
    std::string args = body.substr(pos + 2, close - pos - 2);
    Crossing c;
    int k = 0;
    size_t p = 0;
    while (k < 4) {
      size_t comma = args.find(',', p);
      std::string tok = (comma == std::string::npos) ? args.substr(p) : args.substr(p, comma - p);
      if (tok.empty()) bad("empty arc label");
      for (char ch : tok)
        if (!isdigit(static_cast<unsigned char>(ch))) bad("arc labels must be positive integers");
      c.s[k++] = std::stoi(tok);
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    if (k != 4) bad("crossing needs 4 arcs");
    d.crossings.push_back(c);
    pos = close + 1;
    if (pos < body.size()) {
      if (body[pos] != ',') bad("expected comma between crossings");
      ++pos;
    }
  }
  // Labels must be exactly 1..2n.
  std::set<int> labels;
  for (const auto& c : d.crossings)
    for (int x : c.s) labels.insert(x);
  if ((int)labels.size() != (int)(2 * d.n()) || *labels.begin() != 1 ||
      *labels.rbegin() != (int)(2 * d.n()))
    bad("arc labels must be exactly 1..2n");
  analyze(d);  // full validation
  return d;
}

int num_components(const PDCode& d) {
  if (d.n() == 0) return d.free_loops;
  return analyze(d).num_link_components;
}

bool is_alternating(const PDCode& d) {
  // Every arc must have one under end (even slot) and one over end.
  if (d.n() == 0) return true;
  Occ occ = build_occ(d);
  for (const auto& [o1, o2] : occ.occ)
    if (o1.second % 2 == o2.second % 2) return false;
  return true;
}

PDCode canonicalize(const PDCode& d) {
  if (d.n() == 0) return d;
  DiagramInfo info = analyze(d);
  Occ occ = build_occ(d);
  // Renumber in traversal order, components started from their lowest label.
  std::map<int, int> relabel;  // old label -> new label
  int next = 1;
  for (int start = 0; start < info.narcs; ++start) {
    if (relabel.count(occ.labels[start])) continue;
    int arc = start;
    // Walk toward an under-strand occurrence when the two ends differ;
    // slot parity is invariant under the X(a,b,c,d) = X(c,d,a,b) rotation,
    // so the canonical form does not depend on tuple rotations.
    int toward = (info.arc_occ[arc][1].second % 2 == 0 ||
                  info.arc_occ[arc][0].second % 2 != 0)
                     ? 1
                     : 0;
    while (!relabel.count(occ.labels[arc])) {
      relabel[occ.labels[arc]] = next++;
      auto [v, slot] = info.arc_occ[arc][toward];
      int out_slot = (slot + 2) % 4;
      int next_label = d.crossings[v].s[out_slot];
      int na = occ.index[next_label];
      toward = (info.arc_occ[na][0] == std::make_pair(v, out_slot)) ? 1 : 0;
      arc = na;
    }
  }
  PDCode out;
  out.free_loops = d.free_loops;
  for (const auto& c : d.crossings) {
    Crossing nc;
    for (int i = 0; i < 4; ++i) nc.s[i] = relabel[c.s[i]];
    if (nc.s[0] > nc.s[2]) nc = Crossing{{nc.s[2], nc.s[3], nc.s[0], nc.s[1]}};
    out.crossings.push_back(nc);
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.s < b.s; });
  return out;
}

PDCode mirror(const PDCode& d) {
  PDCode out;
  out.free_loops = d.free_loops;
  for (const auto& c : d.crossings)
    out.crossings.push_back(Crossing{{c.s[0], c.s[3], c.s[2], c.s[1]}});
  return canonicalize(out);
}

PDCode crossing_change(const PDCode& d, size_t idx) {
  if (idx >= d.n()) throw std::out_of_range("crossing index");
  PDCode out = d;
  const auto& c = d.crossings[idx].s;
  out.crossings[idx] = Crossing{{c[1], c[2], c[3], c[0]}};
  return out;
}

PDCode resolve_crossing(const PDCode& d, size_t idx, int r) {
  if (idx >= d.n()) throw std::out_of_range("crossing index");
  if (r != 0 && r != 1) throw std::invalid_argument("resolution must be 0 or 1");
  const auto& c = d.crossings[idx].s;
  // Union-find over arc labels.
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  if (r == 0) { unite(c[0], c[1]); unite(c[2], c[3]); }
  else { unite(c[0], c[3]); unite(c[1], c[2]); }

  PDCode out;
  out.free_loops = d.free_loops;
  for (size_t v = 0; v < d.n(); ++v) {
    if (v == idx) continue;
    Crossing nc;
    for (int i = 0; i < 4; ++i) nc.s[i] = find(d.crossings[v].s[i]);
    out.crossings.push_back(nc);
  }
  // Classes whose every occurrence was at the removed crossing close up
  // into crossingless loops.
  std::set<int> surviving;
  for (const auto& cr : out.crossings)
    for (int x : cr.s) surviving.insert(x);
  std::set<int> reps;
  for (int i = 0; i < 4; ++i) reps.insert(find(c[i]));
  for (int rep : reps)
    if (!surviving.count(rep)) ++out.free_loops;
  return canonicalize(out);
}

PDCode connected_sum(const PDCode& a, int arc_a, const PDCode& b, int arc_b) {
  if (a.n() == 0 || b.n() == 0) {
    // Summing with an unknot (possibly plus extra split loops).
    const PDCode& loopless = (a.n() == 0) ? b : a;
    const PDCode& loopy = (a.n() == 0) ? a : b;
    if (loopy.free_loops < 1) throw std::invalid_argument("empty summand");
    PDCode out = loopless;
    out.free_loops += loopy.free_loops - 1;
    return canonicalize(out);
  }
  Occ oa = build_occ(a), ob = build_occ(b);
  if (!oa.index.count(arc_a) || !ob.index.count(arc_b))
    throw std::invalid_argument("splice arc not present");
  int off = 0;
  for (const auto& c : a.crossings)
    for (int x : c.s) off = std::max(off, x);
  PDCode out;
  out.free_loops = a.free_loops + b.free_loops;
  out.crossings = a.crossings;
  for (const auto& c : b.crossings) {
    Crossing nc;
    for (int i = 0; i < 4; ++i) nc.s[i] = c.s[i] + off;
    out.crossings.push_back(nc);
  }
  // Cut arc_a and arc_b and cross-join the ends: rewrite the second
  // occurrence of each.
  auto [va, sa] = oa.occ[oa.index[arc_a]][1];
  auto [vb, sb] = ob.occ[ob.index[arc_b]][1];
  out.crossings[va].s[sa] = arc_b + off;
  out.crossings[a.n() + vb].s[sb] = arc_a;
  return canonicalize(out);
}

std::vector<QuasiOrientation> all_quasi_orientations(int num_components) {
  std::vector<QuasiOrientation> res;
  int m = num_components - 1;
  for (long mask = 0; mask < (1L << m); ++mask) {
    QuasiOrientation q(num_components, false);
    for (int i = 0; i < m; ++i) q[i + 1] = (mask >> i) & 1;
    res.push_back(q);
  }
  return res;
}

}  // namespace brancher
