#include "brancher/corpus.hpp"

#include <set>

#include "brancher/diagram.hpp"
#include "brancher/genlink.hpp"

namespace brancher {

namespace {

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& id, const PDCode& d) {
    PDCode c = canonicalize(d);
    if (!is_alternating(c)) return;
    if (!seen.insert(c.str()).second) return;
    out.push_back(CorpusEntry{id, c, true});
  };
  for (long p = 2; p <= 24; ++p)
    for (long q = 1; q < p; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      add("b(" + std::to_string(p) + "," + std::to_string(q) + ")", two_bridge(p, q));
    }
  for (long a = 2; a <= 4; ++a)
    for (long b = a; b <= 4; ++b)
      for (long c = b; c <= 5; ++c)
        add("P(" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")",
            montesinos_diagram({ExtRational(a), ExtRational(b), ExtRational(c)}));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& alternating_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

}  // namespace brancher
