#pragma once
// Embedded corpus of alternating (hence thin) link diagrams for the batch
// identity checks: two-bridge links, alternating pretzels, and the small
// standard fixtures.

#include <string>
#include <vector>

#include "brancher/pdcode.hpp"

namespace brancher {

struct CorpusEntry {
  std::string id;
  PDCode diagram;
  bool thin = true;  // alternating entries are thin; Lef defaults to 0
};

// Deduplicated alternating corpus (>= 60 entries), generated on first use:
// all two-bridge b(p, q) for p <= 24 plus positive pretzels P(a, b, c).
const std::vector<CorpusEntry>& alternating_corpus();

}  // namespace brancher
