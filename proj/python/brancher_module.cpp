// Thin python bindings for smoke-testing the core library; exact values are
// passed as strings to keep arbitrary precision intact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brancher/corpus.hpp"
#include "brancher/diagram.hpp"
#include "brancher/genlink.hpp"
#include "brancher/lattice.hpp"
#include "brancher/verify.hpp"

namespace py = pybind11;
using namespace brancher;

namespace {

PDCode from_spec(const std::string& spec) {
  if (spec.rfind("M(", 0) == 0 && spec.back() == ')') {
    std::vector<ExtRational> params;
    std::string body = spec.substr(2, spec.size() - 3);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      params.push_back(parse_ext_rational(body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return montesinos_diagram(params);
  }
  return parse_pd(spec);
}

}  // namespace

PYBIND11_MODULE(_brancher, m) {
  m.doc() = "exact checkerboard/lattice invariants of links";
  m.def("xi", [](const std::string& spec) { return murasugi_xi(from_spec(spec)).get_str(); },
        "Murasugi signature of a PD[...] or M(...) spec");
  m.def("det", [](const std::string& spec) { return determinant(from_spec(spec)).get_str(); },
        "link determinant");
  m.def("components", [](const std::string& spec) { return num_components(from_spec(spec)); });
  m.def("d_lens", [](long p, long q, long i) { return d_lens(p, q, i).str(); },
        "exact lens-space correction term as a string");
  m.def("spin_h", [](const std::string& spec) {
    std::vector<std::string> out;
    for (const Rat& h : spin_h_values(from_spec(spec))) out.push_back(h.get_str());
    return out;
  });
  m.def("corpus_size", [] { return alternating_corpus().size(); });
}
