#include "lenstight/dot.hpp"

#include <sstream>

namespace lenstight {

std::string to_dot(const StarConfiguration& config) {
  const Int n = config.hyperbolic_count();
  const auto& arcs = config.word.arcs;
  std::ostringstream out;
  out << "graph star {\n";
  out << "  label=\"p=" << config.p << " e_plus=" << config.e_plus << "\";\n";
  out << "  node [shape=circle];\n";
  out << "  e0;\n";
  for (Int i = 1; i <= n; ++i) {
    out << "  h" << i << " [shape=diamond];\n";
    out << "  e" << i << ";\n";
  }
  for (Int i = 1; i <= n; ++i) {
    out << "  e0 -- h" << i << ";\n";
    out << "  h" << i << " -- e" << i << ";\n";
  }
  for (Int j = 1; j <= config.p; ++j) {
    bool opened = false;
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (arcs[e] != j) continue;
      if (!opened) {
        out << "  subgraph cluster_B" << j << " {\n    label=\"B" << j << "\";\n";
        opened = true;
      }
      out << "    " << endpoint_name(static_cast<Int>(e)) << " [shape=point];\n";
    }
    if (opened) out << "  }\n";
  }
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    const Int endpoint = static_cast<Int>(e);
    out << "  h" << endpoint_hyperbolic(endpoint) << " -- " << endpoint_name(endpoint)
        << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lenstight
