#include "ringexp/io/dot.hpp"

#include <sstream>

namespace ringexp::io {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string lattice_dot(const IdealLattice& lat) {
  const FiniteRing& r = *lat.ring();
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::string label = "{";
    const auto gens = lat.generators_of(i);
    for (std::size_t g = 0; g < gens.size(); ++g) label += (g ? "," : "") + r.label(gens[g]);
    label += "}";
    os << "  i" << i << " [label=" << quoted("(" + label.substr(1, label.size() - 2) + ")") << "];\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      if (!lat.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t m = i + 1; m < j && cover; ++m) cover = !(lat.leq(i, m) && lat.leq(m, j));
      if (cover) os << "  i" << i << " -> i" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string space_dot(const FiniteSpace& x, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (std::size_t p = 0; p < x.size(); ++p) os << "  p" << p << " [label=" << quoted(x.labels()[p]) << "];\n";
  for (const auto& [p, q] : x.order_pairs(true)) os << "  p" << p << " -> p" << q << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ringexp::io
