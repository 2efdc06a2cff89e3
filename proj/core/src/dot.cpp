#include "multinet/dot.hpp"

#include <sstream>

namespace multinet {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string pretty_type(const std::string& t, bool unicode) {
  if (!unicode) return t;
  if (t == "tensor") return "⊗";
  if (t == "par") return "⅋";
  if (t.rfind("tensor_bullet_", 0) == 0) return "⊗•" + t.substr(14);
  if (t.rfind("par_bullet_", 0) == 0) return "⅋•" + t.substr(11);
  if (t.rfind("tensor_", 0) == 0) return "⊗" + t.substr(7);
  if (t.rfind("par_", 0) == 0) return "⅋" + t.substr(4);
  return t;
}

}  // namespace

std::string to_dot(const MStructure& S, const std::string& name, bool unicode) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=TB;\n";
  for (const auto& v : S.graph().vertices()) {
    std::string text = v.label.empty() ? v.id.str() : v.label + " [" + v.id.str() + "]";
    os << "  " << quoted("v:" + v.id.str()) << " [shape=ellipse, label=" << quoted(text);
    if (S.is_border(v.id)) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t k = 0; k < S.graph().edge_count(); ++k) {
    const Hyperedge& e = S.graph().edges()[k];
    std::string node = "l" + std::to_string(k);
    os << "  " << quoted(node) << " [shape=box, label=" << quoted(pretty_type(e.type, unicode)) << "];\n";
    for (std::size_t i = 0; i < e.inputs.size(); ++i) {
      os << "  " << quoted("v:" + e.inputs[i].str()) << " -> " << quoted(node) << " [taillabel="
         << quoted("i" + std::to_string(i + 1)) << "];\n";
    }
    for (std::size_t i = 0; i < e.outputs.size(); ++i) {
      os << "  " << quoted(node) << " -> " << quoted("v:" + e.outputs[i].str()) << " [headlabel="
         << quoted("o" + std::to_string(i + 1)) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace multinet
