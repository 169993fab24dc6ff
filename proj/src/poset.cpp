#include "rencox/poset.hpp"

namespace rencox {

std::vector<std::pair<int, int>> covering_relation(
    const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return covers;
}

std::string to_dot(const std::string& graph_name,
                   const std::vector<std::string>& labels,
                   const std::vector<std::pair<int, int>>& covers) {
  std::string out = "digraph \"" + graph_name + "\" {\n  rankdir=BT;\n";
  for (const std::string& label : labels)
    out += "  \"" + label + "\";\n";
  for (auto [i, j] : covers)
    out += "  \"" + labels[i] + "\" -> \"" + labels[j] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace rencox
