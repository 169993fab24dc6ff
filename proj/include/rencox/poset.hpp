#ifndef RENCOX_POSET_HPP_
#define RENCOX_POSET_HPP_

#include <string>
#include <utility>
#include <vector>

namespace rencox {

// leq must be the matrix of a partial order; returns its transitive
// reduction, the edges (i, j) with i covered by j.
std::vector<std::pair<int, int>> covering_relation(
    const std::vector<std::vector<bool>>& leq);

// DOT digraph of a covering relation, edges drawn upward.
std::string to_dot(const std::string& graph_name,
                   const std::vector<std::string>& labels,
                   const std::vector<std::pair<int, int>>& covers);

}  // namespace rencox

#endif  // RENCOX_POSET_HPP_
