#ifndef SPECFAC_ISO_HPP
#define SPECFAC_ISO_HPP

#include <cstddef>

#include "specfac/graph.hpp"

namespace specfac {

// Backtracking isomorphism test with degree-partition refinement. Meant for
// small orders (extremal-equality checks, tree dedup); throws when either
// graph exceeds max_order.
bool is_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_order = 16);

} // namespace specfac

#endif
