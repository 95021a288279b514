#ifndef SPECFAC_GRAPH6_HPP
#define SPECFAC_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

struct Graph6Error : std::runtime_error {
    enum class Kind { MalformedHeader, TruncatedBits, TrailingGarbage };
    Kind kind;
    Graph6Error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// graph6 text format. First byte 63+n for n <= 62; '~' + three bytes for
// 63 <= n <= 258047. Edge bits run over the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups most-significant
// first, zero-padded, each group +63.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

struct CorpusLine {
    std::size_t line_no;    // 1-based position in the file
    std::string text;
};

// Newline-delimited graph6; '#'-prefixed comment lines and blank lines are
// skipped. Returns the remaining lines verbatim for per-line parsing.
std::vector<CorpusLine> read_graph6_lines(const std::string& path);

} // namespace specfac

#endif
