#include "specfac/graph6.hpp"

#include <fstream>

namespace specfac {

namespace {

bool valid_byte(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u >= 63 && u <= 126;
}

} // namespace

Graph from_graph6(std::string_view line) {
    using Kind = Graph6Error::Kind;
    if (line.empty())
        throw Graph6Error(Kind::MalformedHeader, "graph6: empty line");
    for (char c : line)
        if (!valid_byte(c))
            throw Graph6Error(Kind::MalformedHeader, "graph6: byte outside [63,126]");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error(Kind::MalformedHeader, "graph6: orders above 258047 not supported");
        if (line.size() < 4)
            throw Graph6Error(Kind::MalformedHeader, "graph6: truncated long-form order");
        n = 0;
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | static_cast<std::size_t>(static_cast<unsigned char>(line[i]) - 63);
        if (n < 63)
            throw Graph6Error(Kind::MalformedHeader, "graph6: long form used for n < 63");
        pos = 4;
    } else {
        n = static_cast<std::size_t>(static_cast<unsigned char>(line[0]) - 63);
        pos = 1;
    }

    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t ngroups = (nbits + 5) / 6;
    if (line.size() - pos < ngroups)
        throw Graph6Error(Kind::TruncatedBits, "graph6: fewer edge bytes than the order requires");
    if (line.size() - pos > ngroups)
        throw Graph6Error(Kind::TrailingGarbage, "graph6: extra bytes after edge bits");

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            unsigned group = static_cast<unsigned>(static_cast<unsigned char>(line[pos + bit / 6]) - 63);
            if ((group >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    // zero padding is part of the format; a set pad bit means extra data
    for (; bit < ngroups * 6; ++bit) {
        unsigned group = static_cast<unsigned>(static_cast<unsigned char>(line[pos + bit / 6]) - 63);
        if ((group >> (5 - bit % 6)) & 1u)
            throw Graph6Error(Kind::TrailingGarbage, "graph6: nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 258047)
        throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: order above 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    unsigned group = 0;
    int fill = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++fill == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                fill = 0;
            }
        }
    }
    if (fill > 0) out.push_back(static_cast<char>(63 + (group << (6 - fill))));
    return out;
}

std::vector<CorpusLine> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<CorpusLine> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(CorpusLine{no, line});
    }
    return out;
}

} // namespace specfac
