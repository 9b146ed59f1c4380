#pragma once

/**
 * @file graph_io.hpp
 * @brief Line-oriented text format for LengthedQuotientGraph.
 *
 *     # comment
 *     v <id> <even|odd>
 *     e <id> <from> <to> <length>        declares <id> and ~<id>
 *     inv <wp|wq|wpq> <x>-><y> ...       unlisted elements are fixed
 *     bipartite <yes|no>                 optional, default yes
 *
 * Missing wp or wq lines mean the identity; a missing wpq line means
 * wp o wq. In an inv line, pairs name either two oriented edges ("e1->~e1") or two
 * vertices. An edge whose opposite is listed but which is not listed itself
 * maps to the opposite of that image. If no vertex pair is listed the
 * vertex action is read off the edges: w(v) = source(w(r)) for the first
 * edge r leaving v; isolated vertices are fixed. serialize_graph() output
 * parses back to an identical graph whenever every edge pair has reversed
 * endpoints and equal lengths.
 */

#include <filesystem>
#include <istream>
#include <string>

#include "alq/error.hpp"
#include "alq/mumford_graph.hpp"

namespace alq {

class GraphParseError : public GraphError {
public:
    GraphParseError(std::size_t line, const std::string& what)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

LengthedQuotientGraph parse_graph(std::istream& in);
LengthedQuotientGraph parse_graph_file(const std::filesystem::path& path);

std::string serialize_graph(const LengthedQuotientGraph& graph);

}  // namespace alq
