#include "alq/graph_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace alq {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

bool is_valid_id(const std::string& id) {
    return !id.empty() && id.front() != '~' && id.find("->") == std::string::npos &&
           id.find("→") == std::string::npos;
}

std::optional<std::pair<std::string, std::string>> split_arrow(const std::string& token) {
    for (std::string_view arrow : {"->", "→"}) {
        if (auto pos = token.find(arrow); pos != std::string::npos)
            return std::pair{token.substr(0, pos), token.substr(pos + arrow.size())};
    }
    return std::nullopt;
}

struct InvLine {
    std::size_t line = 0;
    InvolutionName name = InvolutionName::wp;
    std::vector<std::string> pairs;
};

// Vertex action read off the edge action (see header).
std::vector<VertexIndex> derive_vertex_action(const LengthedQuotientGraph& g,
                                              const std::vector<EdgeIndex>& edge_action) {
    std::vector<VertexIndex> out(g.vertices.size(), kUnset);
    for (EdgeIndex r = 0; r < g.oriented_edge_count(); ++r) {
        auto& slot = out[g.source(r)];
        if (slot == kUnset) slot = g.source(edge_action[r]);
    }
    for (VertexIndex v = 0; v < out.size(); ++v)
        if (out[v] == kUnset) out[v] = v;
    return out;
}

Involution build_involution(const LengthedQuotientGraph& g, const InvLine& inv) {
    std::vector<EdgeIndex> edge_map(g.oriented_edge_count(), kUnset);
    std::vector<VertexIndex> vertex_map(g.vertices.size(), kUnset);
    bool explicit_vertices = false;

    for (const auto& token : inv.pairs) {
        const auto parts = split_arrow(token);
        if (!parts) throw GraphParseError(inv.line, "expected <from>-><to>, got '" + token + "'");
        const auto& [from, to] = *parts;
        if (auto a = g.find_edge(from)) {
            const auto b = g.find_edge(to);
            if (!b) throw GraphParseError(inv.line, "'" + to + "' is not an edge");
            if (edge_map[*a] != kUnset)
                throw GraphParseError(inv.line, "edge '" + from + "' mapped twice");
            edge_map[*a] = *b;
        } else if (auto u = g.find_vertex(from)) {
            const auto v = g.find_vertex(to);
            if (!v) throw GraphParseError(inv.line, "'" + to + "' is not a vertex");
            if (vertex_map[*u] != kUnset)
                throw GraphParseError(inv.line, "vertex '" + from + "' mapped twice");
            vertex_map[*u] = *v;
            explicit_vertices = true;
        } else {
            throw GraphParseError(inv.line, "unknown edge or vertex '" + from + "'");
        }
    }

    Involution w;
    w.edges.resize(edge_map.size());
    for (EdgeIndex r = 0; r < edge_map.size(); ++r) {
        if (edge_map[r] != kUnset) {
            w.edges[r] = edge_map[r];
        } else if (edge_map[opposite(r)] != kUnset) {
            w.edges[r] = opposite(edge_map[opposite(r)]);
        } else {
            w.edges[r] = r;
        }
    }
    if (explicit_vertices) {
        w.vertices.resize(vertex_map.size());
        for (VertexIndex v = 0; v < vertex_map.size(); ++v)
            w.vertices[v] = vertex_map[v] == kUnset ? v : vertex_map[v];
    } else {
        w.vertices = derive_vertex_action(g, w.edges);
    }
    return w;
}

std::uint64_t parse_length(const std::string& text, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
        throw GraphParseError(line, "length must be a positive integer, got '" + text + "'");
    return value;
}

std::string involution_line(const LengthedQuotientGraph& g, InvolutionName name) {
    const auto& w = g.involution(name);
    std::string line = std::string("inv ") + to_string(name);

    for (EdgeIndex r = 0; r < g.oriented_edge_count(); r += 2) {
        const EdgeIndex back = opposite(r);
        if (w.on_edge(r) == r && w.on_edge(back) == back) continue;
        line += " " + g.edge_name(r) + "->" + g.edge_name(w.on_edge(r));
        if (w.on_edge(back) != opposite(w.on_edge(r)))
            line += " " + g.edge_name(back) + "->" + g.edge_name(w.on_edge(back));
    }

    if (derive_vertex_action(g, w.edges) != w.vertices) {
        bool any = false;
        for (VertexIndex v = 0; v < g.vertices.size(); ++v) {
            if (w.on_vertex(v) == v) continue;
            line += " " + g.vertices[v].id + "->" + g.vertices[w.on_vertex(v)].id;
            any = true;
        }
        // an explicit self pair switches the parser to explicit vertex mode
        if (!any && !g.vertices.empty()) line += " " + g.vertices[0].id + "->" + g.vertices[0].id;
    }
    return line;
}

}  // namespace

LengthedQuotientGraph parse_graph(std::istream& in) {
    LengthedQuotientGraph g;
    std::vector<InvLine> inv_lines;
    std::set<std::string> ids;
    std::array<bool, 3> seen_inv{};
    bool seen_bipartite = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto tokens = split_tokens(raw);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        const std::string& kind = tokens.front();

        if (kind == "v") {
            if (tokens.size() != 3) throw GraphParseError(line_no, "expected: v <id> <even|odd>");
            const auto& id = tokens[1];
            if (!is_valid_id(id)) throw GraphParseError(line_no, "invalid id '" + id + "'");
            if (!ids.insert(id).second) throw GraphParseError(line_no, "duplicate id '" + id + "'");
            Parity parity;
            if (tokens[2] == "even") {
                parity = Parity::even;
            } else if (tokens[2] == "odd") {
                parity = Parity::odd;
            } else {
                throw GraphParseError(line_no, "parity must be even or odd, got '" + tokens[2] + "'");
            }
            g.add_vertex(id, parity);
        } else if (kind == "e") {
            if (tokens.size() != 5)
                throw GraphParseError(line_no, "expected: e <id> <from> <to> <length>");
            const auto& id = tokens[1];
            if (!is_valid_id(id)) throw GraphParseError(line_no, "invalid id '" + id + "'");
            if (!ids.insert(id).second) throw GraphParseError(line_no, "duplicate id '" + id + "'");
            const auto from = g.find_vertex(tokens[2]);
            const auto to = g.find_vertex(tokens[3]);
            if (!from) throw GraphParseError(line_no, "unknown vertex '" + tokens[2] + "'");
            if (!to) throw GraphParseError(line_no, "unknown vertex '" + tokens[3] + "'");
            g.add_edge(id, *from, *to, parse_length(tokens[4], line_no));
        } else if (kind == "inv") {
            if (tokens.size() < 2) throw GraphParseError(line_no, "expected: inv <wp|wq|wpq> ...");
            const auto name = parse_involution_name(tokens[1]);
            if (!name) throw GraphParseError(line_no, "unknown involution '" + tokens[1] + "'");
            auto& seen = seen_inv[static_cast<std::size_t>(*name)];
            if (seen) throw GraphParseError(line_no, "involution " + tokens[1] + " given twice");
            seen = true;
            inv_lines.push_back({line_no, *name, {tokens.begin() + 2, tokens.end()}});
        } else if (kind == "bipartite") {
            if (tokens.size() != 2 || (tokens[1] != "yes" && tokens[1] != "no"))
                throw GraphParseError(line_no, "expected: bipartite <yes|no>");
            if (seen_bipartite) throw GraphParseError(line_no, "bipartite given twice");
            seen_bipartite = true;
            g.bipartite = tokens[1] == "yes";
        } else {
            throw GraphParseError(line_no, "unknown line kind '" + kind + "'");
        }
    }

    for (const auto& inv : inv_lines) g.involution(inv.name) = build_involution(g, inv);
    if (!seen_inv[static_cast<std::size_t>(InvolutionName::wpq)]) g.wpq = compose(g.wp, g.wq);
    return g;
}

LengthedQuotientGraph parse_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path.string());
    return parse_graph(in);
}

std::string serialize_graph(const LengthedQuotientGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices) out << "v " << v.id << ' ' << to_string(v.parity) << '\n';
    for (EdgeIndex r = 0; r < g.oriented_edge_count(); r += 2) {
        out << "e " << g.edge_ids[r / 2] << ' ' << g.vertices[g.source(r)].id << ' '
            << g.vertices[g.target(r)].id << ' ' << g.length(r) << '\n';
    }
    for (auto name : {InvolutionName::wp, InvolutionName::wq, InvolutionName::wpq})
        out << involution_line(g, name) << '\n';
    if (!g.bipartite) out << "bipartite no\n";
    return out.str();
}

}  // namespace alq
