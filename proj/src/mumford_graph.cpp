#include "alq/mumford_graph.hpp"

#include <limits>
#include <set>
#include <utility>

#include "alq/error.hpp"

namespace alq {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

constexpr InvolutionName kAllInvolutions[] = {InvolutionName::wp, InvolutionName::wq,
                                              InvolutionName::wpq};

void add_error(std::vector<Violation>& out, std::string message) {
    out.push_back({Violation::Severity::error, std::move(message)});
}

// Shape checks; the involution checks below index freely once these pass.
bool check_shape(const LengthedQuotientGraph& g, std::vector<Violation>& out) {
    const std::size_t nv = g.vertices.size();
    const std::size_t ne = g.edges.size();
    bool ok = true;
    if (ne != 2 * g.edge_ids.size()) {
        add_error(out, "oriented edge count " + std::to_string(ne) + " is not twice the " +
                           std::to_string(g.edge_ids.size()) + " declared edges");
        return false;
    }
    for (EdgeIndex r = 0; r < ne; ++r) {
        if (g.edges[r].source >= nv || g.edges[r].target >= nv) {
            add_error(out, "edge " + g.edge_name(r) + " has an endpoint out of range");
            ok = false;
        }
    }
    for (auto name : kAllInvolutions) {
        const auto& w = g.involution(name);
        if (w.edges.size() != ne || w.vertices.size() != nv) {
            add_error(out, std::string(to_string(name)) + " has the wrong size");
            ok = false;
            continue;
        }
        for (auto image : w.edges) {
            if (image >= ne) {
                add_error(out, std::string(to_string(name)) + " maps an edge out of range");
                ok = false;
                break;
            }
        }
        for (auto image : w.vertices) {
            if (image >= nv) {
                add_error(out, std::string(to_string(name)) + " maps a vertex out of range");
                ok = false;
                break;
            }
        }
    }
    return ok;
}

void check_involution(const LengthedQuotientGraph& g, InvolutionName name,
                      std::vector<Violation>& out) {
    const auto& w = g.involution(name);
    const std::string label = to_string(name);
    for (EdgeIndex r = 0; r < g.oriented_edge_count(); ++r) {
        const EdgeIndex image = w.on_edge(r);
        if (w.on_edge(image) != r) {
            add_error(out, label + " is not an involution on edge " + g.edge_name(r));
        }
        if (w.on_edge(opposite(r)) != opposite(image)) {
            add_error(out, label + " does not commute with opposition at edge " + g.edge_name(r));
        }
        if (g.length(image) != g.length(r)) {
            add_error(out, label + " does not preserve the length of edge " + g.edge_name(r));
        }
        if (g.source(image) != w.on_vertex(g.source(r)) ||
            g.target(image) != w.on_vertex(g.target(r))) {
            add_error(out, label + " does not commute with endpoints at edge " + g.edge_name(r));
        }
    }
    for (VertexIndex v = 0; v < g.vertices.size(); ++v) {
        if (w.on_vertex(w.on_vertex(v)) != v) {
            add_error(out, label + " is not an involution on vertex " + g.vertices[v].id);
        }
    }
}

}  // namespace

const char* to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

const char* to_string(InvolutionName name) {
    switch (name) {
        case InvolutionName::wp: return "wp";
        case InvolutionName::wq: return "wq";
        case InvolutionName::wpq: return "wpq";
    }
    return "?";
}

std::optional<InvolutionName> parse_involution_name(std::string_view text) {
    if (text == "wp") return InvolutionName::wp;
    if (text == "wq") return InvolutionName::wq;
    if (text == "wpq") return InvolutionName::wpq;
    return std::nullopt;
}

const char* to_string(LiftCase c) {
    return c == LiftCase::even_length_wpq_reversed ? "even_length_wpq_reversed"
                                                   : "wq_fixed_wp_reversed";
}

Involution Involution::identity(std::size_t vertex_count, std::size_t oriented_edge_count) {
    Involution w;
    w.vertices.resize(vertex_count);
    w.edges.resize(oriented_edge_count);
    for (std::size_t i = 0; i < vertex_count; ++i) w.vertices[i] = i;
    for (std::size_t i = 0; i < oriented_edge_count; ++i) w.edges[i] = i;
    return w;
}

bool Involution::is_identity() const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] != i) return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] != i) return false;
    return true;
}

Involution compose(const Involution& outer, const Involution& inner) {
    Involution out;
    out.edges.reserve(inner.edges.size());
    out.vertices.reserve(inner.vertices.size());
    for (auto r : inner.edges) out.edges.push_back(outer.edges.at(r));
    for (auto v : inner.vertices) out.vertices.push_back(outer.vertices.at(v));
    return out;
}

VertexIndex LengthedQuotientGraph::add_vertex(std::string id, Parity parity) {
    const VertexIndex v = vertices.size();
    vertices.push_back({std::move(id), parity});
    for (auto name : kAllInvolutions) involution(name).vertices.push_back(v);
    return v;
}

EdgeIndex LengthedQuotientGraph::add_edge(std::string id, VertexIndex from, VertexIndex to,
                                          std::uint64_t length) {
    const EdgeIndex r = edges.size();
    edge_ids.push_back(std::move(id));
    edges.push_back({from, to, length});
    edges.push_back({to, from, length});
    for (auto name : kAllInvolutions) {
        involution(name).edges.push_back(r);
        involution(name).edges.push_back(r + 1);
    }
    return r;
}

const Involution& LengthedQuotientGraph::involution(InvolutionName name) const {
    switch (name) {
        case InvolutionName::wp: return wp;
        case InvolutionName::wq: return wq;
        case InvolutionName::wpq: break;
    }
    return wpq;
}

Involution& LengthedQuotientGraph::involution(InvolutionName name) {
    return const_cast<Involution&>(std::as_const(*this).involution(name));
}

std::string LengthedQuotientGraph::edge_name(EdgeIndex r) const {
    const std::string& id = edge_ids.at(r / 2);
    return (r & 1) ? "~" + id : id;
}

std::optional<EdgeIndex> LengthedQuotientGraph::find_edge(std::string_view name) const {
    const bool reversed = !name.empty() && name.front() == '~';
    if (reversed) name.remove_prefix(1);
    for (std::size_t k = 0; k < edge_ids.size(); ++k) {
        if (edge_ids[k] == name) return 2 * k + (reversed ? 1 : 0);
    }
    return std::nullopt;
}

std::optional<VertexIndex> LengthedQuotientGraph::find_vertex(std::string_view id) const {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (vertices[v].id == id) return v;
    }
    return std::nullopt;
}

std::vector<Violation> validate(const LengthedQuotientGraph& g, ValidateOptions options) {
    std::vector<Violation> out;

    std::set<std::string_view> ids;
    for (const auto& v : g.vertices) {
        if (!ids.insert(v.id).second) add_error(out, "duplicate id " + v.id);
    }
    for (const auto& id : g.edge_ids) {
        if (!ids.insert(id).second) add_error(out, "duplicate id " + id);
    }

    if (!check_shape(g, out)) return out;

    for (EdgeIndex r = 0; r < g.oriented_edge_count(); ++r) {
        const auto& e = g.edges[r];
        const auto& back = g.edges[opposite(r)];
        if (e.length == 0) add_error(out, "edge " + g.edge_name(r) + " has length 0");
        if (r % 2 == 0 && e.length != back.length)
            add_error(out, "edge " + g.edge_name(r) + " and its opposite have different lengths");
        if (r % 2 == 0 && (back.source != e.target || back.target != e.source))
            add_error(out, "edge " + g.edge_name(r) + " and its opposite do not reverse endpoints");
        if (g.bipartite && g.vertices[e.source].parity == g.vertices[e.target].parity)
            add_error(out, "edge " + g.edge_name(r) + " joins two " +
                               to_string(g.vertices[e.source].parity) + " vertices");
    }

    for (auto name : kAllInvolutions) check_involution(g, name, out);

    if (compose(g.wp, g.wq) != g.wpq) add_error(out, "wpq is not wp o wq");

    if (options.shimura_dual_graph) {
        for (EdgeIndex r = 0; r < g.oriented_edge_count(); r += 2) {
            if (g.length(r) % 2 == 0 && g.wp.on_edge(r) == opposite(r)) {
                out.push_back({Violation::Severity::warning,
                               "edge " + g.edge_name(r) +
                                   " has even length and is reversed by wp, which cannot happen "
                                   "in a Shimura dual graph with p, q odd"});
            }
        }
    }
    return out;
}

bool has_errors(const std::vector<Violation>& violations) {
    for (const auto& v : violations)
        if (v.severity == Violation::Severity::error) return true;
    return false;
}

LengthedQuotientGraph quotient_by_involution(const LengthedQuotientGraph& g, InvolutionName name) {
    return quotient_with_map(g, name).graph;
}

QuotientWithMap quotient_with_map(const LengthedQuotientGraph& g, InvolutionName name) {
    for (const auto& v : validate(g)) {
        if (v.severity == Violation::Severity::error)
            throw GraphError("quotient of an invalid graph: " + v.message);
    }
    const Involution& w = g.involution(name);
    for (EdgeIndex r = 0; r < g.oriented_edge_count(); ++r) {
        if (w.on_edge(r) == opposite(r))
            throw GraphError(std::string(to_string(name)) + " reverses edge " + g.edge_name(r) +
                             "; quotient length is undefined");
    }
    for (auto other : kAllInvolutions) {
        const auto& u = g.involution(other);
        if (compose(u, w) != compose(w, u))
            throw GraphError(std::string(to_string(other)) + " does not commute with " +
                             to_string(name) + " and cannot descend");
    }

    LengthedQuotientGraph out;
    out.bipartite = g.bipartite;

    std::vector<VertexIndex> vertex_orbit(g.vertices.size(), kUnassigned);
    for (VertexIndex v = 0; v < g.vertices.size(); ++v) {
        if (vertex_orbit[v] != kUnassigned) continue;
        const VertexIndex image = w.on_vertex(v);
        if (g.vertices[image].parity != g.vertices[v].parity) out.bipartite = false;
        const VertexIndex orbit = out.vertices.size();
        out.vertices.push_back(g.vertices[v]);
        vertex_orbit[v] = orbit;
        vertex_orbit[image] = orbit;
    }

    // The smallest member of an orbit pair is always a declared (even) edge.
    std::vector<EdgeIndex> edge_orbit(g.oriented_edge_count(), kUnassigned);
    for (EdgeIndex r = 0; r < g.oriented_edge_count(); r += 2) {
        if (edge_orbit[r] != kUnassigned) continue;
        const EdgeIndex image = w.on_edge(r);
        const EdgeIndex forward = out.edges.size();
        edge_orbit[r] = forward;
        edge_orbit[image] = forward;
        edge_orbit[opposite(r)] = forward + 1;
        edge_orbit[opposite(image)] = forward + 1;

        const std::uint64_t length = g.length(r) * (image == r ? 2 : 1);
        out.edge_ids.push_back(g.edge_ids[r / 2]);
        out.edges.push_back({vertex_orbit[g.source(r)], vertex_orbit[g.target(r)], length});
        out.edges.push_back({vertex_orbit[g.target(r)], vertex_orbit[g.source(r)], length});
    }

    for (auto other : kAllInvolutions) {
        const auto& u = g.involution(other);
        auto& descended = out.involution(other);
        descended = Involution::identity(out.vertices.size(), out.edges.size());
        for (EdgeIndex r = 0; r < g.oriented_edge_count(); ++r)
            descended.edges[edge_orbit[r]] = edge_orbit[u.on_edge(r)];
        for (VertexIndex v = 0; v < g.vertices.size(); ++v)
            descended.vertices[vertex_orbit[v]] = vertex_orbit[u.on_vertex(v)];
    }
    return {std::move(out), std::move(vertex_orbit), std::move(edge_orbit)};
}

BaseChange base_change(const LengthedQuotientGraph& g, std::uint64_t e, std::uint64_t f) {
    if (e == 0 || f == 0) throw GraphError("base change needs e, f >= 1");
    BaseChange out{g, {}};
    for (auto& edge : out.graph.edges) edge.length *= e;
    out.frobenius = (f % 2 == 1) ? g.wp : Involution::identity(g.vertices.size(), g.edges.size());
    return out;
}

std::optional<EdgeIndex> has_local_point(const LengthedQuotientGraph& g,
                                         const Involution& frobenius) {
    if (frobenius.edges.size() != g.oriented_edge_count())
        throw GraphError("frobenius does not act on this graph");
    for (EdgeIndex r = 0; r < g.oriented_edge_count(); ++r) {
        if (g.length(r) % 2 == 0 && frobenius.on_edge(r) == opposite(r)) return r;
    }
    return std::nullopt;
}

LiftCase lift_case_analysis(const LengthedQuotientGraph& g, EdgeIndex s) {
    if (s >= g.oriented_edge_count()) throw GraphError("edge index out of range");
    const EdgeIndex back = opposite(s);
    const bool even = g.length(s) % 2 == 0;
    const bool wq_fixes = g.wq.on_edge(s) == s;
    const bool wp_reverses = g.wp.on_edge(s) == back;
    const bool wpq_reverses = g.wpq.on_edge(s) == back;
    const std::string name = g.edge_name(s);

    if (!(even || wq_fixes))
        throw GraphError("edge " + name + " has odd length and is moved by wq");
    if (!(wp_reverses || wpq_reverses))
        throw GraphError("edge " + name + " is reversed by neither wp nor wpq");
    if (even && wp_reverses)
        throw GraphError("edge " + name +
                         " has even length and is reversed by wp; excluded for odd p, q");
    if (wq_fixes && wpq_reverses) {
        if (!wp_reverses)
            throw GraphError("edge " + name + " is fixed by wq and reversed by wpq but not by wp; "
                             "wpq is not wp o wq");
        return LiftCase::wq_fixed_wp_reversed;
    }
    if (even && wpq_reverses) return LiftCase::even_length_wpq_reversed;
    return LiftCase::wq_fixed_wp_reversed;
}

std::vector<VertexIndex> fixed_vertices(const Involution& w) {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < w.vertices.size(); ++v)
        if (w.on_vertex(v) == v) out.push_back(v);
    return out;
}

bool exchanges_parity(const LengthedQuotientGraph& g, const Involution& w) {
    for (VertexIndex v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[w.on_vertex(v)].parity == g.vertices[v].parity) return false;
    }
    return true;
}

}  // namespace alq
