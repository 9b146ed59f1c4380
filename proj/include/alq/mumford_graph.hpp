#pragma once

/**
 * @file mumford_graph.hpp
 * @brief Lengthed dual graphs with Atkin-Lehner involutions, their
 *        quotients and base changes, and the reversed-even-edge criterion
 *        for local points.
 *
 * Oriented edges are indexed so that 2k is edge k as declared and 2k+1 is
 * its opposite; opposition is r -> r ^ 1, a fixed-point-free involution by
 * construction. Endpoints and lengths are stored per oriented edge so that
 * hand-built graphs can violate (and validate() can report) the pairing
 * invariants.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alq {

enum class Parity { even, odd };
enum class InvolutionName { wp, wq, wpq };

const char* to_string(Parity parity);
const char* to_string(InvolutionName name);
std::optional<InvolutionName> parse_involution_name(std::string_view text);

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

constexpr EdgeIndex opposite(EdgeIndex r) { return r ^ 1; }

struct Vertex {
    std::string id;
    Parity parity = Parity::even;

    bool operator==(const Vertex&) const = default;
};

struct OrientedEdge {
    VertexIndex source = 0;
    VertexIndex target = 0;
    std::uint64_t length = 1;

    bool operator==(const OrientedEdge&) const = default;
};

/// A graph automorphism given by its action on vertices and oriented edges.
struct Involution {
    std::vector<EdgeIndex> edges;
    std::vector<VertexIndex> vertices;

    static Involution identity(std::size_t vertex_count, std::size_t oriented_edge_count);

    EdgeIndex on_edge(EdgeIndex r) const { return edges[r]; }
    VertexIndex on_vertex(VertexIndex v) const { return vertices[v]; }
    bool is_identity() const;

    bool operator==(const Involution&) const = default;
};

/// outer o inner
Involution compose(const Involution& outer, const Involution& inner);

struct LengthedQuotientGraph {
    std::vector<Vertex> vertices;
    std::vector<std::string> edge_ids;  // one per opposite pair
    std::vector<OrientedEdge> edges;    // 2 * edge_ids.size()
    Involution wp;
    Involution wq;
    Involution wpq;
    bool bipartite = true;

    /// Appends a vertex; all involutions fix it.
    VertexIndex add_vertex(std::string id, Parity parity);
    /// Appends the pair id: from -> to and ~id: to -> from; all involutions
    /// fix both. Returns the forward oriented edge.
    EdgeIndex add_edge(std::string id, VertexIndex from, VertexIndex to, std::uint64_t length);

    std::size_t oriented_edge_count() const { return edges.size(); }
    VertexIndex source(EdgeIndex r) const { return edges[r].source; }
    VertexIndex target(EdgeIndex r) const { return edges[r].target; }
    std::uint64_t length(EdgeIndex r) const { return edges[r].length; }

    const Involution& involution(InvolutionName name) const;
    Involution& involution(InvolutionName name);

    /// "e1" for a declared edge, "~e1" for its opposite.
    std::string edge_name(EdgeIndex r) const;
    std::optional<EdgeIndex> find_edge(std::string_view name) const;
    std::optional<VertexIndex> find_vertex(std::string_view id) const;

    bool operator==(const LengthedQuotientGraph&) const = default;
};

struct Violation {
    enum class Severity { error, warning };
    Severity severity = Severity::error;
    std::string message;
};

struct ValidateOptions {
    /// Also warn about even-length edges reversed by w_p, which cannot occur
    /// in the dual graph of a Shimura curve with p, q odd.
    bool shimura_dual_graph = false;
};

/// Empty iff every structural invariant holds (and, with the Shimura
/// option, no warning applies).
std::vector<Violation> validate(const LengthedQuotientGraph& graph, ValidateOptions options = {});

bool has_errors(const std::vector<Violation>& violations);

/// Vertices and oriented edges become w-orbits. A quotient edge fixed by w
/// has its length doubled (the stabilizer doubles); free orbits keep their
/// length. The other involutions descend and w descends to the identity.
///
/// Throws GraphError if the graph is invalid, if w maps some edge to its
/// opposite (quotient length undefined), or if another involution does not
/// commute with w.
LengthedQuotientGraph quotient_by_involution(const LengthedQuotientGraph& graph,
                                             InvolutionName w);

/// Quotient together with the projection of vertices and oriented edges.
struct QuotientWithMap {
    LengthedQuotientGraph graph;
    std::vector<VertexIndex> vertex_image;
    std::vector<EdgeIndex> edge_image;
};

QuotientWithMap quotient_with_map(const LengthedQuotientGraph& graph, InvolutionName w);

struct BaseChange {
    LengthedQuotientGraph graph;
    Involution frobenius;
};

/// Extension of ramification index e and residue degree f: lengths scale by
/// e, Frobenius acts as w_p^f. Throws GraphError unless e, f >= 1.
BaseChange base_change(const LengthedQuotientGraph& graph, std::uint64_t e, std::uint64_t f);

/// First oriented edge r with even length and frobenius(r) = ~r, if any.
std::optional<EdgeIndex> has_local_point(const LengthedQuotientGraph& graph,
                                         const Involution& frobenius);

enum class LiftCase {
    even_length_wpq_reversed,
    wq_fixed_wp_reversed,
};

const char* to_string(LiftCase c);

/// Classifies an edge s of G lying above an even, w_p-reversed edge of
/// G / w_q. s must satisfy (length even or w_q s = s) and
/// (w_p s = ~s or w_pq s = ~s); otherwise GraphError. The combination
/// "even length and w_p s = ~s" is excluded for odd p, q and also throws.
/// When w_q s = s and w_pq s = ~s, w_p s = ~s follows from w_pq = w_p w_q.
LiftCase lift_case_analysis(const LengthedQuotientGraph& graph, EdgeIndex s);

/// Vertices v with w(v) = v.
std::vector<VertexIndex> fixed_vertices(const Involution& w);

/// True iff w maps every even vertex to an odd one and vice versa.
bool exchanges_parity(const LengthedQuotientGraph& graph, const Involution& w);

}  // namespace alq
