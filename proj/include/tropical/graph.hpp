#pragma once
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trop {

struct EdgeSpec {
    std::string id;
    std::string a;                 // first endpoint
    std::optional<std::string> b;  // second endpoint, empty for an unbounded edge
    long long weight = 1;
};

struct Flag {
    std::string vertex;
    std::string edge;
    auto operator<=>(const Flag&) const = default;
};

// Weighted finite graph with bounded and unbounded edges. Vertices and edges
// are stored sorted by id and referred to by index everywhere else.
class AbstractGraph {
public:
    struct Edge {
        std::string id;
        std::size_t a;
        std::optional<std::size_t> b;
        long long weight;
        bool bounded() const { return b.has_value(); }
    };
    struct FlagRef {
        std::size_t vertex;
        std::size_t edge;
        int end;  // 0 for the ends[0] side of the edge, 1 for ends[1]
    };

    AbstractGraph() = default;
    // Validates ids, endpoints, weights, valence >= 1 and the absence of
    // self-loops. Connectivity is checked separately by the operations.
    static AbstractGraph build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_flags() const { return flags_.size(); }
    const std::string& vertex_id(std::size_t v) const { return vertices_[v]; }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const FlagRef& flag(std::size_t f) const { return flags_[f]; }
    Flag flag_name(std::size_t f) const;

    std::optional<std::size_t> find_vertex(const std::string& id) const;
    std::optional<std::size_t> find_edge(const std::string& id) const;
    std::size_t vertex_index(const std::string& id) const;  // throws if absent
    std::size_t edge_index(const std::string& id) const;    // throws if absent

    // Flags are sorted by (vertex id, edge id).
    const std::vector<std::size_t>& flags_at(std::size_t v) const { return at_[v]; }
    std::size_t flag_index(std::size_t v, std::size_t e) const;
    // Flag indices of an edge: one for unbounded edges, two (end 0, end 1) otherwise.
    const std::vector<std::size_t>& flags_of_edge(std::size_t e) const { return of_edge_[e]; }
    std::size_t other_end(std::size_t e, std::size_t v) const;

    std::size_t valence(std::size_t v) const { return at_[v].size(); }
    std::size_t bounded_valence(std::size_t v) const;
    std::size_t num_bounded_edges() const;
    std::size_t num_unbounded_edges() const;
    bool is_connected() const;
    // valence in {2, 3} everywhere
    bool is_trivalent() const;

    std::vector<EdgeSpec> edge_specs() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<FlagRef> flags_;
    std::vector<std::vector<std::size_t>> at_;
    std::vector<std::vector<std::size_t>> of_edge_;
    std::map<std::string, std::size_t> vindex_, eindex_;
};

struct Chain {
    std::vector<std::size_t> edges;     // in traversal order
    std::vector<std::size_t> vertices;  // edges.size() + 1 entries; closed chains repeat the start
    bool closed = false;
};

enum class TreeClass { U, B };

struct TreeComponent {
    std::vector<std::size_t> edges;
    TreeClass kind;
};

struct LoopDecomposition {
    std::vector<bool> in_loop;                       // per edge
    std::vector<std::size_t> loop_edges;             // sorted
    std::vector<std::vector<std::size_t>> bouquets;  // edge sets
    std::vector<Chain> chains;
    std::vector<TreeComponent> tree_components;
};

struct EulerCounts {
    std::size_t V, e_inn, e, e_tot;
};

// Fundamental cycle of a spanning tree: the cut edge traversed from ends[0]
// to ends[1], then the tree path back. coef[e] = +1 when e is traversed from
// its ends[0] to its ends[1], -1 for the opposite direction.
struct SignedCycle {
    std::size_t cut_edge;
    std::map<std::size_t, int> coef;
};
// Spanning tree of the bounded edges grown greedily in `order`; one cycle
// per bounded edge left out, listed in ascending edge index.
std::vector<SignedCycle> fundamental_cycles(const AbstractGraph& g, const std::vector<std::size_t>& order);

long long genus(const AbstractGraph& g);
LoopDecomposition loop_decomposition(const AbstractGraph& g);
EulerCounts euler_counts(const AbstractGraph& g);

}  // namespace trop
