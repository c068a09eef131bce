#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropical/graph.hpp"
#include "tropical/rational.hpp"

namespace trop {

// A graph together with a direction for every edge (taken from ends[0]).
// Contracted edges may carry the zero vector.
struct CombinatorialType {
    AbstractGraph graph;
    int n = 0;
    std::vector<IntVec> direction;

    IntVec flag_direction(std::size_t f) const;
};

// Parametrized tropical curve: graph, vertex positions in Q^n and primitive
// edge directions. Lengths are derived from positions.
class TropicalCurve {
public:
    TropicalCurve() = default;
    // `directions[e]` may be empty for a bounded edge with distinct endpoint
    // positions; it is then derived. Throws ValidationError on any violated
    // invariant, and on balancing failure when `check_balance` is set.
    static TropicalCurve build(AbstractGraph graph, int n, std::vector<Vec> positions,
                               std::vector<IntVec> directions, bool check_balance = true);

    const AbstractGraph& graph() const { return graph_; }
    int dim() const { return n_; }
    const Vec& position(std::size_t v) const { return pos_[v]; }
    const IntVec& edge_direction(std::size_t e) const { return dir_[e]; }
    IntVec flag_direction(std::size_t f) const;
    bool contracted(std::size_t e) const { return contracted_[e]; }
    // lattice length of a bounded edge, zero when contracted
    const Rational& length(std::size_t e) const { return len_[e]; }

private:
    AbstractGraph graph_;
    int n_ = 0;
    std::vector<Vec> pos_;
    std::vector<IntVec> dir_;
    std::vector<bool> contracted_;
    std::vector<Rational> len_;
};

TropicalCurve parse_curve(const nlohmann::json& doc);
TropicalCurve parse_curve_file(const std::string& path);
nlohmann::json serialize_curve(const TropicalCurve& c);

struct BalanceDefect {
    std::vector<std::string> vertices;  // one vertex, or a whole contracted cluster
    Vec residual;
};
std::vector<BalanceDefect> check_balancing(const TropicalCurve& c);

struct DegreeMap {
    std::map<IntVec, long long> multiplicity;  // weighted direction -> count
    long long e = 0;
};
DegreeMap degree(const TropicalCurve& c);

bool is_immersive(const TropicalCurve& c);
// immersive, injective on vertices, and edge images meet only at shared vertices
bool is_embedded(const TropicalCurve& c);
long long expected_dim(const TropicalCurve& c);

// Weighted direction that a contracted edge must acquire (from ends[0]) in
// any deformation separating its endpoints. Requires the contracted part
// around the edge to be a tree.
Vec forced_contracted_vector(const TropicalCurve& c, std::size_t e);
// Type of the curve, with forced directions filled in for contracted edges
// that carry none (left zero when the forced vector is zero or not
// divisible by the edge weight).
CombinatorialType combinatorial_type(const TropicalCurve& c);

struct ImageVertex {
    std::string id;                        // smallest id among the sources
    std::vector<std::size_t> sources;      // vertices of the input graph
    std::vector<std::size_t> contracted;   // contracted edges inside
    std::size_t sigma = 0, s = 0;
};

struct ImageGraph {
    std::vector<ImageVertex> vertices;     // same order as curve.graph() vertices
    std::vector<std::size_t> image_of;     // input vertex -> image vertex
    std::vector<std::size_t> edges;        // non-contracted input edges
    TropicalCurve curve;                   // the quotient, immersive, same edge ids
};

// Throws PreconditionError when a loop is contracted to a point.
ImageGraph contract_image(const TropicalCurve& c);

enum class Deformability { Guaranteed, Refuted, Undetermined };
std::string to_string(Deformability d);

struct AssumptionReport {
    bool trivalent = false;
    bool no_contracted_loop = false;
    Deformability deformable = Deformability::Undetermined;
    std::string reason;
    std::optional<TropicalCurve> witness;  // immersive deformation when found
};
AssumptionReport check_assumption_a(const TropicalCurve& c);

// A rooted binary tree. Leaves carry labels; internal nodes carry a depth
// (meaningful only for trees built from Laurent data).
struct BinaryTree {
    struct Node {
        int left = -1, right = -1;
        int label = 0;  // leaves only
        long depth = 0;
        bool leaf() const { return left < 0; }
    };
    std::vector<Node> nodes;
    int root = -1;

    std::vector<int> leaves_below(int node) const;
    // leaf label sets of all internal nodes, sorted
    std::vector<std::vector<int>> clusters() const;
    std::size_t internal_count() const;
    static BinaryTree caterpillar(const std::vector<int>& labels);
};

// Replacement of the star of a higher-valent vertex: the root of `tree`
// attaches to `root_edge`, leaf label k attaches to `leaf_edges[k-1]`.
struct StarChoice {
    std::string root_edge;
    std::vector<std::string> leaf_edges;
    BinaryTree tree;
};

// Combinatorial type with every higher-valent star replaced by the chosen
// tree. Missing choices default to a caterpillar over the sorted edges.
CombinatorialType resolved_type(const TropicalCurve& c, const std::map<std::string, StarChoice>& choices);

struct Resolution {
    CombinatorialType type;
    bool feasible = false;
    std::optional<TropicalCurve> realization;
};
Resolution resolve_to_trivalent(const TropicalCurve& c, const std::map<std::string, StarChoice>& choices);

// Positive-length realization of a type: lengths >= 1 closing every cycle,
// with the smallest vertex placed at `anchor`. nullopt when infeasible.
std::optional<TropicalCurve> realize_type(const CombinatorialType& t, const Vec& anchor);

}  // namespace trop
