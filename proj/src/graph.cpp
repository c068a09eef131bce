#include "tropical/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropical/error.hpp"

namespace trop {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Number of connected components of the graph restricted to the bounded
// edges with keep[e] true.
std::size_t components(const AbstractGraph& g, const std::vector<bool>& keep) {
    UnionFind uf(g.num_vertices());
    std::size_t c = g.num_vertices();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& E = g.edge(e);
        if (E.bounded() && keep[e] && uf.unite(E.a, *E.b)) --c;
    }
    return c;
}

void require_connected(const AbstractGraph& g) {
    if (!g.is_connected()) throw PreconditionError("graph is not connected");
}

}  // namespace

AbstractGraph AbstractGraph::build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
    AbstractGraph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].empty()) throw ValidationError("empty vertex id");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw ValidationError("duplicate vertex id '" + vertices[i] + "'");
        g.vindex_[vertices[i]] = i;
    }
    g.vertices_ = std::move(vertices);
    if (g.vertices_.empty()) throw ValidationError("graph has no vertices");

    std::sort(edges.begin(), edges.end(), [](const EdgeSpec& x, const EdgeSpec& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& s = edges[i];
        if (s.id.empty()) throw ValidationError("empty edge id");
        if (i > 0 && s.id == edges[i - 1].id) throw ValidationError("duplicate edge id '" + s.id + "'");
        if (s.weight < 1) throw ValidationError("edge '" + s.id + "': weight must be >= 1");
        auto a = g.find_vertex(s.a);
        if (!a) throw ValidationError("edge '" + s.id + "': unknown vertex '" + s.a + "'");
        Edge E{s.id, *a, std::nullopt, s.weight};
        if (s.b) {
            auto b = g.find_vertex(*s.b);
            if (!b) throw ValidationError("edge '" + s.id + "': unknown vertex '" + *s.b + "'");
            if (*b == *a) throw ValidationError("edge '" + s.id + "': self-loops are not supported");
            E.b = *b;
        }
        g.eindex_[s.id] = i;
        g.edges_.push_back(E);
    }

    std::vector<FlagRef> raw;
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
        raw.push_back({g.edges_[e].a, e, 0});
        if (g.edges_[e].b) raw.push_back({*g.edges_[e].b, e, 1});
    }
    std::sort(raw.begin(), raw.end(), [](const FlagRef& x, const FlagRef& y) {
        return std::tie(x.vertex, x.edge) < std::tie(y.vertex, y.edge);
    });
    g.flags_ = raw;
    g.at_.assign(g.vertices_.size(), {});
    g.of_edge_.assign(g.edges_.size(), {});
    for (std::size_t f = 0; f < g.flags_.size(); ++f) {
        g.at_[g.flags_[f].vertex].push_back(f);
        g.of_edge_[g.flags_[f].edge].push_back(f);
    }
    for (auto& fl : g.of_edge_)
        std::sort(fl.begin(), fl.end(), [&](std::size_t x, std::size_t y) { return g.flags_[x].end < g.flags_[y].end; });
    for (std::size_t v = 0; v < g.vertices_.size(); ++v)
        if (g.at_[v].empty()) throw ValidationError("vertex '" + g.vertices_[v] + "' has valence 0");
    return g;
}

Flag AbstractGraph::flag_name(std::size_t f) const {
    return {vertices_[flags_[f].vertex], edges_[flags_[f].edge].id};
}

std::optional<std::size_t> AbstractGraph::find_vertex(const std::string& id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> AbstractGraph::find_edge(const std::string& id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) return std::nullopt;
    return it->second;
}

std::size_t AbstractGraph::vertex_index(const std::string& id) const {
    auto v = find_vertex(id);
    if (!v) throw ValidationError("unknown vertex '" + id + "'");
    return *v;
}

std::size_t AbstractGraph::edge_index(const std::string& id) const {
    auto e = find_edge(id);
    if (!e) throw ValidationError("unknown edge '" + id + "'");
    return *e;
}

std::size_t AbstractGraph::flag_index(std::size_t v, std::size_t e) const {
    for (std::size_t f : of_edge_[e])
        if (flags_[f].vertex == v) return f;
    throw ValidationError("vertex '" + vertices_[v] + "' is not an endpoint of edge '" + edges_[e].id + "'");
}

std::size_t AbstractGraph::other_end(std::size_t e, std::size_t v) const {
    const auto& E = edges_[e];
    return E.a == v ? *E.b : E.a;
}

std::size_t AbstractGraph::bounded_valence(std::size_t v) const {
    std::size_t s = 0;
    for (std::size_t f : at_[v]) s += edges_[flags_[f].edge].bounded();
    return s;
}

std::size_t AbstractGraph::num_bounded_edges() const {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& E) { return E.bounded(); }));
}

std::size_t AbstractGraph::num_unbounded_edges() const { return edges_.size() - num_bounded_edges(); }

bool AbstractGraph::is_connected() const {
    return components(*this, std::vector<bool>(edges_.size(), true)) == 1;
}

bool AbstractGraph::is_trivalent() const {
    for (const auto& fl : at_)
        if (fl.size() < 2 || fl.size() > 3) return false;
    return true;
}

std::vector<EdgeSpec> AbstractGraph::edge_specs() const {
    std::vector<EdgeSpec> out;
    for (const auto& E : edges_) {
        EdgeSpec s{E.id, vertices_[E.a], std::nullopt, E.weight};
        if (E.b) s.b = vertices_[*E.b];
        out.push_back(s);
    }
    return out;
}

std::vector<SignedCycle> fundamental_cycles(const AbstractGraph& g, const std::vector<std::size_t>& order) {
    require_connected(g);
    UnionFind uf(g.num_vertices());
    std::vector<bool> tree(g.num_edges(), false);
    for (std::size_t e : order) {
        const auto& E = g.edge(e);
        if (E.bounded() && uf.unite(E.a, *E.b)) tree[e] = true;
    }
    // potential of each vertex: signed tree edges on the path from vertex 0
    std::vector<std::map<std::size_t, int>> pot(g.num_vertices());
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t f : g.flags_at(v)) {
            std::size_t e = g.flag(f).edge;
            if (!tree[e]) continue;
            std::size_t w = g.other_end(e, v);
            if (seen[w]) continue;
            seen[w] = true;
            pot[w] = pot[v];
            int sign = g.edge(e).a == v ? 1 : -1;
            if ((pot[w][e] += sign) == 0) pot[w].erase(e);
            stack.push_back(w);
        }
    }
    std::vector<SignedCycle> out;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& E = g.edge(e);
        if (!E.bounded() || tree[e]) continue;
        SignedCycle c{e, {{e, 1}}};
        for (auto [x, s] : pot[E.a]) c.coef[x] += s;
        for (auto [x, s] : pot[*E.b]) c.coef[x] -= s;
        std::erase_if(c.coef, [](const auto& kv) { return kv.second == 0; });
        out.push_back(std::move(c));
    }
    return out;
}

long long genus(const AbstractGraph& g) {
    require_connected(g);
    return static_cast<long long>(g.num_bounded_edges()) - static_cast<long long>(g.num_vertices()) + 1;
}

EulerCounts euler_counts(const AbstractGraph& g) {
    require_connected(g);
    std::size_t inn = g.num_bounded_edges();
    return {g.num_vertices(), inn, g.num_edges() - inn, g.num_edges()};
}

LoopDecomposition loop_decomposition(const AbstractGraph& g) {
    require_connected(g);
    const std::size_t nE = g.num_edges(), nV = g.num_vertices();
    LoopDecomposition d;
    d.in_loop.assign(nE, false);
    std::vector<bool> keep(nE, true);
    std::size_t base = components(g, keep);
    for (std::size_t e = 0; e < nE; ++e) {
        if (!g.edge(e).bounded()) continue;
        keep[e] = false;
        if (components(g, keep) == base) d.in_loop[e] = true;
        keep[e] = true;
    }
    for (std::size_t e = 0; e < nE; ++e)
        if (d.in_loop[e]) d.loop_edges.push_back(e);

    // L-valence of each vertex, and L-flags in edge order
    std::vector<std::vector<std::size_t>> lflags(nV);
    for (std::size_t e : d.loop_edges) {
        lflags[g.edge(e).a].push_back(e);
        lflags[*g.edge(e).b].push_back(e);
    }
    for (auto& l : lflags) std::sort(l.begin(), l.end());

    // bouquets
    UnionFind uf(nV);
    for (std::size_t e : d.loop_edges) uf.unite(g.edge(e).a, *g.edge(e).b);
    std::map<std::size_t, std::vector<std::size_t>> bq;
    for (std::size_t e : d.loop_edges) bq[uf.find(g.edge(e).a)].push_back(e);
    for (auto& [root, edges] : bq) d.bouquets.push_back(edges);

    // chains: cut L at vertices of L-valence >= 3
    std::vector<bool> used(nE, false);
    auto walk = [&](std::size_t start, std::size_t first_edge, bool closed) {
        Chain c;
        c.closed = closed;
        c.vertices.push_back(start);
        std::size_t cur = start, e = first_edge;
        while (true) {
            used[e] = true;
            c.edges.push_back(e);
            cur = g.other_end(e, cur);
            c.vertices.push_back(cur);
            if (lflags[cur].size() != 2 || cur == start) break;
            std::size_t next = lflags[cur][0] == e ? lflags[cur][1] : lflags[cur][0];
            if (used[next]) break;
            e = next;
        }
        d.chains.push_back(std::move(c));
    };
    for (std::size_t v = 0; v < nV; ++v) {
        if (lflags[v].size() < 3) continue;
        for (std::size_t e : lflags[v])
            if (!used[e]) walk(v, e, false);
    }
    for (std::size_t e : d.loop_edges) {
        if (used[e]) continue;
        std::size_t a = g.edge(e).a, b = *g.edge(e).b;
        walk(std::min(a, b), e, true);
    }

    // tree components: non-L edges glued at vertices outside L
    std::vector<bool> on_loop(nV, false);
    for (std::size_t v = 0; v < nV; ++v) on_loop[v] = !lflags[v].empty();
    UnionFind te(nE);
    for (std::size_t v = 0; v < nV; ++v) {
        if (on_loop[v]) continue;
        std::optional<std::size_t> first;
        for (std::size_t f : g.flags_at(v)) {
            std::size_t e = g.flag(f).edge;
            if (d.in_loop[e]) continue;
            if (first) te.unite(*first, e);
            else first = e;
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t e = 0; e < nE; ++e)
        if (!d.in_loop[e]) comps[te.find(e)].push_back(e);
    for (auto& [root, edges] : comps) {
        std::size_t touching = 0;
        for (std::size_t e : edges)
            for (std::size_t f : g.flags_of_edge(e)) touching += on_loop[g.flag(f).vertex];
        d.tree_components.push_back({edges, touching == 1 ? TreeClass::U : TreeClass::B});
    }
    return d;
}

}  // namespace trop
