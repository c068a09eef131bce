#include <algorithm>
#include <set>

#include "tropical/curve.hpp"
#include "tropical/error.hpp"
#include "tropical/lp.hpp"
#include "tropical/matrix.hpp"

namespace trop {

namespace {

void add_scaled(Vec& acc, long long w, const IntVec& u) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (u[i] != 0) acc[i] += Rational(static_cast<long>(w * u[i]));
}

void check_choice(const std::string& vid, const StarChoice& ch, const std::vector<std::string>& star) {
    std::vector<std::string> named = ch.leaf_edges;
    named.push_back(ch.root_edge);
    std::sort(named.begin(), named.end());
    if (named != star) throw ValidationError("vertex '" + vid + "': tree choice must use exactly the edges of the star");
    std::vector<int> labels;
    for (const auto& nd : ch.tree.nodes) {
        if (nd.leaf()) labels.push_back(nd.label);
        else if (nd.right < 0) throw ValidationError("vertex '" + vid + "': tree is not binary");
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1 || labels.size() != ch.leaf_edges.size())
            throw ValidationError("vertex '" + vid + "': tree leaves must be labelled 1.." +
                                  std::to_string(ch.leaf_edges.size()));
    if (ch.tree.root < 0 || ch.tree.nodes[ch.tree.root].leaf())
        throw ValidationError("vertex '" + vid + "': tree needs an internal root");
}

StarChoice default_choice(const TropicalCurve& c, std::size_t v) {
    const auto& g = c.graph();
    std::vector<std::string> edges, bounded;
    for (std::size_t f : g.flags_at(v)) {
        const auto& E = g.edge(g.flag(f).edge);
        edges.push_back(E.id);
        if (E.bounded()) bounded.push_back(E.id);
    }
    StarChoice ch;
    ch.root_edge = bounded.empty() ? edges.back() : bounded.back();
    for (const auto& id : edges)
        if (id != ch.root_edge) ch.leaf_edges.push_back(id);
    std::vector<int> labels;
    for (std::size_t i = 1; i <= ch.leaf_edges.size(); ++i) labels.push_back(static_cast<int>(i));
    ch.tree = BinaryTree::caterpillar(labels);
    return ch;
}

}  // namespace

CombinatorialType resolved_type(const TropicalCurve& c, const std::map<std::string, StarChoice>& choices) {
    if (!is_immersive(c)) throw PreconditionError("vertex resolution needs an immersive curve (contract the image first)");
    const auto& g = c.graph();
    const std::size_t n = static_cast<std::size_t>(c.dim());
    for (const auto& [vid, ch] : choices) {
        auto v = g.find_vertex(vid);
        if (!v) throw ValidationError("tree choice for unknown vertex '" + vid + "'");
        if (g.valence(*v) < 4) throw ValidationError("tree choice for vertex '" + vid + "' of valence < 4");
    }

    std::vector<std::string> vids;
    std::vector<EdgeSpec> specs = g.edge_specs();
    std::map<std::string, IntVec> dir;
    for (std::size_t e = 0; e < g.num_edges(); ++e) dir[g.edge(e).id] = c.edge_direction(e);
    std::set<std::string> taken(g.vertex_ids().begin(), g.vertex_ids().end());
    for (const auto& E : g.edges()) taken.insert(E.id);
    auto fresh = [&](const std::string& want) {
        if (!taken.insert(want).second) throw ValidationError("generated id '" + want + "' clashes with an existing id");
        return want;
    };

    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const std::string& vid = g.vertex_id(v);
        if (g.valence(v) < 4) {
            vids.push_back(vid);
            continue;
        }
        std::vector<std::string> star;
        std::map<std::string, Vec> outgoing;  // weighted direction leaving v
        for (std::size_t f : g.flags_at(v)) {
            const auto& E = g.edge(g.flag(f).edge);
            star.push_back(E.id);
            Vec w(n);
            add_scaled(w, E.weight, c.flag_direction(f));
            outgoing[E.id] = w;
        }
        std::sort(star.begin(), star.end());
        auto it = choices.find(vid);
        StarChoice ch = it != choices.end() ? it->second : default_choice(c, v);
        check_choice(vid, ch, star);

        const auto& T = ch.tree;
        std::vector<std::string> node_id(T.nodes.size());
        std::vector<int> parent(T.nodes.size(), -1);
        for (std::size_t k = 0; k < T.nodes.size(); ++k)
            if (!T.nodes[k].leaf()) parent[T.nodes[k].left] = parent[T.nodes[k].right] = static_cast<int>(k);
        int counter = 0;
        std::vector<int> order{T.root};  // preorder numbering of internal nodes
        while (!order.empty()) {
            int k = order.back();
            order.pop_back();
            if (T.nodes[k].leaf()) continue;
            node_id[k] = fresh(vid + "~" + std::to_string(++counter));
            vids.push_back(node_id[k]);
            order.push_back(T.nodes[k].right);
            order.push_back(T.nodes[k].left);
        }
        auto reattach = [&](const std::string& eid, const std::string& to) {
            for (auto& s : specs) {
                if (s.id != eid) continue;
                if (s.a == vid) s.a = to;
                else s.b = to;
            }
        };
        reattach(ch.root_edge, node_id[T.root]);
        for (std::size_t k = 0; k < T.nodes.size(); ++k) {
            if (T.nodes[k].leaf()) {
                reattach(ch.leaf_edges[T.nodes[k].label - 1], node_id[parent[k]]);
                continue;
            }
            if (static_cast<int>(k) == T.root) continue;
            Vec w(n);
            for (int lbl : T.leaves_below(static_cast<int>(k)))
                for (std::size_t i = 0; i < n; ++i) w[i] -= outgoing[ch.leaf_edges[lbl - 1]][i];
            if (is_zero(w))
                throw PreconditionError("vertex '" + vid + "': chosen tree has an internal edge of zero direction");
            auto [u, weight] = primitive_part(w);
            std::string eid = fresh(node_id[k] + "~e");
            specs.push_back({eid, node_id[k], node_id[parent[k]], weight.get_num().get_si()});
            dir[eid] = u;
        }
    }
    CombinatorialType t{AbstractGraph::build(vids, specs), c.dim(), {}};
    for (std::size_t e = 0; e < t.graph.num_edges(); ++e) t.direction.push_back(dir[t.graph.edge(e).id]);
    return t;
}

std::optional<TropicalCurve> realize_type(const CombinatorialType& t, const Vec& anchor) {
    const auto& g = t.graph;
    const std::size_t n = static_cast<std::size_t>(t.n);
    std::vector<std::size_t> bounded, col(g.num_edges(), 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (g.edge(e).bounded()) col[e] = bounded.size(), bounded.push_back(e);
    for (std::size_t e : bounded)
        if (is_zero(t.direction[e])) return std::nullopt;
    std::vector<std::size_t> order(g.num_edges());
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
    auto cycles = fundamental_cycles(g, order);
    Matrix a(0, bounded.size());
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < n; ++i) {
            Vec row(bounded.size());
            for (auto [e, s] : cyc.coef) row[col[e]] = static_cast<long>(s * t.direction[e][i]);
            a.append_row(row);
        }
    // lengths = 1 + y with y >= 0
    Vec ones(bounded.size(), Rational(1));
    Vec rhs = a.apply(ones);
    for (auto& x : rhs) x = -x;
    auto y = find_nonnegative(a, rhs);
    if (!y) return std::nullopt;
    std::vector<Vec> pos(g.num_vertices());
    std::vector<bool> seen(g.num_vertices(), false);
    pos[0] = anchor;
    seen[0] = true;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t f : g.flags_at(v)) {
            std::size_t e = g.flag(f).edge;
            if (!g.edge(e).bounded()) continue;
            std::size_t w = g.other_end(e, v);
            if (seen[w]) continue;
            Rational len = 1 + (*y)[col[e]];
            IntVec u = t.flag_direction(f);
            pos[w] = pos[v];
            for (std::size_t i = 0; i < n; ++i) pos[w][i] += len * static_cast<long>(u[i]);
            seen[w] = true;
            stack.push_back(w);
        }
    }
    return TropicalCurve::build(g, t.n, pos, t.direction);
}

Resolution resolve_to_trivalent(const TropicalCurve& c, const std::map<std::string, StarChoice>& choices) {
    if (!is_embedded(c)) throw PreconditionError("vertex resolution needs an embedded curve");
    Resolution r{resolved_type(c, choices), false, std::nullopt};
    r.realization = realize_type(r.type, c.position(0));
    r.feasible = r.realization.has_value();
    return r;
}

AssumptionReport check_assumption_a(const TropicalCurve& c) {
    AssumptionReport rep;
    const auto& g = c.graph();
    rep.trivalent = g.is_trivalent();
    try {
        contract_image(c);
        rep.no_contracted_loop = true;
    } catch (const PreconditionError&) {
        rep.deformable = Deformability::Refuted;
        rep.reason = "a loop is contracted to a point; only parallel transport deforms it";
        return rep;
    }
    if (is_immersive(c)) {
        rep.deformable = Deformability::Guaranteed;
        rep.reason = "the curve is immersive";
        return rep;
    }
    if (!rep.trivalent) {
        rep.reason = "the abstract graph is not 3-valent";
        return rep;
    }
    CombinatorialType t = combinatorial_type(c);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!c.contracted(e)) continue;
        Vec forced = forced_contracted_vector(c, e);
        Vec mine(forced.size());
        add_scaled(mine, g.edge(e).weight, t.direction[e]);
        if (is_zero(forced) || mine != forced) {
            rep.deformable = Deformability::Refuted;
            rep.reason = "balancing forces edge '" + g.edge(e).id + "' to stay contracted or contradicts its direction";
            return rep;
        }
    }
    rep.witness = realize_type(t, c.position(0));
    if (rep.witness) {
        rep.deformable = Deformability::Guaranteed;
        rep.reason = "an immersive curve of the same type exists";
    } else {
        rep.deformable = Deformability::Refuted;
        rep.reason = "no positive edge lengths close every cycle for this type";
    }
    return rep;
}

}  // namespace trop
