#include "tropical/obstruction.hpp"

#include <algorithm>

#include "tropical/error.hpp"

namespace trop {

namespace {

void require_embedded(const TropicalCurve& c) {
    if (!is_embedded(c)) throw PreconditionError("the abundancy map needs an embedded curve");
}

std::vector<std::size_t> descending_edges(const AbstractGraph& g) {
    std::vector<std::size_t> order(g.num_edges());
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = g.num_edges() - 1 - e;
    return order;
}

}  // namespace

Vec flatten(const AbstractGraph& g, int n, const FlagAssignment& a) {
    Vec x(g.num_flags() * static_cast<std::size_t>(n));
    for (const auto& [fl, val] : a) {
        std::size_t f = g.flag_index(g.vertex_index(fl.vertex), g.edge_index(fl.edge));
        for (int i = 0; i < n; ++i) x[f * n + i] = val[i];
    }
    return x;
}

FlagAssignment unflatten(const AbstractGraph& g, int n, const Vec& x) {
    FlagAssignment a;
    for (std::size_t f = 0; f < g.num_flags(); ++f)
        a[g.flag_name(f)] = Vec(x.begin() + static_cast<std::ptrdiff_t>(f * n), x.begin() + static_cast<std::ptrdiff_t>((f + 1) * n));
    return a;
}

Subspace compatible_numbering_space(const AbstractGraph& g) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.valence(v) > 3)
            throw PreconditionError("compatible numberings need valence <= 3 (vertex '" + g.vertex_id(v) + "')");
    const std::size_t F = g.num_flags();
    Matrix m(0, F);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        Vec sum(F);
        std::size_t s = g.bounded_valence(v);
        for (std::size_t f : g.flags_at(v)) {
            if (!g.edge(g.flag(f).edge).bounded() || s == 1) {
                Vec r(F);
                r[f] = 1;
                m.append_row(r);
            } else {
                sum[f] = 1;
            }
        }
        if (s >= 2) m.append_row(sum);
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!g.edge(e).bounded()) continue;
        Vec r(F);
        for (std::size_t f : g.flags_of_edge(e)) r[f] = 1;
        m.append_row(r);
    }
    return kernel(m);
}

ObstructionReport dual_obstruction_chain(const CombinatorialType& t) {
    const auto& g = t.graph;
    const std::size_t n = static_cast<std::size_t>(t.n);
    if (!g.is_trivalent())
        throw PreconditionError("the chain method needs a 3-valent type; use the xi method for higher-valent vertices");
    LoopDecomposition d = loop_decomposition(g);
    for (std::size_t e : d.loop_edges)
        if (is_zero(t.direction[e]))
            throw PreconditionError("loop edge '" + g.edge(e).id + "' has no direction");

    const std::size_t M = d.chains.size();
    // flag -> (chain, sign)
    std::vector<std::pair<std::size_t, int>> value_of(g.num_flags(), {M, 0});
    ObstructionReport rep;
    rep.method = "chain";
    Matrix sys(0, M * n);
    for (std::size_t m = 0; m < M; ++m) {
        const Chain& ch = d.chains[m];
        std::vector<Vec> dirs;
        ChainInfo info;
        for (std::size_t k = 0; k < ch.edges.size(); ++k) {
            std::size_t e = ch.edges[k];
            info.edges.push_back(g.edge(e).id);
            dirs.push_back(to_rational(t.direction[e]));
            value_of[g.flag_index(ch.vertices[k], e)] = {m, 1};
            value_of[g.flag_index(ch.vertices[k + 1], e)] = {m, -1};
            Vec r(M * n);
            for (std::size_t i = 0; i < n; ++i) r[m * n + i] = static_cast<long>(t.direction[e][i]);
            sys.append_row(r);
        }
        info.perp = annihilator(Subspace::span(dirs, n));
        rep.chains.push_back(std::move(info));
    }
    // at every vertex the incoming chain values sum to zero
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<Vec> rows(n, Vec(M * n));
        bool any = false;
        for (std::size_t f : g.flags_at(v)) {
            auto [m, s] = value_of[f];
            if (m == M) continue;
            any = true;
            for (std::size_t i = 0; i < n; ++i) rows[i][m * n + i] += s;
        }
        if (!any) continue;
        for (auto& r : rows)
            if (!is_zero(r)) sys.append_row(r);
    }
    Subspace k = kernel(sys);
    std::vector<Vec> flat;
    for (const auto& b : k.basis()) {
        Vec x(g.num_flags() * n);
        for (std::size_t f = 0; f < g.num_flags(); ++f) {
            auto [m, s] = value_of[f];
            if (m == M) continue;
            for (std::size_t i = 0; i < n; ++i) x[f * n + i] = s * b[m * n + i];
        }
        flat.push_back(x);
    }
    rep.space = Subspace::span(flat, g.num_flags() * n);
    for (const auto& x : rep.space.basis()) rep.basis.push_back(unflatten(g, t.n, x));
    rep.dimH = static_cast<long long>(rep.space.dim());
    rep.superabundantDef1 = rep.dimH > 0;
    long long gen = genus(g);
    rep.paramDim = (t.n - 3) * (1 - gen) + static_cast<long long>(g.num_unbounded_edges()) + rep.dimH;
    return rep;
}

long long parameter_dimension(const CombinatorialType& t) { return dual_obstruction_chain(t).paramDim; }

AbundancyResult abundancy_map(const TropicalCurve& c) {
    require_embedded(c);
    const auto& g = c.graph();
    const std::size_t n = static_cast<std::size_t>(c.dim());
    LoopDecomposition d = loop_decomposition(g);
    auto cycles = fundamental_cycles(g, descending_edges(g));
    AbundancyResult r;
    std::map<std::size_t, std::size_t> col;
    for (std::size_t e : d.loop_edges) {
        col[e] = r.domain_edges.size();
        r.domain_edges.push_back(g.edge(e).id);
    }
    r.matrix = Matrix(0, r.domain_edges.size());
    for (const auto& cyc : cycles) {
        r.cut_edges.push_back(g.edge(cyc.cut_edge).id);
        for (std::size_t i = 0; i < n; ++i) {
            Vec row(r.domain_edges.size());
            for (auto [e, s] : cyc.coef) row[col.at(e)] = static_cast<long>(s * c.edge_direction(e)[i]);
            r.matrix.append_row(row);
        }
    }
    r.rank = rank(r.matrix);
    r.target_dim = cycles.size() * n;
    r.surjective = r.rank == r.target_dim;
    return r;
}

AbundancyResult reduced_abundancy_map(const TropicalCurve& c) {
    require_embedded(c);
    const auto& g = c.graph();
    const std::size_t n = static_cast<std::size_t>(c.dim());
    LoopDecomposition d = loop_decomposition(g);
    auto cycles = fundamental_cycles(g, descending_edges(g));
    AbundancyResult r;
    std::vector<bool> cut(g.num_edges(), false);
    for (const auto& cyc : cycles) {
        cut[cyc.cut_edge] = true;
        r.cut_edges.push_back(g.edge(cyc.cut_edge).id);
    }
    std::map<std::size_t, std::size_t> col;
    for (std::size_t e : d.loop_edges) {
        if (cut[e]) continue;
        col[e] = r.domain_edges.size();
        r.domain_edges.push_back(g.edge(e).id);
    }
    r.matrix = Matrix(0, r.domain_edges.size());
    for (const auto& cyc : cycles) {
        Subspace quot = annihilator(Subspace::span({to_rational(c.edge_direction(cyc.cut_edge))}, n));
        for (const auto& alpha : quot.basis()) {
            Vec row(r.domain_edges.size());
            for (auto [e, s] : cyc.coef) {
                if (e == cyc.cut_edge) continue;
                row[col.at(e)] = s * dot(alpha, c.edge_direction(e));
            }
            r.matrix.append_row(row);
        }
    }
    r.rank = rank(r.matrix);
    r.target_dim = cycles.size() * (n - 1);
    r.surjective = r.rank == r.target_dim;
    return r;
}

}  // namespace trop
