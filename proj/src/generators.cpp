#include "tropical/generators.hpp"

#include <algorithm>
#include <set>

#include "tropical/error.hpp"
#include "tropical/matrix.hpp"

namespace trop {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct RawGraph {
    int k = 0;
    std::vector<int> cap;
    std::vector<int> deg;
    std::vector<std::pair<int, int>> bounded;
};

// edge distance in the bounded graph
int distance(const RawGraph& g, int from, int to) {
    std::vector<int> dist(g.k, -1);
    std::vector<int> queue{from};
    dist[from] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (auto [a, b] : g.bounded) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && dist[w] < 0) dist[w] = dist[v] + 1, queue.push_back(w);
        }
    }
    return dist[to];
}

std::optional<RawGraph> try_raw(Rng& rng, int genus, int cap0, bool long_cycles) {
    RawGraph g;
    g.k = genus == 0 ? uniform(rng, 2, 5) : uniform(rng, std::max(3, 2 * genus), 2 * genus + 4);
    if (long_cycles) g.k = 2 * genus + uniform(rng, 4, 6);
    g.cap.assign(g.k, 3);
    g.cap[0] = cap0;
    g.deg.assign(g.k, 0);
    std::set<std::pair<int, int>> adj;
    auto link = [&](int a, int b) {
        g.bounded.emplace_back(a, b);
        adj.insert({std::min(a, b), std::max(a, b)});
        ++g.deg[a], ++g.deg[b];
    };
    for (int i = 1; i < g.k; ++i) {
        std::vector<int> cand;
        for (int j = 0; j < i; ++j)
            if (g.deg[j] < g.cap[j]) cand.push_back(j);
        if (cand.empty()) return std::nullopt;
        link(cand[uniform(rng, 0, static_cast<int>(cand.size()) - 1)], i);
    }
    for (int x = 0; x < genus; ++x) {
        std::vector<std::pair<int, int>> cand;
        for (int a = 0; a < g.k; ++a)
            for (int b = a + 1; b < g.k; ++b)
                if (g.deg[a] < g.cap[a] && g.deg[b] < g.cap[b] && !adj.count({a, b})) cand.emplace_back(a, b);
        if (cand.empty()) return std::nullopt;
        if (long_cycles) {
            std::vector<int> far;
            int best = -1;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                int d = distance(g, cand[i].first, cand[i].second);
                if (d > best) best = d, far.clear();
                if (d == best) far.push_back(static_cast<int>(i));
            }
            std::vector<std::pair<int, int>> kept;
            for (int i : far) kept.push_back(cand[i]);
            cand = kept;
        }
        auto [a, b] = cand[uniform(rng, 0, static_cast<int>(cand.size()) - 1)];
        link(a, b);
    }
    bool open = false;
    for (int v = 0; v < g.k; ++v) open = open || g.deg[v] < g.cap[v];
    if (!open) return std::nullopt;
    return g;
}

RawGraph raw_graph(Rng& rng, int genus, int cap0, bool long_cycles = false) {
    if (genus < 0) throw PreconditionError("genus must be non-negative");
    for (int attempt = 0; attempt < 10000; ++attempt)
        if (auto g = try_raw(rng, genus, cap0, long_cycles)) return *g;
    throw PreconditionError("could not build a graph of genus " + std::to_string(genus));
}

std::string name(char prefix, std::size_t i) {
    std::string s = std::to_string(i);
    return std::string(1, prefix) + (s.size() < 2 ? "0" : "") + s;
}

IntVec random_int_vec(Rng& rng, int n, int r) {
    IntVec v(n);
    for (auto& x : v) x = uniform(rng, -r, r);
    return v;
}

}  // namespace

AbstractGraph random_trivalent_graph(Rng& rng, int genus) {
    RawGraph raw = raw_graph(rng, genus, 3);
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (int v = 0; v < raw.k; ++v) vertices.push_back("v" + std::to_string(v));
    for (std::size_t i = 0; i < raw.bounded.size(); ++i)
        edges.push_back({name('b', i), vertices[raw.bounded[i].first], vertices[raw.bounded[i].second], 1});
    for (int v = 0; v < raw.k; ++v)
        for (int j = raw.deg[v]; j < raw.cap[v]; ++j) edges.push_back({name('u', edges.size()), vertices[v], std::nullopt, 1});
    return AbstractGraph::build(vertices, edges);
}

TropicalCurve random_curve(Rng& rng, const CurveOptions& opt) {
    const int n = opt.n;
    if (n < 2) throw PreconditionError("random curves need ambient dimension at least 2");
    const int cap0 = opt.higher_valence ? opt.higher_valence : 3;
    const int d = opt.affine_dim > 0 ? std::min(opt.affine_dim, n) : n;
    std::bernoulli_distribution sprout(opt.sprout_probability);

    for (int attempt = 0; attempt < 100000; ++attempt) {
        RawGraph raw = raw_graph(rng, opt.genus, cap0, opt.long_cycles);
        // random affine subspace base + A z
        std::vector<IntVec> A(d);
        for (int j = 0; j < d; ++j) {
            if (d == n) A[j] = IntVec(n, 0), A[j][j] = 1;
            else A[j] = random_int_vec(rng, n, 2);
        }
        auto in_subspace = [&](int r) {
            IntVec out(n, 0);
            for (int j = 0; j < d; ++j) {
                long long z = uniform(rng, -r, r);
                for (int i = 0; i < n; ++i) out[i] += z * A[j][i];
            }
            return out;
        };
        IntVec base = random_int_vec(rng, n, 3);

        std::vector<Vec> pos(raw.k, Vec(n));
        std::vector<int> interior_index(raw.k, -1);
        int ni = 0;
        for (int v = 0; v < raw.k; ++v) {
            if (raw.deg[v] == raw.cap[v]) {
                interior_index[v] = ni++;
                continue;
            }
            IntVec p = in_subspace(4);
            for (int i = 0; i < n; ++i) pos[v][i] = static_cast<long>(base[i] + p[i]);
        }
        std::vector<long> lambda(raw.bounded.size());
        for (auto& l : lambda) l = uniform(rng, 1, 3);
        if (ni > 0) {
            // weighted Laplacian on the interior vertices
            Matrix L(ni, ni);
            std::vector<Vec> rhs(n, Vec(ni));
            for (std::size_t e = 0; e < raw.bounded.size(); ++e) {
                auto [a, b] = raw.bounded[e];
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                    int ix = interior_index[x];
                    if (ix < 0) continue;
                    L(ix, ix) += lambda[e];
                    if (interior_index[y] >= 0) L(ix, interior_index[y]) -= lambda[e];
                    else
                        for (int i = 0; i < n; ++i) rhs[i][ix] += lambda[e] * pos[y][i];
                }
            }
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                auto x = solve(L, rhs[i]);
                if (!x) ok = false;
                else
                    for (int v = 0; v < raw.k; ++v)
                        if (interior_index[v] >= 0) pos[v][i] = (*x)[interior_index[v]];
            }
            if (!ok) continue;
        }

        // weighted edge vectors W = lambda (p_b - p_a), cleared of denominators
        Integer den = 1;
        for (const auto& p : pos)
            for (const auto& x : p) den = lcm(den, x.get_den());
        std::vector<Vec> W(raw.bounded.size(), Vec(n));
        for (std::size_t e = 0; e < raw.bounded.size(); ++e)
            for (int i = 0; i < n; ++i)
                W[e][i] = lambda[e] * (pos[raw.bounded[e].second][i] - pos[raw.bounded[e].first][i]) * den;

        struct Leg {
            int vertex;
            Vec w;
        };
        std::vector<Leg> legs;
        bool ok = true;
        for (int v = 0; v < raw.k && ok; ++v) {
            int m = raw.cap[v] - raw.deg[v];
            if (m == 0) continue;
            Vec R(n);
            for (std::size_t e = 0; e < raw.bounded.size(); ++e) {
                if (raw.bounded[e].first == v)
                    for (int i = 0; i < n; ++i) R[i] -= W[e][i];
                if (raw.bounded[e].second == v)
                    for (int i = 0; i < n; ++i) R[i] += W[e][i];
            }
            for (int j = 0; j + 1 < m; ++j) {
                IntVec x = in_subspace(3);
                Vec xv = to_rational(x);
                for (int i = 0; i < n; ++i) R[i] -= xv[i];
                legs.push_back({v, xv});
            }
            legs.push_back({v, R});
        }

        std::vector<Vec> positions = pos;
        std::vector<std::pair<int, int>> bounded = raw.bounded;
        std::vector<Vec> bounded_w = W;
        std::vector<Leg> final_legs;
        for (const auto& leg : legs) {
            if (is_zero(leg.w) || !sprout(rng)) {
                final_legs.push_back(leg);
                continue;
            }
            // replace the leg by a bounded edge ending in a new 3-valent vertex
            int nv = static_cast<int>(positions.size());
            auto [u, c] = primitive_part(leg.w);
            long step = uniform(rng, 1, 2);
            Vec p = positions[leg.vertex];
            for (int i = 0; i < n; ++i) p[i] += step * Rational(static_cast<long>(u[i]));
            positions.push_back(p);
            bounded.emplace_back(leg.vertex, nv);
            bounded_w.push_back(leg.w);
            Vec x = to_rational(in_subspace(3)), y(n);
            for (int i = 0; i < n; ++i) y[i] = leg.w[i] - x[i];
            final_legs.push_back({nv, x});
            final_legs.push_back({nv, y});
        }

        Integer g = 0;
        for (const auto* group : {&bounded_w}) {
            for (const auto& w : *group)
                for (const auto& x : w) g = gcd(g, x.get_num());
        }
        for (const auto& leg : final_legs)
            for (const auto& x : leg.w) g = gcd(g, x.get_num());
        if (g == 0) continue;

        std::vector<std::string> vertices;
        for (std::size_t v = 0; v < positions.size(); ++v) vertices.push_back("v" + std::to_string(v));
        std::vector<EdgeSpec> edges;
        std::vector<IntVec> dirs;
        const Integer cap = 1000000000;
        auto as_weight = [&](const Vec& w, IntVec& u, long long& weight) {
            if (is_zero(w)) return false;
            for (const auto& x : w)
                if (abs(x.get_num()) > cap * g) return false;
            Vec s(n);
            for (int i = 0; i < n; ++i) s[i] = w[i] / g;
            auto [pu, c] = primitive_part(s);
            u = pu;
            weight = c.get_num().get_si();
            return true;
        };
        for (std::size_t e = 0; e < bounded.size() && ok; ++e) {
            IntVec u;
            long long weight;
            if (!as_weight(bounded_w[e], u, weight)) ok = false;
            edges.push_back({name('b', e), vertices[bounded[e].first], vertices[bounded[e].second], weight});
            dirs.emplace_back();
        }
        for (const auto& leg : final_legs) {
            if (!ok) break;
            IntVec u;
            long long weight;
            if (!as_weight(leg.w, u, weight)) ok = false;
            edges.push_back({name('u', edges.size()), vertices[leg.vertex], std::nullopt, weight});
            dirs.push_back(u);
        }
        if (!ok) continue;
        try {
            TropicalCurve c = TropicalCurve::build(AbstractGraph::build(vertices, edges), n, positions, dirs);
            if (opt.require_embedded && !is_embedded(c)) continue;
            return c;
        } catch (const ValidationError&) {
            continue;
        }
    }
    throw PreconditionError("random curve generation did not converge");
}

std::vector<LaurentSeries> random_laurent_tuple(Rng& rng, int k) {
    if (k < 1) throw PreconditionError("need at least one series");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<LaurentSeries> p{LaurentSeries()};
        for (int j = 1; j < k; ++j) {
            // few leading exponents and coefficients, so that prefixes are shared
            std::vector<std::pair<long, Rational>> terms;
            long e = uniform(rng, -2, 0);
            int count = uniform(rng, 1, 3);
            for (int t = 0; t < count; ++t) {
                terms.emplace_back(e, Rational(uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1)));
                e += uniform(rng, 1, 2);
            }
            p.emplace_back(terms);
        }
        std::sort(p.begin(), p.end(), laurent_less);
        bool distinct = true;
        for (int j = 1; j < k; ++j) distinct = distinct && !(p[j] == p[j - 1]);
        if (!distinct || !p[0].is_zero()) continue;
        try {
            phylo_tree(p);
            return p;
        } catch (const PreconditionError&) {
        }
    }
    throw PreconditionError("random Laurent tuple generation did not converge");
}

}  // namespace trop
