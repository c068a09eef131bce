#include "tropical/curve.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "tropical/error.hpp"
#include "tropical/matrix.hpp"

namespace trop {

namespace {

using json = nlohmann::json;

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
    return s;
}

std::string vec_text(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

void add_scaled(Vec& acc, long long w, const IntVec& u) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (u[i] != 0) acc[i] += Rational(static_cast<long>(w * u[i]));
}

// connected components of the contracted edges; cluster[v] = smallest member
std::vector<std::size_t> contracted_clusters(const TropicalCurve& c) {
    const auto& g = c.graph();
    std::vector<std::size_t> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!c.contracted(e)) continue;
        std::size_t a = find(g.edge(e).a), b = find(*g.edge(e).b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> out(g.num_vertices());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = find(v);
    return out;
}

Rational json_rational(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ValidationError(where + ": expected a rational string");
}

}  // namespace

IntVec CombinatorialType::flag_direction(std::size_t f) const {
    const auto& fl = graph.flag(f);
    return fl.end == 0 ? direction[fl.edge] : negate(direction[fl.edge]);
}

IntVec TropicalCurve::flag_direction(std::size_t f) const {
    const auto& fl = graph_.flag(f);
    return fl.end == 0 ? dir_[fl.edge] : negate(dir_[fl.edge]);
}

TropicalCurve TropicalCurve::build(AbstractGraph graph, int n, std::vector<Vec> positions,
                                   std::vector<IntVec> directions, bool check_balance) {
    if (n < 1) throw ValidationError("ambient dimension must be positive");
    if (!graph.is_connected()) throw ValidationError("graph is not connected");
    TropicalCurve c;
    c.n_ = n;
    if (positions.size() != graph.num_vertices()) throw ValidationError("one position per vertex is required");
    for (std::size_t v = 0; v < positions.size(); ++v)
        if (positions[v].size() != static_cast<std::size_t>(n))
            throw ValidationError("vertex '" + graph.vertex_id(v) + "': position must have " + std::to_string(n) + " entries");
    if (directions.size() != graph.num_edges()) directions.resize(graph.num_edges());
    c.contracted_.assign(graph.num_edges(), false);
    c.len_.assign(graph.num_edges(), Rational(0));
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& E = graph.edge(e);
        auto& d = directions[e];
        std::string where = "edge '" + E.id + "'";
        if (!d.empty()) {
            if (d.size() != static_cast<std::size_t>(n))
                throw ValidationError(where + ": direction must have " + std::to_string(n) + " entries");
            if (!is_zero(d) && !is_primitive(d)) throw ValidationError(where + ": non-primitive direction");
        }
        if (!E.bounded()) {
            if (d.empty() || is_zero(d)) throw ValidationError(where + ": unbounded edge needs a nonzero direction");
            continue;
        }
        Vec delta(n);
        for (int i = 0; i < n; ++i) delta[i] = positions[*E.b][i] - positions[E.a][i];
        if (is_zero(delta)) {
            if (d.empty()) throw ValidationError(where + ": contracted edge needs a direction (zero or virtual)");
            c.contracted_[e] = true;
            continue;
        }
        auto [u, len] = primitive_part(delta);
        if (!d.empty() && d != u) throw ValidationError(where + ": direction/position mismatch");
        d = u;
        c.len_[e] = len;
    }
    c.graph_ = std::move(graph);
    c.pos_ = std::move(positions);
    c.dir_ = std::move(directions);
    if (check_balance) {
        auto defects = check_balancing(c);
        if (!defects.empty())
            throw ValidationError("balancing failure at vertex " + join(defects[0].vertices) + ": residual " +
                                  vec_text(defects[0].residual));
    }
    return c;
}

TropicalCurve parse_curve(const json& doc) {
    try {
        if (!doc.is_object()) throw ValidationError("curve document must be a JSON object");
        if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
            throw ValidationError("missing integer field 'ambient_dim'");
        int n = doc["ambient_dim"].get<int>();
        if (n < 1) throw ValidationError("ambient_dim must be positive");
        if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ValidationError("missing array 'vertices'");
        if (!doc.contains("edges") || !doc["edges"].is_array()) throw ValidationError("missing array 'edges'");

        std::vector<std::string> ids;
        std::map<std::string, Vec> pos;
        for (const auto& v : doc["vertices"]) {
            if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
                throw ValidationError("every vertex needs a string 'id'");
            std::string id = v["id"].get<std::string>();
            if (!v.contains("position") || !v["position"].is_array())
                throw ValidationError("vertex '" + id + "': missing 'position'");
            Vec p;
            for (const auto& x : v["position"]) p.push_back(json_rational(x, "vertex '" + id + "'"));
            if (p.size() != static_cast<std::size_t>(n))
                throw ValidationError("vertex '" + id + "': position must have " + std::to_string(n) + " entries");
            if (pos.count(id)) throw ValidationError("duplicate vertex id '" + id + "'");
            ids.push_back(id);
            pos[id] = p;
        }
        std::vector<EdgeSpec> specs;
        std::map<std::string, IntVec> dirs;
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
                throw ValidationError("every edge needs a string 'id'");
            EdgeSpec s;
            s.id = e["id"].get<std::string>();
            std::string where = "edge '" + s.id + "'";
            if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 || !e["ends"][0].is_string())
                throw ValidationError(where + ": 'ends' must be [vertex, vertex|null]");
            s.a = e["ends"][0].get<std::string>();
            if (e["ends"][1].is_string()) s.b = e["ends"][1].get<std::string>();
            else if (!e["ends"][1].is_null()) throw ValidationError(where + ": 'ends' must be [vertex, vertex|null]");
            if (e.contains("weight")) {
                if (!e["weight"].is_number_integer()) throw ValidationError(where + ": weight must be an integer");
                s.weight = e["weight"].get<long long>();
            }
            if (e.contains("direction")) {
                if (!e["direction"].is_array()) throw ValidationError(where + ": direction must be an array");
                IntVec d;
                for (const auto& x : e["direction"]) {
                    if (!x.is_number_integer()) throw ValidationError(where + ": direction entries must be integers");
                    d.push_back(x.get<long long>());
                }
                dirs[s.id] = d;
            }
            specs.push_back(s);
        }
        AbstractGraph g = AbstractGraph::build(ids, specs);
        std::vector<Vec> positions;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) positions.push_back(pos[g.vertex_id(v)]);
        std::vector<IntVec> directions(g.num_edges());
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            auto it = dirs.find(g.edge(e).id);
            if (it != dirs.end()) directions[e] = it->second;
        }
        return TropicalCurve::build(std::move(g), n, std::move(positions), std::move(directions));
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("schema violation: ") + ex.what());
    }
}

TropicalCurve parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw ValidationError("'" + path + "' is not valid JSON: " + ex.what());
    }
    return parse_curve(doc);
}

json serialize_curve(const TropicalCurve& c) {
    const auto& g = c.graph();
    json doc;
    doc["ambient_dim"] = c.dim();
    doc["vertices"] = json::array();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        json p = json::array();
        for (const auto& x : c.position(v)) p.push_back(to_string(x));
        doc["vertices"].push_back({{"id", g.vertex_id(v)}, {"position", p}});
    }
    doc["edges"] = json::array();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& E = g.edge(e);
        json ends = json::array({g.vertex_id(E.a)});
        ends.push_back(E.b ? json(g.vertex_id(*E.b)) : json(nullptr));
        doc["edges"].push_back({{"id", E.id}, {"ends", ends}, {"weight", E.weight}, {"direction", c.edge_direction(e)}});
    }
    return doc;
}

std::vector<BalanceDefect> check_balancing(const TropicalCurve& c) {
    const auto& g = c.graph();
    const std::size_t n = static_cast<std::size_t>(c.dim());
    auto cluster = contracted_clusters(c);
    std::map<std::size_t, Vec> sums;
    std::map<std::size_t, std::vector<std::string>> members;
    std::vector<BalanceDefect> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto& acc = sums.try_emplace(cluster[v], Vec(n)).first->second;
        members[cluster[v]].push_back(g.vertex_id(v));
        bool all_virtual = true, any_contracted = false;
        Vec own(n);
        for (std::size_t f : g.flags_at(v)) {
            std::size_t e = g.flag(f).edge;
            IntVec u = c.flag_direction(f);
            if (c.contracted(e)) {
                any_contracted = true;
                if (is_zero(u)) all_virtual = false;
            } else {
                add_scaled(acc, g.edge(e).weight, u);
            }
            add_scaled(own, g.edge(e).weight, u);
        }
        // virtual directions are checked vertex by vertex when complete
        if (any_contracted && all_virtual && !is_zero(own)) out.push_back({{g.vertex_id(v)}, own});
    }
    for (auto& [root, acc] : sums)
        if (!is_zero(acc)) out.push_back({members[root], acc});
    std::sort(out.begin(), out.end(), [](const BalanceDefect& x, const BalanceDefect& y) { return x.vertices < y.vertices; });
    return out;
}

DegreeMap degree(const TropicalCurve& c) {
    DegreeMap d;
    const auto& g = c.graph();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& E = g.edge(e);
        if (E.bounded()) continue;
        IntVec w = c.edge_direction(e);
        for (auto& x : w) x *= E.weight;
        ++d.multiplicity[w];
        ++d.e;
    }
    return d;
}

bool is_immersive(const TropicalCurve& c) {
    for (std::size_t e = 0; e < c.graph().num_edges(); ++e)
        if (c.contracted(e)) return false;
    return true;
}

namespace {

// Image of an edge as {base + s * dir : 0 <= s <= end} (end absent for rays).
struct Piece {
    Vec base;
    Vec dir;
    std::optional<Rational> end;
};

Piece piece_of(const TropicalCurve& c, std::size_t e) {
    const auto& E = c.graph().edge(e);
    Piece p{c.position(E.a), to_rational(c.edge_direction(e)), std::nullopt};
    if (E.bounded()) p.end = c.length(e);
    return p;
}

bool in_range(const Rational& s, const Piece& p) { return sgn(s) >= 0 && (!p.end || s <= *p.end); }

Vec point_at(const Piece& p, const Rational& s) {
    Vec x = p.base;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * p.dir[i];
    return x;
}

// Intersection of two pieces: empty, a single point, or overlapping.
struct Meet {
    bool overlap = false;
    std::optional<Vec> point;
};

Meet meet(const Piece& p, const Piece& q) {
    const std::size_t n = p.base.size();
    Vec diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = q.base[i] - p.base[i];
    Matrix dirs = Matrix::from_rows({p.dir, q.dir}, n);
    Meet m;
    if (rank(dirs) == 2) {
        Matrix a(n, 2);
        for (std::size_t i = 0; i < n; ++i) a(i, 0) = p.dir[i], a(i, 1) = -q.dir[i];
        auto st = solve(a, diff);
        if (st && in_range((*st)[0], p) && in_range((*st)[1], q)) m.point = point_at(p, (*st)[0]);
        return m;
    }
    // parallel: collinear?
    if (rank(Matrix::from_rows({p.dir, diff}, n)) == 2) return m;
    // parametrize both along p.dir
    std::size_t k = 0;
    while (sgn(p.dir[k]) == 0) ++k;
    Rational lam = q.dir[k] / p.dir[k];  // q.dir = lam * p.dir
    Rational q0 = diff[k] / p.dir[k];
    // p covers [0, p.end]; q covers q0 + lam * [0, q.end]
    std::optional<Rational> lo, hi;  // q interval in p's parameter
    if (sgn(lam) > 0) {
        lo = q0;
        if (q.end) hi = q0 + lam * *q.end;
    } else {
        hi = q0;
        if (q.end) lo = q0 + lam * *q.end;
    }
    Rational a = lo ? std::max(*lo, Rational(0)) : Rational(0);
    std::optional<Rational> b = p.end;
    if (hi) b = b ? std::min(*b, *hi) : *hi;
    if (b && a > *b) return m;
    if (b && a == *b) {
        m.point = point_at(p, a);
        return m;
    }
    m.overlap = true;
    return m;
}

}  // namespace

bool is_embedded(const TropicalCurve& c) {
    if (!is_immersive(c)) return false;
    const auto& g = c.graph();
    std::set<Vec> seen;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!seen.insert(c.position(v)).second) return false;
    std::vector<Piece> pieces;
    for (std::size_t e = 0; e < g.num_edges(); ++e) pieces.push_back(piece_of(c, e));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        for (std::size_t f = e + 1; f < g.num_edges(); ++f) {
            Meet m = meet(pieces[e], pieces[f]);
            if (m.overlap) return false;
            if (!m.point) continue;
            // allowed only at a common endpoint
            bool ok = false;
            for (std::size_t x : g.flags_of_edge(e))
                for (std::size_t y : g.flags_of_edge(f)) {
                    std::size_t v = g.flag(x).vertex;
                    if (v == g.flag(y).vertex && c.position(v) == *m.point) ok = true;
                }
            if (!ok) return false;
        }
    }
    return true;
}

long long expected_dim(const TropicalCurve& c) {
    long long g = genus(c.graph());
    long long e = static_cast<long long>(c.graph().num_unbounded_edges());
    return e + (c.dim() - 3) * (1 - g);
}

Vec forced_contracted_vector(const TropicalCurve& c, std::size_t e) {
    const auto& g = c.graph();
    if (!c.contracted(e)) throw PreconditionError("edge '" + g.edge(e).id + "' is not contracted");
    const std::size_t a = g.edge(e).a, b = *g.edge(e).b;
    std::vector<bool> side(g.num_vertices(), false);
    std::vector<std::size_t> stack{b};
    side[b] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t f : g.flags_at(v)) {
            std::size_t x = g.flag(f).edge;
            if (x == e || !c.contracted(x)) continue;
            std::size_t w = g.other_end(x, v);
            if (w == a) throw PreconditionError("a loop is contracted to a point");
            if (!side[w]) side[w] = true, stack.push_back(w);
        }
    }
    Vec acc(static_cast<std::size_t>(c.dim()));
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (!side[v]) continue;
        for (std::size_t f : g.flags_at(v)) {
            std::size_t x = g.flag(f).edge;
            if (!c.contracted(x)) add_scaled(acc, g.edge(x).weight, c.flag_direction(f));
        }
    }
    return acc;
}

CombinatorialType combinatorial_type(const TropicalCurve& c) {
    const auto& g = c.graph();
    CombinatorialType t{g, c.dim(), {}};
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        IntVec d = c.edge_direction(e);
        if (c.contracted(e) && is_zero(d)) {
            Vec w = forced_contracted_vector(c, e);
            if (!is_zero(w)) {
                auto [u, k] = primitive_part(w);
                if (k == Rational(static_cast<long>(g.edge(e).weight))) d = u;
            }
        }
        t.direction.push_back(d);
    }
    return t;
}

ImageGraph contract_image(const TropicalCurve& c) {
    const auto& g = c.graph();
    auto cluster = contracted_clusters(c);
    std::map<std::size_t, std::size_t> vcount, ecount;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) ++vcount[cluster[v]];
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (c.contracted(e)) ++ecount[cluster[g.edge(e).a]];
    for (auto [root, k] : ecount)
        if (k >= vcount[root])
            throw PreconditionError("a loop is contracted to a point at vertex '" + g.vertex_id(root) + "'");

    ImageGraph img;
    std::vector<std::string> ids;
    std::map<std::size_t, std::string> name;
    for (auto [root, k] : vcount) {
        name[root] = g.vertex_id(root);  // vertices are sorted, the root is the smallest id
        ids.push_back(g.vertex_id(root));
    }
    std::vector<EdgeSpec> specs;
    std::vector<IntVec> dirs_by_id;
    std::map<std::string, IntVec> dir_of;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (c.contracted(e)) continue;
        const auto& E = g.edge(e);
        EdgeSpec s{E.id, name[cluster[E.a]], std::nullopt, E.weight};
        if (E.b) s.b = name[cluster[*E.b]];
        specs.push_back(s);
        dir_of[E.id] = c.edge_direction(e);
        img.edges.push_back(e);
    }
    AbstractGraph q = AbstractGraph::build(ids, specs);
    std::vector<Vec> positions;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) positions.push_back(c.position(g.vertex_index(q.vertex_id(v))));
    std::vector<IntVec> dirs;
    for (std::size_t e = 0; e < q.num_edges(); ++e) dirs.push_back(dir_of[q.edge(e).id]);
    img.curve = TropicalCurve::build(q, c.dim(), positions, dirs);

    const auto& qg = img.curve.graph();
    img.vertices.resize(qg.num_vertices());
    img.image_of.resize(g.num_vertices());
    for (std::size_t v = 0; v < qg.num_vertices(); ++v) {
        img.vertices[v].id = qg.vertex_id(v);
        img.vertices[v].sigma = qg.valence(v);
        img.vertices[v].s = qg.bounded_valence(v);
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::size_t iv = qg.vertex_index(name[cluster[v]]);
        img.image_of[v] = iv;
        img.vertices[iv].sources.push_back(v);
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (c.contracted(e)) img.vertices[img.image_of[g.edge(e).a]].contracted.push_back(e);
    return img;
}

std::string to_string(Deformability d) {
    switch (d) {
        case Deformability::Guaranteed: return "guaranteed";
        case Deformability::Refuted: return "refuted";
        case Deformability::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::vector<int> BinaryTree::leaves_below(int node) const {
    std::vector<int> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (nodes[x].leaf()) out.push_back(nodes[x].label);
        else stack.push_back(nodes[x].left), stack.push_back(nodes[x].right);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> BinaryTree::clusters() const {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!nodes[i].leaf()) out.push_back(leaves_below(static_cast<int>(i)));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t BinaryTree::internal_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const Node& x) { return !x.leaf(); }));
}

BinaryTree BinaryTree::caterpillar(const std::vector<int>& labels) {
    BinaryTree t;
    if (labels.empty()) return t;
    t.nodes.push_back({-1, -1, labels[0], 0});
    int cur = 0;
    for (std::size_t i = 1; i < labels.size(); ++i) {
        t.nodes.push_back({-1, -1, labels[i], 0});
        int leaf = static_cast<int>(t.nodes.size()) - 1;
        t.nodes.push_back({cur, leaf, 0, 0});
        cur = static_cast<int>(t.nodes.size()) - 1;
    }
    t.root = cur;
    return t;
}

}  // namespace trop
