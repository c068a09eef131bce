#include "tropical/xi.hpp"

#include <algorithm>
#include <set>

#include "tropical/error.hpp"

namespace trop {

namespace {

using json = nlohmann::json;

// star edges of v in sorted order (flags at v are sorted by edge id)
std::vector<std::size_t> star_flags(const AbstractGraph& g, std::size_t v) { return g.flags_at(v); }

// position of the edge at infinity within the star, for a layout with or
// without an explicit infinity entry
template <class T>
std::size_t infinity_slot(const TropicalCurve& image, std::size_t v, const std::vector<std::optional<T>>& entries,
                          const std::string& what) {
    const auto& g = image.graph();
    auto flags = star_flags(g, v);
    const std::size_t k = flags.size();
    const std::string& vid = g.vertex_id(v);
    if (entries.size() == k) {
        std::size_t slot = k, count = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (!entries[j]) slot = j, ++count;
        if (count != 1) throw ValidationError(what + " for vertex '" + vid + "': exactly one entry must be at infinity");
        return slot;
    }
    if (entries.size() + 1 != k)
        throw ValidationError(what + " for vertex '" + vid + "': expected " + std::to_string(k - 1) + " or " +
                              std::to_string(k) + " entries");
    for (const auto& x : entries)
        if (!x) throw ValidationError(what + " for vertex '" + vid + "': infinity needs one entry per edge");
    std::size_t slot = k - 1;
    for (std::size_t j = 0; j < k; ++j)
        if (g.edge(g.flag(flags[j]).edge).bounded()) slot = j;
    return slot;
}

template <class T>
std::vector<T> finite_entries(const std::vector<std::optional<T>>& entries, std::size_t slot, std::size_t k) {
    std::vector<T> out;
    if (entries.size() == k) {
        for (std::size_t j = 0; j < k; ++j)
            if (j != slot) out.push_back(*entries[j]);
    } else {
        for (const auto& x : entries) out.push_back(*x);
    }
    return out;
}

// canonical image vertex of a key naming any vertex of the input curve
std::size_t image_vertex(const TropicalCurve& c, const ImageGraph& img, const std::string& key) {
    auto v = c.graph().find_vertex(key);
    if (!v) throw ValidationError("data given for unknown vertex '" + key + "'");
    return img.image_of[*v];
}

}  // namespace

Configuration parse_configuration(const json& doc) {
    try {
        if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_object())
            throw ValidationError("configuration must have an object 'vertices'");
        Configuration cfg;
        for (const auto& [vid, entry] : doc["vertices"].items()) {
            if (!entry.contains("coords") || !entry["coords"].is_array())
                throw ValidationError("configuration for vertex '" + vid + "' needs 'coords'");
            VertexCoords vc;
            for (const auto& x : entry["coords"]) {
                if (x.is_null() || (x.is_string() && x.get<std::string>() == "inf")) vc.coords.emplace_back(std::nullopt);
                else if (x.is_string()) vc.coords.emplace_back(parse_rational(x.get<std::string>()));
                else if (x.is_number_integer()) vc.coords.emplace_back(Rational(x.get<long>()));
                else throw ValidationError("configuration for vertex '" + vid + "': bad coordinate");
            }
            cfg[vid] = vc;
        }
        return cfg;
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("schema violation: ") + ex.what());
    }
}

LocalVertexModel local_model_at(const TropicalCurve& image, std::size_t v, const VertexCoords& vc,
                                std::vector<std::string>* edge_order) {
    const auto& g = image.graph();
    auto flags = star_flags(g, v);
    const std::size_t k = flags.size();
    std::size_t slot = infinity_slot(image, v, vc.coords, "coordinates");
    std::vector<Rational> coords = finite_entries(vc.coords, slot, k);
    LocalVertexModel m;
    m.r = static_cast<int>(k) - 2;
    m.n = image.dim();
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < k; ++j)
        if (j != slot) order.push_back(flags[j]);
    order.push_back(flags[slot]);
    if (edge_order) edge_order->clear();
    for (std::size_t f : order) {
        const auto& E = g.edge(g.flag(f).edge);
        if (edge_order) edge_order->push_back(E.id);
        m.bounded.push_back(E.bounded());
        if (m.theta.size() < k - 1) m.theta.push_back({E.weight, image.flag_direction(f)});
    }
    m.coords = coords;
    std::set<Rational> seen(coords.begin(), coords.end());
    if (seen.size() != coords.size())
        throw ValidationError("repeated coordinates at vertex '" + g.vertex_id(v) + "'");
    return m;
}

ObstructionReport xi_map(const TropicalCurve& c, const Configuration& cfg) {
    ImageGraph img = contract_image(c);
    const TropicalCurve& im = img.curve;
    const auto& g = im.graph();
    const std::size_t n = static_cast<std::size_t>(im.dim()), N = g.num_flags() * n;

    std::map<std::size_t, const VertexCoords*> coords;
    for (const auto& [key, vc] : cfg) {
        std::size_t v = image_vertex(c, img, key);
        if (g.valence(v) < 4)
            throw ValidationError("configuration given for vertex '" + key + "', whose image is not higher-valent");
        coords[v] = &vc;
    }

    LoopDecomposition d = loop_decomposition(g);
    Matrix sys(0, N);
    auto unit_rows = [&](std::size_t f) {
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            Vec row(N);
            row[f * n + c2] = 1;
            sys.append_row(row);
        }
    };
    for (std::size_t f = 0; f < g.num_flags(); ++f) {
        std::size_t e = g.flag(f).edge;
        if (!d.in_loop[e]) {
            unit_rows(f);
            continue;
        }
        Vec row(N);
        IntVec u = im.flag_direction(f);
        for (std::size_t i = 0; i < n; ++i) row[f * n + i] = static_cast<long>(u[i]);
        sys.append_row(row);
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!g.edge(e).bounded()) continue;
        auto fl = g.flags_of_edge(e);
        for (std::size_t i = 0; i < n; ++i) {
            Vec row(N);
            row[fl[0] * n + i] = 1;
            row[fl[1] * n + i] = 1;
            sys.append_row(row);
        }
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.valence(v) >= 4) {
            auto it = coords.find(v);
            if (it == coords.end())
                throw PreconditionError("missing configuration for higher-valent vertex '" + g.vertex_id(v) + "'");
            std::vector<std::string> order;
            LocalVertexModel m = local_model_at(im, v, *it->second, &order);
            std::vector<std::size_t> offset;
            for (const auto& eid : order) offset.push_back(g.flag_index(v, g.edge_index(eid)) * n);
            auto edges = m.theta;
            edges.push_back({g.edge(g.edge_index(order.back())).weight, im.flag_direction(offset.back() / n)});
            append_residue_rows(sys, offset, edges, m.bounded, m.coords, m.n);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Vec row(N);
            for (std::size_t f : g.flags_at(v)) row[f * n + i] = 1;
            sys.append_row(row);
        }
    }
    ObstructionReport rep;
    rep.method = "xi";
    rep.space = kernel(sys);
    for (const auto& x : rep.space.basis()) rep.basis.push_back(unflatten(g, im.dim(), x));
    rep.dimH = static_cast<long long>(rep.space.dim());
    rep.superabundantDef1 = rep.dimH > 0;
    rep.typeLevel = !is_immersive(c);
    long long gen = genus(g);
    rep.paramDim = (im.dim() - 3) * (1 - gen) + static_cast<long long>(g.num_unbounded_edges()) + rep.dimH;
    return rep;
}

Genus1Verdict genus1_loop_criterion(const TropicalCurve& c) {
    ImageGraph img = contract_image(c);
    const auto& im = img.curve;
    const auto& g = im.graph();
    if (genus(g) != 1) throw PreconditionError("the loop criterion needs a genus-one curve");
    LoopDecomposition d = loop_decomposition(g);
    std::set<std::size_t> loop_vertices;
    for (std::size_t e : d.loop_edges) loop_vertices.insert(g.edge(e).a), loop_vertices.insert(*g.edge(e).b);
    std::vector<Vec> dirs;
    for (std::size_t v : loop_vertices)
        for (std::size_t f : g.flags_at(v)) dirs.push_back(to_rational(im.flag_direction(f)));
    Genus1Verdict out;
    out.spanDim = Subspace::span(dirs, static_cast<std::size_t>(im.dim())).dim();
    out.spans = out.spanDim == static_cast<std::size_t>(im.dim());
    out.guaranteedDimH = im.dim() - static_cast<long long>(out.spanDim);
    out.verdict = out.spans ? "directions at the loop span the ambient space: H = 0 and every pre-log curve of this type is smoothable"
                            : "H is the annihilator of the span of the directions at the loop";
    return out;
}

LaurentData parse_laurent_data(const json& doc) {
    try {
        if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_object())
            throw ValidationError("Laurent data must have an object 'vertices'");
        LaurentData data;
        for (const auto& [vid, entry] : doc["vertices"].items()) {
            if (!entry.contains("series") || !entry["series"].is_array())
                throw ValidationError("Laurent data for vertex '" + vid + "' needs 'series'");
            VertexSeries vs;
            for (const auto& s : entry["series"]) {
                if (s.is_null() || (s.is_string() && s.get<std::string>() == "inf")) {
                    vs.series.emplace_back(std::nullopt);
                    continue;
                }
                std::vector<std::pair<long, Rational>> terms;
                for (const auto& term : s) {
                    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
                        throw ValidationError("Laurent term must be [exponent, \"coefficient\"]");
                    Rational coef = term[1].is_string() ? parse_rational(term[1].get<std::string>())
                                                        : Rational(term[1].get<long>());
                    terms.emplace_back(term[0].get<long>(), coef);
                }
                vs.series.emplace_back(LaurentSeries(terms));
            }
            data[vid] = vs;
        }
        return data;
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("schema violation: ") + ex.what());
    }
}

Configuration evaluate_laurent(const LaurentData& data, const Rational& t) {
    Configuration cfg;
    for (const auto& [vid, vs] : data) {
        VertexCoords vc;
        for (const auto& s : vs.series) {
            if (s) vc.coords.emplace_back(s->evaluate(t));
            else vc.coords.emplace_back(std::nullopt);
        }
        cfg[vid] = vc;
    }
    return cfg;
}

std::map<std::string, StarChoice> phylo_choices(const TropicalCurve& image, const LaurentData& data) {
    const auto& g = image.graph();
    std::map<std::string, StarChoice> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.valence(v) < 4) continue;
        const std::string& vid = g.vertex_id(v);
        auto it = data.find(vid);
        if (it == data.end()) throw PreconditionError("missing Laurent data for higher-valent vertex '" + vid + "'");
        auto flags = star_flags(g, v);
        const std::size_t k = flags.size();
        std::size_t slot = infinity_slot(image, v, it->second.series, "Laurent data");
        auto series = finite_entries(it->second.series, slot, k);
        std::vector<std::string> finite_edges;
        for (std::size_t j = 0; j < k; ++j)
            if (j != slot) finite_edges.push_back(g.edge(g.flag(flags[j]).edge).id);
        // sort, then translate so that the smallest series is the origin
        std::vector<std::size_t> idx(series.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return laurent_less(series[a], series[b]); });
        std::vector<LaurentSeries> sorted;
        for (std::size_t i : idx) sorted.push_back(series[i] - series[idx[0]]);
        StarChoice ch;
        ch.root_edge = g.edge(g.flag(flags[slot]).edge).id;
        for (std::size_t i : idx) ch.leaf_edges.push_back(finite_edges[i]);
        try {
            ch.tree = phylo_tree(sorted);
        } catch (const PreconditionError& ex) {
            throw PreconditionError("unordered Laurent data at vertex '" + vid + "': " + ex.what());
        }
        out[vid] = ch;
    }
    return out;
}

DegenerationReport degeneration_compare(const TropicalCurve& c, const LaurentData& data, const Rational& t0) {
    if (sgn(t0) <= 0 || t0 >= 1) throw ValidationError("t0 must lie in (0, 1)");
    ImageGraph img = contract_image(c);
    const auto& im = img.curve;
    const auto& g = im.graph();
    LaurentData canon;
    for (const auto& [key, vs] : data) canon[g.vertex_id(image_vertex(c, img, key))] = vs;

    auto choices = phylo_choices(im, canon);
    DegenerationReport rep;
    rep.d0 = dual_obstruction_chain(resolved_type(im, choices)).dimH;

    Rational t = t0;
    const Rational shrink(1, 1000);
    for (int round = 0; round < 8; ++round, t *= shrink) {
        Configuration cfg = evaluate_laurent(canon, t);
        ObstructionReport xr;
        try {
            xr = xi_map(im, cfg);
        } catch (const ValidationError&) {
            continue;  // two coordinates collide at this t
        }
        rep.history.emplace_back(t, xr.dimH);
        rep.t = t;
        rep.d = xr.dimH;
        std::size_t h = rep.history.size();
        if (h >= 3 && rep.history[h - 1].second == rep.history[h - 2].second &&
            rep.history[h - 2].second == rep.history[h - 3].second) {
            rep.stable = true;
            break;
        }
    }
    if (rep.history.empty()) throw PreconditionError("Laurent data gives coincident coordinates at every tried t");
    rep.semicontinuous = rep.d <= rep.d0;

    Configuration last = evaluate_laurent(canon, rep.t);
    for (const auto& [vid, ch] : choices) {
        std::size_t v = g.vertex_index(vid);
        std::vector<std::string> order;
        LocalVertexModel m = local_model_at(im, v, last.at(vid), &order);
        // relabel the tree leaves into the model's edge order
        BinaryTree tree = ch.tree;
        for (auto& nd : tree.nodes) {
            if (!nd.leaf()) continue;
            const std::string& eid = ch.leaf_edges[nd.label - 1];
            nd.label = static_cast<int>(std::find(order.begin(), order.end(), eid) - order.begin()) + 1;
        }
        LocalComparison lc{vid, ch.tree, ch.leaf_edges, ch.root_edge, 0, 0};
        lc.aDim = static_cast<long long>(a_system(m).space.dim());
        lc.treeDim = static_cast<long long>(tree_local_space(m, tree).dim());
        rep.vertices.push_back(std::move(lc));
    }
    return rep;
}

}  // namespace trop
