#include "tropical/laurent.hpp"

#include <algorithm>
#include <map>

#include "tropical/error.hpp"

namespace trop {

LaurentSeries::LaurentSeries(std::vector<std::pair<long, Rational>> terms) {
    std::map<long, Rational> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) terms_.emplace_back(e, c);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& other) const {
    auto t = terms_;
    for (const auto& [e, c] : other.terms_) t.emplace_back(e, -c);
    return LaurentSeries(std::move(t));
}

LaurentSeries LaurentSeries::strip() const {
    LaurentSeries s;
    if (!terms_.empty()) s.terms_.assign(terms_.begin() + 1, terms_.end());
    return s;
}

Rational LaurentSeries::evaluate(const Rational& t) const {
    Rational v = 0;
    for (const auto& [e, c] : terms_) v += c * pow(t, e);
    return v;
}

std::optional<long> laurent_order(const LaurentSeries& p) {
    if (p.is_zero()) return std::nullopt;
    return p.terms().front().first;
}

namespace {

// coefficients of p and q at the lowest exponent where they differ
std::optional<std::pair<Rational, Rational>> first_difference(const LaurentSeries& p, const LaurentSeries& q) {
    LaurentSeries d = q - p;
    if (d.is_zero()) return std::nullopt;
    long e = d.terms().front().first;
    auto coef = [e](const LaurentSeries& s) {
        for (const auto& [x, c] : s.terms())
            if (x == e) return c;
        return Rational(0);
    };
    return std::make_pair(coef(p), coef(q));
}

}  // namespace

std::partial_ordering laurent_compare(const LaurentSeries& p, const LaurentSeries& q) {
    auto d = first_difference(p, q);
    if (!d) return std::partial_ordering::equivalent;
    bool pz = sgn(d->first) == 0, qz = sgn(d->second) == 0;
    if (!pz && qz) return std::partial_ordering::greater;
    if (pz && !qz) return std::partial_ordering::less;
    return std::partial_ordering::unordered;
}

bool laurent_less(const LaurentSeries& p, const LaurentSeries& q) {
    auto d = first_difference(p, q);
    if (!d) return false;
    const auto& [a, b] = *d;
    if (sgn(a) == 0) return true;
    if (sgn(b) == 0) return false;
    return a < b;
}

namespace {

struct Item {
    int label;
    LaurentSeries residual;
};

int build(PhyloTree& t, std::vector<Item> items) {
    if (items.size() == 1) {
        t.nodes.push_back({-1, -1, items[0].label, 0});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    while (true) {
        // the minimum order present; at most one residual can be zero
        long m = 0;
        bool found = false;
        for (const auto& it : items) {
            auto o = laurent_order(it.residual);
            if (o && (!found || *o < m)) m = *o, found = true;
        }
        std::map<Rational, std::vector<Item>> groups;
        std::vector<Item> rest;
        for (auto& it : items) {
            auto o = laurent_order(it.residual);
            if (o && *o == m) groups[it.residual.terms().front().second].push_back({it.label, it.residual.strip()});
            else rest.push_back(it);
        }
        std::size_t parts = groups.size() + (rest.empty() ? 0 : 1);
        if (parts == 1) {
            items = std::move(groups.begin()->second);
            continue;
        }
        if (parts > 2)
            throw PreconditionError("Laurent data splits a cluster into " + std::to_string(parts) +
                                    " parts at order " + std::to_string(m) + "; the tree would be higher-valent");
        std::vector<std::vector<Item>> sides;
        for (auto& [c, g] : groups) sides.push_back(std::move(g));
        if (!rest.empty()) sides.push_back(std::move(rest));
        // the side holding the smallest label goes left
        auto minlabel = [](const std::vector<Item>& s) {
            int x = s[0].label;
            for (const auto& it : s) x = std::min(x, it.label);
            return x;
        };
        if (minlabel(sides[1]) < minlabel(sides[0])) std::swap(sides[0], sides[1]);
        int l = build(t, std::move(sides[0]));
        int r = build(t, std::move(sides[1]));
        t.nodes.push_back({l, r, 0, m});
        return static_cast<int>(t.nodes.size()) - 1;
    }
}

}  // namespace

PhyloTree phylo_tree(const std::vector<LaurentSeries>& p) {
    if (p.empty()) throw PreconditionError("phylo tree of an empty list");
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!laurent_less(p[i - 1], p[i]))
            throw PreconditionError("Laurent data is not strictly increasing at position " + std::to_string(i + 1));
    PhyloTree t;
    std::vector<Item> items;
    int shift = 1;
    if (!p[0].is_zero()) {
        items.push_back({1, LaurentSeries()});
        shift = 2;
    }
    for (std::size_t i = 0; i < p.size(); ++i) items.push_back({static_cast<int>(i) + shift, p[i]});
    t.root = build(t, std::move(items));
    return t;
}

std::vector<RebasedSeries> rebase(const std::vector<LaurentSeries>& p, int i) {
    if (i < 1 || i > static_cast<int>(p.size())) throw PreconditionError("rebase index out of range");
    std::vector<RebasedSeries> out;
    for (std::size_t j = 0; j < p.size(); ++j) out.push_back({static_cast<int>(j) + 1, p[j] - p[i - 1]});
    std::stable_sort(out.begin(), out.end(),
                     [](const RebasedSeries& a, const RebasedSeries& b) { return laurent_less(a.value, b.value); });
    return out;
}

}  // namespace trop
