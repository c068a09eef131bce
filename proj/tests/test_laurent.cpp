#include <doctest.h>

#include <set>

#include "tropical/error.hpp"
#include "tropical/generators.hpp"
#include "tropical/laurent.hpp"

using namespace trop;

namespace {

LaurentSeries L(std::vector<std::pair<long, Rational>> t) { return LaurentSeries(std::move(t)); }

std::set<std::vector<int>> clusters(const PhyloTree& t) {
    auto c = t.clusters();
    return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("order") {
    CHECK(laurent_order(L({{-5, 1}, {-2, 1}})) == -5);
    CHECK_FALSE(laurent_order(LaurentSeries()).has_value());
    CHECK(laurent_order(L({{0, 3}})) == 0);
    CHECK(L({{1, 2}, {1, -2}}).is_zero());
}

TEST_CASE("comparison") {
    CHECK(laurent_less(L({{-5, 1}, {-2, 1}}), L({{-5, 1}, {-3, 1}})));
    LaurentSeries p = L({{-1, 1}});
    CHECK_FALSE(laurent_less(p, p));
    CHECK(laurent_less(LaurentSeries(), p));
    // different nonzero leading coefficients are incomparable in the partial order
    CHECK(laurent_compare(L({{0, 1}}), L({{0, 2}})) == std::partial_ordering::unordered);
    CHECK(laurent_compare(L({{0, 1}}), L({{0, 1}, {2, 1}})) == std::partial_ordering::less);
}

TEST_CASE("evaluation") {
    CHECK(L({{-1, 2}, {1, 3}}).evaluate(Rational(1, 2)) == Rational(4) + Rational(3, 2));
}

TEST_CASE("phylo tree shapes") {
    // all orders distinct: a caterpillar
    PhyloTree cat = phylo_tree({LaurentSeries(), L({{-1, 1}}), L({{-2, 1}}), L({{-3, 1}})});
    CHECK(clusters(cat) == std::set<std::vector<int>>{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}});
    // a single series is joined to the origin
    PhyloTree one = phylo_tree({L({{0, 1}})});
    CHECK(one.internal_count() == 1);
    CHECK(clusters(one) == std::set<std::vector<int>>{{1, 2}});
}

TEST_CASE("eight-leaf tree") {
    std::vector<LaurentSeries> p = {LaurentSeries(),
                                    L({{-1, 1}, {1, 1}, {3, 1}}),
                                    L({{-1, 1}, {1, 1}, {2, 1}, {4, 1}}),
                                    L({{-1, 1}, {1, 1}, {2, 1}, {3, 1}}),
                                    L({{-1, 1}, {0, 1}}),
                                    L({{-2, 1}, {3, 1}}),
                                    L({{-2, 1}, {2, 1}}),
                                    L({{-2, 1}, {1, 1}})};
    PhyloTree t = phylo_tree(p);
    CHECK(clusters(t) == std::set<std::vector<int>>{
                             {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5}, {2, 3, 4, 5}, {2, 3, 4}, {3, 4}, {6, 7, 8}, {6, 7}});
}

TEST_CASE("phylo preconditions") {
    CHECK_THROWS_AS(phylo_tree({L({{-1, 1}}), LaurentSeries()}), PreconditionError);
    CHECK_THROWS_AS(phylo_tree({LaurentSeries(), LaurentSeries()}), PreconditionError);
    // three series agreeing to the same order split three ways
    CHECK_THROWS_AS(phylo_tree({LaurentSeries(), L({{0, 1}}), L({{0, 2}})}), PreconditionError);
}

TEST_CASE("rebase order") {
    std::vector<LaurentSeries> p = {LaurentSeries(),
                                    L({{-5, 1}, {-2, 1}}),
                                    L({{-5, 1}, {-3, 1}}),
                                    L({{-5, 1}, {-4, 1}, {-3, 1}}),
                                    L({{-6, 1}, {-5, 1}, {-4, 1}})};
    auto r = rebase(p, 5);
    std::vector<int> order;
    for (const auto& x : r) order.push_back(x.index);
    CHECK(order == std::vector<int>{5, 4, 2, 3, 1});
    CHECK(r[0].value.is_zero());
    // rebasing at the origin changes nothing
    auto id = rebase(p, 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
        CHECK(id[j].index == static_cast<int>(j) + 1);
        CHECK(id[j].value == p[j]);
    }
}

TEST_CASE("double rebase is a translate") {
    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
        auto p = random_laurent_tuple(rng, 5);
        auto once = rebase(p, 3);
        std::vector<LaurentSeries> vals;
        for (const auto& x : once) vals.push_back(x.value);
        auto twice = rebase(vals, 2);
        // differences between entries are unchanged
        for (const auto& a : twice)
            for (const auto& b : twice) {
                int i = once[a.index - 1].index, j = once[b.index - 1].index;
                CHECK(a.value - b.value == p[i - 1] - p[j - 1]);
            }
    }
}
