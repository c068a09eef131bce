#pragma once
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "tropical/curve.hpp"
#include "tropical/rational.hpp"

namespace trop {

// Finite Laurent series in t: sorted exponents, nonzero coefficients.
// The empty series is 0.
class LaurentSeries {
public:
    LaurentSeries() = default;
    // Sorts, merges equal exponents and drops zero coefficients.
    explicit LaurentSeries(std::vector<std::pair<long, Rational>> terms);

    const std::vector<std::pair<long, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentSeries operator-(const LaurentSeries& other) const;
    // leading term removed
    LaurentSeries strip() const;
    Rational evaluate(const Rational& t) const;

    bool operator==(const LaurentSeries&) const = default;

private:
    std::vector<std::pair<long, Rational>> terms_;
};

// Lowest exponent; nullopt stands for the order of 0, which is infinite.
std::optional<long> laurent_order(const LaurentSeries& p);

// The partial order on series: at the lowest exponent where p and q differ,
// the one with a nonzero coefficient there is the larger. Two different
// nonzero coefficients at that exponent are incomparable.
std::partial_ordering laurent_compare(const LaurentSeries& p, const LaurentSeries& q);

// Total extension of laurent_compare: incomparable pairs are ordered by the
// rational value of the differing coefficient.
bool laurent_less(const LaurentSeries& p, const LaurentSeries& q);

// Leaves are labelled by position in the input list, starting at 1. When the
// list does not start with 0, the origin p_1 = 0 is added as leaf 1 and the
// given series become leaves 2..k+1. Internal nodes carry the order at which
// their cluster separates.
using PhyloTree = BinaryTree;

// Throws PreconditionError when the input is not strictly increasing under
// laurent_less, or when some cluster splits into more than two parts.
PhyloTree phylo_tree(const std::vector<LaurentSeries>& p);

struct RebasedSeries {
    int index;  // 1-based position in the original list
    LaurentSeries value;
};
// p_j - p_i for all j, sorted ascending under laurent_less.
std::vector<RebasedSeries> rebase(const std::vector<LaurentSeries>& p, int i);

}  // namespace trop
