#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropical/curve.hpp"
#include "tropical/graph.hpp"
#include "tropical/matrix.hpp"

namespace trop {

// Covector (length n) attached to each flag.
using FlagAssignment = std::map<Flag, Vec>;

struct ChainInfo {
    std::vector<std::string> edges;
    Subspace perp;  // annihilator of the span of the chain's directions
};

struct AbundancyResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::size_t target_dim = 0;
    bool surjective = true;
    std::vector<std::string> domain_edges;
    std::vector<std::string> cut_edges;
};

struct ObstructionReport {
    std::string method;
    long long dimH = 0;
    std::vector<FlagAssignment> basis;
    // H in flat flag coordinates: index flag * n + i over the flags of the
    // graph the method ran on
    Subspace space;
    long long paramDim = 0;
    bool superabundantDef1 = false;
    std::optional<std::size_t> abundancyRank;
    std::optional<bool> superabundantDef2;
    bool typeLevel = false;  // true when the input was not immersive
    std::vector<ChainInfo> chains;
};

// Scalar compatible numberings; coordinates are the flags of g.
Subspace compatible_numbering_space(const AbstractGraph& g);

ObstructionReport dual_obstruction_chain(const CombinatorialType& t);
long long parameter_dimension(const CombinatorialType& t);

AbundancyResult abundancy_map(const TropicalCurve& c);
AbundancyResult reduced_abundancy_map(const TropicalCurve& c);

// Flat vector of a flag assignment on g, and back.
Vec flatten(const AbstractGraph& g, int n, const FlagAssignment& a);
FlagAssignment unflatten(const AbstractGraph& g, int n, const Vec& x);

}  // namespace trop
