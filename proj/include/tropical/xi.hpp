#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropical/curve.hpp"
#include "tropical/laurent.hpp"
#include "tropical/local_model.hpp"
#include "tropical/obstruction.hpp"

namespace trop {

// Marked-point coordinates of one higher-valent vertex, one entry per edge
// of the star in sorted edge order; nullopt marks the edge at infinity. With
// one entry fewer than the valence, the edge at infinity is the last bounded
// edge (the last edge when none is bounded).
struct VertexCoords {
    std::vector<std::optional<Rational>> coords;
};
using Configuration = std::map<std::string, VertexCoords>;

Configuration parse_configuration(const nlohmann::json& doc);

// Local model of an image vertex of valence >= 4 under the given coordinates.
// `edge_order` receives the star's edge ids as E_1..E_{r+2}.
LocalVertexModel local_model_at(const TropicalCurve& image, std::size_t v, const VertexCoords& vc,
                                std::vector<std::string>* edge_order = nullptr);

// H = ker Xi on the image of c. Flags in the report are flags of the image graph.
ObstructionReport xi_map(const TropicalCurve& c, const Configuration& cfg);

struct Genus1Verdict {
    bool spans = false;
    long long guaranteedDimH = 0;
    std::size_t spanDim = 0;
    std::string verdict;
};
Genus1Verdict genus1_loop_criterion(const TropicalCurve& c);

struct VertexSeries {
    std::vector<std::optional<LaurentSeries>> series;  // same layout as VertexCoords
};
using LaurentData = std::map<std::string, VertexSeries>;
LaurentData parse_laurent_data(const nlohmann::json& doc);

struct LocalComparison {
    std::string vertex;
    PhyloTree tree;
    std::vector<std::string> leaf_edges;
    std::string root_edge;
    long long aDim = 0;     // residue space at the evaluated coordinates
    long long treeDim = 0;  // residue space of the resolved star
};

struct DegenerationReport {
    long long d = 0;
    long long d0 = 0;
    bool semicontinuous = false;  // d <= d0
    bool stable = false;
    Rational t;                   // last evaluation point
    std::vector<std::pair<Rational, long long>> history;
    std::vector<LocalComparison> vertices;
};

Configuration evaluate_laurent(const LaurentData& data, const Rational& t);
// Tree choice per higher-valent vertex from ordered Laurent data.
std::map<std::string, StarChoice> phylo_choices(const TropicalCurve& image, const LaurentData& data);
DegenerationReport degeneration_compare(const TropicalCurve& c, const LaurentData& data,
                                        const Rational& t0 = Rational(1, 1000000));

}  // namespace trop
