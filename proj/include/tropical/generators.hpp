#pragma once
#include <random>
#include <vector>

#include "tropical/curve.hpp"
#include "tropical/laurent.hpp"

namespace trop {

using Rng = std::mt19937_64;

struct CurveOptions {
    int n = 3;
    int genus = 1;
    // 0 for a 3-valent curve, otherwise the valence (4 or 5) of vertex "v0"
    int higher_valence = 0;
    // boundary vertices and split directions drawn from a random affine
    // subspace of this dimension; 0 means the whole space
    int affine_dim = 0;
    double sprout_probability = 0.25;
    bool require_embedded = true;
    // close cycles between the farthest available vertices
    bool long_cycles = false;
};

// Connected graph of maximum valence 3 and first Betti number `genus`, every
// vertex filled up to valence 3 with unbounded edges. No multiple edges.
AbstractGraph random_trivalent_graph(Rng& rng, int genus);

// Balanced curve with integer data: boundary vertices are placed at random,
// interior ones by a weighted harmonic solve, unbounded edges absorb the
// remaining balance. Resamples until every edge is non-contracted (and the
// curve embedded when requested).
TropicalCurve random_curve(Rng& rng, const CurveOptions& opt);

// k distinct Laurent series, strictly increasing under laurent_less, whose
// clusters split into at most two parts (so phylo_tree accepts them).
std::vector<LaurentSeries> random_laurent_tuple(Rng& rng, int k);

}  // namespace trop
