#pragma once
#include <vector>

#include "tropical/curve.hpp"
#include "tropical/matrix.hpp"

namespace trop {

struct ThetaImage {
    long long weight = 1;
    IntVec direction;  // primitive
};

// One (r+2)-valent vertex. Edge E_{r+2} sits at infinity; its direction is
// fixed by balancing. Residue variables are ordered w_1..w_{r+2}, n entries each.
struct LocalVertexModel {
    int r = 1;
    int n = 2;
    std::vector<ThetaImage> theta;   // E_1..E_{r+1}
    std::vector<bool> bounded;       // E_1..E_{r+2}
    std::vector<Rational> coords;    // p_1..p_{r+1}

    ThetaImage last() const;         // E_{r+2}
    std::vector<ThetaImage> all_edges() const;
    void validate() const;
};

struct LocalSystem {
    Matrix matrix;
    Subspace space;
};

LocalSystem a_system(const LocalVertexModel& m);

// Dimension predicted for the residue space: r(s-2) + (n-r-1)(s-1), or 0
// when fewer than two flags are bounded.
long long local_dimension_formula(int r, int n, int s);

// Coefficient a_{i,j} = weight_i * <w_j, n_i> of a residue tuple (1-based).
Rational a_coefficient(const LocalVertexModel& m, const Vec& residues, int i, int j);
// Coefficients of zeta^0..zeta^{r-1} in P(zeta) for a residue tuple.
Vec a_polynomial(const LocalVertexModel& m, const Vec& residues);

struct PsiSystem {
    Matrix psi;
    std::size_t rank = 0;
};
// Variables b_{i,j}, i != j over the leaves 1..r+1, in row-major order.
PsiSystem b_system(const BinaryTree& tree);

// Residue tuples at the external flags of the star after replacing it by
// `tree` (leaf k = E_k, root edge = E_{r+2}); same coordinates as a_system.
Subspace tree_local_space(const LocalVertexModel& m, const BinaryTree& tree);

// Internal helper shared with the xi map: appends the residue conditions of
// one vertex. offset[j] is the first variable of w_{j+1}.
void append_residue_rows(Matrix& sys, const std::vector<std::size_t>& offset, const std::vector<ThetaImage>& edges,
                         const std::vector<bool>& bounded, const std::vector<Rational>& coords, int n);

}  // namespace trop
