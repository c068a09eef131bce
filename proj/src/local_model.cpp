#include "tropical/local_model.hpp"

#include <algorithm>
#include <set>

#include "tropical/error.hpp"

namespace trop {

ThetaImage LocalVertexModel::last() const {
    Vec w(static_cast<std::size_t>(n));
    for (const auto& t : theta)
        for (int i = 0; i < n; ++i) w[i] -= Rational(static_cast<long>(t.weight * t.direction[i]));
    if (is_zero(w)) throw ValidationError("the first r+1 edges are balanced on their own");
    auto [u, k] = primitive_part(w);
    return {k.get_num().get_si(), u};
}

std::vector<ThetaImage> LocalVertexModel::all_edges() const {
    auto v = theta;
    v.push_back(last());
    return v;
}

void LocalVertexModel::validate() const {
    if (r < 1) throw ValidationError("local model needs r >= 1");
    if (n < 1) throw ValidationError("local model needs n >= 1");
    if (theta.size() != static_cast<std::size_t>(r + 1)) throw ValidationError("local model needs r+1 edge images");
    for (const auto& t : theta) {
        if (t.weight < 1) throw ValidationError("edge weights must be >= 1");
        if (t.direction.size() != static_cast<std::size_t>(n) || !is_primitive(t.direction))
            throw ValidationError("edge directions must be primitive vectors of length n");
    }
    if (bounded.size() != static_cast<std::size_t>(r + 2)) throw ValidationError("local model needs r+2 boundedness flags");
    if (coords.size() != static_cast<std::size_t>(r + 1)) throw ValidationError("local model needs r+1 coordinates");
    std::set<Rational> seen(coords.begin(), coords.end());
    if (seen.size() != coords.size()) throw ValidationError("coincident marked-point coordinates");
    last();
}

long long local_dimension_formula(int r, int n, int s) {
    if (s <= 1) return 0;
    return static_cast<long long>(r) * (s - 2) + static_cast<long long>(n - r - 1) * (s - 1);
}

namespace {

// coefficients (ascending powers) of prod_{l not in {i,j}} (zeta - p_l)
Vec product_poly(const std::vector<Rational>& p, std::size_t i, std::size_t j) {
    Vec poly{Rational(1)};
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (l == i || l == j) continue;
        Vec next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= p[l] * poly[k];
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

void append_residue_rows(Matrix& sys, const std::vector<std::size_t>& offset, const std::vector<ThetaImage>& edges,
                         const std::vector<bool>& bounded, const std::vector<Rational>& coords, int n) {
    const std::size_t N = sys.cols(), k = edges.size();
    for (std::size_t j = 0; j < k; ++j) {
        if (!bounded[j]) {
            for (int c = 0; c < n; ++c) {
                Vec row(N);
                row[offset[j] + c] = 1;
                sys.append_row(row);
            }
            continue;
        }
        Vec row(N);
        for (int c = 0; c < n; ++c) row[offset[j] + c] = static_cast<long>(edges[j].direction[c]);
        sys.append_row(row);
    }
    for (int c = 0; c < n; ++c) {
        Vec row(N);
        for (std::size_t j = 0; j < k; ++j) row[offset[j] + c] = 1;
        sys.append_row(row);
    }
    // A_k(a) = 0 for the finite points p_1..p_{r+1}
    const std::size_t fin = coords.size();
    if (fin < 2) return;
    const std::size_t deg = fin - 2;  // degree of P
    std::vector<Vec> rows(deg + 1, Vec(N));
    for (std::size_t i = 0; i < fin; ++i)
        for (std::size_t j = 0; j < fin; ++j) {
            if (i == j) continue;
            Vec poly = product_poly(coords, i, j);
            for (std::size_t p = 0; p <= deg; ++p) {
                if (sgn(poly[p]) == 0) continue;
                for (int c = 0; c < n; ++c) {
                    long long a = edges[i].weight * edges[i].direction[c];
                    if (a != 0) rows[p][offset[j] + c] += poly[p] * static_cast<long>(a);
                }
            }
        }
    for (auto& r : rows)
        if (!is_zero(r)) sys.append_row(r);
}

LocalSystem a_system(const LocalVertexModel& m) {
    m.validate();
    const std::size_t n = static_cast<std::size_t>(m.n), k = static_cast<std::size_t>(m.r + 2);
    std::vector<std::size_t> offset(k);
    for (std::size_t j = 0; j < k; ++j) offset[j] = j * n;
    Matrix sys(0, k * n);
    append_residue_rows(sys, offset, m.all_edges(), m.bounded, m.coords, m.n);
    return {sys, kernel(sys)};
}

Rational a_coefficient(const LocalVertexModel& m, const Vec& residues, int i, int j) {
    const auto& t = m.theta[i - 1];
    Rational s = 0;
    for (int c = 0; c < m.n; ++c) s += residues[(j - 1) * m.n + c] * static_cast<long>(t.direction[c]);
    return s * static_cast<long>(t.weight);
}

Vec a_polynomial(const LocalVertexModel& m, const Vec& residues) {
    Vec out(static_cast<std::size_t>(m.r));
    for (int i = 1; i <= m.r + 1; ++i)
        for (int j = 1; j <= m.r + 1; ++j) {
            if (i == j) continue;
            Vec poly = product_poly(m.coords, i - 1, j - 1);
            Rational a = a_coefficient(m, residues, i, j);
            for (std::size_t p = 0; p < poly.size(); ++p) out[p] += a * poly[p];
        }
    return out;
}

PsiSystem b_system(const BinaryTree& tree) {
    std::vector<int> all = tree.leaves_below(tree.root);
    const int m = static_cast<int>(all.size());
    for (int i = 0; i < m; ++i)
        if (all[i] != i + 1) throw ValidationError("tree leaves must be labelled 1..r+1");
    auto var = [m](int i, int j) { return static_cast<std::size_t>((i - 1) * (m - 1) + (j < i ? j - 1 : j - 2)); };
    PsiSystem out;
    out.psi = Matrix(0, static_cast<std::size_t>(m * (m - 1)));
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        if (tree.nodes[k].leaf()) continue;
        Vec row(out.psi.cols());
        auto below = tree.leaves_below(static_cast<int>(k));
        for (int i : below)
            for (int j : below)
                if (i != j) row[var(i, j)] = 1;
        out.psi.append_row(row);
    }
    out.rank = rank(out.psi);
    return out;
}

Subspace tree_local_space(const LocalVertexModel& m, const BinaryTree& tree) {
    m.validate();
    const std::size_t n = static_cast<std::size_t>(m.n), k = static_cast<std::size_t>(m.r + 2);
    auto edges = m.all_edges();
    std::vector<int> parent(tree.nodes.size(), -1);
    for (std::size_t x = 0; x < tree.nodes.size(); ++x)
        if (!tree.nodes[x].leaf()) parent[tree.nodes[x].left] = parent[tree.nodes[x].right] = static_cast<int>(x);
    // variables: w_1..w_{r+2}, then one value per internal non-root node
    // (its flag on the edge towards the parent)
    std::vector<std::size_t> slot(tree.nodes.size(), 0);
    std::size_t N = k * n;
    for (std::size_t x = 0; x < tree.nodes.size(); ++x)
        if (!tree.nodes[x].leaf() && static_cast<int>(x) != tree.root) slot[x] = N, N += n;
    Matrix sys(0, N);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m.bounded[j]) continue;
            Vec row(N);
            row[j * n + c] = 1;
            sys.append_row(row);
        }
        Vec row(N);
        for (std::size_t c = 0; c < n; ++c) row[j * n + c] = static_cast<long>(edges[j].direction[c]);
        sys.append_row(row);
    }
    for (std::size_t x = 0; x < tree.nodes.size(); ++x) {
        if (tree.nodes[x].leaf()) continue;
        // sum of the three flag values at the node
        std::vector<Vec> rows(n, Vec(N));
        auto add_child = [&](int ch) {
            for (std::size_t c = 0; c < n; ++c) {
                if (tree.nodes[ch].leaf()) rows[c][(tree.nodes[ch].label - 1) * n + c] += 1;
                else rows[c][slot[ch] + c] -= 1;  // the parent's flag carries minus the child's
            }
        };
        add_child(tree.nodes[x].left);
        add_child(tree.nodes[x].right);
        for (std::size_t c = 0; c < n; ++c) {
            if (static_cast<int>(x) == tree.root) rows[c][(k - 1) * n + c] += 1;
            else rows[c][slot[x] + c] += 1;
        }
        for (auto& r : rows) sys.append_row(r);
        if (static_cast<int>(x) == tree.root) continue;
        Vec dir(n);
        for (int lbl : tree.leaves_below(static_cast<int>(x)))
            for (std::size_t c = 0; c < n; ++c) dir[c] -= Rational(static_cast<long>(edges[lbl - 1].weight * edges[lbl - 1].direction[c]));
        if (is_zero(dir)) throw PreconditionError("tree has an internal edge of zero direction");
        Vec row(N);
        for (std::size_t c = 0; c < n; ++c) row[slot[x] + c] = dir[c];
        sys.append_row(row);
    }
    Subspace ker = kernel(sys);
    std::vector<Vec> proj;
    for (const auto& b : ker.basis()) proj.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k * n));
    return Subspace::span(proj, k * n);
}

}  // namespace trop
