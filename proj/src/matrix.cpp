#include "tropical/matrix.hpp"

#include <utility>

namespace trop {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::append_row(const Vec& r) {
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Vec Matrix::apply(const Vec& x) const {
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t cur = 0;
    std::vector<std::size_t> support;
    Rational tmp;
    for (std::size_t c = 0; c < cols_ && cur < rows_; ++c) {
        std::size_t p = cur;
        while (p < rows_ && sgn(m(p, c)) == 0) ++p;
        if (p == rows_) continue;
        if (p != cur)
            for (std::size_t j = c; j < cols_; ++j) std::swap(m(p, j), m(cur, j));
        Rational inv = 1 / m(cur, c);
        support.clear();
        for (std::size_t j = c; j < cols_; ++j) {
            if (sgn(m(cur, j)) == 0) continue;
            m(cur, j) *= inv;
            support.push_back(j);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == cur || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j : support) {
                tmp = f * m(cur, j);
                m(i, j) -= tmp;
            }
        }
        piv.push_back(c);
        ++cur;
    }
    // drop zero rows
    Matrix out(0, cols_);
    for (std::size_t i = 0; i < cur; ++i) out.append_row(m.row(i));
    if (pivots) *pivots = std::move(piv);
    return out;
}

std::size_t rank(const Matrix& m) { return m.rref().rows(); }

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix r = Matrix::from_rows(vectors, ambient).rref();
    for (std::size_t i = 0; i < r.rows(); ++i) s.basis_.push_back(r.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Matrix id = Matrix::identity(ambient);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(id.row(i));
    return span(rows, ambient);
}

bool Subspace::contains(const Vec& v) const {
    if (is_zero(v)) return true;
    std::vector<Vec> rows = basis_;
    rows.push_back(v);
    return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(rows, ambient_);
}

Subspace kernel(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = m.rref(&piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r(i, f);
        basis.push_back(std::move(x));
    }
    return Subspace::span(basis, m.cols());
}

Subspace annihilator(const Subspace& s) {
    return kernel(Matrix::from_rows(s.basis(), s.ambient()));
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
    return x;
}

}  // namespace trop
