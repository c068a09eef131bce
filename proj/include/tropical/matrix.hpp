#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/rational.hpp"

namespace trop {

// Dense exact rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void append_row(const Vec& r);
    Vec apply(const Vec& x) const;
    Matrix transpose() const;

    // Reduced row echelon form; pivot columns are written to `pivots`.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// A linear subspace of Q^ambient. The basis is kept in reduced row echelon
// form, which makes it canonical: equal subspaces have identical bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace annihilator(const Subspace& s);
// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace trop
