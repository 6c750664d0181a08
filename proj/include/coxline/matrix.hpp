#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "coxline/rational.hpp"

namespace coxline {

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;

/// Dense matrix of exact rationals, row major. The workhorse for every
/// design-time computation; no floating point enters here.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_ints(std::initializer_list<std::initializer_list<long long>> rows);
    static RatMatrix from_int_rows(const std::vector<IntVec>& rows);
    static RatMatrix row_vector(std::span<const Rational> v);
    static RatMatrix row_vector(std::span<const long long> v);
    static RatMatrix diagonal(std::span<const Rational> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RatVec row(std::size_t r) const;
    void set_row(std::size_t r, std::span<const Rational> v);

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator-() const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    bool is_diagonal() const;
    bool is_identity() const;

    /// Frobenius norm squared, exact.
    Rational frobenius_sq() const;

    std::vector<double> to_doubles() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
RatMatrix mat_inverse(const RatMatrix& m);

/// Gram matrix d * d^T. Zero entries mark orthogonal row pairs.
RatMatrix gram(const RatMatrix& d);

/// Scales a nonzero rational vector by the unique positive rational that
/// makes its entries coprime integers; signs are preserved.
IntVec primitive(std::span<const Rational> v);
IntVec primitive(std::span<const long long> v);

long long dot(std::span<const long long> a, std::span<const long long> b);
long long norm_sq(std::span<const long long> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace coxline
