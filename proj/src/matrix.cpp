#include "coxline/matrix.hpp"

#include <numeric>
#include <utility>

#include "coxline/errors.hpp"

namespace coxline {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVec> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_int_rows(v);
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::row_vector(std::span<const Rational> v) {
    RatMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

RatMatrix RatMatrix::row_vector(std::span<const long long> v) {
    RatMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RatVec RatMatrix::row(std::size_t r) const {
    return RatVec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

void RatMatrix::set_row(std::size_t r, std::span<const Rational> v) {
    if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " columns vs " +
                                std::to_string(rhs.rows_) + " rows");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

bool RatMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Rational RatMatrix::frobenius_sq() const {
    Rational s;
    for (const auto& e : entries_) s += e * e;
    return s;
}

std::vector<double> RatMatrix::to_doubles() const {
    std::vector<double> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i].to_double();
    return out;
}

RatMatrix mat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Rational p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix gram(const RatMatrix& d) {
    if (d.rows() == 0) throw DimensionMismatch("gram of empty matrix");
    return d * d.transpose();
}

IntVec primitive(std::span<const Rational> v) {
    bool all_zero = true;
    for (const auto& x : v)
        if (!x.is_zero()) { all_zero = false; break; }
    if (v.empty() || all_zero) throw Error("primitive of zero vector");

    // Clear denominators, then divide out the common factor of the
    // numerators. Both scalings are positive, so signs survive.
    long long den_lcm = 1;
    for (const auto& x : v) den_lcm = std::lcm(den_lcm, x.denominator_ll());
    IntVec scaled(v.size());
    long long g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = (v[i] * Rational(den_lcm)).to_int();
        g = std::gcd(g, scaled[i]);
    }
    for (auto& x : scaled) x /= g;
    return scaled;
}

IntVec primitive(std::span<const long long> v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    if (g == 0) throw Error("primitive of zero vector");
    IntVec out(v.begin(), v.end());
    for (auto& x : out) x /= g;
    return out;
}

long long dot(std::span<const long long> a, std::span<const long long> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot of unequal lengths");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long long norm_sq(std::span<const long long> v) { return dot(v, v); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot of unequal lengths");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace coxline
