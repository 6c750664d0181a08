#include "coxline/codec.hpp"

#include <cmath>

#include "coxline/errors.hpp"

namespace coxline {

DetectionMatrix detection_matrix(const RootSet& rs) {
    const std::size_t n = rs.w1.components.size();
    DetectionMatrix det;
    det.M = RatMatrix(rs.diffs.size() + 1, n);
    for (std::size_t j = 0; j < n; ++j) det.M.at(0, j) = 1;
    for (std::size_t i = 0; i < rs.diffs.size(); ++i) {
        IntVec p = primitive(std::span<const long long>(rs.diffs[i]));
        for (std::size_t j = 0; j < n; ++j) det.M.at(i + 1, j) = p[j];
    }
    for (std::size_t i = 0; i < det.M.rows(); ++i) {
        RatVec r = det.M.row(i);
        det.row_norms_sq.push_back(dot(r, r));
    }
    return det;
}

DetectionMatrix detection_matrix_from(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("detection matrix must be square");
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(0, j) != Rational(1))
            throw Error("detection matrix must start with the all-ones row");
    DetectionMatrix det;
    det.M = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RatVec ri = m.row(i);
        det.row_norms_sq.push_back(dot(ri, ri));
        for (std::size_t j = i + 1; j < m.rows(); ++j) {
            RatVec rj = m.row(j);
            if (!dot(ri, rj).is_zero()) throw Error("detection matrix rows are not orthogonal");
        }
    }
    return det;
}

CodecBundle factor_bd(const Codebook& w, const DetectionMatrix& det) {
    RatMatrix wm = w.W * det.M.transpose();
    const std::size_t rows = wm.rows();
    const std::size_t cols = wm.cols();

    CodecBundle bundle;
    bundle.B = RatMatrix(rows, cols);
    bundle.D.assign(cols, Rational(0));

    for (std::size_t i = 0; i < rows; ++i)
        if (!wm.at(i, 0).is_zero())
            throw NotOrthotope("common-mode column of W M^T is not zero");

    for (std::size_t j = 1; j < cols; ++j) {
        Rational magnitude = abs(wm.at(0, j));
        if (magnitude.is_zero()) throw NotOrthotope("zero eye opening in column " + std::to_string(j));
        for (std::size_t i = 0; i < rows; ++i) {
            Rational e = wm.at(i, j);
            if (abs(e) != magnitude)
                throw NotOrthotope("column " + std::to_string(j) +
                                   " of W M^T does not have constant magnitude");
            bundle.B.at(i, j) = e.sign();
        }
        bundle.D[j] = magnitude;
    }
    return bundle;
}

RatMatrix encoding_matrix(const CodecBundle& bundle, const DetectionMatrix& det) {
    RatMatrix k = bundle.D_matrix() * mat_inverse(det.M.transpose());
    return k;
}

RatVec encode(std::span<const int> bits, const RatMatrix& k) {
    if (bits.size() + 1 != k.rows()) throw DimensionMismatch("bit count must be K rows - 1");
    RatVec word(k.cols());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 1 && bits[i] != -1) throw Error("bits must be +-1");
        for (std::size_t j = 0; j < k.cols(); ++j) {
            if (bits[i] > 0)
                word[j] += k.at(i + 1, j);
            else
                word[j] -= k.at(i + 1, j);
        }
    }
    return word;
}

std::size_t row_index_for_bits(std::span<const int> bits) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j] < 0) idx |= 1ull << j;
    return idx;
}

std::vector<int> bits_for_row_index(std::size_t index, int b) {
    std::vector<int> bits(b);
    for (int j = 0; j < b; ++j) bits[j] = (index >> j) & 1 ? -1 : 1;
    return bits;
}

Slicer make_slicer(const DetectionMatrix& det) {
    Slicer s;
    s.n = static_cast<int>(det.M.rows());
    s.m = det.M.to_doubles();
    return s;
}

DecodeResult decode(std::span<const double> y, const Slicer& s) {
    if (static_cast<int>(y.size()) != s.n) throw DimensionMismatch("received vector length mismatch");
    DecodeResult res;
    res.bits.resize(s.n - 1);
    for (int r = 0; r < s.n; ++r) {
        double acc = 0;
        for (int j = 0; j < s.n; ++j) acc += y[j] * s.m[r * s.n + j];
        if (r == 0) {
            res.common_mode = acc;
        } else {
            if (acc == 0.0) res.ambiguous = true;
            res.bits[r - 1] = acc >= 0 ? 1 : -1;
        }
    }
    return res;
}

DecodeResult decode(std::span<const double> y, const DetectionMatrix& det) {
    return decode(y, make_slicer(det));
}

PetersonProjection peterson_project(std::span<const Rational> w) {
    const std::size_t n = w.size();
    if (n == 0) throw Error("empty vector");
    PetersonProjection out;
    if (n == 1) {
        out.exact = true;
        out.exact_values.assign(1, w[0]);
        out.values.assign(1, w[0].to_double());
        return out;
    }

    long long root = std::llround(std::sqrt(static_cast<double>(n)));
    const bool square = static_cast<std::size_t>(root * root) == n;

    if (square && n > 1) {
        Rational gamma(1, root);
        Rational beta(-1, static_cast<long long>(n) - root);
        out.exact = true;
        out.exact_values.assign(n, Rational(0));
        Rational sum;
        for (const auto& x : w) sum += x;
        for (std::size_t j = 0; j + 1 < n; ++j)
            out.exact_values[j] = w[j] + beta * (sum - w[n - 1]) + gamma * w[n - 1];
        out.exact_values[n - 1] = gamma * sum;
        out.values.reserve(n);
        for (const auto& x : out.exact_values) out.values.push_back(x.to_double());
        return out;
    }

    const double r = std::sqrt(static_cast<double>(n));
    const double gamma = 1.0 / r;
    const double beta = -1.0 / (static_cast<double>(n) - r);
    double sum = 0;
    std::vector<double> wd(n);
    for (std::size_t i = 0; i < n; ++i) {
        wd[i] = w[i].to_double();
        sum += wd[i];
    }
    out.values.assign(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j)
        out.values[j] = wd[j] + beta * (sum - wd[n - 1]) + gamma * wd[n - 1];
    out.values[n - 1] = gamma * sum;
    return out;
}

}  // namespace coxline
