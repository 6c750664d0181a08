#pragma once

#include <span>
#include <vector>

#include "coxline/coxeter.hpp"

namespace coxline {

/// Detection matrix M: all-ones first row, then the primitive integer
/// scalings of the root differences, in clique order. Rows are pairwise
/// orthogonal; row_norms_sq holds xi_j^2 = |row j|^2.
struct DetectionMatrix {
    RatMatrix M;
    RatVec row_norms_sq;

    int b() const { return static_cast<int>(M.rows()) - 1; }
};

DetectionMatrix detection_matrix(const RootSet& rs);

/// Builds a DetectionMatrix from an explicitly given M (first row all
/// ones, remaining rows pairwise orthogonal and balanced).
DetectionMatrix detection_matrix_from(const RatMatrix& m);

/// The factorization W M^T = B D plus the encoding matrix K = D M^{-T}.
struct CodecBundle {
    RatMatrix B;     // rows (0, +-1, ..., +-1), one per codeword
    RatVec D;        // diagonal entries (0, d_1, ..., d_b), all d_j > 0
    RatMatrix K;     // B K = W exactly; first row zero

    RatMatrix D_matrix() const { return RatMatrix::diagonal(D); }
};

/// Splits W M^T into sign pattern and column magnitudes. Throws
/// NotOrthotope when the first column is not zero or a column magnitude
/// is not constant. K is left empty.
CodecBundle factor_bd(const Codebook& w, const DetectionMatrix& det);

/// K = D M^{-T}. The first row comes out zero because D starts with 0.
RatMatrix encoding_matrix(const CodecBundle& bundle, const DetectionMatrix& det);

/// (0, bits) * K; the result is a codebook row.
RatVec encode(std::span<const int> bits, const RatMatrix& k);

/// Row index of the codeword that encode() produces for these bits
/// (binary counting order: bit j negative <=> generator j applied).
std::size_t row_index_for_bits(std::span<const int> bits);
std::vector<int> bits_for_row_index(std::size_t index, int b);

struct DecodeResult {
    std::vector<int> bits;   // +-1 per information bit
    double common_mode = 0;  // <y, 1>, diagnostic only
    bool ambiguous = false;  // some slicer input was exactly zero
};

/// Signs of entries 2..b+1 of y M^T. Exact zeros slice to +1 and set the
/// ambiguous flag.
DecodeResult decode(std::span<const double> y, const DetectionMatrix& det);

/// Precomputed double-precision M for the simulation hot path.
struct Slicer {
    std::vector<double> m;  // row major, (b+1) x (b+1)
    int n = 0;
};

Slicer make_slicer(const DetectionMatrix& det);
DecodeResult decode(std::span<const double> y, const Slicer& s);

/// Projection of a balanced n-vector onto a coordinate frame where the
/// last coordinate vanishes. Exact when sqrt(n) is an integer, double
/// precision otherwise.
struct PetersonProjection {
    std::vector<double> values;
    bool exact = false;
    RatVec exact_values;  // populated only when exact
};

PetersonProjection peterson_project(std::span<const Rational> w);

}  // namespace coxline
