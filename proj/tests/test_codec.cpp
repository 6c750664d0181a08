#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "coxline/codec.hpp"
#include "coxline/design.hpp"
#include "coxline/errors.hpp"
#include "coxline/rng.hpp"

using namespace coxline;

namespace {

RatMatrix paper_m_b2() {
    // The 6-point example's detection matrix as printed (third row has
    // the opposite sign from our difference convention).
    return RatMatrix::from_ints({{1, 1, 1}, {0, -1, 1}, {2, -1, -1}});
}

bool rows_match_up_to_sign(const RatMatrix& got, const RatMatrix& want) {
    if (got.rows() != want.rows() || got.cols() != want.cols()) return false;
    for (std::size_t i = 0; i < got.rows(); ++i) {
        bool plus = true, minus = true;
        for (std::size_t j = 0; j < got.cols(); ++j) {
            plus = plus && got.at(i, j) == want.at(i, j);
            minus = minus && got.at(i, j) == -want.at(i, j);
        }
        if (!plus && !minus) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("detection matrix rows follow the difference convention") {
    RootSet rs = rootset_from_roots(InitialVector({-1, 0, 1}), {{-1, 1, 0}, {1, -1, 0}});
    DetectionMatrix det = detection_matrix(rs);
    CHECK(det.M == RatMatrix::from_ints({{1, 1, 1}, {0, -1, 1}, {-2, 1, 1}}));
    CHECK(rows_match_up_to_sign(det.M, RatMatrix::from_ints({{1, 1, 1}, {0, -1, 1}, {2, -1, -1}})));
    CHECK(det.row_norms_sq == RatVec{Rational(3), Rational(2), Rational(6)});

    RootSet rs2 = rootset_from_roots(InitialVector({-3, -1, 1, 3}),
                                     {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    CHECK(detection_matrix(rs2).M ==
          RatMatrix::from_ints({{1, 1, 1, 1}, {0, -1, 0, 1}, {-1, 1, -1, 1}, {-1, 0, 1, 0}}));

    RootSet rs4 = rootset_from_roots(InitialVector({-1, 0, 0, 1}),
                                     {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}});
    CHECK(detection_matrix(rs4).M ==
          RatMatrix::from_ints({{1, 1, 1, 1}, {0, -1, 0, 1}, {-1, 1, -1, 1}, {-1, 0, 1, 0}}));
}

TEST_CASE("detection matrix of the 32-word design") {
    InitialVector w1({1, -1, -3, -1, 1, 3});
    RootSet rs = rootset_from_roots(w1, {{-1, 1, -3, -1, 1, 3},
                                         {1, -1, -3, 1, -1, 3},
                                         {3, 1, -1, -3, -1, 1},
                                         {-1, -3, 1, -1, 1, 3},
                                         {1, -1, -3, 1, 3, -1}});
    RatMatrix want = RatMatrix::from_ints({{1, 1, 1, 1, 1, 1},
                                           {1, -1, 0, 0, 0, 0},
                                           {0, 0, 0, 1, -1, 0},
                                           {-1, -1, -1, 1, 1, 1},
                                           {1, 1, -2, 0, 0, 0},
                                           {0, 0, 0, 1, 1, -2}});
    CHECK(rows_match_up_to_sign(detection_matrix(rs).M, want));
}

TEST_CASE("orthotope factorization") {
    LineCode two = design_from_roots(InitialVector({-1, 0, 1}), {{-1, 1, 0}, {1, -1, 0}});
    CHECK(two.codec.D == RatVec{Rational(0), Rational(1), Rational(3)});

    LineCode three = design_from_roots(InitialVector({-3, -1, 1, 3}),
                                       {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    CHECK(three.codec.D == RatVec{Rational(0), Rational(4), Rational(4), Rational(4)});
    // every B entry in {0,+-1}, first column zero, all sign patterns once
    for (std::size_t i = 0; i < three.codec.B.rows(); ++i) {
        CHECK(three.codec.B.at(i, 0) == Rational(0));
        std::size_t idx = 0;
        for (std::size_t j = 1; j < three.codec.B.cols(); ++j) {
            Rational e = three.codec.B.at(i, j);
            CHECK((e == Rational(1) || e == Rational(-1)));
            if (e == Rational(-1)) idx |= 1ull << (j - 1);
        }
        CHECK(idx == i);
    }

    LineCode five = design_from_roots(InitialVector({-2, -1, 0, 1, 2}),
                                      {{-2, 1, 0, -1, 2},
                                       {-1, -2, 1, 0, 2},
                                       {-1, 0, 1, 2, -2},
                                       {0, -1, -2, 1, 2}});
    CHECK(five.codec.D ==
          RatVec{Rational(0), Rational(2), Rational(2), Rational(10), Rational(2)});

    // A valid orthogonal matrix that does not match the codebook's roots
    // breaks the constant-magnitude requirement.
    DetectionMatrix wrong = detection_matrix_from(
        RatMatrix::from_ints({{1, 1, 1}, {1, -1, 0}, {1, 1, -2}}));
    CHECK_THROWS_AS(factor_bd(two.codebook, wrong), NotOrthotope);
}

TEST_CASE("encoding matrices of the worked examples") {
    LineCode three = design_from_roots(InitialVector({-3, -1, 1, 3}),
                                       {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    CHECK(three.codec.K == RatMatrix::from_ints(
                               {{0, 0, 0, 0}, {0, -2, 0, 2}, {-1, 1, -1, 1}, {-2, 0, 2, 0}}));

    // With the printed 6-point detection matrix, K equals M/2 with the
    // free first row zeroed, and B K reproduces W.
    RatMatrix w_eq4 = RatMatrix::from_ints({{-1, 0, 1}, {-1, 1, 0}, {1, 0, -1}, {1, -1, 0}});
    DetectionMatrix det = detection_matrix_from(paper_m_b2());
    Codebook book{w_eq4, 2};
    CodecBundle bundle = factor_bd(book, det);
    bundle.K = encoding_matrix(bundle, det);
    CHECK(bundle.D == RatVec{Rational(0), Rational(1), Rational(3)});
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(bundle.K.at(0, j) == Rational(0));
        CHECK(bundle.K.at(1, j) == paper_m_b2().at(1, j) * Rational(1, 2));
        CHECK(bundle.K.at(2, j) == paper_m_b2().at(2, j) * Rational(1, 2));
    }
    CHECK(bundle.B * bundle.K == w_eq4);

    // Hadamard detection matrix of the 8-point cube: K = M (zero first row).
    LineCode enrz = design_from_roots(InitialVector({-3, 1, 1, 1}),
                                      {{-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}});
    for (std::size_t i = 1; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(enrz.codec.K.at(i, j) == enrz.detection.M.at(i, j));
}

TEST_CASE("encode") {
    // Bit pairing of the printed 6-point example: bits (1,-1) map to w1.
    RatMatrix w_eq4 = RatMatrix::from_ints({{-1, 0, 1}, {-1, 1, 0}, {1, 0, -1}, {1, -1, 0}});
    DetectionMatrix det = detection_matrix_from(paper_m_b2());
    CodecBundle bundle = factor_bd(Codebook{w_eq4, 2}, det);
    bundle.K = encoding_matrix(bundle, det);
    std::vector<int> bits = {1, -1};
    CHECK(encode(bits, bundle.K) == RatVec{Rational(-1), Rational(0), Rational(1)});

    // Hadamard cube code: the all-ones information row lands on -w1.
    RatMatrix hadamard = RatMatrix::from_ints(
        {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
    std::vector<int> ones = {1, 1, 1};
    CHECK(encode(ones, hadamard) ==
          RatVec{Rational(3), Rational(-1), Rational(-1), Rational(-1)});

    std::vector<int> neg = {-1, -1, -1};
    RatVec plus = encode(ones, hadamard);
    RatVec minus = encode(neg, hadamard);
    for (std::size_t j = 0; j < 4; ++j) CHECK(minus[j] == -plus[j]);

    std::vector<int> bad = {1, 0, 1};
    CHECK_THROWS_AS(encode(bad, hadamard), Error);
}

TEST_CASE("encode maps bit patterns onto the codebook rows in index order") {
    LineCode code = design_from_roots(InitialVector({-3, -1, 1, 3}),
                                      {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    for (std::size_t k = 0; k < code.codebook.size(); ++k) {
        std::vector<int> bits = bits_for_row_index(k, code.b);
        CHECK(row_index_for_bits(bits) == k);
        RatVec word = encode(bits, code.codec.K);
        for (std::size_t j = 0; j < word.size(); ++j)
            CHECK(word[j] == code.codebook.W.at(k, j));
    }
}

TEST_CASE("decode") {
    DetectionMatrix det = detection_matrix_from(paper_m_b2());
    std::vector<double> y = {-1 + 0.1, 0 - 0.1, 1.0};
    DecodeResult res = decode(y, det);
    CHECK(res.bits == std::vector<int>{1, -1});
    CHECK_FALSE(res.ambiguous);
    CHECK(res.common_mode == doctest::Approx(0.0));

    std::vector<double> zero = {0, 0, 0};
    CHECK(decode(zero, det).ambiguous);

    // Noiseless round trip through the full pipeline.
    LineCode code = design_from_roots(InitialVector({-2, -1, 0, 1, 2}),
                                      {{-2, 1, 0, -1, 2},
                                       {-1, -2, 1, 0, 2},
                                       {-1, 0, 1, 2, -2},
                                       {0, -1, -2, 1, 2}});
    for (std::size_t k = 0; k < code.codebook.size(); ++k) {
        std::vector<int> bits = bits_for_row_index(k, code.b);
        RatVec word = encode(bits, code.codec.K);
        std::vector<double> yw(word.size());
        for (std::size_t j = 0; j < word.size(); ++j) yw[j] = word[j].to_double();
        CHECK(decode(yw, code.detection).bits == bits);
    }
}

TEST_CASE("slicer equals exhaustive nearest-codeword search") {
    LineCode code = design_from_roots(InitialVector({-3, -1, 1, 3}),
                                      {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    std::vector<double> words = code.codebook.W.to_doubles();
    const int n = code.b + 1;
    Slicer slicer = make_slicer(code.detection);
    SplitMix64 rng{424242};
    for (int trial = 0; trial < 5000; ++trial) {
        std::size_t sent = rng.next() % code.codebook.size();
        std::vector<double> y(n);
        for (int j = 0; j < n; j += 2) {
            GaussianPair g = gaussian_pair(rng);
            y[j] = words[sent * n + j] + 1.5 * g.first;
            if (j + 1 < n) y[j + 1] = words[sent * n + j + 1] + 1.5 * g.second;
        }
        DecodeResult res = decode(y, slicer);
        if (res.ambiguous) continue;
        std::size_t best = 0;
        double best_d = 0;
        bool tie = false;
        for (std::size_t i = 0; i < code.codebook.size(); ++i) {
            double d = 0;
            for (int j = 0; j < n; ++j) {
                double diff = y[j] - words[i * n + j];
                d += diff * diff;
            }
            if (i == 0 || d < best_d) {
                best = i;
                best_d = d;
                tie = false;
            } else if (d == best_d) {
                tie = true;
            }
        }
        if (tie) continue;
        CHECK(row_index_for_bits(res.bits) == best);
    }
}

TEST_CASE("projection onto the balanced frame") {
    RatVec w = {Rational(-3), Rational(-1), Rational(1), Rational(3)};
    PetersonProjection p = peterson_project(w);
    CHECK(p.exact);
    CHECK(p.exact_values == RatVec{Rational(0), Rational(2), Rational(4), Rational(0)});

    RatVec ones = {Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(peterson_project(ones).exact_values ==
          RatVec{Rational(0), Rational(0), Rational(0), Rational(2)});

    RatVec zero = {Rational(0), Rational(0), Rational(0)};
    PetersonProjection pz = peterson_project(zero);
    for (double v : pz.values) CHECK(v == 0.0);
}

TEST_CASE("projection preserves pairwise distances of balanced codebooks") {
    auto check_isometry = [](const LineCode& code, double tol) {
        const std::size_t n = code.b + 1;
        std::vector<PetersonProjection> proj;
        for (std::size_t i = 0; i < code.codebook.size(); ++i)
            proj.push_back(peterson_project(code.codebook.W.row(i)));
        for (std::size_t i = 0; i < code.codebook.size(); ++i) {
            CHECK(std::abs(proj[i].values[n - 1]) <= tol);
            for (std::size_t j = i + 1; j < code.codebook.size(); ++j) {
                double before = 0, after = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    double d = (code.codebook.W.at(i, c) - code.codebook.W.at(j, c)).to_double();
                    before += d * d;
                    double e = proj[i].values[c] - proj[j].values[c];
                    after += e * e;
                }
                CHECK(std::abs(before - after) <= tol * (1 + before));
            }
        }
    };
    check_isometry(design_from_roots(InitialVector({-3, -1, 1, 3}),
                                     {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}}),
                   1e-12);
    check_isometry(design_from_roots(InitialVector({-1, 0, 1}), {{-1, 1, 0}, {1, -1, 0}}), 1e-9);
    check_isometry(design_from_roots(InitialVector({-2, -1, 0, 1, 2}),
                                     {{-2, 1, 0, -1, 2},
                                      {-1, -2, 1, 0, 2},
                                      {-1, 0, 1, 2, -2},
                                      {0, -1, -2, 1, 2}}),
                   1e-9);
}
