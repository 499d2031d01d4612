#include <doctest.h>

#include <cmath>

#include "b3rep/linalg.hpp"
#include "test_support.hpp"

using namespace b3rep;
using test_support::Rng;

namespace {

CMatrix from_rows(int rows, int cols, std::initializer_list<CScalar> vals) {
    CMatrix m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, *it++);
    return m;
}

}  // namespace

TEST_CASE("product identities") {
    Rng rng(11);
    CMatrix m = test_support::random_matrix(rng, 4);
    CMatrix i4 = CMatrix::identity(4);
    CHECK(frobenius_norm(i4 * m - m) == 0.0);
    CMatrix zero(4, 4);
    CHECK(frobenius_norm(m * zero) == 0.0);

    // the d = 2 braid image AB at lambda = (1,-1) cubes to the identity
    CMatrix ab = from_rows(2, 2, {{0, 0}, {1, 0}, {-1, 0}, {-1, 0}});
    CHECK(frobenius_norm(ab * ab * ab - CMatrix::identity(2)) == 0.0);
}

TEST_CASE("product shape mismatch") {
    CMatrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("non-finite entries rejected") {
    CMatrix a(2, 2);
    CHECK_THROWS_AS(a.set(0, 0, CScalar(std::nan(""), 0.0)), ContractError);
    CHECK_THROWS_AS(a.set(0, 0, CScalar(0.0, INFINITY)), ContractError);
}

TEST_CASE("invert basics") {
    CHECK(frobenius_norm(invert(CMatrix::identity(3)) - CMatrix::identity(3)) < 1e-14);

    CMatrix d(3, 3);
    d.set(0, 0, {2, 0});
    d.set(1, 1, {0, 3});
    d.set(2, 2, {-1, 1});
    CMatrix di = invert(d);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(di(i, i) - 1.0 / d(i, i)) < 1e-15);

    CMatrix two = CScalar(2, 0) * CMatrix::identity(4);
    CHECK(frobenius_norm(invert(two) - CScalar(0.5, 0) * CMatrix::identity(4)) < 1e-14);
}

TEST_CASE("invert rejects singular input") {
    CMatrix m = from_rows(2, 2, {{1, 0}, {1, 0}, {1, 0}, {1, 0}});
    CHECK_THROWS_AS(invert(m), SingularMatrixError);
}

TEST_CASE("invert is a two-sided inverse on random well-conditioned input") {
    Rng rng(42);
    for (int n : {2, 5, 12, 25}) {
        CMatrix m = test_support::random_matrix(rng, n) +
                    CScalar(3.0, 0.0) * CMatrix::identity(n);
        CMatrix mi = invert(m);
        double scale = frobenius_norm(m);
        CHECK(frobenius_norm(m * mi - CMatrix::identity(n)) <= 1e-10 * scale);
        CHECK(frobenius_norm(mi * m - CMatrix::identity(n)) <= 1e-10 * scale);
    }
}

TEST_CASE("hermitian_spectrum on fixed matrices") {
    CMatrix d(3, 3);
    d.set(0, 0, {3, 0});
    d.set(1, 1, {1, 0});
    d.set(2, 2, {2, 0});
    auto eig = hermitian_spectrum(d);
    REQUIRE(eig.size() == 3);
    CHECK(eig[0] == doctest::Approx(1.0));
    CHECK(eig[1] == doctest::Approx(2.0));
    CHECK(eig[2] == doctest::Approx(3.0));

    auto ones = hermitian_spectrum(CMatrix::identity(4));
    for (double v : ones) CHECK(v == doctest::Approx(1.0));

    CMatrix pauli = from_rows(2, 2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
    auto pm = hermitian_spectrum(pauli);
    CHECK(pm[0] == doctest::Approx(-1.0));
    CHECK(pm[1] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_spectrum rejects non-Hermitian input") {
    CMatrix m = from_rows(2, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 0}});
    CHECK_THROWS_AS(hermitian_spectrum(m), ContractError);
}

TEST_CASE("hermitian_spectrum is invariant under unitary congruence") {
    Rng rng(7);
    for (int n : {3, 8, 25}) {
        CMatrix h = test_support::random_hermitian(rng, n);
        CMatrix u = test_support::random_unitary(rng, n);
        auto a = hermitian_spectrum(h);
        auto b = hermitian_spectrum(adjoint(u) * h * u);
        for (size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
    }
}

TEST_CASE("cholesky basics") {
    CHECK(frobenius_norm(cholesky(CMatrix::identity(3)) - CMatrix::identity(3)) < 1e-14);

    CMatrix d(2, 2);
    d.set(0, 0, {4, 0});
    d.set(1, 1, {9, 0});
    CMatrix l = cholesky(d);
    CHECK(l(0, 0) == CScalar(2, 0));
    CHECK(l(1, 1) == CScalar(3, 0));

    CMatrix ind(2, 2);
    ind.set(0, 0, {1, 0});
    ind.set(1, 1, {-1, 0});
    CHECK_THROWS_AS(cholesky(ind), NotPositiveDefiniteError);
}

TEST_CASE("cholesky succeeds iff the spectrum is positive") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.unit() * 10);
        CMatrix h = test_support::random_hermitian(rng, n);
        auto eig = hermitian_spectrum(h);
        double scale = frobenius_norm(h);
        if (std::abs(eig.front()) <= 1e-10 * scale) continue;  // eigenvalue band
        bool expect = eig.front() > 1e-12 * scale;
        bool got = true;
        try {
            CMatrix l = cholesky(h);
            CHECK(frobenius_norm(l * adjoint(l) - h) <= 1e-10 * scale);
        } catch (const NotPositiveDefiniteError&) {
            got = false;
        }
        CHECK(got == expect);
    }
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(CMatrix::identity(3)).empty());

    auto full = nullspace(CMatrix(2, 2));
    REQUIRE(full.size() == 2);
    // zero matrix: kernel basis is the standard basis in column order
    CHECK(std::abs(full[0](0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(full[1](1, 0) - 1.0) < 1e-15);

    CMatrix ones = from_rows(2, 2, {{1, 0}, {1, 0}, {1, 0}, {1, 0}});
    auto ker = nullspace(ones);
    REQUIRE(ker.size() == 1);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // span of (1,-1)/sqrt(2), any phase
    CHECK(std::abs(std::abs(ker[0](0, 0)) - inv_sqrt2) < 1e-12);
    CHECK(std::abs(ker[0](0, 0) + ker[0](1, 0)) < 1e-12);
}

TEST_CASE("nullspace vectors are orthonormal and annihilated") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng.unit() * 6);
        // build rank-deficient m = a * b with inner dimension < n
        int r = 1 + static_cast<int>(rng.unit() * (n - 1));
        CMatrix a(n, r), b(r, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < r; ++j) a.set(i, j, rng.complex_box());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) b.set(i, j, rng.complex_box());
        CMatrix m = a * b;
        auto ker = nullspace(m);
        CHECK(static_cast<int>(ker.size()) >= n - r);
        for (size_t i = 0; i < ker.size(); ++i) {
            CHECK(frobenius_norm(m * ker[i]) < 1e-8 * frobenius_norm(m));
            for (size_t j = 0; j <= i; ++j) {
                CScalar dot(0, 0);
                for (int row = 0; row < n; ++row)
                    dot += std::conj(ker[j](row, 0)) * ker[i](row, 0);
                CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("nullspace of (M - lambda I) for diagonal M is one per eigenvalue") {
    CMatrix m(4, 4);
    double vals[4] = {0.5, -1.25, 3.0, 2.0};
    for (int i = 0; i < 4; ++i) m.set(i, i, {vals[i], 0.0});
    for (int i = 0; i < 4; ++i) {
        CMatrix shifted = m - CScalar(vals[i], 0.0) * CMatrix::identity(4);
        CHECK(nullspace(shifted).size() == 1);
    }
}

TEST_CASE("char_poly_elementary matches known symmetric functions") {
    // diag(1, 2, 3): e1 = 6, e2 = 11, e3 = 6
    CMatrix m(3, 3);
    m.set(0, 0, {1, 0});
    m.set(1, 1, {2, 0});
    m.set(2, 2, {3, 0});
    auto e = char_poly_elementary(m);
    CHECK(std::abs(e[0] - CScalar(6, 0)) < 1e-12);
    CHECK(std::abs(e[1] - CScalar(11, 0)) < 1e-12);
    CHECK(std::abs(e[2] - CScalar(6, 0)) < 1e-12);

    // invariance under conjugation
    Rng rng(5);
    CMatrix v = test_support::random_matrix(rng, 3) + CScalar(2, 0) * CMatrix::identity(3);
    CMatrix conj_m = v * m * invert(v);
    auto e2 = char_poly_elementary(conj_m);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(e[k] - e2[k]) < 1e-9);
}
