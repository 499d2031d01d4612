// Small dense complex linear algebra with fixed pivoting rules.
//
// Everything here targets matrices up to 25x25 (d^2 for the invariant-form
// solve with d <= 5), double precision, deterministic output: partial
// pivoting picks the maximal modulus with ties broken by lowest index, and
// kernel vectors come out ordered by pivot column.  No attempt is made to be
// fast beyond naive O(n^3) kernels.

#pragma once

#include <complex>
#include <vector>

#include "b3rep/errors.hpp"

namespace b3rep {

using CScalar = std::complex<double>;

inline constexpr int kMaxDim = 25;

class CMatrix {
public:
    CMatrix(int rows, int cols);

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const CScalar& operator()(int i, int j) const {
        check_index(i, j);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    // Only mutation path; rejects non-finite entries.
    void set(int i, int j, CScalar v);

    bool is_square() const { return rows_ == cols_; }

private:
    void check_index(int i, int j) const;

    int rows_;
    int cols_;
    std::vector<CScalar> data_;
};

CMatrix operator+(const CMatrix& x, const CMatrix& y);
CMatrix operator-(const CMatrix& x, const CMatrix& y);
CMatrix operator*(const CMatrix& x, const CMatrix& y);
CMatrix operator*(CScalar a, const CMatrix& x);

CMatrix adjoint(const CMatrix& m);
CScalar trace(const CMatrix& m);
double frobenius_norm(const CMatrix& m);

// Gaussian elimination with partial pivoting (max modulus, lowest row index
// on ties).  Throws SingularMatrixError when a pivot falls below
// 1e-12 * ||m||_F.
CMatrix solve(const CMatrix& m, const CMatrix& rhs);
CMatrix invert(const CMatrix& m);

// Eigenvalues of (h + h*)/2 by cyclic Jacobi rotations, ascending.  Input
// must be Hermitian within 1e-9 * ||h||_F.
std::vector<double> hermitian_spectrum(const CMatrix& h);

// Lower-triangular L with positive real diagonal and LL* = h.  A pivot
// <= 1e-12 * ||h||_F throws NotPositiveDefiniteError.
CMatrix cholesky(const CMatrix& h);

// Orthonormal basis of the numerical kernel (pivot threshold 1e-8 relative to
// the largest pivot), obtained by row reduction with column pivoting followed
// by Gram-Schmidt.  Output ordered by the free column's original index.
std::vector<CMatrix> nullspace(const CMatrix& k);

// Elementary symmetric functions e_1..e_n of the eigenvalues of a square
// matrix, via the Faddeev-LeVerrier trace recursion (no eigensolver).
std::vector<CScalar> char_poly_elementary(const CMatrix& m);

}  // namespace b3rep
