#include "b3rep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace b3rep {

namespace {

bool finite(CScalar v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void check_shape(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim) {
        throw DimensionError("matrix shape " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " outside [1," +
                             std::to_string(kMaxDim) + "]^2");
    }
}

}  // namespace

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(static_cast<size_t>(rows) * cols, CScalar(0.0, 0.0));
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, CScalar(1.0, 0.0));
    return m;
}

void CMatrix::set(int i, int j, CScalar v) {
    check_index(i, j);
    if (!finite(v)) throw ContractError("non-finite matrix entry");
    data_[static_cast<size_t>(i) * cols_ + j] = v;
}

void CMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw DimensionError("index (" + std::to_string(i) + "," +
                             std::to_string(j) + ") out of bounds for " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("shape mismatch in matrix sum");
    CMatrix r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(i, j, x(i, j) + y(i, j));
    return r;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("shape mismatch in matrix difference");
    CMatrix r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(i, j, x(i, j) - y(i, j));
    return r;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.cols() != y.rows()) throw DimensionError("shape mismatch in matrix product");
    CMatrix r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < y.cols(); ++j) {
            CScalar acc(0.0, 0.0);
            for (int k = 0; k < x.cols(); ++k) acc += x(i, k) * y(k, j);
            r.set(i, j, acc);
        }
    }
    return r;
}

CMatrix operator*(CScalar a, const CMatrix& x) {
    CMatrix r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(i, j, a * x(i, j));
    return r;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(j, i, std::conj(m(i, j)));
    return r;
}

CScalar trace(const CMatrix& m) {
    if (!m.is_square()) throw DimensionError("trace of non-square matrix");
    CScalar acc(0.0, 0.0);
    for (int i = 0; i < m.rows(); ++i) acc += m(i, i);
    return acc;
}

double frobenius_norm(const CMatrix& m) {
    double acc = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) acc += std::norm(m(i, j));
    return std::sqrt(acc);
}

namespace {

// LU decomposition in place with partial pivoting; perm holds row order.
// Pivot rule: maximal modulus, ties broken by lowest row index.
void lu_factor(std::vector<CScalar>& a, int n, std::vector<int>& perm, double norm_scale) {
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    const double tol = 1e-12 * norm_scale;
    for (int k = 0; k < n; ++k) {
        int best = k;
        double best_mod = std::abs(a[static_cast<size_t>(perm[k]) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            double mod = std::abs(a[static_cast<size_t>(perm[i]) * n + k]);
            if (mod > best_mod) {
                best_mod = mod;
                best = i;
            }
        }
        if (best_mod < tol || best_mod == 0.0)
            throw SingularMatrixError("pivot modulus " + std::to_string(best_mod) +
                                      " below threshold");
        std::swap(perm[k], perm[best]);
        const size_t pk = static_cast<size_t>(perm[k]) * n;
        for (int i = k + 1; i < n; ++i) {
            const size_t pi = static_cast<size_t>(perm[i]) * n;
            CScalar f = a[pi + k] / a[pk + k];
            a[pi + k] = f;
            for (int j = k + 1; j < n; ++j) a[pi + j] -= f * a[pk + j];
        }
    }
}

CMatrix lu_solve(const std::vector<CScalar>& a, int n, const std::vector<int>& perm,
                 const CMatrix& rhs) {
    CMatrix x(n, rhs.cols());
    std::vector<CScalar> col(n);
    for (int c = 0; c < rhs.cols(); ++c) {
        for (int i = 0; i < n; ++i) {
            CScalar acc = rhs(perm[i], c);
            const size_t pi = static_cast<size_t>(perm[i]) * n;
            for (int j = 0; j < i; ++j) acc -= a[pi + j] * col[j];
            col[i] = acc;
        }
        for (int i = n - 1; i >= 0; --i) {
            const size_t pi = static_cast<size_t>(perm[i]) * n;
            CScalar acc = col[i];
            for (int j = i + 1; j < n; ++j) acc -= a[pi + j] * col[j];
            col[i] = acc / a[pi + i];
        }
        for (int i = 0; i < n; ++i) x.set(i, c, col[i]);
    }
    return x;
}

}  // namespace

CMatrix solve(const CMatrix& m, const CMatrix& rhs) {
    if (!m.is_square()) throw DimensionError("solve requires a square matrix");
    if (rhs.rows() != m.rows()) throw DimensionError("rhs row count mismatch");
    const int n = m.rows();
    std::vector<CScalar> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    std::vector<int> perm;
    lu_factor(a, n, perm, frobenius_norm(m));
    return lu_solve(a, n, perm, rhs);
}

CMatrix invert(const CMatrix& m) {
    if (!m.is_square()) throw DimensionError("invert requires a square matrix");
    const int n = m.rows();
    CMatrix inv = solve(m, CMatrix::identity(n));
    // One step of Newton refinement if the residual is not already at the
    // contract level; keeps ill-ish conditioned basis changes inside spec.
    const double scale = std::max(1.0, frobenius_norm(m));
    for (int pass = 0; pass < 2; ++pass) {
        CMatrix resid = m * inv - CMatrix::identity(n);
        if (frobenius_norm(resid) <= 1e-10 * scale) return inv;
        inv = inv - inv * resid;
    }
    if (frobenius_norm(m * inv - CMatrix::identity(n)) > 1e-10 * scale)
        throw SingularMatrixError("inverse residual above 1e-10; condition too high");
    return inv;
}

namespace {

void require_hermitian(const CMatrix& h) {
    if (!h.is_square()) throw DimensionError("expected a square Hermitian matrix");
    double scale = frobenius_norm(h);
    if (frobenius_norm(h - adjoint(h)) > 1e-9 * std::max(scale, 1e-300))
        throw ContractError("matrix is not Hermitian within tolerance");
}

CMatrix symmetrize(const CMatrix& h) {
    return CScalar(0.5, 0.0) * (h + adjoint(h));
}

}  // namespace

std::vector<double> hermitian_spectrum(const CMatrix& h) {
    require_hermitian(h);
    const int n = h.rows();
    CMatrix a = symmetrize(h);
    const double scale = frobenius_norm(a);
    std::vector<double> diag(n);
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    // Work on a dense copy; cyclic sweeps over (p,q).
    std::vector<CScalar> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * n + j] = a(i, j);
    auto at = [&](int i, int j) -> CScalar& { return w[static_cast<size_t>(i) * n + j]; };

    const double target = 1e-12 * scale;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(at(p, q));
        if (std::sqrt(off) <= target) break;
        if (sweep == max_sweeps - 1)
            throw AlgebraError("Jacobi iteration failed to converge");

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                CScalar b = at(p, q);
                double babs = std::abs(b);
                if (babs <= 1e-300) continue;
                double app = at(p, p).real();
                double aqq = at(q, q).real();
                double beta = std::arg(b);
                double theta = 0.5 * std::atan2(2.0 * babs, app - aqq);
                // keep the smaller rotation, |theta| <= pi/4
                if (theta > 0.25 * 3.14159265358979323846) theta -= 0.5 * 3.14159265358979323846;
                double c = std::cos(theta), s = std::sin(theta);
                CScalar eb(std::cos(beta), std::sin(beta));
                // Columns: col_p' = c*col_p + s*conj(eb)*col_q,
                //          col_q' = -s*eb*col_p + c*col_q.  Then same on rows
                // with conjugated coefficients (unitary congruence).
                for (int i = 0; i < n; ++i) {
                    CScalar vip = at(i, p), viq = at(i, q);
                    at(i, p) = c * vip + s * std::conj(eb) * viq;
                    at(i, q) = -s * eb * vip + c * viq;
                }
                for (int j = 0; j < n; ++j) {
                    CScalar vpj = at(p, j), vqj = at(q, j);
                    at(p, j) = c * vpj + s * eb * vqj;
                    at(q, j) = -s * std::conj(eb) * vpj + c * vqj;
                }
                at(p, q) = CScalar(0.0, 0.0);
                at(q, p) = CScalar(0.0, 0.0);
            }
        }
    }
    for (int i = 0; i < n; ++i) diag[i] = at(i, i).real();
    std::sort(diag.begin(), diag.end());
    return diag;
}

CMatrix cholesky(const CMatrix& h) {
    require_hermitian(h);
    const int n = h.rows();
    CMatrix a = symmetrize(h);
    const double tol = 1e-12 * frobenius_norm(a);
    CMatrix l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (d <= tol || !(d > 0.0))
            throw NotPositiveDefiniteError("Cholesky pivot " + std::to_string(d) +
                                           " at column " + std::to_string(j));
        double ljj = std::sqrt(d);
        l.set(j, j, CScalar(ljj, 0.0));
        for (int i = j + 1; i < n; ++i) {
            CScalar acc = a(i, j);
            for (int k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            l.set(i, j, acc / ljj);
        }
    }
    return l;
}

std::vector<CMatrix> nullspace(const CMatrix& k) {
    const int m = k.rows(), n = k.cols();
    std::vector<CScalar> a(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = k(i, j);
    auto at = [&](int i, int j) -> CScalar& { return a[static_cast<size_t>(i) * n + j]; };

    std::vector<bool> col_used(n, false);
    std::vector<int> pivot_row_of;  // pivot col index per eliminated row
    std::vector<int> pivot_cols;
    double first_pivot = 0.0;
    int rank = 0;

    while (rank < m && rank < n) {
        // Column pivoting: search the remaining block for the maximal
        // modulus; ties resolved by lowest column, then lowest row.
        int bi = -1, bj = -1;
        double best = 0.0;
        for (int j = 0; j < n; ++j) {
            if (col_used[j]) continue;
            for (int i = rank; i < m; ++i) {
                double mod = std::abs(at(i, j));
                if (mod > best) {
                    best = mod;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0 || best <= 1e-8 * first_pivot || best == 0.0) break;
        if (rank == 0) first_pivot = best;

        if (bi != rank)
            for (int j = 0; j < n; ++j) std::swap(at(bi, j), at(rank, j));
        CScalar piv = at(rank, bj);
        for (int j = 0; j < n; ++j) at(rank, j) /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == rank) continue;
            CScalar f = at(i, bj);
            if (f == CScalar(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) at(i, j) -= f * at(rank, j);
        }
        col_used[bj] = true;
        pivot_cols.push_back(bj);
        pivot_row_of.push_back(rank);
        ++rank;
    }

    // One kernel vector per free column, in ascending column order.
    std::vector<CMatrix> basis;
    for (int f = 0; f < n; ++f) {
        if (col_used[f]) continue;
        CMatrix v(n, 1);
        v.set(f, 0, CScalar(1.0, 0.0));
        for (int p = 0; p < rank; ++p) v.set(pivot_cols[p], 0, -at(pivot_row_of[p], f));
        basis.push_back(v);
    }

    // Gram-Schmidt in that order; the unit coordinates at distinct free
    // columns keep the set independent, so no pivot can collapse.
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            CScalar proj(0.0, 0.0);
            for (int r = 0; r < n; ++r) proj += std::conj(basis[j](r, 0)) * basis[i](r, 0);
            for (int r = 0; r < n; ++r)
                basis[i].set(r, 0, basis[i](r, 0) - proj * basis[j](r, 0));
        }
        double nrm = frobenius_norm(basis[i]);
        for (int r = 0; r < n; ++r) basis[i].set(r, 0, basis[i](r, 0) / nrm);
    }
    return basis;
}

std::vector<CScalar> char_poly_elementary(const CMatrix& m) {
    if (!m.is_square()) throw DimensionError("char_poly_elementary needs a square matrix");
    const int n = m.rows();
    std::vector<CScalar> e(n);
    CMatrix mk = m;
    e[0] = trace(mk);
    for (int k = 1; k < n; ++k) {
        // N_k = A (e_{k-1} I - N_{k-1}),  e_k = tr(N_k) / k
        CMatrix shift = e[k - 1] * CMatrix::identity(n) - mk;
        mk = m * shift;
        e[k] = trace(mk) / CScalar(static_cast<double>(k + 1), 0.0);
    }
    return e;
}

}  // namespace b3rep
