// Executable form of the eigenprojection / involution / invariant-form
// machinery: e_{M,i} Lagrange products, numeric mu, the d^2-element matrix
// basis S, the antilinear involution, the d-vector basis T, the invariant
// Hermitian form with its signature, an independent invariant-form oracle,
// and the Cholesky unitarization step.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "b3rep/linalg.hpp"
#include "b3rep/rep_builder.hpp"
#include "b3rep/spectra.hpp"

namespace b3rep {

// Lagrange product prod_{j != i} (m - lambda_j) / (lambda_i - lambda_j);
// idempotence is verified before returning (residual 1e-8).
CMatrix eigenprojection(const CMatrix& m, const Spectrum& s, int i);

struct ProjectorSet {
    std::vector<CMatrix> e_a;
    std::vector<CMatrix> e_b;
};

// All 2d projectors with idempotence, orthogonality, completeness and
// rank-one checks.
ProjectorSet projectors(const RepPair& r, const Spectrum& s);

// mu_ij = trace(e_{B,i} e_{A,j}); the trace of a rank-one projector sandwich
// equals the defining scalar.  Verifies the sandwich residual (1e-8) and the
// imaginary part (1e-8) before discarding it.
double mu_numeric(const ProjectorSet& p, int i, int j);
double mu_numeric(const RepPair& r, const Spectrum& s, int i, int j);

// Full d x d table (diagonal included); rows sum to 1 by the paper's
// row-sum identity, which tests assert rather than assume.
std::vector<std::vector<double>> mu_numeric_table(const RepPair& r, const Spectrum& s);

// Basis S = {e_{A,i}} (diagonal projectors first) followed by
// {e_{A,i} e_{B,1} e_{A,j}, i != j} in lexicographic (i, j) order.
std::vector<CMatrix> basis_S_elements(const RepPair& r, const Spectrum& s);

// smallest/largest singular value of the elements stacked as vectors
double stacked_rank_ratio(std::span<const CMatrix> elements);

// basis_S_elements with the numerical rank-d^2 assertion (ratio > 1e-8);
// throws NotSimpleError on deficiency.
std::vector<CMatrix> basis_S(const RepPair& r, const Spectrum& s);

// The antilinear involution: expand in S, conjugate coefficients, fix the
// e_{A,i}, swap e_{A,i} e_{B,1} e_{A,j} <-> e_{A,j} e_{B,1} e_{A,i}.
class Involution {
public:
    explicit Involution(std::vector<CMatrix> basis_s);
    CMatrix apply(const CMatrix& x) const;

private:
    std::vector<CMatrix> basis_;
    std::vector<int> swap_index_;
    CMatrix coeff_inverse_;
    int d_;
};

CMatrix involution_apply(const CMatrix& x, std::span<const CMatrix> basis_s);

// Columns v_1 = ABA w, v_i = e_{A,i} w (i = 2..d) where w is the unit
// eigenvector of B for lambda_1 obtained as e_{B,1} g over a fixed list of
// generic vectors g.
std::vector<CMatrix> basis_T_vectors(const RepPair& r, const Spectrum& s);

struct GramForm {
    CMatrix h;                          // invariant Hermitian form on V
    std::vector<CMatrix> t_vectors;
    std::vector<double> gram_diagonal;  // (1, mu_12, ..., mu_1d)
    std::pair<int, int> signature;      // (n_plus, n_minus)
};

// H = (V*)^{-1} D V^{-1} with D = diag(1, mu_12, ..., mu_1d) from
// mu_numeric; invariance under A and B asserted at 1e-8 * ||H||.
GramForm gram_form(const RepPair& r, const Spectrum& s);

// Independent cross-check: solves {A*HA = H, B*HB = H} over Hermitian
// matrices by nullspace intersection; requires a one-dimensional solution
// space and returns the representative scaled so its largest-modulus
// eigenvalue is +1.
CMatrix invariant_form_oracle(const RepPair& r);

// With H = LL*: U_A = L* A (L*)^{-1}, U_B = L* B (L*)^{-1}.  Requires
// signature (d, 0).
std::pair<CMatrix, CMatrix> unitarize(const RepPair& r, const GramForm& g);

}  // namespace b3rep
