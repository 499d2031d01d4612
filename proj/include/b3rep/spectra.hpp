// Validated eigenvalue data for the generator images and the closed-form
// Q / mu machinery, including the unitarizability sign test.
//
// Angles are in turns (lambda_k = e^{2 pi i t_k}); mod-1 arithmetic on turns
// is exact where it matters.  Indices in this API are 0-based; the classical
// labels Q_rs and mu_1i map to q_value(s, r-1, s-1) and mu row entries.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "b3rep/linalg.hpp"

namespace b3rep {

inline constexpr double kBoundaryEps = 1e-6;

struct Spectrum {
    int d = 0;
    std::vector<double> angles;    // turns, reduced to [0,1)
    std::vector<CScalar> lambdas;  // unit circle by construction
    std::optional<int> gamma_branch;
    std::optional<CScalar> gamma;       // root of lambda_1...lambda_d, d in {4,5}
    std::optional<double> gamma_angle;  // its angle in turns
};

// Branch k multiplies the principal root (argument taken in (-1/2, 1/2]
// turns) by e^{2 pi i k/2} for d = 4 and e^{2 pi i k/5} for d = 5.
Spectrum spectrum_from_angles(int d, std::span<const double> turns,
                              std::optional<int> branch = std::nullopt);

// The displayed simplicity polynomial Q^(d)_{rs}; requires r != s.
CScalar q_value(const Spectrum& s, int r, int s_idx);

// Raw complex quotient Q_ij / prod(lambda_i - lambda_k) prod(lambda_j - lambda_k);
// real in exact arithmetic on unit-circle spectra.
CScalar mu_closed_value(const Spectrum& s, int i, int j);

// Real part of the quotient; throws RealnessError if |Im| > 1e-9.
double mu_closed(const Spectrum& s, int i, int j);

// Diagonal value from the row-sum identity: 1 - sum of an off-diagonal row.
double mu_diag(std::span<const double> off_diagonal_row);

struct MuRow {
    std::vector<double> values;       // mu_{1i}, i = 2..d
    std::vector<bool> boundary_flags; // |mu| <= eps per entry
};

MuRow mu_row(const Spectrum& s, double eps = kBoundaryEps);

// True iff |Q_rs| > 1e-9 for all r != s.
bool is_simple(const Spectrum& s);

enum class Verdict { unitarizable, not_unitarizable, boundary, not_simple };

const char* to_string(Verdict v);

// Sign test of the main theorem: unitarizable iff every mu_{1i} > 0.
// Refuses to classify inside the |mu| <= eps band.
Verdict unitarizable(const Spectrum& s, double eps = kBoundaryEps);

// Reduce an angle in turns to [0,1).
double wrap_turn(double t);

}  // namespace b3rep
