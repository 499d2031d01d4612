// Reconstructs concrete generator images A, B with a prescribed spectrum
// satisfying the braid relation ABA = BAB (and a prescribed central scalar
// delta for d = 4, 5).  A is fixed diagonal; B is found by damped Newton on
// the stacked residual system.  Everything downstream only consumes
// conjugation invariants, so the leftover diagonal gauge on B is harmless.

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "b3rep/linalg.hpp"
#include "b3rep/spectra.hpp"

namespace b3rep {

struct RepPair {
    CMatrix A;
    CMatrix B;
    CScalar delta;
    double braid_residual;     // ||ABA - BAB||_F
    double spectrum_residual;  // max elementary-symmetric deviation, A and B
};

// Exact closed form for d = 2:
//   A = [[l1, l1], [0, l2]],  B = [[l2, 0], [-l2, l1]].
RepPair build_d2(const Spectrum& s);

// The d d-th roots of (lambda_1 ... lambda_d)^6, the values delta may take by
// the determinant of (AB)^3 = delta I.  Root j has angle (6*sum(t) + j)/d.
std::vector<CScalar> delta_candidates(const Spectrum& s);

// Damped Newton reconstruction with up to 50 deterministic seeded restarts.
// delta_target is required for d = 4, 5 (and must be a determinant root) and
// must be absent for d = 2, 3.  Throws ReconstructionError if no restart
// converges to a verified simple representation.
RepPair build_newton(const Spectrum& s,
                     std::optional<CScalar> delta_target = std::nullopt,
                     uint64_t seed = 0);

// trace((AB)^3)/d with a scalar-ness check at 1e-9.
CScalar extract_delta(const RepPair& r);

// For d = 4, 5: the unique gamma branch whose closed-form mu row matches the
// representation's numeric mu row within 1e-7.
int match_branch(int d, std::span<const double> angles, const RepPair& r);

struct VerifyReport {
    double braid_residual = 0.0;
    double spectrum_residual = 0.0;
    double central_residual = 0.0;  // ||(AB)^3 - delta I||_F
    CScalar delta{0.0, 0.0};
    double s_basis_sv_ratio = 0.0;  // smallest/largest singular value of stacked S
    bool braid_ok = false;
    bool spectrum_ok = false;
    bool central_ok = false;
    bool simple_ok = false;
    bool all_ok() const { return braid_ok && spectrum_ok && central_ok && simple_ok; }
};

VerifyReport verify_rep(const RepPair& r, const Spectrum& s);

// Convenience used by the CLI and tests: reconstruct so the representation's
// branch (via match_branch) agrees with the Spectrum's gamma branch.  For
// d <= 3 this is plain build_newton; for d = 4, 5 it walks delta_candidates
// (best-guess order) until the branch matches.
RepPair build_for_branch(const Spectrum& s, uint64_t seed = 0);

}  // namespace b3rep
