#include "b3rep/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace b3rep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CScalar unit_circle(double turns) {
    return CScalar(std::cos(kTwoPi * turns), std::sin(kTwoPi * turns));
}

// Argument of e^{2 pi i p} in (-1/2, 1/2] turns, p in [0,1).
double principal_turn(double p) {
    return p > 0.5 ? p - 1.0 : p;
}

}  // namespace

double wrap_turn(double t) {
    double r = t - std::floor(t);
    if (r >= 1.0) r = 0.0;  // guard against rounding at the seam
    return r;
}

Spectrum spectrum_from_angles(int d, std::span<const double> turns,
                              std::optional<int> branch) {
    if (d < 2 || d > 5) throw ContractError("dimension must be in 2..5");
    if (static_cast<int>(turns.size()) != d)
        throw ContractError("expected " + std::to_string(d) + " angles, got " +
                            std::to_string(turns.size()));
    const bool wants_branch = (d == 4 || d == 5);
    if (wants_branch != branch.has_value())
        throw ContractError(wants_branch ? "gamma branch required for d = 4, 5"
                                         : "gamma branch only applies to d = 4, 5");
    const int n_branches = (d == 4) ? 2 : 5;
    if (branch && (*branch < 0 || *branch >= n_branches))
        throw ContractError("gamma branch " + std::to_string(*branch) +
                            " out of range 0.." + std::to_string(n_branches - 1));

    Spectrum s;
    s.d = d;
    s.angles.reserve(d);
    for (double t : turns) {
        if (!std::isfinite(t)) throw ContractError("non-finite angle");
        s.angles.push_back(wrap_turn(t));
    }
    for (double t : s.angles) s.lambdas.push_back(unit_circle(t));

    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            if (std::abs(s.lambdas[j] - s.lambdas[k]) <= 1e-9)
                throw DegenerateSpectrumError(
                    "eigenvalues " + std::to_string(j + 1) + " and " +
                    std::to_string(k + 1) + " coincide within 1e-9");
        }
    }

    if (branch) {
        s.gamma_branch = branch;
        double product_angle = 0.0;
        for (double t : s.angles) product_angle += t;
        product_angle = wrap_turn(product_angle);
        // square root for d = 4, fifth root for d = 5
        const int order = (d == 4) ? 2 : 5;
        const double root = principal_turn(product_angle) / order +
                            static_cast<double>(*branch) / order;
        s.gamma_angle = wrap_turn(root);
        s.gamma = unit_circle(*s.gamma_angle);
        CScalar pw(1.0, 0.0), prod(1.0, 0.0);
        for (int k = 0; k < order; ++k) pw *= *s.gamma;
        for (const CScalar& l : s.lambdas) prod *= l;
        if (std::abs(pw - prod) > 1e-12)
            throw AlgebraError("gamma branch failed to reproduce the eigenvalue product");
    }
    return s;
}

namespace {

void check_pair(const Spectrum& s, int r, int c) {
    if (r < 0 || r >= s.d || c < 0 || c >= s.d)
        throw ContractError("index out of range 0..d-1");
    if (r == c) throw ContractError("indices must differ");
}

}  // namespace

CScalar q_value(const Spectrum& s, int r, int s_idx) {
    check_pair(s, r, s_idx);
    const auto& l = s.lambdas;
    const CScalar lr = l[r], ls = l[s_idx];
    switch (s.d) {
        case 2:
            return -lr * lr + lr * ls - ls * ls;
        case 3: {
            int k = 3 - r - s_idx;
            return (lr * lr + ls * l[k]) * (ls * ls + lr * l[k]);
        }
        case 4: {
            // remaining indices in ascending order; the factor pair is
            // symmetric in {k, l}, asserted in tests
            int k = -1, lq = -1;
            for (int i = 0; i < 4; ++i) {
                if (i == r || i == s_idx) continue;
                if (k < 0) k = i; else lq = i;
            }
            const CScalar g = *s.gamma;
            return (CScalar(-1.0, 0.0) / g) * (lr * lr + g) * (ls * ls + g) *
                   (g + lr * l[k] + ls * l[lq]) * (g + lr * l[lq] + ls * l[k]);
        }
        case 5: {
            const CScalar g = *s.gamma;
            const CScalar g2 = g * g;
            CScalar g8(1.0, 0.0);
            for (int i = 0; i < 8; ++i) g8 *= g;
            CScalar acc = (g2 + lr * g + lr * lr) * (g2 + ls * g + ls * ls);
            for (int k = 0; k < 5; ++k) {
                if (k == r || k == s_idx) continue;
                acc *= (g2 + lr * l[k]) * (g2 + ls * l[k]);
            }
            return acc / g8;
        }
        default:
            throw ContractError("unsupported dimension");
    }
}

namespace {

// Product of unit-circle sums/differences kept as (real amplitude, phase in
// turns).  Every factor of Q and of the eigenvalue-difference denominator
// splits this way, e.g. e^{ia} - e^{ib} = e^{i(a+b)/2} * 2i sin((a-b)/2), so
// the quotient's phase is a linear form in the angles with only rounding
// residue.  The realness Lemma then means the total phase is a half-integer
// number of turns, which is folded out exactly instead of being left to
// catastrophic cancellation near coincident eigenvalues.
struct PhaseProduct {
    double amp = 1.0;
    double phase = 0.0;  // turns

    void unit(double turns) { phase += turns; }
    void real(double x) { amp *= x; }
    // e^{2 pi i a} + e^{2 pi i b}
    void sum2(double a, double b) {
        amp *= 2.0 * std::cos(std::numbers::pi * (a - b));
        phase += 0.5 * (a + b);
    }
    // e^{2 pi i a} - e^{2 pi i b}
    void diff(double a, double b) {
        amp *= 2.0 * std::sin(std::numbers::pi * (a - b));
        phase += 0.5 * (a + b) + 0.25;
    }
};

PhaseProduct q_factored(const Spectrum& s, int r, int c) {
    const auto& t = s.angles;
    const double tr = t[r], tc = t[c];
    PhaseProduct q;
    switch (s.d) {
        case 2:
            // -lr^2 + lr ls - ls^2 = -(lr ls)(2 cos(2 pi (tr - tc)) - 1)
            q.real(2.0 * std::cos(2.0 * std::numbers::pi * (tr - tc)) - 1.0);
            q.unit(tr + tc + 0.5);
            break;
        case 3: {
            int k = 3 - r - c;
            q.sum2(2.0 * tr, tc + t[k]);
            q.sum2(2.0 * tc, tr + t[k]);
            break;
        }
        case 4: {
            int k = -1, l = -1;
            for (int i = 0; i < 4; ++i) {
                if (i == r || i == c) continue;
                if (k < 0) k = i; else l = i;
            }
            const double g = *s.gamma_angle;
            q.unit(0.5 - g);  // the -gamma^{-1} prefactor
            q.sum2(2.0 * tr, g);
            q.sum2(2.0 * tc, g);
            // gamma + lr lk + lc ll = gamma (1 + 2 cos(2 pi (tr + tk - g)))
            // because (lr lk)(lc ll) = gamma^2
            q.real(1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * (tr + t[k] - g)));
            q.unit(g);
            q.real(1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * (tr + t[l] - g)));
            q.unit(g);
            break;
        }
        case 5: {
            const double g = *s.gamma_angle;
            q.unit(-8.0 * g);
            // gamma^2 + lr gamma + lr^2 = gamma lr (1 + 2 cos(2 pi (tr - g)))
            q.real(1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * (tr - g)));
            q.unit(g + tr);
            q.real(1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * (tc - g)));
            q.unit(g + tc);
            for (int k = 0; k < 5; ++k) {
                if (k == r || k == c) continue;
                q.sum2(2.0 * g, tr + t[k]);
                q.sum2(2.0 * g, tc + t[k]);
            }
            break;
        }
        default:
            throw ContractError("unsupported dimension");
    }
    return q;
}

}  // namespace

CScalar mu_closed_value(const Spectrum& s, int i, int j) {
    check_pair(s, i, j);
    // the quotient is symmetric under i <-> j; evaluate the sorted pair so
    // the symmetry holds bit for bit
    if (i > j) std::swap(i, j);
    PhaseProduct acc = q_factored(s, i, j);
    PhaseProduct denom;
    for (int k = 0; k < s.d; ++k) {
        if (k != i) denom.diff(s.angles[i], s.angles[k]);
        if (k != j) denom.diff(s.angles[j], s.angles[k]);
    }
    const double ratio = acc.amp / denom.amp;
    const double theta = acc.phase - denom.phase;
    const long long half_units = std::llround(2.0 * theta);
    const double resid = theta - 0.5 * static_cast<double>(half_units);
    const double sign = (((half_units % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
    if (std::abs(resid) <= 1e-10) return CScalar(sign * ratio, 0.0);
    // phase residue too large to be rounding: report it faithfully
    return sign * ratio *
           CScalar(std::cos(kTwoPi * resid), std::sin(kTwoPi * resid));
}

double mu_closed(const Spectrum& s, int i, int j) {
    CScalar v = mu_closed_value(s, i, j);
    if (std::abs(v.imag()) > 1e-9)
        throw RealnessError("mu_" + std::to_string(i + 1) + std::to_string(j + 1) +
                            " has imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

double mu_diag(std::span<const double> off_diagonal_row) {
    double sum = 0.0;
    for (double v : off_diagonal_row) sum += v;
    return 1.0 - sum;
}

MuRow mu_row(const Spectrum& s, double eps) {
    MuRow row;
    for (int i = 1; i < s.d; ++i) {
        double v = mu_closed(s, 0, i);
        row.values.push_back(v);
        row.boundary_flags.push_back(std::abs(v) <= eps);
    }
    return row;
}

bool is_simple(const Spectrum& s) {
    for (int r = 0; r < s.d; ++r)
        for (int c = r + 1; c < s.d; ++c)
            if (std::abs(q_value(s, r, c)) <= 1e-9) return false;
    return true;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::unitarizable: return "unitarizable";
        case Verdict::not_unitarizable: return "not_unitarizable";
        case Verdict::boundary: return "boundary";
        case Verdict::not_simple: return "not_simple";
    }
    return "?";
}

Verdict unitarizable(const Spectrum& s, double eps) {
    if (!is_simple(s)) return Verdict::not_simple;
    MuRow row = mu_row(s, eps);
    bool positive = true;
    for (size_t k = 0; k < row.values.size(); ++k) {
        if (row.boundary_flags[k]) return Verdict::boundary;
        positive = positive && row.values[k] > 0.0;
    }
    return positive ? Verdict::unitarizable : Verdict::not_unitarizable;
}

}  // namespace b3rep
