// Shared helpers for the test suites: deterministic RNG, random matrices,
// random spectra.  The RNG maps mt19937_64 bits to doubles directly so the
// streams do not depend on the standard library's distribution details.

#pragma once

#include <random>
#include <vector>

#include "b3rep/linalg.hpp"
#include "b3rep/spectra.hpp"

namespace test_support {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    double unit() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    b3rep::CScalar complex_box(double half_width = 1.0) {
        return {range(-half_width, half_width), range(-half_width, half_width)};
    }
    uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline b3rep::CMatrix random_matrix(Rng& rng, int n, double half_width = 1.0) {
    b3rep::CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rng.complex_box(half_width));
    return m;
}

inline b3rep::CMatrix random_hermitian(Rng& rng, int n) {
    b3rep::CMatrix m = random_matrix(rng, n);
    return b3rep::CScalar(0.5, 0.0) * (m + b3rep::adjoint(m));
}

// Random unitary built from Jacobi-style plane rotations.
inline b3rep::CMatrix random_unitary(Rng& rng, int n) {
    b3rep::CMatrix u = b3rep::CMatrix::identity(n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            double theta = rng.range(0.0, 6.283185307179586);
            double beta = rng.range(0.0, 6.283185307179586);
            double c = std::cos(theta), s = std::sin(theta);
            b3rep::CScalar eb(std::cos(beta), std::sin(beta));
            b3rep::CMatrix r = b3rep::CMatrix::identity(n);
            r.set(p, p, {c, 0.0});
            r.set(p, q, -s * eb);
            r.set(q, p, s * std::conj(eb));
            r.set(q, q, {c, 0.0});
            u = u * r;
        }
    }
    return u;
}

// Angles drawn uniformly until the spectrum is valid and simple.  min_gap
// (turns) keeps tests that compare |mu| at absolute tolerances away from the
// eigenvalue-collision poles; 0 allows anything a Spectrum allows.
inline b3rep::Spectrum random_simple_spectrum(Rng& rng, int d,
                                              std::optional<int> branch = std::nullopt,
                                              double min_gap = 0.0) {
    std::optional<int> br = branch;
    if ((d == 4 || d == 5) && !br) br = 0;
    if (d <= 3) br.reset();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> t(d);
        for (double& x : t) x = rng.unit();
        if (min_gap > 0.0) {
            bool ok = true;
            for (int i = 0; i < d && ok; ++i)
                for (int j = i + 1; j < d && ok; ++j) {
                    double delta = std::abs(t[i] - t[j]);
                    delta = std::min(delta, 1.0 - delta);
                    ok = delta >= min_gap;
                }
            if (!ok) continue;
        }
        try {
            b3rep::Spectrum s = b3rep::spectrum_from_angles(d, t, br);
            if (b3rep::is_simple(s)) return s;
        } catch (const b3rep::DegenerateSpectrumError&) {
        }
    }
    throw std::runtime_error("could not sample a simple spectrum");
}

}  // namespace test_support
