/**********
 *   Copyright 2026 The polcal Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
/**
 * @file jones.hpp
 * @brief Jones calculus for fully polarized fields.
 *
 * Field-to-Stokes mapping: s1 = |Ex|^2 - |Ey|^2, s2 = 2 Re(Ex* Ey),
 * s3 = 2 Im(Ex* Ey), so the "+" state is (1, i)/sqrt(2). These choices make
 * a physical rotator by phi map to circular_retarder(2*phi), fixing the
 * factor-2 sphere convention once.
 *
 * The Jones route is kept strictly separate from the direct Mueller
 * constructors in mueller.hpp; the test suite checks one against the other.
 */
#pragma once

#include "polcal/mueller.hpp"
#include "polcal/stokes.hpp"

#include <array>
#include <complex>

namespace polcal {

using complexd = std::complex<double>;

struct JonesVector {
    complexd ex{0.0, 0.0};
    complexd ey{0.0, 0.0};

    StokesVector to_stokes() const {
        const double axx = std::norm(ex), ayy = std::norm(ey);
        const complexd cross = std::conj(ex) * ey;
        return {axx + ayy, axx - ayy, 2.0 * cross.real(), 2.0 * cross.imag()};
    }
};

struct JonesMatrix {
    /// Row-major 2x2 complex: { j00, j01, j10, j11 }.
    std::array<complexd, 4> j{};

    complexd operator()(int r, int c) const { return j[2 * r + c]; }
    complexd& operator()(int r, int c) { return j[2 * r + c]; }

    static JonesMatrix identity() {
        JonesMatrix out;
        out(0, 0) = out(1, 1) = 1.0;
        return out;
    }

    JonesVector operator*(const JonesVector& v) const {
        return {j[0] * v.ex + j[1] * v.ey, j[2] * v.ex + j[3] * v.ey};
    }

    JonesMatrix operator*(const JonesMatrix& o) const {
        JonesMatrix out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c);
        return out;
    }
};

/// Physical rotation of the polarization plane by phi.
inline JonesMatrix jones_rotator(double phi) {
    JonesMatrix out;
    const double c = std::cos(phi), s = std::sin(phi);
    out(0, 0) = c;
    out(0, 1) = -s;
    out(1, 0) = s;
    out(1, 1) = c;
    return out;
}

/// Linear retarder, axis theta, sphere retardance delta. Matches
/// linear_retarder(theta, delta) under jones_to_mueller.
inline JonesMatrix jones_linear_retarder(double theta, double delta) {
    JonesMatrix d;
    d(0, 0) = std::polar(1.0, 0.5 * delta);
    d(1, 1) = std::polar(1.0, -0.5 * delta);
    return jones_rotator(theta) * d * jones_rotator(-theta);
}

/// Circular retarder of sphere angle delta = rotator by delta/2.
inline JonesMatrix jones_circular_retarder(double delta) { return jones_rotator(0.5 * delta); }

inline JonesMatrix jones_linear_polarizer(double theta) {
    JonesMatrix p;
    p(0, 0) = 1.0;
    return jones_rotator(theta) * p * jones_rotator(-theta);
}

/// Partial polarizer with amplitude transmittances (p, q) along axes
/// theta, theta + 90 deg.
inline JonesMatrix jones_diattenuator(double p, double q, double theta) {
    JonesMatrix d;
    d(0, 0) = p;
    d(1, 1) = q;
    return jones_rotator(theta) * d * jones_rotator(-theta);
}

/// Coherency construction M_ij = Tr(sigma_i J sigma_j J^dagger) / 2.
/// Valid for any Jones matrix; the result is nondepolarizing.
inline MuellerMatrix jones_to_mueller(const JonesMatrix& jm) {
    // Pauli set matching the Stokes mapping above: sigma1 = diag(1,-1),
    // sigma2 = [[0,1],[1,0]], sigma3 = [[0,-i],[i,0]].
    const complexd i(0.0, 1.0);
    JonesMatrix sigma[4];
    sigma[0] = JonesMatrix::identity();
    sigma[1](0, 0) = 1.0;
    sigma[1](1, 1) = -1.0;
    sigma[2](0, 1) = 1.0;
    sigma[2](1, 0) = 1.0;
    sigma[3](0, 1) = -i;
    sigma[3](1, 0) = i;

    JonesMatrix jdag;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) jdag(r, c) = std::conj(jm(c, r));

    MuellerMatrix out;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            JonesMatrix t = sigma[a] * jm * sigma[b] * jdag;
            out(a, b) = 0.5 * (t(0, 0) + t(1, 1)).real();
        }
    }
    return out;
}

} // namespace polcal
