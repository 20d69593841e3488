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
 * @file mueller.hpp
 * @brief 4x4 Mueller matrices and the standard element constructors.
 *
 * Sphere-angle convention: every retardance delta in this library is a
 * Poincare-sphere rotation angle (a physical polarization-plane rotation
 * by phi is a sphere rotation by 2*phi).
 *
 *   circular_retarder(delta)        rotates S1 -> S2 for delta > 0
 *                                   (counterclockwise about +S3).
 *   linear_retarder(theta, delta)   rotates by -delta about the equatorial
 *                                   axis at sphere azimuth 2*theta; the
 *                                   fast-axis form whose (s2,s3) block at
 *                                   theta = 0 is [[cos d, sin d],
 *                                                 [-sin d, cos d]].
 *
 * This pairing is the one under which the H-polarizer + LCVR(45deg) +
 * LCVR(22.5deg) generator reproduces all six canonical states (see psg.hpp).
 */
#pragma once

#include "polcal/stokes.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace polcal {

struct MuellerMatrix {
    /// Row-major m[4*row + col]; m(0,0) is the total transmittance.
    std::array<double, 16> m{};

    double operator()(int r, int c) const { return m[4 * r + c]; }
    double& operator()(int r, int c) { return m[4 * r + c]; }

    static MuellerMatrix identity() {
        MuellerMatrix out;
        out(0, 0) = out(1, 1) = out(2, 2) = out(3, 3) = 1.0;
        return out;
    }

    StokesVector operator*(const StokesVector& s) const {
        StokesVector out;
        for (int r = 0; r < 4; ++r) {
            out[r] = m[4 * r + 0] * s.s0 + m[4 * r + 1] * s.s1 + m[4 * r + 2] * s.s2 +
                     m[4 * r + 3] * s.s3;
        }
        return out;
    }

    MuellerMatrix operator*(const MuellerMatrix& o) const {
        MuellerMatrix out;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) acc += m[4 * r + k] * o.m[4 * k + c];
                out.m[4 * r + c] = acc;
            }
        }
        return out;
    }
};

inline StokesVector apply(const MuellerMatrix& m, const StokesVector& s) { return m * s; }

/// Cascade: light passes m1 first, then m2.
inline MuellerMatrix compose(const MuellerMatrix& m2, const MuellerMatrix& m1) { return m2 * m1; }

/// Rotation of the (s1,s2) plane by delta; fixes s0 and s3.
inline MuellerMatrix circular_retarder(double delta) {
    const double c = std::cos(delta), s = std::sin(delta);
    MuellerMatrix out = MuellerMatrix::identity();
    out(1, 1) = c;
    out(1, 2) = -s;
    out(2, 1) = s;
    out(2, 2) = c;
    return out;
}

/// Linear retarder with axis at physical angle theta, sphere retardance delta.
inline MuellerMatrix linear_retarder(double theta, double delta) {
    const double C = std::cos(2.0 * theta), S = std::sin(2.0 * theta);
    const double cd = std::cos(delta), sd = std::sin(delta);
    MuellerMatrix out = MuellerMatrix::identity();
    out(1, 1) = C * C + S * S * cd;
    out(1, 2) = C * S * (1.0 - cd);
    out(1, 3) = -S * sd;
    out(2, 1) = C * S * (1.0 - cd);
    out(2, 2) = S * S + C * C * cd;
    out(2, 3) = C * sd;
    out(3, 1) = S * sd;
    out(3, 2) = -C * sd;
    out(3, 3) = cd;
    return out;
}

/// Ideal linear polarizer with transmission axis at physical angle theta.
inline MuellerMatrix linear_polarizer(double theta) {
    const double C = std::cos(2.0 * theta), S = std::sin(2.0 * theta);
    MuellerMatrix out;
    out(0, 0) = 0.5;
    out(0, 1) = 0.5 * C;
    out(0, 2) = 0.5 * S;
    out(1, 0) = 0.5 * C;
    out(1, 1) = 0.5 * C * C;
    out(1, 2) = 0.5 * C * S;
    out(2, 0) = 0.5 * S;
    out(2, 1) = 0.5 * C * S;
    out(2, 2) = 0.5 * S * S;
    return out;
}

/// Diagonal depolarizer diag(1, a, b, c) with factors in (0, 1].
inline MuellerMatrix depolarizer(double a, double b, double c) {
    MuellerMatrix out = MuellerMatrix::identity();
    out(1, 1) = a;
    out(2, 2) = b;
    out(3, 3) = c;
    return out;
}

/// Partial polarizer with diattenuation d in [0, 1) and axis theta.
/// Principal intensity transmittances are 1 and (1-d)/(1+d).
inline MuellerMatrix diattenuator(double d, double theta) {
    if (d < 0.0 || d >= 1.0) {
        throw DomainError("diattenuator: d must be in [0, 1), got " + std::to_string(d));
    }
    const double t1 = 1.0;
    const double t2 = (1.0 - d) / (1.0 + d);
    const double sum = 0.5 * (t1 + t2);
    const double dif = 0.5 * (t1 - t2);
    const double geo = std::sqrt(t1 * t2);
    MuellerMatrix m0;
    m0(0, 0) = sum;
    m0(0, 1) = dif;
    m0(1, 0) = dif;
    m0(1, 1) = sum;
    m0(2, 2) = geo;
    m0(3, 3) = geo;
    return circular_retarder(2.0 * theta) * m0 * circular_retarder(-2.0 * theta);
}

/// First physicality violation found by deterministic sampling of fully
/// polarized inputs, or nullopt if the matrix looks physical. The tolerance
/// is relative to m(0,0) and deliberately loose by default: Mueller matrices
/// estimated from noisy data overshoot dop = 1 by a few noise sigmas.
inline std::optional<std::string> physicality_violation(const MuellerMatrix& m,
                                                        double tol = 1e-2) {
    const double m00 = m(0, 0);
    if (!(m00 > 0.0)) {
        return "m(0,0) = " + std::to_string(m00) + " is not positive";
    }
    auto check = [&](const StokesVector& s) -> std::optional<std::string> {
        StokesVector out = m * s;
        if (out.s0 < -tol * m00) {
            return "output intensity " + std::to_string(out.s0) + " < 0 for input (" +
                   std::to_string(s.s1) + ", " + std::to_string(s.s2) + ", " +
                   std::to_string(s.s3) + ")";
        }
        if (out.polarized_intensity() > out.s0 + tol * m00) {
            return "output dop exceeds 1 (polarized " + std::to_string(out.polarized_intensity()) +
                   " vs s0 " + std::to_string(out.s0) + ") for input (" + std::to_string(s.s1) +
                   ", " + std::to_string(s.s2) + ", " + std::to_string(s.s3) + ")";
        }
        return std::nullopt;
    };
    const StokesVector canon[7] = {StokesVector::h(),    StokesVector::v(),
                                   StokesVector::d(),    StokesVector::a(),
                                   StokesVector::plus(), StokesVector::minus(),
                                   StokesVector::unpolarized()};
    for (const auto& s : canon) {
        if (auto v = check(s)) return v;
    }
    // Fibonacci lattice over the sphere of fully polarized states.
    const int n = 64;
    const double phi_step = 2.39996322972865332; // golden angle
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n;
        double r = std::sqrt(1.0 - z * z);
        double phi = phi_step * i;
        if (auto v = check({1.0, r * std::cos(phi), r * std::sin(phi), z})) return v;
    }
    return std::nullopt;
}

inline bool is_physical(const MuellerMatrix& m, double tol = 1e-2) {
    return !physicality_violation(m, tol).has_value();
}

} // namespace polcal
