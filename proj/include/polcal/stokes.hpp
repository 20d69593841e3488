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
 * @file stokes.hpp
 * @brief Stokes vectors, intensity projections and Poincare-sphere points.
 *
 * Component conventions used throughout the library:
 *   s0  total intensity
 *   s1  horizontal minus vertical        (I_H - I_V)
 *   s2  diagonal minus antidiagonal      (I_D - I_A)
 *   s3  plus minus minus circular        (I_+ - I_-)
 *
 * s3 = +1 is the "+" circular basis state. A global sign flip of s3
 * reproduces the opposite handedness convention.
 */
#pragma once

#include "polcal/errors.hpp"

#include <cmath>
#include <string>

namespace polcal {

struct PoincarePoint {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    double dot(const PoincarePoint& o) const { return p1 * o.p1 + p2 * o.p2 + p3 * o.p3; }
    double norm() const { return std::sqrt(p1 * p1 + p2 * p2 + p3 * p3); }
};

struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    StokesVector() = default;
    StokesVector(double i, double q, double u, double v) : s0(i), s1(q), s2(u), s3(v) {}

    static StokesVector unpolarized(double intensity = 1.0) { return {intensity, 0, 0, 0}; }
    static StokesVector h(double intensity = 1.0) { return {intensity, intensity, 0, 0}; }
    static StokesVector v(double intensity = 1.0) { return {intensity, -intensity, 0, 0}; }
    static StokesVector d(double intensity = 1.0) { return {intensity, 0, intensity, 0}; }
    static StokesVector a(double intensity = 1.0) { return {intensity, 0, -intensity, 0}; }
    static StokesVector plus(double intensity = 1.0) { return {intensity, 0, 0, intensity}; }
    static StokesVector minus(double intensity = 1.0) { return {intensity, 0, 0, -intensity}; }

    double operator[](int i) const {
        switch (i) {
            case 0: return s0;
            case 1: return s1;
            case 2: return s2;
            default: return s3;
        }
    }
    double& operator[](int i) {
        switch (i) {
            case 0: return s0;
            case 1: return s1;
            case 2: return s2;
            default: return s3;
        }
    }

    StokesVector operator+(const StokesVector& o) const { return {s0 + o.s0, s1 + o.s1, s2 + o.s2, s3 + o.s3}; }
    StokesVector operator-(const StokesVector& o) const { return {s0 - o.s0, s1 - o.s1, s2 - o.s2, s3 - o.s3}; }
    StokesVector operator*(double k) const { return {s0 * k, s1 * k, s2 * k, s3 * k}; }

    double polarized_intensity() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

    /// s0 >= 0 and s0^2 >= s1^2 + s2^2 + s3^2 up to a relative epsilon;
    /// equality means fully polarized.
    bool is_physical(double rel_eps = 1e-9) const {
        if (s0 < 0.0) return false;
        double p2 = s1 * s1 + s2 * s2 + s3 * s3;
        return p2 <= s0 * s0 * (1.0 + rel_eps) + rel_eps;
    }
};

inline StokesVector operator*(double k, const StokesVector& s) { return s * k; }

/// Degree of polarization, sqrt(s1^2+s2^2+s3^2)/s0.
inline double dop(const StokesVector& s) {
    if (s.s0 <= 0.0) {
        throw DomainError("dop: s0 must be positive, got " + std::to_string(s.s0));
    }
    return s.polarized_intensity() / s.s0;
}

/// Unit direction (s1,s2,s3)/(s0*dop) on the Poincare sphere.
inline PoincarePoint to_poincare(const StokesVector& s) {
    double p = dop(s);
    if (p <= 0.0) {
        throw DomainError("to_poincare: unpolarized state has no sphere direction");
    }
    double n = s.s0 * p;
    return {s.s1 / n, s.s2 / n, s.s3 / n};
}

/// Raw polarimeter readings: intensities behind the six canonical analyzers.
struct IntensityProjections {
    double i_h = 0.0;
    double i_v = 0.0;
    double i_d = 0.0;
    double i_a = 0.0;
    double i_plus = 0.0;
    double i_minus = 0.0;
};

/// Stokes components from the six intensity projections:
/// s0 = I_H+I_V, s1 = I_H-I_V, s2 = I_D-I_A, s3 = I_+ - I_-.
inline StokesVector stokes_from_intensities(const IntensityProjections& p) {
    const double vals[6] = {p.i_h, p.i_v, p.i_d, p.i_a, p.i_plus, p.i_minus};
    for (double v : vals) {
        if (v < 0.0) {
            throw DomainError("stokes_from_intensities: negative intensity " + std::to_string(v));
        }
    }
    return {p.i_h + p.i_v, p.i_h - p.i_v, p.i_d - p.i_a, p.i_plus - p.i_minus};
}

} // namespace polcal
