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
 * @file decomposition.hpp
 * @brief Polar decomposition of Mueller matrices, retardance extraction,
 *        phase unwrapping and birefringence estimation.
 *
 * Factor order is the canonical M = M_depol * M_retard * M_diatten, the
 * diattenuator acting first along propagation.
 *
 * The retarder block is parametrized as a circular rotation about S3 applied
 * AFTER a linear rotation about an equatorial axis:
 *     R = R_circ(delta_cb) * R_lin(fast_axis, delta_lb).
 * Scalar parameters are convention-dependent; the convention-free statement,
 * and the one the invariants check, is that the retarder rebuilt from the
 * extracted parameters reproduces the input block.
 *
 * Wrapping: extraction yields delta_lb and |delta_cb| in the arccos branch
 * [0, pi]. Unwrapping indexes arccos half-branches: branch k covers
 * [k*pi, (k+1)*pi], so
 *     unwrap(w, k) = k even ?  k*pi + w  :  (k+1)*pi - w,
 * and k/2 (floor) counts full 2*pi retardation cycles.
 */
#pragma once

#include "polcal/measurement.hpp"
#include "polcal/mueller.hpp"
#include "polcal/parallel.hpp"
#include "polcal/retrieval.hpp"

#include <cstdint>

namespace polcal {

struct PolarDecomposition {
    MuellerMatrix m_diatten;
    MuellerMatrix m_retard;
    MuellerMatrix m_depol;
    /// |trace of the depolarizer 3x3 block| / 3; 1 means nondepolarizing.
    double depolarization_factor = 1.0;
};

/// Lu-Chipman polar decomposition. Throws DomainError for non-physical
/// input (with the violated condition) and for diattenuation within 1e-9
/// of a full polarizer, where the retarder factor is not identifiable.
PolarDecomposition lu_chipman(const MuellerMatrix& m, double physicality_tol = 1e-2);

struct RetardanceResult {
    double delta_total = 0.0; ///< rad, arccos branch [0, pi]
    double delta_cb = 0.0;    ///< rad, signed circular part in (-pi, pi]
    double delta_lb = 0.0;    ///< rad, linear part in [0, pi]
    double fast_axis = 0.0;   ///< rad, orientation of the linear component, [0, pi)
};

/// Parameters of a pure retarder block. Throws DomainError if the 3x3 block
/// is not orthogonal with determinant +1 (tolerance 1e-6).
RetardanceResult extract_retardances(const MuellerMatrix& m_retard);

/// Rebuild R_circ(delta_cb) * R_lin(fast_axis, delta_lb); inverse of
/// extract_retardances up to the wrapping branch.
MuellerMatrix retarder_from_parameters(double delta_cb, double fast_axis, double delta_lb);

/// Branch reconstruction: k even -> k*pi + w, k odd -> (k+1)*pi - w.
double unwrap_retardance(double delta_wrapped, int k);

/// Branch index whose reconstruction best matches the prior birefringence.
/// Throws AmbiguityError when the best two distinct reconstructions are
/// nearly equidistant from the prior (the prior cannot discriminate).
int infer_cycles(double delta_wrapped, double length, double wavelength, double delta_n_prior);

/// delta * lambda / (2 pi l), in refractive index units.
double birefringence(double delta, double wavelength, double length);

struct BirefringenceEstimate {
    enum class Kind { circular, linear };
    double delta_n = 0.0; ///< RIU
    double sigma = 0.0;   ///< RIU, one standard deviation
    int cycles_k = 0;     ///< unwrap branch index
    Kind kind = Kind::circular;
};

struct FiberAnalysis {
    MuellerEstimate mueller;
    PolarDecomposition decomposition;
    RetardanceResult retardance;
    double delta_cb_unwrapped = 0.0; ///< rad
    double delta_lb_unwrapped = 0.0; ///< rad
    BirefringenceEstimate circular;
    BirefringenceEstimate linear;
};

/// Full chain: estimate_mueller -> lu_chipman -> extract_retardances ->
/// infer_cycles/unwrap -> birefringence, with sigmas pushed through the
/// chain by Monte Carlo resampling (per-resample seeding; bit-identical
/// for a fixed seed regardless of Exec).
FiberAnalysis analyze_fiber(const MeasurementSet& set, double delta_n_prior_cb,
                            double delta_n_prior_lb, int n_resamples, std::uint64_t seed,
                            Exec exec = Exec::openmp);

} // namespace polcal
