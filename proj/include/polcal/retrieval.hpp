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
 * @file retrieval.hpp
 * @brief Least-squares Mueller matrix estimation from measurement sets.
 *
 * The estimate minimizes sum_r ||mean(samples_out_r) - M s_in_r||^2, i.e.
 * M = S_out * pinv(S_in) on column-stacked means. Inputs must span rank 4;
 * singular values below 1e-10 of the largest count as zero and raise
 * IllPosedError naming the unobserved Stokes directions.
 *
 * Element uncertainties come in two flavors that the tests cross-check:
 * parametric Monte Carlo resampling of the output means, and first-order
 * linear propagation through the pseudoinverse.
 */
#pragma once

#include "polcal/measurement.hpp"
#include "polcal/mueller.hpp"
#include "polcal/parallel.hpp"

#include <Eigen/Dense>
#include <cstdint>

namespace polcal {

struct MuellerEstimate {
    MuellerMatrix m;
    /// Per-element standard deviation. estimate_mueller fills this with the
    /// first-order linear propagation; pipelines may replace it with the
    /// Monte Carlo value.
    Eigen::Matrix4d element_sigma = Eigen::Matrix4d::Zero();
    /// Condition number of the 4xN input-state matrix.
    double condition_number = 1.0;
};

enum class Weighting {
    none,               ///< plain least squares on the record means (default)
    inverse_covariance, ///< generalized least squares with per-record mean covariance
};

/// Relative singular-value cutoff separating rank deficiency from roundoff.
constexpr double kPinvCutoff = 1e-10;

MuellerEstimate estimate_mueller(const MeasurementSet& set, Weighting weighting = Weighting::none);

/// Monte Carlo element sigmas: resample each record's output mean from
/// N(mean_r, cov_r / n_r) and re-estimate. Deterministic in (seed); the
/// OpenMP path is bit-identical to Exec::serial.
Eigen::Matrix4d propagate_uncertainty(const MeasurementSet& set, int n_resamples,
                                      std::uint64_t seed, Exec exec = Exec::openmp);

/// Closed-form first-order propagation of the per-record mean covariances
/// through the pseudoinverse.
Eigen::Matrix4d propagate_uncertainty_linear(const MeasurementSet& set);

namespace detail {

/// Column-stacked input states (4 x N).
Eigen::Matrix<double, 4, Eigen::Dynamic> input_matrix(const MeasurementSet& set);

/// Column-stacked output means (4 x N).
Eigen::Matrix<double, 4, Eigen::Dynamic> output_mean_matrix(const MeasurementSet& set);

/// Pseudoinverse of the input matrix (N x 4) plus its condition number;
/// throws IllPosedError on rank deficiency.
Eigen::MatrixXd input_pseudoinverse(const Eigen::Matrix<double, 4, Eigen::Dynamic>& s_in,
                                    double* condition_number);

/// Symmetric PSD square root used to draw correlated Gaussian samples.
Eigen::Matrix4d psd_sqrt(const Eigen::Matrix4d& cov);

} // namespace detail

} // namespace polcal
