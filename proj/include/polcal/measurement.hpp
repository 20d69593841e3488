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
 * @file measurement.hpp
 * @brief Paired input/output Stokes measurements with repeat statistics.
 *
 * CSV schema (one row per repeat sample, grouped by label):
 *   label,s0_in,s1_in,s2_in,s3_in,s0_out,s1_out,s2_out,s3_out,sample_idx
 * The JSON equivalent mirrors the same fields; see measurement.cpp.
 */
#pragma once

#include "polcal/stokes.hpp"

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

namespace polcal {

struct MeasurementRecord {
    std::string label;
    StokesVector s_in;
    std::vector<StokesVector> samples_out; ///< repeat measurements, nominally 400
};

struct MeasurementSet {
    std::vector<MeasurementRecord> records;
    double wavelength = 0.0;   ///< m; 0 = unset
    double fiber_length = 0.0; ///< m; 0 = unset
};

/// Sample mean and unbiased sample covariance of repeat Stokes readings.
struct StokesStatistics {
    StokesVector mean;
    Eigen::Matrix4d covariance = Eigen::Matrix4d::Zero();
};

/// Throws DomainError for fewer than two samples.
StokesStatistics stokes_statistics(const std::vector<StokesVector>& samples);

/// Mean of the repeat samples (defined for a single sample too).
StokesVector mean_stokes(const std::vector<StokesVector>& samples);

MeasurementSet load_measurement_csv(const std::string& path);
void save_measurement_csv(const std::string& path, const MeasurementSet& set);
MeasurementSet load_measurement_json(const std::string& path);
void save_measurement_json(const std::string& path, const MeasurementSet& set);

/// Dispatch on extension: ".csv" or ".json".
MeasurementSet load_measurement_file(const std::string& path);

void write_measurement_csv(std::ostream& os, const MeasurementSet& set);

} // namespace polcal
