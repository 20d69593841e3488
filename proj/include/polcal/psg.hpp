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
 * @file psg.hpp
 * @brief Polarization state generator: fixed polarizer + two liquid-crystal
 *        variable retarders at 45 and 22.5 degrees.
 *
 * The LCVRs are modeled as ideal linear retarders (no diattenuation, no
 * voltage curve); callers give retardance directly in waves. With the
 * polarizer at H, the six standard retardance pairs generate exactly the
 * H/V/D/A/+/- basis states.
 */
#pragma once

#include "polcal/mueller.hpp"
#include "polcal/stokes.hpp"

#include <string>
#include <vector>

namespace polcal {

struct LcvrSetting {
    double axis_angle = 0.0;       ///< rad, fixed per device
    double retardance_waves = 1.0; ///< 1.0 = full wave
};

struct PsgConfig {
    double polarizer_angle = 0.0; ///< rad; 0 = H
    LcvrSetting lcvr1{0.25 * M_PI, 1.0};   ///< 45 deg
    LcvrSetting lcvr2{0.125 * M_PI, 1.0};  ///< 22.5 deg
};

/// Generator Mueller matrix: polarizer, then LCVR-1, then LCVR-2.
MuellerMatrix psg_mueller(const PsgConfig& cfg);

/// Output state for the given LCVR retardances (waves), normalized to s0 = 1.
/// Assumes a unit-intensity unpolarized beam before the fixed polarizer.
StokesVector psg_state(const PsgConfig& cfg, double ret1_waves, double ret2_waves);

struct Table1Entry {
    std::string label;
    double ret1_waves;
    double ret2_waves;
    StokesVector state; ///< target basis state, s0 = 1
};

/// The six canonical settings and exact target states, in the order
/// H, V, D, A, +, -.
std::vector<Table1Entry> table1_states();

} // namespace polcal
