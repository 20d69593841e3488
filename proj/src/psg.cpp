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
#include "polcal/psg.hpp"

#include <cmath>

namespace polcal {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

MuellerMatrix psg_mueller(const PsgConfig& cfg) {
    MuellerMatrix pol = linear_polarizer(cfg.polarizer_angle);
    MuellerMatrix r1 = linear_retarder(cfg.lcvr1.axis_angle, kTwoPi * cfg.lcvr1.retardance_waves);
    MuellerMatrix r2 = linear_retarder(cfg.lcvr2.axis_angle, kTwoPi * cfg.lcvr2.retardance_waves);
    return compose(r2, compose(r1, pol));
}

StokesVector psg_state(const PsgConfig& cfg, double ret1_waves, double ret2_waves) {
    PsgConfig c = cfg;
    c.lcvr1.retardance_waves = ret1_waves;
    c.lcvr2.retardance_waves = ret2_waves;
    StokesVector out = psg_mueller(c) * StokesVector::unpolarized(1.0);
    if (out.s0 <= 0.0) {
        throw DomainError("psg_state: generator transmits no intensity");
    }
    return out * (1.0 / out.s0);
}

std::vector<Table1Entry> table1_states() {
    return {
        {"H", 1.00, 1.0, StokesVector::h()},
        {"V", 0.50, 1.0, StokesVector::v()},
        {"D", 1.00, 0.5, StokesVector::d()},
        {"A", 0.50, 0.5, StokesVector::a()},
        {"+", 0.25, 1.0, StokesVector::plus()},
        {"-", 0.75, 1.0, StokesVector::minus()},
    };
}

} // namespace polcal
