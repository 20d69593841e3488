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
#pragma once

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polcal {

/// Execution policy for the Monte Carlo kernels. Both policies fill
/// per-index output slots and reduce serially in index order afterwards,
/// so results are bit-identical regardless of policy or thread count.
enum class Exec { serial, openmp };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
void for_each_index(Exec exec, std::int64_t n, F&& fn) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        fn(i);
    }
}

} // namespace polcal
