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

#include <stdexcept>
#include <string>

namespace polcal {

/// Base class for all polcal errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid physical input (negative intensity, nonpositive length, ...).
/// CLI exit code 3.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// The requested estimate is not determined by the data (rank-deficient
/// input states, degenerate calibration, ...). CLI exit code 4.
class IllPosedError : public Error {
public:
    explicit IllPosedError(const std::string& what) : Error(what) {}
};

/// Two branch reconstructions fit the prior about equally well.
class AmbiguityError : public IllPosedError {
public:
    AmbiguityError(const std::string& what, int k_a, int k_b)
        : IllPosedError(what), candidate_a(k_a), candidate_b(k_b) {}
    int candidate_a;
    int candidate_b;
};

/// Malformed file or record layout. CLI exit code 2.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

} // namespace polcal
