// SPDX-License-Identifier: Apache-2.0
//
// mimo-converge: convergence simulator for massive MIMO channels and precoders
// Copyright (C) 2026 The mimo-converge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MIMOCONV_ERRORS_HPP
#define MIMOCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mimoconv {

// Matrix is numerically singular (e.g. M too close to K or a degenerate draw).
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string &what) : std::runtime_error(what) {}
};

// Matrix has an eigenvalue below the negative PSD tolerance.
class NotPsdError : public std::runtime_error {
public:
    explicit NotPsdError(const std::string &what) : std::runtime_error(what) {}
};

// Scenario or run configuration cannot be executed.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace mimoconv

#endif
