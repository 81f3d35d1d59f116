// SPDX-License-Identifier: Apache-2.0
//
// bsplit: beam-split aware IRS/OFDMA downlink simulator
// Copyright (C) 2026 The bsplit authors
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

#ifndef BSPLIT_ERRORS_HPP
#define BSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsplit
{
    // Invalid scenario / configuration input. The CLI maps this to exit code 2.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Analytic formula evaluated outside the regime where it is defined
    // (e.g. the small-angle term of the success bound reaching 1).
    class ParameterError : public ConfigError
    {
    public:
        using ConfigError::ConfigError;
    };

    // Argument outside the mathematical domain of a special function.
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Mismatched or empty matrix/vector dimensions.
    class DimensionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };
}

#endif
