// SPDX-License-Identifier: Apache-2.0
//
// pixelfas - reconfigurable pixel antenna state synthesis for fluid antenna systems
// Copyright (C) 2026 The pixelfas authors
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
#ifndef PIXELFAS_ERROR_HPP
#define PIXELFAS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pixelfas
{
    // Base class of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Bad argument, dimension mismatch or violated precondition.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed input file. Carries the 1-based line number (0 if not line-specific).
    class ParseError : public Error
    {
    public:
        ParseError(const std::string &source, std::size_t line, const std::string &what)
            : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
              source_(source), line_(line) {}

        const std::string &source() const { return source_; }
        std::size_t line() const { return line_; }

    private:
        std::string source_;
        std::size_t line_;
    };

    // Linear system that is singular or too ill-conditioned to trust.
    class SingularMatrixError : public Error
    {
    public:
        SingularMatrixError(const std::string &configuration_id, double rcond)
            : Error("singular or ill-conditioned system (rcond=" + std::to_string(rcond) +
                    ") for configuration " + (configuration_id.empty() ? "<unnamed>" : configuration_id)),
              configuration_id_(configuration_id), rcond_(rcond) {}

        const std::string &configuration_id() const { return configuration_id_; }
        double rcond() const { return rcond_; }

    private:
        std::string configuration_id_;
        double rcond_;
    };

    // A state whose pattern carries zero energy under the PAS, so it cannot be normalized.
    class DegenerateStateError : public Error
    {
    public:
        explicit DegenerateStateError(std::size_t state)
            : Error("zero-energy state " + std::to_string(state) + " cannot be normalized"), state_(state) {}

        std::size_t state() const { return state_; }

    private:
        std::size_t state_;
    };

    // Enumeration or search bound exceeded.
    class LimitExceeded : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
