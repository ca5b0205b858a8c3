// Copyright 2026 The loopmesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOOPMESH_ERRORS_H
#define LOOPMESH_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopmesh {

enum class ErrorKind {
    invalid_dimension,
    invalid_input,
    not_unitary,
    invalid_timing,
    unsupported_diagram,
    physicality,
    io,
    unknown_name,
    trial_failed,
};

const char *error_kind_name(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Raised by the decomposer when the input is not unitary; carries the measured ||U^dag U - I||_F.
class NotUnitaryError : public Error {
   public:
    explicit NotUnitaryError(double defect);
    double defect() const noexcept {
        return defect_;
    }

   private:
    double defect_;
};

/// A Monte-Carlo trial failed; wraps the original message with the trial index.
class TrialError : public Error {
   public:
    TrialError(std::size_t n, std::size_t trial, const std::string &cause);
    std::size_t n() const noexcept {
        return n_;
    }
    std::size_t trial() const noexcept {
        return trial_;
    }

   private:
    std::size_t n_;
    std::size_t trial_;
};

}  // namespace loopmesh

#endif
