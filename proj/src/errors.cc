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

#include "loopmesh/errors.h"

#include <cstdio>

namespace loopmesh {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_dimension:
            return "invalid dimension";
        case ErrorKind::invalid_input:
            return "invalid input";
        case ErrorKind::not_unitary:
            return "not unitary";
        case ErrorKind::invalid_timing:
            return "invalid timing";
        case ErrorKind::unsupported_diagram:
            return "unsupported diagram";
        case ErrorKind::physicality:
            return "unphysical channel";
        case ErrorKind::io:
            return "I/O error";
        case ErrorKind::unknown_name:
            return "unknown name";
        case ErrorKind::trial_failed:
            return "trial failed";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
}

static std::string describe_defect(double defect) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "matrix is not unitary: ||U^dag U - I||_F = %.3e", defect);
    return buf;
}

NotUnitaryError::NotUnitaryError(double defect) : Error(ErrorKind::not_unitary, describe_defect(defect)), defect_(defect) {
}

TrialError::TrialError(std::size_t n, std::size_t trial, const std::string &cause)
    : Error(ErrorKind::trial_failed, "N=" + std::to_string(n) + " trial " + std::to_string(trial) + ": " + cause),
      n_(n),
      trial_(trial) {
}

}  // namespace loopmesh
