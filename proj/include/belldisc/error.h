// Copyright 2026 The belldisc Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace belldisc {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    NotSquare,
    NotHermitian,
    GrosslyNonHermitian,
    StronglyNonPositive,
    BadQubitIndex,
    HasMeasurements,
    HasMeasurementsBeforeEnd,
    UnroutableCircuit,
    NoMeasurements,
    ZeroShots,
    IdentityInSetting,
    TooManyQubits,
    MissingSetting,
    InconsistentShotTotals,
    IncompleteTable,
    ParseError,
    BadDimensions,
    NonHermitianBeyondTolerance,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on the category rather than the message.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace belldisc
