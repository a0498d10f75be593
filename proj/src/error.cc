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

#include "belldisc/error.h"

namespace belldisc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotSquare:
            return "NotSquare";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::GrosslyNonHermitian:
            return "GrosslyNonHermitian";
        case ErrorKind::StronglyNonPositive:
            return "StronglyNonPositive";
        case ErrorKind::BadQubitIndex:
            return "BadQubitIndex";
        case ErrorKind::HasMeasurements:
            return "HasMeasurements";
        case ErrorKind::HasMeasurementsBeforeEnd:
            return "HasMeasurementsBeforeEnd";
        case ErrorKind::UnroutableCircuit:
            return "UnroutableCircuit";
        case ErrorKind::NoMeasurements:
            return "NoMeasurements";
        case ErrorKind::ZeroShots:
            return "ZeroShots";
        case ErrorKind::IdentityInSetting:
            return "IdentityInSetting";
        case ErrorKind::TooManyQubits:
            return "TooManyQubits";
        case ErrorKind::MissingSetting:
            return "MissingSetting";
        case ErrorKind::InconsistentShotTotals:
            return "InconsistentShotTotals";
        case ErrorKind::IncompleteTable:
            return "IncompleteTable";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::BadDimensions:
            return "BadDimensions";
        case ErrorKind::NonHermitianBeyondTolerance:
            return "NonHermitianBeyondTolerance";
    }
    return "Unknown";
}

}  // namespace belldisc
