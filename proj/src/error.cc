// Copyright 2026 The qmds Authors
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

#include "qmds/error.h"

namespace qmds {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::SizeExceeded: return "SizeExceeded";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::CharacteristicDividesLength: return "CharacteristicDividesLength";
        case ErrorKind::NotPrimitiveRoot: return "NotPrimitiveRoot";
        case ErrorKind::BadArithmeticDifference: return "BadArithmeticDifference";
        case ErrorKind::InvalidSelection: return "InvalidSelection";
        case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::LNotInvertible: return "LNotInvertible";
        case ErrorKind::NotHermitianField: return "NotHermitianField";
        case ErrorKind::NotDualContaining: return "NotDualContaining";
        case ErrorKind::UnknownDistance: return "UnknownDistance";
        case ErrorKind::SingletonViolation: return "SingletonViolation";
        case ErrorKind::InvalidRate: return "InvalidRate";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::BrokenProvenance: return "BrokenProvenance";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace qmds
