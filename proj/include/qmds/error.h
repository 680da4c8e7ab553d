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

#ifndef QMDS_ERROR_H
#define QMDS_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmds {

enum class ErrorKind {
    NotPrime,
    SizeExceeded,
    DivisionByZero,
    FieldMismatch,
    NotCoprime,
    ZeroElement,
    NoSuchRoot,
    CharacteristicDividesLength,
    NotPrimitiveRoot,
    BadArithmeticDifference,
    InvalidSelection,
    OracleBoundExceeded,
    LengthMismatch,
    LNotInvertible,
    NotHermitianField,
    NotDualContaining,
    UnknownDistance,
    SingletonViolation,
    InvalidRate,
    SearchExhausted,
    BrokenProvenance,
    InvalidArgument,
    ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library. The kind is the stable identity;
// the message is for humans.
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

}  // namespace qmds

#endif
