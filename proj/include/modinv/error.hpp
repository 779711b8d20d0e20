/*
   Copyright 2026 The modinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MODINV_ERROR_HPP
#define MODINV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace modinv {

enum class Errc {
    RingMismatch,
    DivisionByZero,
    NotAField,
    DenominatorDivisibleByP,
    BoundExceeded,
    TableMismatch,
    MissingImage,
    DimensionMismatch,
    NotSingleBlock,
    BlockTooSmall,
    ParityViolation,
    RangeViolation,
    IncompatibleBases,
    NoSolution,
    BlockExceedsP,
    BudgetExceeded,
    InvalidSpec,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library; `code()` says which contract was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace modinv

#endif  // MODINV_ERROR_HPP
