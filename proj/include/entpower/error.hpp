// Copyright 2026 The entpower Authors
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

#ifndef ENTPOWER_ERROR_HPP
#define ENTPOWER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace entpower {

enum class ErrorKind {
    SizeLimit,
    ShapeMismatch,
    NotBijective,
    NotUnitary,
    NotNormalized,
    NotFinite,
    DegenerateCut,
    NoConstruction,
    NoMolsPair,
    BudgetInfeasible,
    InvalidArgument,
    Diagnostics,
    Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace entpower

#endif
