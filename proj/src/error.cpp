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

#include "entpower/error.hpp"

namespace entpower {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SizeLimit:
            return "SizeLimit";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::NotBijective:
            return "NotBijective";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::NotFinite:
            return "NotFinite";
        case ErrorKind::DegenerateCut:
            return "DegenerateCut";
        case ErrorKind::NoConstruction:
            return "NoConstruction";
        case ErrorKind::NoMolsPair:
            return "NoMolsPair";
        case ErrorKind::BudgetInfeasible:
            return "BudgetInfeasible";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::Diagnostics:
            return "Diagnostics";
        case ErrorKind::Parse:
            return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
}

}  // namespace entpower
