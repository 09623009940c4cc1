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

#ifndef ENTPOWER_POWER_HPP
#define ENTPOWER_POWER_HPP

#include "entpower/linalg.hpp"

namespace entpower {

/// Closed-form entangling and disentangling power of one unitary, sharing
/// a single evaluation of the bracket S_L(|U>) + S_L(|US>) - S_L(|S>).
struct PowerReport {
    int d = 0;
    double s_u = 0.0;
    double s_us = 0.0;
    double s_s = 0.0;
    double bracket = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
};

/// Tolerance below zero that is treated as round-off and clamped.
inline constexpr double kClampTol = 1e-10;

/// epsilon(U) = d/(d+1) [S_L(|U>) + S_L(|US>) - S_L(|S>)].
double entangling_power(const Unitary &u);

/// delta(U) = 1/(d-1) [S_L(|U>) + S_L(|US>) - S_L(|S>)].
double disentangling_power(const Unitary &u);

/// Throws Error(Diagnostics) if the recomputed S_L(|S>) is not 1 within
/// 1e-10 or the bracket is below -kClampTol.
PowerReport power_report(const Unitary &u);

/// (d+1) / (d(d-1)), the fixed ratio delta / epsilon.
double power_ratio(int d);

/// d/(d+1) and 1/(d-1).
double max_entangling_power(int d);
double max_disentangling_power(int d);

}  // namespace entpower

#endif
