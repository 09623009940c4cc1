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

#include "entpower/power.hpp"

#include <cmath>
#include <sstream>

#include "entpower/error.hpp"
#include "entpower/vectorize.hpp"

namespace entpower {

PowerReport power_report(const Unitary &u) {
    const int d = u.d();
    const Unitary s = swap_operator(d);
    PowerReport r;
    r.d = d;
    r.s_u = entropy_of_operator(u);
    r.s_us = entropy_of_operator(u * s);
    r.s_s = entropy_of_operator(s);
    if (std::abs(r.s_s - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "S_L(|S>) = " << r.s_s << " at d = " << d << ", expected 1; index convention is broken";
        throw Error(ErrorKind::Diagnostics, msg.str());
    }
    double bracket = r.s_u + r.s_us - r.s_s;
    if (bracket < -kClampTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "negative bracket " << bracket;
        throw Error(ErrorKind::Diagnostics, msg.str());
    }
    if (bracket < 0.0) {
        bracket = 0.0;
    }
    r.bracket = bracket;
    r.epsilon = static_cast<double>(d) / (d + 1.0) * bracket;
    r.delta = bracket / (d - 1.0);
    return r;
}

double entangling_power(const Unitary &u) {
    return power_report(u).epsilon;
}

double disentangling_power(const Unitary &u) {
    return power_report(u).delta;
}

double power_ratio(int d) {
    return (d + 1.0) / (static_cast<double>(d) * (d - 1.0));
}

double max_entangling_power(int d) {
    return static_cast<double>(d) / (d + 1.0);
}

double max_disentangling_power(int d) {
    return 1.0 / (d - 1.0);
}

}  // namespace entpower
