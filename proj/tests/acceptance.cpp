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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every tolerance is pinned below.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "entpower/cli.hpp"
#include "entpower/haar.hpp"
#include "entpower/io.hpp"
#include "entpower/latin.hpp"
#include "entpower/omega.hpp"
#include "entpower/power.hpp"
#include "entpower/search.hpp"
#include "entpower/vectorize.hpp"
#include "test_util.hpp"

using namespace entpower;
namespace fs = std::filesystem;

namespace {

constexpr double kSigmaBound = 5.0;
constexpr std::int64_t kMcSamples = 100000;
constexpr double kRatioTol = 1e-9;
constexpr double kOlsTol = 1e-12;
constexpr double kUpperBoundTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kOmegaFormsTol = 1e-12;
constexpr double kOmegaDeltaTol = 1e-9;
constexpr double kTraceFormulaTol = 1e-10;
constexpr double kExactTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string sci(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

std::vector<Unitary> haar_unitaries(int d, int count, std::uint64_t seed) {
    RngStream stream(seed, static_cast<std::uint64_t>(d));
    std::vector<Unitary> out;
    for (int k = 0; k < count; ++k) out.push_back(random_bipartite_unitary(d, stream));
    return out;
}

Outcome mc_versus_closed_form(bool entangling) {
    double worst_z = 0.0;
    int runs = 0;
    std::uint64_t seed = entangling ? 1000 : 2000;
    for (const auto &[d, count] : {std::pair{2, 10}, std::pair{3, 5}}) {
        for (const Unitary &u : haar_unitaries(d, count, seed)) {
            const double exact = entangling ? entangling_power(u) : disentangling_power(u);
            const McEstimate e = entangling ? mc_entangling_power(u, kMcSamples, seed + runs)
                                            : mc_disentangling_power(u, kMcSamples, seed + runs);
            worst_z = std::max(worst_z, std::abs(e.mean - exact) / e.std_error);
            ++runs;
        }
    }
    return {worst_z <= kSigmaBound, std::to_string(runs) + " unitaries, n=" + std::to_string(kMcSamples) +
                                        ", max |z| = " + sci(worst_z) + " (bound 5)"};
}

Outcome criterion_3() {
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        for (const Unitary &u : haar_unitaries(d, 100, 3000)) {
            const PowerReport r = power_report(u);
            worst = std::max(worst, std::abs(r.delta * d * (d - 1) - r.epsilon * (d + 1)));
        }
    }
    return {worst <= kRatioTol, "300 unitaries, max |delta d(d-1) - epsilon (d+1)| = " + sci(worst)};
}

Outcome criterion_4() {
    double worst = 0.0;
    for (int d : {3, 4, 5, 7}) {
        const Unitary u = Unitary::from_permutation(d, ols_permutation(mols_pair(d)));
        const PowerReport r = power_report(u);
        worst = std::max(worst, std::abs(r.epsilon - d / (d + 1.0)));
        worst = std::max(worst, std::abs(r.delta - 1.0 / (d - 1)));
    }
    return {worst <= kOlsTol, "d in {3,4,5,7}, max deviation from d/(d+1) and 1/(d-1) = " + sci(worst)};
}

Outcome criterion_5() {
    bool ok = true;
    double min_eps = 1.0;
    double worst_excess = -1.0;
    for (int d : {2, 3, 4}) {
        for (const Unitary &u : haar_unitaries(d, 1000, 5000)) {
            const double eps = entangling_power(u);
            ok = ok && eps >= 0.0 && eps <= d / (d + 1.0) + kUpperBoundTol;
            min_eps = std::min(min_eps, eps);
            worst_excess = std::max(worst_excess, eps - d / (d + 1.0));
        }
    }
    return {ok, "3000 samples, min epsilon = " + sci(min_eps) + ", max epsilon - d/(d+1) = " + sci(worst_excess)};
}

Outcome criterion_6() {
    const OmegaEstimate e = mc_omega(2, kMcSamples, 6000);
    const ComplexMatrix exact = omega_closed_form(2);
    const OmegaComparison c = compare_omega(e, exact);
    const double forms = max_abs(exact - omega_projector_form(2));
    const double trace =
        std::max(std::abs(exact.trace() - Complex(1.0, 0.0)), std::abs(e.mean.trace() - Complex(1.0, 0.0)));
    const bool ok = c.max_z <= kSigmaBound && trace <= kTraceTol && forms <= kOmegaFormsTol;
    return {ok, "max entry |z| = " + sci(c.max_z) + ", |Tr - 1| = " + sci(trace) + ", forms differ by " +
                    sci(forms)};
}

Outcome criterion_7() {
    double worst_delta = 0.0;
    double worst_trace = 0.0;
    for (int d : {2, 3}) {
        for (const Unitary &u : haar_unitaries(d, 20, 7000)) {
            worst_delta = std::max(worst_delta, std::abs(delta_via_omega(u) - disentangling_power(u)));
        }
    }
    for (int d : {2, 3}) {
        for (const Unitary &u : haar_unitaries(d, 25, 7100)) {
            worst_trace = std::max(worst_trace, std::abs(entropy_trace_formula(u) - entropy_of_operator(u)));
        }
    }
    const bool ok = worst_delta <= kOmegaDeltaTol && worst_trace <= kTraceFormulaTol;
    return {ok, "omega delta deviation " + sci(worst_delta) + " (40 U), trace formula deviation " +
                    sci(worst_trace) + " (50 U)"};
}

Outcome criterion_8() {
    const SearchResult r = search({.d = 2, .mode = SearchMode::Exhaustive, .budget = 0, .seed = 0});
    const double cnot = entangling_power(entpower::testing::cnot());
    const bool ok = r.best_value < 2.0 / 3.0 && std::abs(r.best_value - 4.0 / 9.0) <= kExactTol &&
                    std::abs(cnot - 2.0 * (2.0 / 9.0)) <= kExactTol;
    return {ok, "exhaustive max " + format_double(r.best_value) + " over 24 permutations, CNOT " +
                    format_double(cnot) + ", bound 2/3 not reached"};
}

Outcome criterion_9() {
    const SearchResult r = search({.d = 3, .mode = SearchMode::Exhaustive, .budget = 0, .seed = 0});
    const Permutation ols = ols_permutation(mols_pair(3));
    const bool listed = std::find(r.best_permutations.begin(), r.best_permutations.end(), ols) !=
                        r.best_permutations.end();
    const bool ok = std::abs(r.best_value - 0.75) <= kExactTol && listed &&
                    std::abs(permutation_power(ols, 3) - r.best_value) <= kExactTol;
    return {ok, "exhaustive max " + format_double(r.best_value) + " with " + std::to_string(r.best_hits) +
                    " maximizers, OLS permutation " + (listed ? "listed" : "missing")};
}

struct CliCapture {
    int code;
    std::string out;
    std::string file;
};

CliCapture capture(std::vector<std::string> args, const fs::path &file) {
    fs::remove(file);
    args.insert(args.begin(), "entpower");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    std::string contents;
    if (fs::exists(file)) {
        std::ifstream in(file);
        std::stringstream s;
        s << in.rdbuf();
        contents = s.str();
    }
    return {code, out.str() + err.str(), contents};
}

Outcome criterion_10() {
    const fs::path dir = fs::temp_directory_path() / "entpower_acceptance";
    fs::create_directories(dir);
    const fs::path input = dir / "u.json";
    const fs::path output = dir / "out.csv";
    write_text_file(input, matrix_to_json(3, haar_unitaries(3, 1, 10000)[0].matrix()).dump());

    const std::vector<std::vector<std::string>> commands = {
        {"mc", "--input", input.string(), "--n", "20000", "--seed", "17", "--which", "both", "--out",
         output.string()},
        {"search", "--d", "3", "--mode", "exhaustive", "--out", output.string()},
        {"search", "--d", "4", "--mode", "random", "--budget", "50000", "--seed", "5", "--out", output.string()},
        {"search", "--d", "4", "--mode", "hillclimb", "--budget", "50000", "--seed", "5", "--out",
         output.string()},
        {"omega", "--d", "2", "--n", "20000", "--seed", "9"},
        {"mc", "--input", input.string(), "--n", "5000", "--seed", "18", "--which", "delta", "--one-sided"},
        {"ols", "--d", "5", "--out", output.string()},
        {"selftest"},
    };
    int mismatches = 0;
    int checked = 0;
    for (const auto &cmd : commands) {
        std::vector<CliCapture> runs;
        for (const char *threads : {"1", "1", "4"}) {
            auto args = cmd;
            args.insert(args.end(), {"--threads", threads});
            runs.push_back(capture(args, output));
        }
        for (std::size_t k = 1; k < runs.size(); ++k) {
            if (runs[k].code != runs[0].code || runs[k].out != runs[0].out || runs[k].file != runs[0].file) {
                ++mismatches;
                std::cerr << "mismatch: " << cmd[0] << " run " << k << "\n";
            }
        }
        if (runs[0].code != 0) ++mismatches;
        ++checked;
    }
    fs::remove_all(dir);
    return {mismatches == 0, std::to_string(checked) + " commands run twice at --threads 1 and once at 4, " +
                                 std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"MC entangling power matches closed form", [] { return mc_versus_closed_form(true); }},
        {"MC disentangling power matches closed form", [] { return mc_versus_closed_form(false); }},
        {"delta/epsilon proportionality", criterion_3},
        {"OLS permutations saturate both bounds", criterion_4},
        {"entangling power bounds on Haar samples", criterion_5},
        {"Omega MC, trace and projector form", criterion_6},
        {"delta via Omega and trace formula", criterion_7},
        {"qubit permutations stay below 2/3", criterion_8},
        {"qutrit permutation maximum is 3/4", criterion_9},
        {"CLI output is reproducible", criterion_10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].first
                  << " -- " << o.detail << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
