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

#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "entpower/cli.hpp"
#include "entpower/error.hpp"
#include "entpower/haar.hpp"
#include "entpower/io.hpp"
#include "entpower/latin.hpp"
#include "entpower/omega.hpp"
#include "entpower/power.hpp"
#include "entpower/search.hpp"

namespace entpower::cli {

namespace {

struct Flags {
    std::string input;
    std::string out;
    std::string squares_out;
    std::string csv;
    std::string which = "both";
    std::string mode = "exhaustive";
    int d = 3;
    std::int64_t n = 100000;
    std::int64_t budget = 1000000;
    std::uint64_t seed = 1;
    int threads = 0;
    bool one_sided = false;
    bool corrupt_swap = false;
};

const char *pass_fail(bool ok) {
    return ok ? "PASS" : "FAIL";
}

std::string z_score(double mean, double closed, double se) {
    const double diff = mean - closed;
    if (se > 0.0) return format_double(diff / se);
    if (std::abs(diff) <= 1e-12) return "0";
    return diff > 0 ? "inf" : "-inf";
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

int cmd_power(const Flags &f, std::ostream &out) {
    const Unitary u = load_unitary(f.input);
    const PowerReport r = power_report(u);
    const double expected_ratio = power_ratio(r.d);
    auto row = [&out](const char *label, const std::string &value) {
        out << std::left << std::setw(18) << label << value << '\n';
    };
    row("d", std::to_string(r.d));
    row("S_L(|U>)", format_double(r.s_u));
    row("S_L(|US>)", format_double(r.s_us));
    row("S_L(|S>)", format_double(r.s_s));
    row("bracket", format_double(r.bracket));
    row("epsilon", format_double(r.epsilon));
    row("delta", format_double(r.delta));
    row("(d+1)/(d(d-1))", format_double(expected_ratio));
    bool ok = true;
    if (r.epsilon > 1e-8) {
        const double ratio = r.delta / r.epsilon;
        ok = std::abs(ratio - expected_ratio) <= 1e-10;
        row("delta/epsilon", format_double(ratio) + " " + pass_fail(ok));
    } else {
        row("delta/epsilon", "n/a (epsilon = 0)");
    }
    if (!f.csv.empty()) {
        CsvTable t({"d", "s_u", "s_us", "s_s", "bracket", "epsilon", "delta"});
        t.add_row({std::to_string(r.d), format_double(r.s_u), format_double(r.s_us), format_double(r.s_s),
                   format_double(r.bracket), format_double(r.epsilon), format_double(r.delta)});
        write_text_file(f.csv, t.str());
    }
    return ok ? kSuccess : kValidationFailure;
}

int cmd_mc(const Flags &f, std::ostream &out) {
    if (f.which != "epsilon" && f.which != "delta" && f.which != "both") {
        throw Error(ErrorKind::InvalidArgument, "--which must be epsilon, delta or both");
    }
    const Unitary u = load_unitary(f.input);
    const PowerReport r = power_report(u);
    const ExecPolicy policy{f.threads};
    CsvTable t({"quantity", "closed_form", "mc_mean", "std_error", "samples", "seed", "z_score"});
    auto add = [&](const char *name, double closed, const McEstimate &e) {
        t.add_row({name, format_double(closed), format_double(e.mean), format_double(e.std_error),
                   std::to_string(e.samples), std::to_string(e.master_seed), z_score(e.mean, closed, e.std_error)});
    };
    if (f.which != "delta") {
        add("epsilon", r.epsilon, mc_entangling_power(u, f.n, f.seed, policy));
    }
    if (f.which != "epsilon") {
        const TwirlSides sides = f.one_sided ? TwirlSides::One : TwirlSides::Both;
        add("delta", r.delta, mc_disentangling_power(u, f.n, f.seed, policy, sides));
    }
    emit(t.str(), f.out, out);
    return kSuccess;
}

int cmd_ols(const Flags &f, std::ostream &out) {
    const MolsPair pair = mols_pair(f.d);
    const Permutation p = ols_permutation(pair);
    const std::string json_text = permutation_to_json(f.d, p).dump() + "\n";
    emit(json_text, f.out, out);
    if (!f.squares_out.empty()) {
        nlohmann::json squares{{"format", kFileFormat},
                               {"squares", {latin_square_to_json(pair.first), latin_square_to_json(pair.second)}}};
        write_text_file(f.squares_out, squares.dump() + "\n");
    }
    const PowerReport r = power_report(Unitary::from_permutation(f.d, p));
    const double fast = permutation_power(p, f.d);
    const double eps_max = max_entangling_power(f.d);
    const double delta_max = max_disentangling_power(f.d);
    const bool eps_ok = std::abs(r.epsilon - eps_max) <= 1e-12;
    const bool delta_ok = std::abs(r.delta - delta_max) <= 1e-12;
    const bool fast_ok = std::abs(fast - eps_max) <= 1e-12;
    out << "epsilon " << format_double(r.epsilon) << " " << pass_fail(eps_ok) << " (d/(d+1) = "
        << format_double(eps_max) << ")\n";
    out << "delta " << format_double(r.delta) << " " << pass_fail(delta_ok) << " (1/(d-1) = "
        << format_double(delta_max) << ")\n";
    out << "epsilon_integer_path " << format_double(fast) << " " << pass_fail(fast_ok) << "\n";
    return eps_ok && delta_ok && fast_ok ? kSuccess : kValidationFailure;
}

std::string join_images(std::span<const int> images) {
    std::ostringstream s;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) s << ' ';
        s << images[i];
    }
    return s.str();
}

int cmd_search(const Flags &f, std::ostream &out) {
    const auto mode = parse_search_mode(f.mode);
    if (!mode) {
        throw Error(ErrorKind::InvalidArgument, "--mode must be exhaustive, random or hillclimb");
    }
    const SearchResult res = search(SearchOptions{f.d, *mode, f.budget, f.seed}, ExecPolicy{f.threads});
    PermutationEvaluator eval(f.d);
    CsvTable t({"rank", "value", "purity_sum", "images"});
    for (std::size_t k = 0; k < res.best_permutations.size(); ++k) {
        t.add_row({std::to_string(k + 1), format_double(res.best_value), std::to_string(res.best_purity_sum),
                   join_images(res.best_permutations[k].images())});
    }
    std::optional<double> baseline;
    try {
        const Permutation ols = ols_permutation(mols_pair(f.d));
        const std::int64_t sum = eval.purity_sum(ols.images());
        baseline = eval.power_from_sum(sum);
        t.add_row({"ols", format_double(*baseline), std::to_string(sum), join_images(ols.images())});
    } catch (const Error &) {
        // No orthogonal pair at this order; the baseline row is omitted.
    }
    std::ostringstream summary;
    summary << "mode " << to_string(res.mode) << "\n"
            << "d " << f.d << "\n"
            << "seed " << res.seed << "\n"
            << "evaluated " << res.evaluated << "\n"
            << "best_value " << format_double(res.best_value) << "\n"
            << "best_hits " << res.best_hits << "\n"
            << "maximizers_listed " << res.best_permutations.size() << "\n"
            << "bound d/(d+1) " << format_double(max_entangling_power(f.d)) << "\n";
    if (baseline) summary << "ols_baseline " << format_double(*baseline) << "\n";
    if (f.out.empty()) {
        out << t.str();
    } else {
        write_text_file(f.out, t.str());
        out << summary.str();
    }
    return kSuccess;
}

int cmd_omega(const Flags &f, std::ostream &out) {
    const ComplexMatrix exact = omega_closed_form(f.d);
    const OmegaEstimate est = mc_omega(f.d, f.n, f.seed, ExecPolicy{f.threads});
    const OmegaComparison cmp = compare_omega(est, exact);
    const double forms = max_abs(ComplexMatrix(exact - omega_projector_form(f.d)));
    RngStream probe(f.seed, std::uint64_t{1} << 63);
    const double residual = omega_commutator_residual(est.mean, random_unitary(f.d, probe));
    const bool trace_ok = cmp.trace_deviation <= 1e-10;
    const bool forms_ok = forms <= 1e-12;
    const bool z_ok = cmp.max_z <= 5.0;
    out << "d " << f.d << "\n"
        << "samples " << est.samples << "\n"
        << "seed " << est.master_seed << "\n"
        << "max_abs_deviation " << format_double(cmp.max_abs_deviation) << "\n"
        << "max_z " << format_double(cmp.max_z) << " " << pass_fail(z_ok) << "\n"
        << "trace 1.0 within 1e-10 " << pass_fail(trace_ok) << "\n"
        << "closed_forms_agree " << format_double(forms) << " " << pass_fail(forms_ok) << "\n"
        << "commutator_residual " << format_double(residual) << "\n"
        << "result " << pass_fail(z_ok && trace_ok && forms_ok) << "\n";
    return z_ok && trace_ok && forms_ok ? kSuccess : kValidationFailure;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::NotFinite:
        case ErrorKind::ShapeMismatch:
        case ErrorKind::NotBijective:
        case ErrorKind::InvalidArgument:
            return kInputError;
        case ErrorKind::Diagnostics:
            return kValidationFailure;
        default:
            return kDomainError;
    }
}

}  // namespace

Unitary load_unitary(const std::filesystem::path &path) {
    const nlohmann::json j = read_json_file(path);
    if (j.is_object() && j.contains("images")) {
        const PermutationFile pf = permutation_from_json(j);
        return Unitary::from_permutation(pf.d, pf.permutation);
    }
    MatrixFile mf = matrix_from_json(j);
    return Unitary(mf.d, std::move(mf.matrix));
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Flags f;
    CLI::App app{"Entangling and disentangling power of bipartite unitaries"};
    app.require_subcommand(1);

    auto add_threads = [&f](CLI::App *sub) {
        sub->add_option("--threads", f.threads, "Worker threads (results never depend on this)")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App *power = app.add_subcommand("power", "Closed-form epsilon and delta of a unitary");
    power->add_option("--input", f.input, "Matrix or permutation JSON")->required();
    power->add_option("--csv", f.csv, "Also write the report as CSV");
    add_threads(power);

    CLI::App *mc = app.add_subcommand("mc", "Monte Carlo estimates against the closed forms");
    mc->add_option("--input", f.input, "Matrix or permutation JSON")->required();
    mc->add_option("--n", f.n, "Samples")->check(CLI::Range(std::int64_t{100}, std::int64_t{1'000'000'000}));
    mc->add_option("--seed", f.seed, "Master seed");
    mc->add_option("--which", f.which, "epsilon, delta or both");
    mc->add_option("--out", f.out, "CSV output path (stdout if omitted)");
    mc->add_flag("--one-sided", f.one_sided, "Sample delta with V = I");
    add_threads(mc);

    CLI::App *ols = app.add_subcommand("ols", "Maximal permutation from orthogonal Latin squares");
    ols->add_option("--d", f.d, "Local dimension")->required();
    ols->add_option("--out", f.out, "Permutation JSON output path (stdout if omitted)");
    ols->add_option("--squares-out", f.squares_out, "Write the Latin square pair as JSON");
    add_threads(ols);

    CLI::App *srch = app.add_subcommand("search", "Search permutation unitaries for maximal power");
    srch->add_option("--d", f.d, "Local dimension")->required();
    srch->add_option("--mode", f.mode, "exhaustive, random or hillclimb");
    srch->add_option("--budget", f.budget, "Evaluations for random / hillclimb");
    srch->add_option("--seed", f.seed, "Master seed");
    srch->add_option("--out", f.out, "CSV output path (stdout if omitted)");
    add_threads(srch);

    CLI::App *omega = app.add_subcommand("omega", "Sampled twirl against its closed form");
    omega->add_option("--d", f.d, "Local dimension (2 or 3)")->required();
    omega->add_option("--n", f.n, "Samples");
    omega->add_option("--seed", f.seed, "Master seed");
    add_threads(omega);

    CLI::App *self = app.add_subcommand("selftest", "Run the invariant suite at d = 2, 3");
    self->add_flag("--corrupt-swap", f.corrupt_swap, "Negative test: use a broken swap operator");
    add_threads(self);

    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (power->parsed()) return cmd_power(f, out);
        if (mc->parsed()) return cmd_mc(f, out);
        if (ols->parsed()) return cmd_ols(f, out);
        if (srch->parsed()) return cmd_search(f, out);
        if (omega->parsed()) return cmd_omega(f, out);
        if (self->parsed()) return selftest(SelftestOptions{f.corrupt_swap, ExecPolicy{f.threads}}, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kInputError;
}

}  // namespace entpower::cli
