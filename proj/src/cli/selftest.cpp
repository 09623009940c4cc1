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

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <ostream>
#include <string>
#include <vector>

#include "entpower/cli.hpp"
#include "entpower/error.hpp"
#include "entpower/haar.hpp"
#include "entpower/io.hpp"
#include "entpower/latin.hpp"
#include "entpower/omega.hpp"
#include "entpower/power.hpp"
#include "entpower/rng.hpp"
#include "entpower/search.hpp"
#include "entpower/vectorize.hpp"

namespace entpower::cli {

namespace {

constexpr std::uint64_t kSelftestSeed = 20260101;

struct Outcome {
    bool pass = false;
    // Worst observed deviation (or other figure of merit).
    double worst = 0.0;
};

struct Check {
    std::string name;
    int d;
    std::function<Outcome(int)> run;
};

Unitary corrupted_swap(int d) {
    ComplexMatrix m = swap_operator(d).matrix();
    // |01> -> -|10>: still unitary, no longer an involution.
    m(pair_index(1, 0, d), pair_index(0, 1, d)) = -1.0;
    return Unitary(d, std::move(m));
}

Unitary local_unitary(int d, RngStream &s) {
    return Unitary(d, kron(random_unitary(d, s), random_unitary(d, s)));
}

Outcome within(double worst, double tol) {
    return Outcome{worst <= tol, worst};
}

std::vector<Check> build_checks(const SelftestOptions &opt) {
    const auto swap_under_test = [&opt](int d) { return opt.corrupt_swap ? corrupted_swap(d) : swap_operator(d); };
    const ExecPolicy policy = opt.policy;
    std::vector<Check> checks;
    for (int d : {2, 3}) {
        checks.push_back({"kron associativity", d, [](int d) {
                              ComplexMatrix a(d, d), b(d, d + 1), c(2, d);
                              for (Eigen::Index k = 0; k < a.size(); ++k) a.data()[k] = double(k % 5) - 2.0;
                              for (Eigen::Index k = 0; k < b.size(); ++k) b.data()[k] = double(k % 3) + 1.0;
                              for (Eigen::Index k = 0; k < c.size(); ++k) c.data()[k] = double(k % 4) - 1.0;
                              const ComplexMatrix lhs = kron(kron(a, b), c);
                              const ComplexMatrix rhs = kron(a, kron(b, c));
                              return Outcome{lhs == rhs, max_abs(ComplexMatrix(lhs - rhs))};
                          }});
        checks.push_back({"partial trace over all parties", d, [](int d) {
                              RngStream s(kSelftestSeed, 1);
                              const ComplexMatrix g = random_unitary(d * d, s);
                              const ComplexMatrix rho = g * g.adjoint();
                              const int dims[2] = {d, d};
                              const ComplexMatrix t = partial_trace(rho, dims, {});
                              return within(std::abs(t(0, 0) - rho.trace()), 1e-12);
                          }});
        checks.push_back({"permutation matrix composition", d, [](int d) {
                              RngStream s(kSelftestSeed, 2);
                              std::vector<int> a(d * d), b(d * d);
                              for (int k = 0; k < d * d; ++k) a[k] = b[k] = k;
                              std::shuffle(a.begin(), a.end(), s.engine());
                              std::shuffle(b.begin(), b.end(), s.engine());
                              const Permutation p(a), q(b);
                              const ComplexMatrix diff =
                                  permutation_matrix(p.compose(q)) - permutation_matrix(p) * permutation_matrix(q);
                              return within(max_abs(diff), 0.0);
                          }});
        checks.push_back({"swap is an involution", d, [swap_under_test](int d) {
                              const ComplexMatrix s = swap_under_test(d).matrix();
                              const ComplexMatrix diff = s * s - ComplexMatrix::Identity(d * d, d * d);
                              return within(max_abs(diff), 1e-12);
                          }});
        checks.push_back({"swap is Hermitian with trace d", d, [swap_under_test](int d) {
                              const ComplexMatrix s = swap_under_test(d).matrix();
                              const double herm = max_abs(ComplexMatrix(s - s.adjoint()));
                              return within(std::max(herm, std::abs(s.trace() - double(d))), 1e-12);
                          }});
        checks.push_back({"S_L(|S>) = 1", d, [swap_under_test](int d) {
                              return within(std::abs(entropy_of_operator(swap_under_test(d)) - 1.0), 1e-10);
                          }});
        checks.push_back({"vectorized operator maximal across 13|24", d, [](int d) {
                              RngStream s(kSelftestSeed, 3);
                              double worst = 0.0;
                              for (int k = 0; k < 10; ++k) {
                                  const Unitary u = random_bipartite_unitary(d, s);
                                  worst = std::max(worst, std::abs(linear_entropy(vectorize(u), cut_13_24()) - 1.0));
                              }
                              return within(worst, 1e-10);
                          }});
        checks.push_back({"S_L invariant under local unitaries", d, [](int d) {
                              RngStream s(kSelftestSeed, 4);
                              double worst = 0.0;
                              for (int k = 0; k < 10; ++k) {
                                  const Unitary u = random_bipartite_unitary(d, s);
                                  const Unitary v = local_unitary(d, s);
                                  worst = std::max(worst, std::abs(entropy_of_operator(u * v) - entropy_of_operator(u)));
                              }
                              return within(worst, 1e-10);
                          }});
        checks.push_back({"trace formula matches dense entropy", d, [](int d) {
                              RngStream s(kSelftestSeed, 5);
                              double worst = 0.0;
                              for (int k = 0; k < 10; ++k) {
                                  const Unitary u = random_bipartite_unitary(d, s);
                                  worst = std::max(worst, std::abs(entropy_trace_formula(u) - entropy_of_operator(u)));
                              }
                              return within(worst, 1e-10);
                          }});
        checks.push_back({"delta/epsilon = (d+1)/(d(d-1))", d, [](int d) {
                              RngStream s(kSelftestSeed, 6);
                              double worst = 0.0;
                              for (int k = 0; k < 20; ++k) {
                                  const PowerReport r = power_report(random_bipartite_unitary(d, s));
                                  worst = std::max(worst, std::abs(r.delta * d * (d - 1) - r.epsilon * (d + 1)));
                              }
                              return within(worst, 1e-9);
                          }});
        checks.push_back({"epsilon invariant under local unitaries", d, [](int d) {
                              RngStream s(kSelftestSeed, 7);
                              double worst = 0.0;
                              for (int k = 0; k < 10; ++k) {
                                  const Unitary u = random_bipartite_unitary(d, s);
                                  const Unitary w = local_unitary(d, s) * u * local_unitary(d, s);
                                  worst = std::max(worst, std::abs(entangling_power(w) - entangling_power(u)));
                              }
                              return within(worst, 1e-9);
                          }});
        checks.push_back({"epsilon(US) = epsilon(U)", d, [](int d) {
                              RngStream s(kSelftestSeed, 8);
                              double worst = 0.0;
                              for (int k = 0; k < 10; ++k) {
                                  const Unitary u = random_bipartite_unitary(d, s);
                                  worst = std::max(worst,
                                                   std::abs(entangling_power(u * swap_operator(d)) - entangling_power(u)));
                              }
                              return within(worst, 1e-10);
                          }});
        checks.push_back({"0 <= epsilon <= d/(d+1)", d, [](int d) {
                              RngStream s(kSelftestSeed, 9);
                              double worst = 0.0;
                              for (int k = 0; k < 100; ++k) {
                                  const double e = entangling_power(random_bipartite_unitary(d, s));
                                  worst = std::max({worst, -e, e - max_entangling_power(d)});
                              }
                              return Outcome{worst <= 1e-10, std::max(worst, 0.0)};
                          }});
        checks.push_back({"MC epsilon agrees with closed form (|z|)", d, [policy](int d) {
                              RngStream s(kSelftestSeed, 10);
                              const Unitary u = random_bipartite_unitary(d, s);
                              const McEstimate e = mc_entangling_power(u, 20000, kSelftestSeed, policy);
                              const double z = std::abs(e.mean - entangling_power(u)) / e.std_error;
                              return within(z, 5.0);
                          }});
        checks.push_back({"MC delta agrees with closed form (|z|)", d, [policy](int d) {
                              RngStream s(kSelftestSeed, 11);
                              const Unitary u = random_bipartite_unitary(d, s);
                              const McEstimate e = mc_disentangling_power(u, 20000, kSelftestSeed, policy);
                              const double z = std::abs(e.mean - disentangling_power(u)) / e.std_error;
                              return within(z, 5.0);
                          }});
        checks.push_back({"MC independent of thread count", d, [](int d) {
                              RngStream s(kSelftestSeed, 12);
                              const Unitary u = random_bipartite_unitary(d, s);
                              const McEstimate a = mc_entangling_power(u, 5000, kSelftestSeed, ExecPolicy{1});
                              const McEstimate b = mc_entangling_power(u, 5000, kSelftestSeed, ExecPolicy{3});
                              const bool same = a.mean == b.mean && a.std_error == b.std_error;
                              return Outcome{same, std::abs(a.mean - b.mean)};
                          }});
        checks.push_back({"Omega closed forms agree", d, [](int d) {
                              return within(max_abs(ComplexMatrix(omega_closed_form(d) - omega_projector_form(d))),
                                            1e-12);
                          }});
        checks.push_back({"Omega invariant under local twirl", d, [](int d) {
                              RngStream s(kSelftestSeed, 13);
                              const ComplexMatrix omega = omega_closed_form(d);
                              double worst = 0.0;
                              for (int k = 0; k < 5; ++k) {
                                  const ComplexMatrix vw = kron(random_unitary(d, s), random_unitary(d, s));
                                  const ComplexMatrix g = kron(vw, vw);
                                  worst = std::max(worst, max_abs(ComplexMatrix(omega - g * omega * g.adjoint())));
                              }
                              return within(worst, 1e-10);
                          }});
        checks.push_back({"delta via Omega matches closed form", d, [](int d) {
                              RngStream s(kSelftestSeed, 14);
                              double worst = 0.0;
                              for (int k = 0; k < 5; ++k) {
                                  const Unitary u = random_bipartite_unitary(d, s);
                                  worst = std::max(worst, std::abs(delta_via_omega(u) - disentangling_power(u)));
                              }
                              return within(worst, 1e-9);
                          }});
        checks.push_back({"integer path matches dense epsilon", d, [](int d) {
                              RngStream s(kSelftestSeed, 15);
                              double worst = 0.0;
                              std::vector<int> images(d * d);
                              for (int k = 0; k < 50; ++k) {
                                  for (int i = 0; i < d * d; ++i) images[i] = i;
                                  std::shuffle(images.begin(), images.end(), s.engine());
                                  const Permutation p(images);
                                  worst = std::max(worst, std::abs(permutation_power(p, d) -
                                                                   entangling_power(Unitary::from_permutation(d, p))));
                              }
                              return within(worst, 1e-12);
                          }});
        checks.push_back({"epsilon(p) = epsilon(p o swap), exact", d, [](int d) {
                              RngStream s(kSelftestSeed, 16);
                              PermutationEvaluator eval(d);
                              const Permutation sw = swap_permutation(d);
                              std::vector<int> images(d * d);
                              bool ok = true;
                              for (int k = 0; k < 50; ++k) {
                                  for (int i = 0; i < d * d; ++i) images[i] = i;
                                  std::shuffle(images.begin(), images.end(), s.engine());
                                  const Permutation p(images);
                                  ok = ok && eval.purity_sum(p.images()) == eval.purity_sum(p.compose(sw).images());
                              }
                              return Outcome{ok, 0.0};
                          }});
        checks.push_back({"search deterministic", d, [policy](int d) {
                              const SearchOptions o{d, SearchMode::HillClimb, 2000, kSelftestSeed};
                              const SearchResult a = search(o, policy);
                              const SearchResult b = search(o, ExecPolicy{2});
                              return Outcome{a == b, a.best_value};
                          }});
        checks.push_back({"CSV values round-trip", d, [](int d) {
                              RngStream s(kSelftestSeed, 17);
                              bool ok = true;
                              for (int k = 0; k < 5; ++k) {
                                  const double e = entangling_power(random_bipartite_unitary(d, s));
                                  ok = ok && parse_double(format_double(e)) == e;
                              }
                              return Outcome{ok, 0.0};
                          }});
    }
    checks.push_back({"OLS permutation attains maximum", 3, [](int d) {
                          const Permutation p = ols_permutation(mols_pair(d));
                          const PowerReport r = power_report(Unitary::from_permutation(d, p));
                          const double worst = std::max(std::abs(r.epsilon - max_entangling_power(d)),
                                                        std::abs(r.delta - max_disentangling_power(d)));
                          return within(worst, 1e-12);
                      }});
    return checks;
}

}  // namespace

int selftest(const SelftestOptions &options, std::ostream &out) {
    const auto checks = build_checks(options);
    int failed = 0;
    out << std::left << std::setw(46) << "check" << std::setw(4) << "d" << std::setw(8) << "status"
        << "worst\n";
    for (const auto &c : checks) {
        Outcome o;
        std::string note;
        try {
            o = c.run(c.d);
        } catch (const Error &e) {
            o.pass = false;
            note = std::string(" (") + e.what() + ")";
        }
        if (!o.pass) ++failed;
        std::ostringstream worst;
        worst << std::scientific << std::setprecision(3) << o.worst;
        out << std::left << std::setw(46) << c.name << std::setw(4) << c.d << std::setw(8)
            << (o.pass ? "PASS" : "FAIL") << worst.str() << note << "\n";
    }
    out << "summary " << (checks.size() - static_cast<std::size_t>(failed)) << "/" << checks.size() << " passed\n";
    return failed == 0 ? kSuccess : kValidationFailure;
}

}  // namespace entpower::cli
