// Acceptance gate: nine end-to-end criteria, each printed as a single
// pass/fail line with its wall-clock budget.  Exit status 0 iff all pass.
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cmspec/lr.hpp"
#include "cmspec/oracle.hpp"
#include "cmspec/partitions.hpp"
#include "cmspec/spectra.hpp"

namespace {

using namespace cmspec;
namespace orc = cmspec::oracle;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
WeakComposition W(std::vector<int> parts) { return WeakComposition(std::move(parts)); }

AdmissibleTuple tuple_of(std::vector<std::vector<int>> parts, long long coefficient) {
    AdmissibleTuple t;
    for (auto& part : parts) t.parts.emplace_back(std::move(part));
    t.coefficient = coefficient;
    return t;
}

// The flagship worked example: the (4,2,1) block over K_{4,3}, with its full
// list of admissible pairs, their eigenvalues, and the resulting multiset.
bool flagship_block_spectrum() {
    bool ok = true;
    const MultipartiteShape shape(P({4, 3}));
    const Partition alpha = P({4, 2, 1});

    const std::vector<AdmissibleTuple> expected = {
        tuple_of({{4}, {2, 1}}, 1),       tuple_of({{3, 1}, {3}}, 1),
        tuple_of({{3, 1}, {2, 1}}, 2),    tuple_of({{3, 1}, {1, 1, 1}}, 1),
        tuple_of({{2, 2}, {3}}, 1),       tuple_of({{2, 2}, {2, 1}}, 1),
        tuple_of({{2, 1, 1}, {3}}, 1),    tuple_of({{2, 1, 1}, {2, 1}}, 1)};
    const std::vector<long long> row_values = {-3, -2, 1, 4, 0, 3, 2, 5};

    const auto adm = enumerate_admissible(alpha, shape.eta());
    ok = ok && adm == expected;
    for (std::size_t i = 0; i < adm.size() && i < row_values.size(); ++i)
        ok = ok && b_value(alpha, adm[i]) == row_values[i];

    SpectrumMultiset want;
    want.add(-3, 2);
    want.add(-2, 3);
    want.add(0, 2);
    want.add(1, 12);
    want.add(2, 3);
    want.add(3, 4);
    want.add(4, 3);
    want.add(5, 6);
    const auto spectrum = block_spectrum(alpha, shape);
    ok = ok && spectrum == want;
    ok = ok && spectrum.entries().size() == 8;
    ok = ok && lambda_max(alpha, shape) == 5;
    return ok;
}

// The 18 lattice fillings of (6,5,3,1)/(5,2,1), their content census, and the
// dominance-least content.
bool tableau_census() {
    bool ok = true;
    const SkewShape shape(P({6, 5, 3, 1}), P({5, 2, 1}));
    const auto fillings = enumerate_lr_tableaux(shape);
    ok = ok && fillings.size() == 18;

    std::map<std::vector<int>, int> census;
    for (const auto& t : fillings)
        census[sort_to_partition(content(reading_word(t))).parts()]++;
    const std::map<std::vector<int>, int> want = {
        {{6, 1}, 1},       {{5, 2}, 3},    {{5, 1, 1}, 2},    {{4, 3}, 3},
        {{4, 2, 1}, 4},    {{4, 1, 1, 1}, 1}, {{3, 3, 1}, 2}, {{3, 2, 2}, 1},
        {{3, 2, 1, 1}, 1}};
    ok = ok && census == want;
    ok = ok && minimal_content(P({6, 5, 3, 1}), P({5, 2, 1})) == P({3, 2, 1, 1});
    return ok;
}

// Greedy word of the profile (3,4,2,4), its content, and the reconstruction
// of the worked skew filling of (8,7,5,4)/(5,3,3).
bool greedy_reconstruction() {
    bool ok = true;
    const ReadingWord word = minimal_sequence(W({3, 4, 2, 4}));
    ok = ok && word == ReadingWord{1, 1, 1, 2, 2, 2, 1, 3, 3, 4, 4, 3, 2};
    ok = ok && content(word) == W({4, 4, 3, 2});

    const SkewTableau want(SkewShape(P({8, 7, 5, 4}), P({5, 3, 3})),
                           {{1, 1, 1}, {1, 2, 2, 2}, {3, 3}, {2, 3, 4, 4}});
    ok = ok && reconstruct_tableau(word, P({8, 7, 5, 4}), P({5, 3, 3})) == want;
    return ok;
}

// Closed form at the defining block: largest eigenvalue |E| - n + eta_1 for
// every shape except the all-singleton one, and graph gap n - eta_1.
bool closed_form_gap() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        const Partition defining = P({n - 1, 1});
        for (const auto& eta : enumerate_partitions(n)) {
            if (eta.at(0) == 1) continue;  // all-singleton shape: formula shifts by one
            const MultipartiteShape shape(eta);
            ok = ok && lambda_max(defining, shape) == shape.edge_count() - n + eta.at(0);
            if (shape.blocks() >= 2)
                ok = ok && spectral_gap_graph(shape) == n - eta.at(0);
        }
    }
    return ok;
}

// Gap equality sweep: the defining block attains the Cayley maximum for every
// multipartite shape with at least two blocks, so both gaps coincide.
bool gap_equality_sweep() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        const auto alphas = enumerate_partitions(n);
        for (const auto& eta : enumerate_partitions(n)) {
            if (eta.length() < 2) continue;
            const MultipartiteShape shape(eta);
            const long long defining = lambda_max(P({n - 1, 1}), shape);
            for (const auto& alpha : alphas) {
                if (alpha == alphas.front()) continue;  // skip (n)
                ok = ok && lambda_max(alpha, shape) <= defining;
            }
            ok = ok && spectral_gap_cayley(shape) == spectral_gap_graph(shape);
        }
    }
    return ok;
}

bool spot_maxima() {
    bool ok = true;
    ok = ok && lambda_max(P({2, 1, 1}), MultipartiteShape(P({3, 1}))) == 1;
    ok = ok && lambda_max(P({2, 2}), MultipartiteShape(P({3, 1}))) == 0;
    ok = ok && lambda_max(P({2, 2}), MultipartiteShape(P({2, 2}))) == 2;
    ok = ok && lambda_max(P({3, 1}), MultipartiteShape(P({2, 2}))) == 2;
    return ok;
}

// Every exact block spectrum against the orthogonal matrix model.
bool block_oracle_equivalence() {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& eta : enumerate_partitions(n)) {
            const MultipartiteShape shape(eta);
            for (const auto& alpha : enumerate_partitions(n)) {
                const auto numeric = orc::symmetric_eigenvalues(orc::rep_block_matrix(alpha, shape));
                const auto cmp = orc::compare_spectra(block_spectrum(alpha, shape), numeric, 1e-8);
                ok = ok && cmp.ok;
            }
        }
    }
    return ok;
}

// Every exact Cayley spectrum against the explicit n! x n! Laplacian.
bool cayley_oracle_equivalence() {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& eta : enumerate_partitions(n)) {
            const MultipartiteShape shape(eta);
            const auto numeric = orc::symmetric_eigenvalues(orc::cayley_laplacian(shape));
            const auto cmp = orc::compare_spectra(cayley_spectrum(shape), numeric, 1e-8);
            ok = ok && cmp.ok;
        }
    }
    return ok;
}

// The combinatorial property suites backing the exact machinery.
bool property_suites() {
    bool ok = true;

    // Dimension counts and the block trace identity, all shapes up to n = 8.
    for (int n = 2; n <= 8; ++n) {
        for (const auto& eta : enumerate_partitions(n)) {
            const MultipartiteShape shape(eta);
            for (const auto& alpha : enumerate_partitions(n)) {
                long long total = 0;
                for (const auto& t : enumerate_admissible(alpha, eta)) {
                    long long prod = t.coefficient;
                    for (const auto& part : t.parts) prod *= dimension(Partition(part));
                    total += prod;
                }
                ok = ok && total == dimension(alpha);

                long long trace = 0;
                const SpectrumMultiset spectrum = block_spectrum(alpha, shape);
                for (const auto& [value, mult] : spectrum.entries())
                    trace += value * mult;
                ok = ok && static_cast<long long>(n) * (n - 1) * trace ==
                               2 * shape.edge_count() * q_value(alpha) * dimension(alpha);
            }
        }
    }

    // LR symmetry, positivity => containment, and the dominance-least content.
    for (int n = 2; n <= 8; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            for (int j = 1; j < n; ++j) {
                for (const auto& beta : enumerate_partitions(j)) {
                    const bool contained = componentwise_leq(beta, alpha);
                    Partition least;
                    if (contained) {
                        least = minimal_content(alpha, beta);
                        ok = ok && lr_coefficient(alpha, beta, least) >= 1;
                    }
                    for (const auto& gamma : enumerate_partitions(n - j)) {
                        const long long c = lr_coefficient(alpha, beta, gamma);
                        ok = ok && c == lr_coefficient(alpha, gamma, beta);
                        if (c > 0) {
                            ok = ok && contained;
                            ok = ok && dominance_leq(least, gamma);
                        }
                    }
                }
            }
        }
    }

    // Largest eigenvalue vs. its relaxed bound; equality at the defining
    // block; dominance monotonicity of q and of the bound; dual-path
    // agreement on every unconstrained tuple.
    for (int n = 2; n <= 8; ++n) {
        const auto alphas = enumerate_partitions(n);
        for (std::size_t i = 0; i < alphas.size(); ++i)
            for (std::size_t j = 0; j < alphas.size(); ++j)
                if (dominance_leq(alphas[i], alphas[j]))
                    ok = ok && q_value(alphas[i]) <= q_value(alphas[j]);

        for (const auto& eta : enumerate_partitions(n)) {
            const MultipartiteShape shape(eta);
            std::map<std::vector<int>, long long> bound;
            for (const auto& alpha : alphas) {
                long long best = 0;
                bool first = true;
                for (const auto& t : enumerate_admissible_star(alpha, eta)) {
                    const long long direct = inner_product_b_value(t);
                    ok = ok && direct == b_value(alpha, t);
                    if (first || direct > best) best = direct;
                    first = false;
                }
                ok = ok && !first;
                ok = ok && b_bar(alpha, shape) == best;
                ok = ok && lambda_max(alpha, shape) <= best;
                bound[alpha.parts()] = best;
            }
            if (eta.at(0) > 1) {
                const Partition defining = P({n - 1, 1});
                ok = ok && lambda_max(defining, shape) == bound[defining.parts()];
            }
            for (std::size_t i = 0; i < alphas.size(); ++i)
                for (std::size_t j = 0; j < alphas.size(); ++j)
                    if (dominance_leq(alphas[i], alphas[j]))
                        ok = ok && bound[alphas[i].parts()] <= bound[alphas[j].parts()];
        }
    }

    // Swap monotonicity of q, randomized.
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 10000; ++trial) {
        const int len = std::uniform_int_distribution<int>(2, 10)(rng);
        std::vector<int> w(len);
        for (auto& entry : w) entry = std::uniform_int_distribution<int>(0, 12)(rng);
        ok = ok && q_value(sort_to_partition(W(w))) >= q_value(W(w));

        std::vector<std::pair<int, int>> candidates;
        for (int a = 0; a < len; ++a)
            for (int b = a + 1; b < len; ++b)
                if (w[a] < w[b]) candidates.emplace_back(a, b);
        if (candidates.empty()) continue;
        const auto [a, b] = candidates[std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng)];
        std::vector<int> swapped = w;
        std::swap(swapped[a], swapped[b]);
        const long long gain = q_value(W(swapped)) - q_value(W(w));
        ok = ok && gain == static_cast<long long>(b - a) * (w[b] - w[a]);
        ok = ok && gain > 0;
    }

    // Running-multiplicity duality on arbitrary words, plus the staircase
    // pattern on greedy words.
    for (int trial = 0; trial < 10000; ++trial) {
        const int len = std::uniform_int_distribution<int>(1, 18)(rng);
        ReadingWord word(len);
        for (auto& v : word) v = std::uniform_int_distribution<int>(1, 6)(rng);
        const auto nu = running_multiplicity(word);
        ok = ok && content(nu).parts() == conjugate(sort_to_partition(content(word))).parts();
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = std::uniform_int_distribution<int>(1, 5)(rng);
        std::vector<int> delta(rows);
        for (auto& d : delta) d = std::uniform_int_distribution<int>(1, 6)(rng);
        const auto nu = running_multiplicity(minimal_sequence(W(delta)));
        std::vector<int> staircase;
        for (const int d : delta)
            for (int v = 1; v <= d; ++v) staircase.push_back(v);
        ok = ok && nu == staircase;
    }

    return ok;
}

struct Criterion {
    int index;
    std::string label;
    double budget_seconds;
    std::function<bool()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "flagship block spectrum and admissible pairs", 1.0, flagship_block_spectrum},
        {2, "skew tableau census and minimal content", 1.0, tableau_census},
        {3, "greedy word and tableau reconstruction", 1.0, greedy_reconstruction},
        {4, "closed-form largest eigenvalue and graph gap (n <= 8)", 5.0, closed_form_gap},
        {5, "gap equality sweep (n <= 8)", 120.0, gap_equality_sweep},
        {6, "spot maxima for small shapes", 1.0, spot_maxima},
        {7, "per-block matrix oracle equivalence (n <= 7)", 600.0, block_oracle_equivalence},
        {8, "full Cayley matrix oracle equivalence (n <= 6)", 300.0, cayley_oracle_equivalence},
        {9, "combinatorial property suites (n <= 8)", 120.0, property_suites},
    };

    bool all_pass = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" (exception: ") + e.what() + ")";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool within_budget = seconds <= criterion.budget_seconds;
        const bool pass = ok && within_budget;
        all_pass = all_pass && pass;
        std::cout << (pass ? "pass" : "FAIL") << "  " << criterion.index << ' '
                  << criterion.label << "  [" << std::fixed << std::setprecision(2) << seconds
                  << "s, budget " << std::setprecision(0) << criterion.budget_seconds << "s]"
                  << note << '\n';
    }
    return all_pass ? 0 : 1;
}
