// Acceptance suite: runs every shipped correctness criterion and prints one
// pass/fail line each. Returns nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dsmt/fixtures.hpp"
#include "dsmt/homology.hpp"
#include "dsmt/pointdata.hpp"
#include "dsmt/stratify.hpp"
#include "dsmt/synthetic.hpp"

using namespace dsmt;

namespace {

std::uint64_t suite_seed() {
    if (const char* env = std::getenv("DSMT_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240915u;
}

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<double> values_of(const ScalarField& f, const std::vector<SimplexId>& ids) {
    std::vector<double> out;
    for (SimplexId id : ids) out.push_back(f(id));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<double, double>> pairs_by_value(const ScalarField& f,
                                                      const VectorField& v) {
    std::vector<std::pair<double, double>> out;
    for (const auto& [a, b] : v.pairs) out.emplace_back(f(a), f(b));
    std::sort(out.begin(), out.end());
    return out;
}

double elapsed_seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: upside-down pentagon, exact end-to-end behaviour -------
Check criterion1() {
    Check c;
    const double t = elapsed_seconds([&] {
        auto [k, f] = fixtures::pentagon_down();
        const Classification cl = classify(k, f);
        c.expect(values_of(f, cl.violators()) == std::vector<double>{1, 2, 10},
                 "violator set");

        const auto [s, trace] = construct_stratification(k, f);
        c.expect(values_of(f, trace.removals) == std::vector<double>{10}, "removals");

        const VectorField v = union_gradient(k, f, s);
        c.expect(pairs_by_value(f, v) == std::vector<std::pair<double, double>>{
                                             {3, 1}, {4, 2}, {7, 5}, {8, 6}},
                 "union gradient");

        const StratifiedClassification sc = classify_stratified(k, f, s);
        c.expect(values_of(f, sc.critical()) == std::vector<double>{9, 10},
                 "critical values");

        const ReductionReport r = simplify(k, f, s);
        c.expect(r.critical_counts == std::vector<long long>{1, 1}, "1 vertex + 1 edge");
        c.expect(r.morse_betti.b == std::vector<long long>{1, 1}, "betti (1,1)");
    });
    c.expect(t < 1.0, "runtime under 1 s");
    return c;
}

// --- criterion 2: tetrahedron against the frozen U/L/type table ----------
Check criterion2() {
    Check c;
    auto [k, f] = fixtures::tetrahedron();

    struct Row {
        double value;
        std::vector<double> upper, lower;
        const char* type;
    };
    const std::vector<Row> table = {
        {1, {}, {}, "C"},          {2, {}, {3}, "R"},        {3, {2}, {}, "R"},
        {4, {}, {10}, "R"},        {5, {}, {7}, "R"},        {6, {}, {8, 11}, "II"},
        {7, {5}, {10}, "III"},     {8, {6}, {14}, "III"},    {9, {}, {12}, "R"},
        {10, {4, 7}, {}, "I"},     {11, {6}, {14}, "III"},   {12, {9}, {14}, "III"},
        {13, {}, {}, "C"},         {14, {8, 11, 12}, {}, "I"},
    };
    const SimplexSet all = SimplexSet::full(k.size());
    const Classification cl = classify(k, f);
    for (const Row& row : table) {
        const SimplexId id = fixtures::by_value(f, row.value);
        c.expect(values_of(f, upper_set(k, f, id, all).members()) == row.upper,
                 "U(" + std::to_string(row.value) + ")");
        c.expect(values_of(f, lower_set(k, f, id, all).members()) == row.lower,
                 "L(" + std::to_string(row.value) + ")");
        const auto& fl = cl.flags[static_cast<std::size_t>(id)];
        std::string type;
        if (cl.status[static_cast<std::size_t>(id)] == SimplexStatus::Critical) type = "C";
        else if (cl.status[static_cast<std::size_t>(id)] == SimplexStatus::Regular) type = "R";
        else if (fl.type1) type = "I";
        else if (fl.type2) type = "II";
        else type = "III";
        c.expect(type == row.type, "type(" + std::to_string(row.value) + ")");
    }

    const auto [s, trace] = construct_stratification(k, f);
    c.expect(trace.removals.size() == 3 && f(trace.removals[0]) == 10 &&
                 f(trace.removals[1]) == 14 && f(trace.removals[2]) == 6,
             "removal order 10, 14, 6");

    std::vector<std::vector<double>> strata_values;
    for (const auto& st : s.strata) strata_values.push_back(values_of(f, st.members()));
    std::sort(strata_values.begin(), strata_values.end());
    c.expect(strata_values == std::vector<std::vector<double>>{{1, 2, 3, 8, 11},
                                                               {4, 5, 7, 9, 12, 13},
                                                               {6},
                                                               {10},
                                                               {14}},
             "final strata");

    c.expect(pairs_by_value(f, union_gradient(k, f, s)) ==
                 std::vector<std::pair<double, double>>{{3, 2}, {7, 5}, {12, 9}},
             "pairs (3,2), (12,9), (7,5)");
    return c;
}

// --- criterion 3: pentagon reconstruction --------------------------------
Check criterion3() {
    Check c;
    auto [k, f] = fixtures::pentagon();
    const auto [s, trace] = construct_stratification(k, f);
    const StratifiedClassification sc = classify_stratified(k, f, s);
    c.expect(values_of(f, sc.critical()) == std::vector<double>{0, 1, 3, 7, 8, 9},
             "critical values {0,1,3,7,8,9}");
    std::size_t piece_count = 0;
    for (const auto& st : s.strata) piece_count += pieces(k, st).size();
    c.expect(piece_count == 6, "six strata pieces");
    return c;
}

// --- criterion 4: split solid square --------------------------------------
Check criterion4() {
    Check c;
    auto [k, f] = fixtures::split_square();
    const auto [s, trace] = construct_stratification(k, f);
    const StratifiedClassification sc = classify_stratified(k, f, s);
    c.expect(sc.critical().size() == k.size(), "every simplex critical");
    const ReductionReport r = simplify(k, f, s);
    c.expect(r.collapses.empty(), "zero collapses");
    return c;
}

// --- criterion 5: discrete Morse inputs give the trivial stratification ---
Check criterion5() {
    Check c;
    synthetic::Rng rng(suite_seed() + 100);
    for (int t = 0; t < 100 && c.ok; ++t) {
        const Complex k = synthetic::random_complex(rng);
        const ScalarField g = synthetic::random_dmf(rng, k);
        const auto [s, trace] = construct_stratification(k, g);
        c.expect(s.size() == 1 && s.strata[0] == SimplexSet::full(k.size()),
                 "trivial stratification, case " + std::to_string(t));
    }
    return c;
}

// --- criterion 6: soundness battery over 500 random inputs ----------------
Check criterion6() {
    Check c;
    synthetic::Rng rng(suite_seed() + 200);
    const double t = elapsed_seconds([&] {
        for (int t_i = 0; t_i < 500 && c.ok; ++t_i) {
            const std::string tag = ", case " + std::to_string(t_i);
            const Complex k = synthetic::random_complex(rng);
            const ScalarField f = synthetic::random_field(rng, k);
            const auto [s, trace] = construct_stratification(k, f);
            c.expect(validate_stratification(k, s).ok, "validate_stratification" + tag);
            if (!c.ok) break;
            c.expect(check_dsmf(k, f, s).ok, "check_dsmf" + tag);
            if (!c.ok) break;
            c.expect(violator_boundary_property(k, f, s), "violator boundary" + tag);
            c.expect(minimal_stratum_is_subcomplex(k, s), "minimal stratum" + tag);

            const VectorField v = union_gradient(k, f, s);
            try {
                v.partner_map(k);
            } catch (const Error&) {
                c.expect(false, "matching" + tag);
            }
            c.expect(is_acyclic(k, v).acyclic, "acyclic" + tag);
            const auto assign = s.assignment(k);
            for (const auto& [a, b] : v.pairs)
                c.expect(assign[static_cast<std::size_t>(a)] ==
                             assign[static_cast<std::size_t>(b)],
                         "strata respected" + tag);

            const ReductionReport r = simplify(k, f, s);
            c.expect(r.euler_identity(), "euler identity" + tag);
            c.expect(r.homology_preserved(), "betti preserved" + tag);
        }
    });
    c.expect(t < 60.0, "suite under 60 s");
    return c;
}

// --- criterion 7: maximality oracle ---------------------------------------
Check criterion7() {
    Check c;
    const std::vector<std::pair<std::string, std::pair<Complex, ScalarField>>> fixtures_list = {
        {"pentagon-down", fixtures::pentagon_down()},
        {"tetrahedron", fixtures::tetrahedron()},
        {"pentagon", fixtures::pentagon()},
        {"split-square", fixtures::split_square()},
        {"circle", fixtures::circle()},
    };
    for (const auto& [name, kf] : fixtures_list) {
        const auto& [k, f] = kf;
        if (k.size() > 16) continue;
        const auto [s, trace] = construct_stratification(k, f);
        c.expect(is_maximal(k, f, s),
                 "fixture " + name + " admits a strictly coarser valid stratification");
    }
    synthetic::Rng rng(suite_seed() + 300);
    for (int t = 0; t < 50 && c.ok; ++t) {
        const Complex k = synthetic::random_complex(rng, 12);
        const ScalarField f = synthetic::random_field(rng, k);
        const auto [s, trace] = construct_stratification(k, f);
        c.expect(is_maximal(k, f, s), "random case " + std::to_string(t) +
                                          " admits a strictly coarser valid stratification");
    }
    return c;
}

// --- criterion 8: separating functions ------------------------------------
Check criterion8() {
    Check c;
    synthetic::Rng rng(suite_seed() + 400);
    for (int t = 0; t < 200 && c.ok; ++t) {
        const std::string tag = ", case " + std::to_string(t);
        const Complex k = synthetic::random_complex(rng);
        const ScalarField f = synthetic::random_field(rng, k);
        const auto [s, trace] = construct_stratification(k, f);
        const VectorField v = union_gradient(k, f, s);
        const SeparatingFunction sep = separating_function(k, s, v);
        c.expect(check_dmf(k, sep.g).ok, "g is discrete Morse" + tag);
        c.expect(gradient_of(k, sep.g).pairs == v.pairs, "gradient round trip" + tag);
        SimplexSet below(k.size());
        for (std::size_t i = 0; i < sep.thresholds.size(); ++i) {
            below = below | s.strata[static_cast<std::size_t>(sep.stratum_order[i])];
            c.expect(sublevel_complex(k, sep.g, sep.thresholds[i]) == below,
                     "sublevel property" + tag);
            if (i)
                c.expect(sep.thresholds[i] > sep.thresholds[i - 1],
                         "thresholds increase" + tag);
        }
    }
    return c;
}

// --- criterion 9: point-data extensions -----------------------------------
Check criterion9() {
    Check c;
    synthetic::Rng rng(suite_seed() + 500);
    for (int t = 0; t < 200 && c.ok; ++t) {
        const std::string tag = ", case " + std::to_string(t);
        const Complex k = synthetic::random_complex(rng, 20, 2);
        const VertexField f0 = synthetic::random_vertex_field(rng, k);
        double spread = 0;
        for (const auto& [v, x] : f0.value) spread = std::max(spread, x);
        const double eps = 1e-3 * std::max(spread, 1.0);

        const DmfExtension ext = extend_dmf(k, f0, eps);
        try {
            ext.field.partner_map(k);
        } catch (const Error&) {
            c.expect(false, "matching" + tag);
        }
        c.expect(is_acyclic(k, ext.field).acyclic, "acyclic" + tag);
        c.expect(morse_chain_complex(k, ext.field, SimplexSet::full(k.size())).betti() ==
                     betti(k),
                 "betti preserved" + tag);
        const ScalarField m = maxf_extension(k, f0);
        for (std::size_t i = 0; i < k.size(); ++i)
            c.expect(std::abs(ext.f_tilde.value[i] - m.value[i]) < eps, "closeness" + tag);

        const Stratification s = construct_stratification(k, m).first;
        const ScalarField g = extend_global(k, s, f0);
        c.expect(check_dmf(k, g).ok, "global extension is discrete Morse" + tag);
    }
    return c;
}

// --- criterion 10: near-linear scaling ------------------------------------
Check criterion10() {
    Check c;
    synthetic::Rng rng(suite_seed() + 600);
    const std::vector<std::pair<int, int>> grids = {{65, 65}, {91, 91}, {129, 129}};
    std::vector<double> log_n, log_t;
    double biggest = 0;
    for (const auto& [rows, cols] : grids) {
        const Complex k = fixtures::torus_grid(rows, cols);
        const ScalarField f = synthetic::random_field(rng, k);
        std::vector<double> runs;
        for (int rep = 0; rep < 3; ++rep)
            runs.push_back(elapsed_seconds([&] {
                const auto result = construct_stratification(k, f);
                if (result.first.size() == 0) std::abort(); // keep the call alive
            }));
        std::sort(runs.begin(), runs.end());
        const double median = runs[1];
        log_n.push_back(std::log(static_cast<double>(k.size())));
        log_t.push_back(std::log(median));
        biggest = median;
        std::printf("  [timing] n=%zu stratify median %.3fs\n", k.size(), median);
    }
    c.expect(biggest < 5.0, "100k-simplex stratification under 5 s");

    double xm = 0, ym = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) { xm += log_n[i]; ym += log_t[i]; }
    xm /= static_cast<double>(log_n.size());
    ym /= static_cast<double>(log_n.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        num += (log_n[i] - xm) * (log_t[i] - ym);
        den += (log_n[i] - xm) * (log_n[i] - xm);
    }
    const double slope = num / den;
    std::printf("  [timing] log-log slope %.3f\n", slope);
    c.expect(slope >= 0.8 && slope <= 1.3, "slope within [0.8, 1.3]");
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"pentagon-down end to end", criterion1},
        {"tetrahedron table and trace", criterion2},
        {"pentagon critical values and pieces", criterion3},
        {"split square all critical", criterion4},
        {"discrete Morse inputs stay trivial (100 cases)", criterion5},
        {"construction soundness battery (500 cases)", criterion6},
        {"maximality oracle (fixtures + 50 cases)", criterion7},
        {"separating functions (200 cases)", criterion8},
        {"point-data extensions (200 cases)", criterion9},
        {"near-linear scaling on 1e5 simplices", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        if (c.ok) {
            std::printf("[PASS] criterion %zu: %s\n", i + 1, criteria[i].first.c_str());
        } else {
            std::printf("[FAIL] criterion %zu: %s (%s)\n", i + 1, criteria[i].first.c_str(),
                        c.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
