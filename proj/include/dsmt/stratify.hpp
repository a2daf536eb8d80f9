#ifndef DSMT_STRATIFY_HPP
#define DSMT_STRATIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/homology.hpp"
#include "dsmt/morse.hpp"
#include "dsmt/simplex_set.hpp"
#include "dsmt/strat.hpp"

namespace dsmt {

/// Step-by-step record of the stratification construction.
struct AlgorithmTrace {
    /// Violators actually removed, in removal order.
    std::vector<SimplexId> removals;
    /// Violators of f on K before any removal, in processing order.
    std::vector<SimplexId> initial_violators;
    /// dropped[i]: violators that ceased to violate after removal i. The
    /// surviving set after any step is reconstructible from these deltas.
    std::vector<std::vector<SimplexId>> dropped;
    /// Removed violators lying in the closure of the final remainder.
    std::vector<SimplexId> in_closure;
    /// Frontier/interior of the remainder per the construction formula,
    /// before any validity-restoring split.
    std::vector<SimplexId> raw_frontier;
    std::vector<SimplexId> raw_interior;
    /// Splits applied to restore stratification validity; empty on
    /// well-behaved inputs, including every bundled fixture.
    std::vector<std::string> refinements;
    /// Per-stratum gradient pairs of the result.
    VectorField stratum_gradient;

    /// Violator set still alive after `step` removals (step <= removals).
    std::vector<SimplexId> surviving_at(std::size_t step) const;
};

/// Options for the construction. `priority` forces the given simplices to
/// the head of the removal order (first listed, first removed, while still
/// violating); remaining violators follow the dimension-then-value order.
struct StratifyOptions {
    std::vector<SimplexId> priority;
};

/// Builds a maximal stratification on which f is a discrete stratified
/// Morse function: removed violators become singleton strata and the
/// remainder splits into its frontier and interior. Always succeeds; a
/// discrete Morse function yields the trivial stratification.
std::pair<Stratification, AlgorithmTrace>
construct_stratification(const Complex& k, const ScalarField& f,
                         const StratifyOptions& options = {});

/// Brute-force coarsening oracle for maximality in Sigma(K, f): merges
/// subsets of the strata of S every possible way and looks for a coarser
/// partition that is still a valid stratification with f a DSMF.
/// Throws ComplexTooLarge beyond `max_simplices` or when the stratum count
/// makes enumeration infeasible.
bool is_maximal(const Complex& k, const ScalarField& f, const Stratification& s,
                std::size_t max_simplices = 16);

/// Union of the per-stratum gradients of a DSMF; acyclic and
/// strata-respecting. Throws NotADSMF.
VectorField union_gradient(const Complex& k, const ScalarField& f, const Stratification& s);

/// A discrete Morse function whose gradient is exactly V and whose sublevel
/// complexes exhaust the strata in linear-extension order at the returned
/// thresholds. Throws NonRespectingField or CyclicField.
struct SeparatingFunction {
    ScalarField g;
    std::vector<double> thresholds;   // a_1 < ... < a_n
    std::vector<int> stratum_order;   // linear extension the thresholds follow
};

SeparatingFunction separating_function(const Complex& k, const Stratification& s,
                                       const VectorField& v);

/// Stratum-preserving reduction report.
struct ReductionReport {
    std::vector<long long> critical_counts;                  // per dimension
    std::vector<std::pair<SimplexId, SimplexId>> collapses;  // removal order
    BettiVector morse_betti;
    BettiVector complex_betti;
    long long euler = 0;

    bool euler_identity() const {
        long long s = 0;
        bool plus = true;
        for (long long c : critical_counts) { s += plus ? c : -c; plus = !plus; }
        return s == euler;
    }
    bool homology_preserved() const { return morse_betti == complex_betti; }
};

/// Counts critical cells of the union gradient, lists the Morse pairs in a
/// valid top-down removal order, and verifies homotopy-type book-keeping
/// against the homology oracle. Throws NotADSMF.
ReductionReport simplify(const Complex& k, const ScalarField& f, const Stratification& s);

} // namespace dsmt

#endif
