#ifndef DSMT_STRAT_HPP
#define DSMT_STRAT_HPP

#include <string>
#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/morse.hpp"
#include "dsmt/simplex_set.hpp"

namespace dsmt {

/// A named partition of the open simplices into locally closed strata.
struct Stratification {
    std::vector<std::string> names;
    std::vector<SimplexSet> strata;

    static Stratification trivial(const Complex& k);

    std::size_t size() const { return strata.size(); }

    /// stratum index per simplex; -1 where uncovered (invalid input only).
    std::vector<int> assignment(const Complex& k) const;

    int index_of(const std::string& name) const;
};

enum class StratViolationKind {
    Uncovered,
    Overlap,
    EmptyStratum,
    NotLocallyClosed,
    FrontierCondition,
};

struct StratViolation {
    StratViolationKind kind;
    std::string detail;
    std::vector<SimplexId> witnesses;
    int stratum = -1;
    int other = -1;
};

struct StratReport {
    bool ok = true;
    std::vector<StratViolation> violations;
};

/// Checks cover, disjointness, nonemptiness, the sandwich form of local
/// closedness and both directions of the frontier condition.
StratReport validate_stratification(const Complex& k, const Stratification& s);

/// The induced order S_i < S_j iff S_i lies in closure(S_j), plus one
/// deterministic linear extension (topological order, ties by name).
/// Throws InvalidStratification.
struct StrataOrder {
    std::vector<std::vector<bool>> less; // less[i][j] <=> S_i < S_j
    std::vector<int> linear;             // stratum indices, minimal first
};

StrataOrder strata_order(const Complex& k, const Stratification& s);

/// True when every minimal stratum of a valid stratification is a
/// subcomplex; a theorem, exposed for property testing.
bool minimal_stratum_is_subcomplex(const Complex& k, const Stratification& s);

/// DSMF test: f restricted to each stratum must satisfy the three
/// discrete-Morse conditions. Throws InvalidStratification on invalid S.
DmfReport check_dsmf(const Complex& k, const ScalarField& f, const Stratification& s);

enum class StratStatus {
    GloballyCritical,
    LocallyCritical,
    GloballyNoncritical,
    LocallyNoncritical,
};

struct StratifiedClassification {
    std::vector<StratStatus> status;
    std::vector<SimplexId> partner; // for noncritical entries, else -1

    /// Globally or locally critical simplices, i.e. the critical cells of
    /// (f, s).
    std::vector<SimplexId> critical() const {
        std::vector<SimplexId> out;
        for (std::size_t i = 0; i < status.size(); ++i)
            if (status[i] == StratStatus::GloballyCritical ||
                status[i] == StratStatus::LocallyCritical)
                out.push_back(static_cast<SimplexId>(i));
        return out;
    }
};

/// Four-way classification of every simplex under (f, s). Throws NotADSMF.
StratifiedClassification classify_stratified(const Complex& k, const ScalarField& f,
                                             const Stratification& s);

/// Lemma-level property: every violator of f is locally critical or a
/// boundary simplex for the stratification. Throws NotADSMF.
bool violator_boundary_property(const Complex& k, const ScalarField& f,
                                const Stratification& s);

} // namespace dsmt

#endif
