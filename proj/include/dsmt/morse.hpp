#ifndef DSMT_MORSE_HPP
#define DSMT_MORSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/homology.hpp"
#include "dsmt/simplex_set.hpp"

namespace dsmt {

/// A partial matching of simplices with codimension-1 cofaces. Each pair is
/// (sigma, tau) with tau a cofacet of sigma; pairs are kept sorted.
struct VectorField {
    std::vector<std::pair<SimplexId, SimplexId>> pairs;

    void normalize();
    std::size_t size() const { return pairs.size(); }

    /// partner[id] = the matched simplex, or -1. Throws NotAMatching if a
    /// simplex occurs twice or a pair is not a facet/cofacet incidence.
    std::vector<SimplexId> partner_map(const Complex& k) const;
};

/// Immediate cofaces of alpha inside D with value <= f(alpha).
SimplexSet upper_set(const Complex& k, const ScalarField& f, SimplexId alpha,
                     const SimplexSet& d);
/// Immediate faces of alpha inside D with value >= f(alpha).
SimplexSet lower_set(const Complex& k, const ScalarField& f, SimplexId alpha,
                     const SimplexSet& d);

/// Result of testing the three discrete-Morse conditions on a subset:
/// |U| <= 1, |L| <= 1, and exclusivity. Violations are data, not errors.
struct DmfReport {
    bool ok = true;
    std::vector<SimplexId> offenders;
};

DmfReport check_dmf(const Complex& k, const ScalarField& f, const SimplexSet& d);

inline DmfReport check_dmf(const Complex& k, const ScalarField& f) {
    return check_dmf(k, f, SimplexSet::full(k.size()));
}

enum class SimplexStatus { Critical, Regular, Violator };

struct ViolatorFlags {
    bool type1 = false; // |U| >= 2
    bool type2 = false; // |L| >= 2
    bool type3 = false; // |U| = 1 and |L| = 1
    bool any() const { return type1 || type2 || type3; }
};

/// Per-simplex classification against the full complex.
struct Classification {
    std::vector<SimplexStatus> status;
    std::vector<SimplexId> partner;      // valid for Regular entries, else -1
    std::vector<ViolatorFlags> flags;

    std::vector<SimplexId> violators() const {
        std::vector<SimplexId> out;
        for (std::size_t i = 0; i < status.size(); ++i)
            if (status[i] == SimplexStatus::Violator) out.push_back(static_cast<SimplexId>(i));
        return out;
    }
    std::vector<SimplexId> critical() const {
        std::vector<SimplexId> out;
        for (std::size_t i = 0; i < status.size(); ++i)
            if (status[i] == SimplexStatus::Critical) out.push_back(static_cast<SimplexId>(i));
        return out;
    }
};

Classification classify(const Complex& k, const ScalarField& f);

/// The gradient vector field of a discrete Morse function on D. Throws
/// NotAMorseFunction carrying the offender list when check_dmf fails.
VectorField gradient_of(const Complex& k, const ScalarField& f, const SimplexSet& d);

inline VectorField gradient_of(const Complex& k, const ScalarField& f) {
    return gradient_of(k, f, SimplexSet::full(k.size()));
}

struct AcyclicityResult {
    bool acyclic = true;
    /// On failure, one closed V-path: alpha0, beta0, alpha1, ..., alpha0.
    std::vector<SimplexId> witness;
};

/// Checks for nontrivial closed V-paths. Throws NotAMatching on malformed
/// input.
AcyclicityResult is_acyclic(const Complex& k, const VectorField& v);

/// D minus all simplices occurring in a pair of V.
SimplexSet critical_cells(const Complex& k, const VectorField& v, const SimplexSet& d);

/// The Morse chain complex over Z/2 of an acyclic field on a downward
/// closed D: one generator per critical cell, boundary by V-path parity.
struct MorseChainComplex {
    std::vector<std::vector<SimplexId>> cells; // per dimension, increasing id
    std::vector<Gf2Matrix> boundary;           // boundary[p]: dim p -> dim p-1

    BettiVector betti() const;
    std::vector<long long> cell_counts() const {
        std::vector<long long> c;
        for (const auto& layer : cells) c.push_back(static_cast<long long>(layer.size()));
        return c;
    }
};

/// Throws CyclicField when V has a closed V-path, NotAComplex when D is not
/// downward closed.
MorseChainComplex morse_chain_complex(const Complex& k, const VectorField& v,
                                      const SimplexSet& d);

/// Attempts to collapse `from` onto `onto` by greedily removing free pairs.
/// Both sets must be downward closed. Returns the removal sequence, or
/// nullopt when no further free pair exists short of `onto`.
std::optional<std::vector<std::pair<SimplexId, SimplexId>>>
collapse_onto(const Complex& k, const SimplexSet& from, const SimplexSet& onto);

} // namespace dsmt

#endif
