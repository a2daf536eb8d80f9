#ifndef DSMT_POINTDATA_HPP
#define DSMT_POINTDATA_HPP

#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/morse.hpp"
#include "dsmt/strat.hpp"

namespace dsmt {

/// value(sigma) = max of the vertex values of sigma.
ScalarField maxf_extension(const Complex& k, const VertexField& f0);

/// value(sigma) = mean of the vertex values of sigma. Piecewise-linear
/// style sampling kernel; offered as an alternative bootstrap with no
/// special guarantees.
ScalarField mean_extension(const Complex& k, const VertexField& f0);

struct DmfExtension {
    VectorField field;     // acyclic matching on all of K
    ScalarField f_tilde;   // discrete Morse function with gradient `field`
    double closeness = 0;  // achieved bound on |f_tilde - maxf|, < eps
};

/// Extends an injective vertex field to a discrete Morse function by the
/// lower-link recursion: local minima become critical, unique gradient
/// paths between critical cells of the lower link are cancelled, the
/// steepest edge pairs with the vertex and regular link pairs are coned.
/// The returned function satisfies |f_tilde - maxf| < eps simplex-wise.
DmfExtension extend_dmf(const Complex& k, const VertexField& f0, double eps);

struct StratifiedExtension {
    ScalarField f_tilde;                    // DSMF extending f0
    std::vector<VectorField> stratum_fields; // per stratum of S
    std::vector<SimplexId> unconsidered;    // simplices the recursion never
                                            // visited; critical by fiat
};

/// Runs the extension inside each stratum separately, in linear-extension
/// order. Simplices whose cone data leaves the stratum are never visited
/// and stay critical. No closeness to maxf is promised here.
StratifiedExtension extend_stratified(const Complex& k, const Stratification& s,
                                      const VertexField& f0);

/// A discrete Morse function on all of K compatible with the union of the
/// per-stratum extension fields, via the strata-separating construction.
ScalarField extend_global(const Complex& k, const Stratification& s, const VertexField& f0);

} // namespace dsmt

#endif
