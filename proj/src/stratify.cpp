#include "dsmt/stratify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace dsmt {

std::vector<SimplexId> AlgorithmTrace::surviving_at(std::size_t step) const {
    std::vector<bool> gone;
    std::size_t universe = 0;
    for (SimplexId id : initial_violators)
        universe = std::max(universe, static_cast<std::size_t>(id) + 1);
    gone.assign(universe, false);
    for (std::size_t i = 0; i < step && i < removals.size(); ++i) {
        gone[static_cast<std::size_t>(removals[i])] = true;
        for (SimplexId id : dropped[i]) gone[static_cast<std::size_t>(id)] = true;
    }
    std::vector<SimplexId> out;
    for (SimplexId id : initial_violators)
        if (!gone[static_cast<std::size_t>(id)]) out.push_back(id);
    return out;
}

namespace {

// |U|, |L| of alpha among alive simplices, capped at 2.
inline std::pair<int, int> ul_alive(const Complex& k, const ScalarField& f, SimplexId alpha,
                                    const std::vector<bool>& alive) {
    int u = 0, l = 0;
    for (SimplexId b : k.cofacets(alpha))
        if (alive[static_cast<std::size_t>(b)] && f(b) <= f(alpha) && ++u == 2) break;
    for (SimplexId g : k.facets(alpha))
        if (alive[static_cast<std::size_t>(g)] && f(g) >= f(alpha) && ++l == 2) break;
    return {u, l};
}

inline bool violates(const Complex& k, const ScalarField& f, SimplexId alpha,
                     const std::vector<bool>& alive) {
    const auto [u, l] = ul_alive(k, f, alpha, alive);
    return u >= 2 || l >= 2 || (u == 1 && l == 1);
}

// Iterated faces of a simplex, by vertex-subset enumeration.
std::vector<SimplexId> proper_faces(const Complex& k, SimplexId id) {
    const auto& verts = k.simplex(id).vertices;
    const std::size_t nv = verts.size();
    std::vector<SimplexId> out;
    std::vector<VertexId> sub;
    for (unsigned mask = 1; mask + 1 < (1u << nv); ++mask) {
        sub.clear();
        for (std::size_t j = 0; j < nv; ++j)
            if (mask & (1u << j)) sub.push_back(verts[j]);
        if (auto f = k.find(sub)) out.push_back(*f);
    }
    return out;
}

// Validity-restoring split of the frontier set. The step-4 frontier can
// fail the frontier condition or local closedness when several removed
// violators shadow it unevenly; a valid stratification is forced to
// separate those orbits, so partition the frontier until the conditions
// hold. Well-behaved inputs (every worked fixture) come through unsplit.
std::vector<std::vector<SimplexId>>
split_frontier(const Complex& k, const std::vector<SimplexId>& frontier_ids,
               const std::vector<SimplexId>& removed, const std::vector<bool>& in_interior,
               std::vector<std::string>& log) {
    if (frontier_ids.empty()) return {};

    std::vector<bool> in_frontier(k.size(), false);
    for (SimplexId id : frontier_ids) in_frontier[static_cast<std::size_t>(id)] = true;

    // Signature: the removed violators whose closure contains the simplex,
    // plus whether it lies under the interior. The frontier condition makes
    // both predicates constant on any valid stratum.
    std::map<SimplexId, std::vector<SimplexId>> sig;
    for (SimplexId id : frontier_ids) sig[id]; // ensure presence
    for (SimplexId v : removed)
        for (SimplexId face : proper_faces(k, v))
            if (in_frontier[static_cast<std::size_t>(face)]) sig[face].push_back(v);

    std::vector<bool> under_interior(k.size(), false);
    {
        std::vector<SimplexId> stack;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (in_interior[i]) {
                under_interior[i] = true;
                stack.push_back(static_cast<SimplexId>(i));
            }
        while (!stack.empty()) {
            SimplexId t = stack.back();
            stack.pop_back();
            for (SimplexId ff : k.facets(t))
                if (!under_interior[static_cast<std::size_t>(ff)]) {
                    under_interior[static_cast<std::size_t>(ff)] = true;
                    stack.push_back(ff);
                }
        }
    }

    std::map<std::pair<std::vector<SimplexId>, bool>, std::vector<SimplexId>> classes;
    for (SimplexId id : frontier_ids) {
        auto key = std::make_pair(sig[id], under_interior[static_cast<std::size_t>(id)]);
        classes[key].push_back(id);
    }
    std::vector<std::vector<SimplexId>> parts;
    for (auto& [key, ids] : classes) parts.push_back(std::move(ids));
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (parts.size() > 1) {
        std::ostringstream msg;
        msg << "frontier split into " << parts.size() << " strata by violator/interior shadow";
        log.push_back(msg.str());
    }

    // Iterate two residual repairs until stable: a frontier part must not
    // sandwich an outside simplex between two of its members, and must meet
    // the closure of a sibling part either fully or not at all.
    auto part_of = std::vector<int>(k.size(), -1);
    auto rebuild_index = [&]() {
        std::fill(part_of.begin(), part_of.end(), -1);
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (SimplexId id : parts[p]) part_of[static_cast<std::size_t>(id)] = static_cast<int>(p);
    };
    rebuild_index();

    auto split_by_closure = [&](std::size_t p, SimplexId pivot_top, const char* why) {
        std::vector<bool> under(k.size(), false);
        under[static_cast<std::size_t>(pivot_top)] = true;
        std::vector<SimplexId> stack{pivot_top};
        while (!stack.empty()) {
            SimplexId t = stack.back();
            stack.pop_back();
            for (SimplexId ff : k.facets(t))
                if (!under[static_cast<std::size_t>(ff)]) {
                    under[static_cast<std::size_t>(ff)] = true;
                    stack.push_back(ff);
                }
        }
        std::vector<SimplexId> inside, outside;
        for (SimplexId id : parts[p])
            (under[static_cast<std::size_t>(id)] ? inside : outside).push_back(id);
        if (inside.empty() || outside.empty()) return false;
        std::ostringstream msg;
        msg << "frontier part split (" << why << ") at simplex " << pivot_top;
        log.push_back(msg.str());
        parts[p] = std::move(inside);
        parts.push_back(std::move(outside));
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        rebuild_index();
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // Sandwich repair: sigma < tau < rho with sigma, rho in the part
        // and tau outside it.
        for (std::size_t p = 0; p < parts.size() && !changed; ++p) {
            for (SimplexId rho : parts[p]) {
                for (SimplexId tau : proper_faces(k, rho)) {
                    if (part_of[static_cast<std::size_t>(tau)] == static_cast<int>(p)) continue;
                    bool has_lower = false;
                    for (SimplexId sigma : proper_faces(k, tau))
                        if (part_of[static_cast<std::size_t>(sigma)] == static_cast<int>(p)) {
                            has_lower = true;
                            break;
                        }
                    if (has_lower && split_by_closure(p, tau, "sandwich")) {
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
        if (changed) continue;
        // Frontier-condition repair between two parts: a part meeting the
        // closure of a sibling must lie inside it entirely. Closures are
        // stamped once per sibling per pass.
        std::vector<int> stamp(k.size(), -1);
        for (std::size_t q = 0; q < parts.size() && !changed; ++q) {
            std::vector<SimplexId> stack;
            for (SimplexId t : parts[q]) {
                stamp[static_cast<std::size_t>(t)] = static_cast<int>(q);
                stack.push_back(t);
            }
            while (!stack.empty()) {
                SimplexId x = stack.back();
                stack.pop_back();
                for (SimplexId ff : k.facets(x))
                    if (stamp[static_cast<std::size_t>(ff)] != static_cast<int>(q)) {
                        stamp[static_cast<std::size_t>(ff)] = static_cast<int>(q);
                        stack.push_back(ff);
                    }
            }
            std::vector<int> cands;
            for (SimplexId top : parts[q])
                for (SimplexId face : proper_faces(k, top)) {
                    const int p = part_of[static_cast<std::size_t>(face)];
                    if (p >= 0 && p != static_cast<int>(q)) cands.push_back(p);
                }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (int p : cands) {
                std::vector<SimplexId> inside, outside;
                for (SimplexId id : parts[static_cast<std::size_t>(p)])
                    (stamp[static_cast<std::size_t>(id)] == static_cast<int>(q) ? inside
                                                                                : outside)
                        .push_back(id);
                if (inside.empty() || outside.empty()) continue;
                std::ostringstream msg;
                msg << "frontier part split (frontier condition) against part of simplex "
                    << parts[q].front();
                log.push_back(msg.str());
                parts[static_cast<std::size_t>(p)] = std::move(inside);
                parts.push_back(std::move(outside));
                std::sort(parts.begin(), parts.end(),
                          [](const auto& a, const auto& b) { return a.front() < b.front(); });
                rebuild_index();
                changed = true;
                break;
            }
        }
    }
    return parts;
}

} // namespace

std::pair<Stratification, AlgorithmTrace>
construct_stratification(const Complex& k, const ScalarField& f, const StratifyOptions& options) {
    const std::size_t n = k.size();
    AlgorithmTrace trace;
    std::vector<bool> alive(n, true);

    // Single pass: collect violators, then order by dimension, value, id.
    std::vector<SimplexId> order;
    std::vector<bool> in_list(n, false);
    for (std::size_t i = 0; i < n; ++i)
        if (violates(k, f, static_cast<SimplexId>(i), alive)) {
            order.push_back(static_cast<SimplexId>(i));
            in_list[i] = true;
        }
    std::sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) {
        if (k.dim(a) != k.dim(b)) return k.dim(a) < k.dim(b);
        if (f(a) != f(b)) return f(a) < f(b);
        return a < b;
    });
    if (!options.priority.empty()) {
        std::vector<SimplexId> head;
        std::vector<bool> moved(n, false);
        for (SimplexId id : options.priority)
            if (id >= 0 && static_cast<std::size_t>(id) < n && in_list[static_cast<std::size_t>(id)] &&
                !moved[static_cast<std::size_t>(id)]) {
                head.push_back(id);
                moved[static_cast<std::size_t>(id)] = true;
            }
        for (SimplexId id : order)
            if (!moved[static_cast<std::size_t>(id)]) head.push_back(id);
        order = std::move(head);
    }
    trace.initial_violators = order;

    std::size_t live_violators = order.size();
    std::size_t cursor = 0;
    while (live_violators > 0) {
        while (!in_list[static_cast<std::size_t>(order[cursor])]) ++cursor;
        const SimplexId sigma = order[cursor];
        in_list[static_cast<std::size_t>(sigma)] = false;
        alive[static_cast<std::size_t>(sigma)] = false;
        --live_violators;
        trace.removals.push_back(sigma);
        trace.dropped.emplace_back();

        // Removal shrinks U/L only for the immediate neighbours, so only
        // they can stop violating; nothing new ever starts.
        auto recheck = [&](SimplexId t) {
            if (in_list[static_cast<std::size_t>(t)] && !violates(k, f, t, alive)) {
                in_list[static_cast<std::size_t>(t)] = false;
                --live_violators;
                trace.dropped.back().push_back(t);
            }
        };
        for (SimplexId t : k.facets(sigma)) recheck(t);
        for (SimplexId t : k.cofacets(sigma)) recheck(t);
        std::sort(trace.dropped.back().begin(), trace.dropped.back().end());
    }

    // Closure and interior of the remainder.
    std::vector<bool> in_closure = alive;
    {
        std::vector<SimplexId> stack;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i]) stack.push_back(static_cast<SimplexId>(i));
        while (!stack.empty()) {
            SimplexId t = stack.back();
            stack.pop_back();
            for (SimplexId ff : k.facets(t))
                if (!in_closure[static_cast<std::size_t>(ff)]) {
                    in_closure[static_cast<std::size_t>(ff)] = true;
                    stack.push_back(ff);
                }
        }
    }
    std::vector<bool> in_interior(n, false);
    {
        std::vector<SimplexId> by_dim(n);
        std::iota(by_dim.begin(), by_dim.end(), 0);
        std::stable_sort(by_dim.begin(), by_dim.end(),
                         [&](SimplexId x, SimplexId y) { return k.dim(x) > k.dim(y); });
        for (SimplexId id : by_dim) {
            if (!alive[static_cast<std::size_t>(id)]) continue;
            bool ok = true;
            for (SimplexId c : k.cofacets(id))
                if (!in_interior[static_cast<std::size_t>(c)]) { ok = false; break; }
            if (ok) in_interior[static_cast<std::size_t>(id)] = true;
        }
    }

    std::vector<SimplexId> frontier_ids, interior_ids;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_closure[i]) continue;
        if (in_interior[i]) interior_ids.push_back(static_cast<SimplexId>(i));
        else if (alive[i]) frontier_ids.push_back(static_cast<SimplexId>(i));
    }
    for (SimplexId v : trace.removals)
        if (in_closure[static_cast<std::size_t>(v)]) trace.in_closure.push_back(v);
    trace.raw_frontier = frontier_ids;
    trace.raw_interior = interior_ids;

    const auto frontier_parts =
        split_frontier(k, frontier_ids, trace.removals, in_interior, trace.refinements);

    Stratification s;
    {
        auto padded = [](const std::string& base, std::size_t i, std::size_t total) {
            std::size_t width = 3;
            for (std::size_t c = total; c > 1000; c /= 10) ++width;
            std::string digits = std::to_string(i);
            if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
            return base + "_" + digits;
        };
        for (std::size_t i = 0; i < trace.removals.size(); ++i) {
            s.names.push_back(padded("violator", i, trace.removals.size()));
            s.strata.emplace_back(n, std::vector<SimplexId>{trace.removals[i]});
        }
        if (frontier_parts.size() == 1) {
            s.names.push_back("frontier");
            s.strata.emplace_back(n, frontier_parts[0]);
        } else {
            for (std::size_t p = 0; p < frontier_parts.size(); ++p) {
                s.names.push_back(padded("frontier", p, frontier_parts.size()));
                s.strata.emplace_back(n, frontier_parts[p]);
            }
        }
        if (!interior_ids.empty()) {
            s.names.push_back("interior");
            s.strata.emplace_back(n, interior_ids);
        }
    }

    // Per-stratum gradient, computed directly from the assignment.
    {
        std::vector<int> assign(n, -1);
        for (std::size_t i = 0; i < s.strata.size(); ++i)
            for (SimplexId id : s.strata[i].members())
                assign[static_cast<std::size_t>(id)] = static_cast<int>(i);
        for (std::size_t i = 0; i < n; ++i) {
            const SimplexId alpha = static_cast<SimplexId>(i);
            for (SimplexId b : k.cofacets(alpha)) {
                if (assign[static_cast<std::size_t>(b)] == assign[i] && f(b) <= f(alpha))
                    trace.stratum_gradient.pairs.emplace_back(alpha, b);
            }
        }
        trace.stratum_gradient.normalize();
    }

    return {std::move(s), std::move(trace)};
}

namespace {

// Set partitions of {0..m-1} in restricted-growth form.
struct PartitionEnumerator {
    std::vector<int> rgs, maxval;
    bool first = true;
    explicit PartitionEnumerator(std::size_t m) : rgs(m, 0), maxval(m, 0) {}
    bool next() {
        if (first) { first = false; return true; }
        const std::size_t m = rgs.size();
        for (std::size_t i = m; i-- > 1;) {
            if (rgs[i] <= maxval[i - 1]) {
                ++rgs[i];
                maxval[i] = std::max(maxval[i - 1], rgs[i]);
                for (std::size_t j = i + 1; j < m; ++j) {
                    rgs[j] = 0;
                    maxval[j] = maxval[i];
                }
                return true;
            }
        }
        return false;
    }
};

} // namespace

bool is_maximal(const Complex& k, const ScalarField& f, const Stratification& s,
                std::size_t max_simplices) {
    if (k.size() > max_simplices)
        throw Error(ErrorCode::ComplexTooLarge, "complex exceeds the maximality oracle bound");
    {
        const DmfReport r = check_dsmf(k, f, s);
        if (!r.ok)
            throw Error(ErrorCode::NotADSMF, "input is not a DSMF", r.offenders);
    }

    // A coarser stratification assigns whole strata of S to merged groups,
    // so enumerate every partition of the stratum list. Sigma(K, f) is
    // ordered by containment of strata pieces, so a grouping counts as
    // strictly coarser only when its piece decomposition actually merges;
    // groupings with unchanged pieces are order-equivalent to S.
    const std::size_t m = s.size();
    if (m > 12)
        throw Error(ErrorCode::ComplexTooLarge, "too many strata to enumerate groupings");

    std::size_t base_pieces = 0;
    for (const auto& st : s.strata) base_pieces += pieces(k, st).size();

    PartitionEnumerator en(m);
    while (en.next()) {
        const int groups = *std::max_element(en.rgs.begin(), en.rgs.end()) + 1;
        if (groups == static_cast<int>(m)) continue; // identity grouping

        Stratification g;
        g.strata.assign(static_cast<std::size_t>(groups), SimplexSet(k.size()));
        for (std::size_t a = 0; a < m; ++a)
            g.strata[static_cast<std::size_t>(en.rgs[a])] =
                g.strata[static_cast<std::size_t>(en.rgs[a])] | s.strata[a];
        for (int gi = 0; gi < groups; ++gi) g.names.push_back("g" + std::to_string(gi));

        std::size_t merged_pieces = 0;
        for (const auto& st : g.strata) merged_pieces += pieces(k, st).size();
        if (merged_pieces == base_pieces) continue; // order-equivalent to S

        if (!validate_stratification(k, g).ok) continue;
        if (!check_dsmf(k, f, g).ok) continue;
        return false; // strictly coarser valid DSMF stratification exists
    }
    return true;
}

VectorField union_gradient(const Complex& k, const ScalarField& f, const Stratification& s) {
    const DmfReport r = check_dsmf(k, f, s);
    if (!r.ok)
        throw Error(ErrorCode::NotADSMF, "(f, s) is not a discrete stratified Morse function",
                    r.offenders);
    VectorField v;
    for (const auto& st : s.strata) {
        VectorField vi = gradient_of(k, f, st);
        v.pairs.insert(v.pairs.end(), vi.pairs.begin(), vi.pairs.end());
    }
    v.normalize();
    return v;
}

SeparatingFunction separating_function(const Complex& k, const Stratification& s,
                                       const VectorField& v) {
    const StrataOrder order = strata_order(k, s); // throws on invalid S
    const std::vector<SimplexId> partner = v.partner_map(k);
    const std::vector<int> assign = s.assignment(k);
    for (const auto& [a, b] : v.pairs)
        if (assign[static_cast<std::size_t>(a)] != assign[static_cast<std::size_t>(b)])
            throw Error(ErrorCode::NonRespectingField, "pair crosses strata", {a, b});

    SeparatingFunction out;
    out.g.value.assign(k.size(), 0.0);
    out.stratum_order = order.linear;

    double base = 0.0;
    for (int si : order.linear) {
        const auto& ids = s.strata[static_cast<std::size_t>(si)].members();
        const std::size_t m = ids.size();
        std::vector<int> local(k.size(), -1);
        for (std::size_t i = 0; i < m; ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);

        // Pair-reversed Hasse diagram restricted to the stratum: an edge
        // x -> y demands g(x) > g(y).
        std::vector<std::vector<int>> succ(m);
        std::vector<int> indeg(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const SimplexId sigma = ids[i];
            for (SimplexId tau : k.cofacets(sigma)) {
                const int j = local[static_cast<std::size_t>(tau)];
                if (j < 0) continue;
                if (partner[static_cast<std::size_t>(sigma)] == tau) {
                    succ[i].push_back(j); // reversed pair arrow
                    ++indeg[static_cast<std::size_t>(j)];
                } else {
                    succ[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
                    ++indeg[i];
                }
            }
        }
        std::vector<int> ready;
        for (std::size_t i = 0; i < m; ++i)
            if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
        std::make_heap(ready.begin(), ready.end(), std::greater<>());
        std::size_t assigned = 0;
        while (!ready.empty()) {
            std::pop_heap(ready.begin(), ready.end(), std::greater<>());
            const int i = ready.back();
            ready.pop_back();
            out.g.value[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] =
                base + static_cast<double>(m - assigned);
            ++assigned;
            for (int j : succ[static_cast<std::size_t>(i)])
                if (--indeg[static_cast<std::size_t>(j)] == 0) {
                    ready.push_back(j);
                    std::push_heap(ready.begin(), ready.end(), std::greater<>());
                }
        }
        if (assigned != m)
            throw Error(ErrorCode::CyclicField, "field is cyclic within a stratum");
        base += static_cast<double>(m);
        out.thresholds.push_back(base);
    }
    return out;
}

ReductionReport simplify(const Complex& k, const ScalarField& f, const Stratification& s) {
    const VectorField v = union_gradient(k, f, s);
    const SimplexSet all = SimplexSet::full(k.size());
    const SimplexSet crit = critical_cells(k, v, all);

    ReductionReport report;
    int top = 0;
    for (std::size_t i = 0; i < k.size(); ++i) top = std::max(top, k.dim(static_cast<SimplexId>(i)));
    report.critical_counts.assign(static_cast<std::size_t>(top) + 1, 0);
    for (SimplexId id : crit.members())
        ++report.critical_counts[static_cast<std::size_t>(k.dim(id))];

    // Morse pairs listed top-down by the separating function: removing them
    // in this order peels the complex one regular pair at a time.
    const SeparatingFunction sep = separating_function(k, s, v);
    std::vector<std::pair<SimplexId, SimplexId>> seq = v.pairs;
    std::sort(seq.begin(), seq.end(), [&](const auto& p, const auto& q) {
        return sep.g(p.second) > sep.g(q.second);
    });
    report.collapses = std::move(seq);

    const MorseChainComplex mc = morse_chain_complex(k, v, all);
    report.morse_betti = mc.betti();
    report.complex_betti = betti(k);
    report.euler = euler_characteristic(k, all);
    return report;
}

} // namespace dsmt
