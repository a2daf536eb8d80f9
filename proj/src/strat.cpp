#include "dsmt/strat.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace dsmt {

Stratification Stratification::trivial(const Complex& k) {
    Stratification s;
    s.names.push_back("all");
    s.strata.push_back(SimplexSet::full(k.size()));
    return s;
}

std::vector<int> Stratification::assignment(const Complex& k) const {
    std::vector<int> a(k.size(), -1);
    for (std::size_t i = 0; i < strata.size(); ++i)
        for (SimplexId id : strata[i].members()) a[static_cast<std::size_t>(id)] = static_cast<int>(i);
    return a;
}

int Stratification::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::string stratum_label(const Stratification& s, int i) {
    return s.names[static_cast<std::size_t>(i)];
}

} // namespace

StratReport validate_stratification(const Complex& k, const Stratification& s) {
    StratReport report;
    auto flag = [&](StratViolation v) {
        report.ok = false;
        report.violations.push_back(std::move(v));
    };

    std::vector<int> seen(k.size(), -1);
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        if (s.strata[i].empty())
            flag({StratViolationKind::EmptyStratum, "stratum " + stratum_label(s, static_cast<int>(i)) + " is empty",
                  {}, static_cast<int>(i), -1});
        for (SimplexId id : s.strata[i].members()) {
            if (seen[static_cast<std::size_t>(id)] >= 0)
                flag({StratViolationKind::Overlap, "simplex assigned to two strata",
                      {id}, static_cast<int>(i), seen[static_cast<std::size_t>(id)]});
            seen[static_cast<std::size_t>(id)] = static_cast<int>(i);
        }
    }
    for (std::size_t id = 0; id < k.size(); ++id)
        if (seen[id] < 0)
            flag({StratViolationKind::Uncovered, "simplex not covered by any stratum",
                  {static_cast<SimplexId>(id)}, -1, -1});
    if (!report.ok) return report; // structural failures make the rest moot

    // Sandwich local closedness: a non-member strictly between two members.
    std::vector<SimplexSet> closures;
    closures.reserve(s.strata.size());
    for (const auto& st : s.strata) closures.push_back(closure(k, st));
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        const auto& st = s.strata[i];
        std::vector<bool> up(k.size(), false);
        std::vector<SimplexId> stack = st.members();
        for (SimplexId id : stack) up[static_cast<std::size_t>(id)] = true;
        while (!stack.empty()) {
            SimplexId t = stack.back();
            stack.pop_back();
            for (SimplexId c : k.cofacets(t))
                if (!up[static_cast<std::size_t>(c)]) {
                    up[static_cast<std::size_t>(c)] = true;
                    stack.push_back(c);
                }
        }
        for (SimplexId t : closures[i].members()) {
            if (up[static_cast<std::size_t>(t)] && !st.contains(t))
                flag({StratViolationKind::NotLocallyClosed,
                      "stratum " + stratum_label(s, static_cast<int>(i)) +
                          " has a gap in a face chain",
                      {t}, static_cast<int>(i), -1});
        }
    }

    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        for (std::size_t j = 0; j < s.strata.size(); ++j) {
            if (i == j) continue;
            if (s.strata[i].intersects(closures[j]) && !s.strata[i].subset_of(closures[j])) {
                std::ostringstream msg;
                msg << "stratum " << stratum_label(s, static_cast<int>(i)) << " meets closure of "
                    << stratum_label(s, static_cast<int>(j)) << " without lying inside it";
                SimplexSet inside = s.strata[i] & closures[j];
                flag({StratViolationKind::FrontierCondition, msg.str(), inside.members(),
                      static_cast<int>(i), static_cast<int>(j)});
            }
        }
    }
    return report;
}

StrataOrder strata_order(const Complex& k, const Stratification& s) {
    const StratReport rep = validate_stratification(k, s);
    if (!rep.ok)
        throw Error(ErrorCode::InvalidStratification, "not a valid stratification");

    const std::size_t n = s.strata.size();
    StrataOrder order;
    order.less.assign(n, std::vector<bool>(n, false));
    std::vector<SimplexSet> closures;
    closures.reserve(n);
    for (const auto& st : s.strata) closures.push_back(closure(k, st));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && s.strata[i].subset_of(closures[j])) order.less[i][j] = true;

    // Kahn topological sort; ties broken by stratum name.
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (order.less[i][j]) ++indeg[j];
    auto name_less = [&](int a, int b) {
        return s.names[static_cast<std::size_t>(a)] < s.names[static_cast<std::size_t>(b)];
    };
    std::vector<int> ready;
    for (std::size_t j = 0; j < n; ++j)
        if (indeg[j] == 0) ready.push_back(static_cast<int>(j));
    std::sort(ready.begin(), ready.end(), name_less);
    while (!ready.empty()) {
        const int i = ready.front();
        ready.erase(ready.begin());
        order.linear.push_back(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (order.less[static_cast<std::size_t>(i)][j] && --indeg[j] == 0) {
                ready.push_back(static_cast<int>(j));
                std::sort(ready.begin(), ready.end(), name_less);
            }
        }
    }
    if (order.linear.size() != n)
        throw Error(ErrorCode::InvalidStratification, "strata order contains a cycle");
    return order;
}

bool minimal_stratum_is_subcomplex(const Complex& k, const Stratification& s) {
    const StrataOrder order = strata_order(k, s);
    const std::size_t n = s.strata.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < n; ++j)
            if (order.less[j][i]) { minimal = false; break; }
        if (minimal && !is_subcomplex(k, s.strata[i])) return false;
    }
    return true;
}

DmfReport check_dsmf(const Complex& k, const ScalarField& f, const Stratification& s) {
    const StratReport rep = validate_stratification(k, s);
    if (!rep.ok)
        throw Error(ErrorCode::InvalidStratification, "not a valid stratification");
    DmfReport out;
    for (const auto& st : s.strata) {
        const DmfReport r = check_dmf(k, f, st);
        out.offenders.insert(out.offenders.end(), r.offenders.begin(), r.offenders.end());
    }
    std::sort(out.offenders.begin(), out.offenders.end());
    out.ok = out.offenders.empty();
    return out;
}

StratifiedClassification classify_stratified(const Complex& k, const ScalarField& f,
                                             const Stratification& s) {
    const DmfReport dsmf = check_dsmf(k, f, s);
    if (!dsmf.ok)
        throw Error(ErrorCode::NotADSMF, "(f, s) is not a discrete stratified Morse function",
                    dsmf.offenders);

    const std::vector<int> assign = s.assignment(k);
    const SimplexSet all = SimplexSet::full(k.size());
    StratifiedClassification c;
    c.status.resize(k.size());
    c.partner.resize(k.size(), -1);
    for (std::size_t i = 0; i < k.size(); ++i) {
        const SimplexId alpha = static_cast<SimplexId>(i);
        const auto& stratum = s.strata[static_cast<std::size_t>(assign[i])];
        const SimplexSet u = upper_set(k, f, alpha, all);
        const SimplexSet l = lower_set(k, f, alpha, all);
        const SimplexSet us = upper_set(k, f, alpha, stratum);
        const SimplexSet ls = lower_set(k, f, alpha, stratum);
        if (u.empty() && l.empty()) {
            c.status[i] = StratStatus::GloballyCritical;
        } else if (us.empty() && ls.empty()) {
            c.status[i] = StratStatus::LocallyCritical;
        } else if (u.count() + l.count() == 1) {
            c.status[i] = StratStatus::GloballyNoncritical;
            c.partner[i] = u.count() == 1 ? u.members()[0] : l.members()[0];
        } else {
            c.status[i] = StratStatus::LocallyNoncritical;
            c.partner[i] = us.count() == 1 ? us.members()[0] : ls.members()[0];
        }
    }
    return c;
}

bool violator_boundary_property(const Complex& k, const ScalarField& f,
                                const Stratification& s) {
    const StratifiedClassification sc = classify_stratified(k, f, s);
    const Classification cl = classify(k, f);
    const std::vector<int> assign = s.assignment(k);

    std::vector<SimplexSet> frontiers;
    frontiers.reserve(s.strata.size());
    for (const auto& st : s.strata) frontiers.push_back(frontier(k, st));

    for (SimplexId alpha : cl.violators()) {
        if (sc.status[static_cast<std::size_t>(alpha)] == StratStatus::LocallyCritical ||
            sc.status[static_cast<std::size_t>(alpha)] == StratStatus::GloballyCritical)
            continue;
        bool boundary = false;
        const auto& own_frontier = frontiers[static_cast<std::size_t>(assign[static_cast<std::size_t>(alpha)])];
        for (SimplexId nu : k.facets(alpha))
            if (own_frontier.contains(nu)) { boundary = true; break; }
        if (!boundary) {
            for (SimplexId tau : k.cofacets(alpha)) {
                const auto& tf = frontiers[static_cast<std::size_t>(assign[static_cast<std::size_t>(tau)])];
                if (tf.contains(alpha)) { boundary = true; break; }
            }
        }
        if (!boundary) return false;
    }
    return true;
}

} // namespace dsmt
