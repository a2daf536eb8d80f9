#include "dsmt/morse.hpp"

#include <algorithm>
#include <map>

namespace dsmt {

void VectorField::normalize() {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<SimplexId> VectorField::partner_map(const Complex& k) const {
    std::vector<SimplexId> partner(k.size(), -1);
    for (const auto& [s, t] : pairs) {
        const auto cof = k.cofacets(s);
        if (std::find(cof.begin(), cof.end(), t) == cof.end())
            throw Error(ErrorCode::NotAMatching, "pair is not a codimension-1 incidence", {s, t});
        if (partner[static_cast<std::size_t>(s)] != -1 ||
            partner[static_cast<std::size_t>(t)] != -1)
            throw Error(ErrorCode::NotAMatching, "simplex occurs in two pairs", {s, t});
        partner[static_cast<std::size_t>(s)] = t;
        partner[static_cast<std::size_t>(t)] = s;
    }
    return partner;
}

SimplexSet upper_set(const Complex& k, const ScalarField& f, SimplexId alpha,
                     const SimplexSet& d) {
    SimplexSet out(k.size());
    for (SimplexId b : k.cofacets(alpha))
        if (d.contains(b) && f(b) <= f(alpha)) out.insert(b);
    return out;
}

SimplexSet lower_set(const Complex& k, const ScalarField& f, SimplexId alpha,
                     const SimplexSet& d) {
    SimplexSet out(k.size());
    for (SimplexId g : k.facets(alpha))
        if (d.contains(g) && f(g) >= f(alpha)) out.insert(g);
    return out;
}

namespace {

// |U|, |L| of alpha within d, capped at 2; cheaper than materializing sets.
inline std::pair<int, int> ul_sizes(const Complex& k, const ScalarField& f, SimplexId alpha,
                                    const SimplexSet& d) {
    int u = 0, l = 0;
    for (SimplexId b : k.cofacets(alpha))
        if (d.contains(b) && f(b) <= f(alpha) && ++u == 2) break;
    for (SimplexId g : k.facets(alpha))
        if (d.contains(g) && f(g) >= f(alpha) && ++l == 2) break;
    return {u, l};
}

inline bool breaks_dmf(int u, int l) { return u >= 2 || l >= 2 || (u == 1 && l == 1); }

} // namespace

DmfReport check_dmf(const Complex& k, const ScalarField& f, const SimplexSet& d) {
    DmfReport report;
    for (SimplexId alpha : d.members()) {
        const auto [u, l] = ul_sizes(k, f, alpha, d);
        if (breaks_dmf(u, l)) report.offenders.push_back(alpha);
    }
    report.ok = report.offenders.empty();
    return report;
}

Classification classify(const Complex& k, const ScalarField& f) {
    const SimplexSet all = SimplexSet::full(k.size());
    Classification c;
    c.status.resize(k.size(), SimplexStatus::Critical);
    c.partner.resize(k.size(), -1);
    c.flags.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        const SimplexId alpha = static_cast<SimplexId>(i);
        const SimplexSet u = upper_set(k, f, alpha, all);
        const SimplexSet l = lower_set(k, f, alpha, all);
        ViolatorFlags fl;
        fl.type1 = u.count() >= 2;
        fl.type2 = l.count() >= 2;
        fl.type3 = u.count() == 1 && l.count() == 1;
        if (fl.any()) {
            c.status[i] = SimplexStatus::Violator;
            c.flags[i] = fl;
        } else if (u.count() + l.count() == 1) {
            c.status[i] = SimplexStatus::Regular;
            c.partner[i] = u.count() == 1 ? u.members()[0] : l.members()[0];
        }
    }
    return c;
}

VectorField gradient_of(const Complex& k, const ScalarField& f, const SimplexSet& d) {
    const DmfReport report = check_dmf(k, f, d);
    if (!report.ok)
        throw Error(ErrorCode::NotAMorseFunction, "function is not discrete Morse on the set",
                    report.offenders);
    VectorField v;
    for (SimplexId alpha : d.members()) {
        SimplexId mate = -1;
        for (SimplexId b : k.cofacets(alpha))
            if (d.contains(b) && f(b) <= f(alpha)) { mate = b; break; }
        if (mate != -1) v.pairs.emplace_back(alpha, mate);
    }
    v.normalize();
    return v;
}

AcyclicityResult is_acyclic(const Complex& k, const VectorField& v) {
    const std::vector<SimplexId> partner = v.partner_map(k);

    // Follow V-paths on the lower-dimensional members: alpha -> alpha' when
    // alpha' != alpha is a facet of V(alpha).
    auto successors = [&](SimplexId alpha, std::vector<SimplexId>& out) {
        out.clear();
        const SimplexId beta = partner[static_cast<std::size_t>(alpha)];
        if (beta == -1 || k.dim(beta) != k.dim(alpha) + 1) return;
        for (SimplexId a2 : k.facets(beta))
            if (a2 != alpha) out.push_back(a2);
    };

    enum : char { White, Grey, Black };
    std::vector<char> color(k.size(), White);
    std::vector<SimplexId> trail; // grey stack, for witness reconstruction

    std::vector<SimplexId> succ;
    for (std::size_t start = 0; start < k.size(); ++start) {
        if (color[start] != White) continue;
        // Iterative DFS with an explicit edge stack.
        std::vector<std::pair<SimplexId, std::size_t>> stack;
        stack.emplace_back(static_cast<SimplexId>(start), 0);
        color[start] = Grey;
        trail.push_back(static_cast<SimplexId>(start));
        while (!stack.empty()) {
            auto& [node, idx] = stack.back();
            successors(node, succ);
            if (idx < succ.size()) {
                const SimplexId next = succ[idx++];
                if (color[static_cast<std::size_t>(next)] == Grey) {
                    // Closed V-path found; unwind the trail into a witness.
                    AcyclicityResult res;
                    res.acyclic = false;
                    auto it = std::find(trail.begin(), trail.end(), next);
                    for (; it != trail.end(); ++it) {
                        res.witness.push_back(*it);
                        res.witness.push_back(partner[static_cast<std::size_t>(*it)]);
                    }
                    res.witness.push_back(next);
                    return res;
                }
                if (color[static_cast<std::size_t>(next)] == White) {
                    color[static_cast<std::size_t>(next)] = Grey;
                    trail.push_back(next);
                    stack.emplace_back(next, 0);
                }
            } else {
                color[static_cast<std::size_t>(node)] = Black;
                trail.pop_back();
                stack.pop_back();
            }
        }
    }
    return {};
}

SimplexSet critical_cells(const Complex& k, const VectorField& v, const SimplexSet& d) {
    std::vector<bool> paired(k.size(), false);
    for (const auto& [s, t] : v.pairs) {
        paired[static_cast<std::size_t>(s)] = true;
        paired[static_cast<std::size_t>(t)] = true;
    }
    std::vector<SimplexId> out;
    for (SimplexId id : d.members())
        if (!paired[static_cast<std::size_t>(id)]) out.push_back(id);
    return SimplexSet(k.size(), std::move(out));
}

BettiVector MorseChainComplex::betti() const {
    BettiVector out;
    const std::size_t top = cells.size();
    if (top == 0) return out;
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t p = 1; p < top; ++p) ranks[p] = boundary[p].rank();
    out.b.resize(top);
    for (std::size_t p = 0; p < top; ++p)
        out.b[p] = static_cast<long long>(cells[p].size()) - static_cast<long long>(ranks[p]) -
                   static_cast<long long>(ranks[p + 1]);
    while (!out.b.empty() && out.b.back() == 0) out.b.pop_back();
    return out;
}

MorseChainComplex morse_chain_complex(const Complex& k, const VectorField& v,
                                      const SimplexSet& d) {
    if (!is_subcomplex(k, d))
        throw Error(ErrorCode::NotAComplex, "set is not downward closed");
    const AcyclicityResult acyc = is_acyclic(k, v);
    if (!acyc.acyclic)
        throw Error(ErrorCode::CyclicField, "field has a closed V-path", acyc.witness);

    const std::vector<SimplexId> partner = v.partner_map(k);
    const SimplexSet crit = critical_cells(k, v, d);

    int top = -1;
    for (SimplexId id : crit.members()) top = std::max(top, k.dim(id));

    MorseChainComplex mc;
    mc.cells.resize(static_cast<std::size_t>(top) + 1);
    std::vector<int> column_of(k.size(), -1);
    for (SimplexId id : crit.members()) {
        auto& layer = mc.cells[static_cast<std::size_t>(k.dim(id))];
        column_of[static_cast<std::size_t>(id)] = static_cast<int>(layer.size());
        layer.push_back(id);
    }

    // flow[alpha] = parity vector, over critical cells of dim(alpha), of the
    // number of V-paths from alpha into each of them. Memoized per simplex;
    // acyclicity makes the recursion well founded.
    std::map<SimplexId, std::vector<std::uint64_t>> flow;
    const auto words_for = [&](int p) {
        return (mc.cells[static_cast<std::size_t>(p)].size() + 63) / 64;
    };
    auto paths_from = [&](auto&& self, SimplexId alpha) -> const std::vector<std::uint64_t>& {
        auto it = flow.find(alpha);
        if (it != flow.end()) return it->second;
        const int p = k.dim(alpha);
        std::vector<std::uint64_t> acc(words_for(p), 0);
        if (crit.contains(alpha)) {
            const std::size_t c = static_cast<std::size_t>(column_of[static_cast<std::size_t>(alpha)]);
            acc[c / 64] ^= std::uint64_t{1} << (c % 64);
        } else {
            const SimplexId beta = partner[static_cast<std::size_t>(alpha)];
            if (beta != -1 && k.dim(beta) == p + 1 && d.contains(beta)) {
                for (SimplexId a2 : k.facets(beta)) {
                    if (a2 == alpha || !d.contains(a2)) continue;
                    const auto& sub = self(self, a2);
                    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= sub[w];
                }
            }
            // A simplex paired downward absorbs no paths.
        }
        return flow.emplace(alpha, std::move(acc)).first->second;
    };

    mc.boundary.resize(static_cast<std::size_t>(top) + 1);
    for (int p = 1; p <= top; ++p) {
        const auto& rows = mc.cells[static_cast<std::size_t>(p - 1)];
        const auto& cols = mc.cells[static_cast<std::size_t>(p)];
        Gf2Matrix m(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<std::uint64_t> acc(words_for(p - 1), 0);
            for (SimplexId a : k.facets(cols[c])) {
                if (!d.contains(a)) continue;
                const auto& sub = paths_from(paths_from, a);
                for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= sub[w];
            }
            for (std::size_t r = 0; r < rows.size(); ++r)
                if ((acc[r / 64] >> (r % 64)) & 1u) m.set(r, c, true);
        }
        mc.boundary[static_cast<std::size_t>(p)] = std::move(m);
        flow.clear();
    }
    return mc;
}

std::optional<std::vector<std::pair<SimplexId, SimplexId>>>
collapse_onto(const Complex& k, const SimplexSet& from, const SimplexSet& onto) {
    SimplexSet current = from;
    std::vector<std::pair<SimplexId, SimplexId>> seq;
    std::vector<int> coface_count(k.size(), 0);
    for (SimplexId id : current.members())
        for (SimplexId f : k.facets(id)) ++coface_count[static_cast<std::size_t>(f)];

    bool progress = true;
    while (progress) {
        progress = false;
        for (SimplexId s : current.members()) {
            if (onto.contains(s)) continue;
            if (coface_count[static_cast<std::size_t>(s)] != 1) continue;
            SimplexId t = -1;
            for (SimplexId c : k.cofacets(s))
                if (current.contains(c)) { t = c; break; }
            // A free face: its unique coface must itself be top in `current`.
            if (t == -1 || onto.contains(t) || coface_count[static_cast<std::size_t>(t)] != 0)
                continue;
            current.erase(s);
            current.erase(t);
            for (SimplexId f : k.facets(s)) --coface_count[static_cast<std::size_t>(f)];
            for (SimplexId f : k.facets(t)) --coface_count[static_cast<std::size_t>(f)];
            seq.emplace_back(s, t);
            progress = true;
        }
    }
    if (current == onto) return seq;
    return std::nullopt;
}

} // namespace dsmt
