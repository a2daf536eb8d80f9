#include "dsmt/pointdata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dsmt/stratify.hpp"

namespace dsmt {

ScalarField maxf_extension(const Complex& k, const VertexField& f0) {
    f0.require_injective();
    ScalarField f;
    f.value.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        double m = -std::numeric_limits<double>::infinity();
        for (VertexId v : k.simplex(static_cast<SimplexId>(i)).vertices)
            m = std::max(m, f0.at(v));
        f.value[i] = m;
    }
    return f;
}

ScalarField mean_extension(const Complex& k, const VertexField& f0) {
    f0.require_injective();
    ScalarField f;
    f.value.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& verts = k.simplex(static_cast<SimplexId>(i)).vertices;
        double s = 0;
        for (VertexId v : verts) s += f0.at(v);
        f.value[i] = s / static_cast<double>(verts.size());
    }
    return f;
}

namespace {

using VertexList = std::vector<VertexId>;

struct LinkGradient {
    std::vector<std::pair<VertexList, VertexList>> pairs;
    std::vector<VertexList> criticals;
};

double max_vertex_value(const VertexField& f0, const VertexList& verts) {
    double m = -std::numeric_limits<double>::infinity();
    for (VertexId v : verts) m = std::max(m, f0.at(v));
    return m;
}

// Cancel every pair of critical cells joined by a unique gradient path,
// reversing the path. Candidates are scanned in increasing dimension and
// increasing value; path uniqueness is recomputed after each reversal.
void cancel_gradient_paths(const Complex& d, const VertexField& f0,
                           std::vector<SimplexId>& partner, std::vector<bool>& critical) {
    // Saturating count of V-paths from a cell of dimension p to `target`.
    auto count_paths = [&](auto&& self, SimplexId from, SimplexId target,
                           std::map<SimplexId, int>& memo) -> int {
        if (from == target) return 1;
        auto it = memo.find(from);
        if (it != memo.end()) return it->second;
        int total = 0;
        const SimplexId up = partner[static_cast<std::size_t>(from)];
        if (up != -1 && d.dim(up) == d.dim(from) + 1) {
            for (SimplexId next : d.facets(up)) {
                if (next == from) continue;
                total += self(self, next, target, memo);
                if (total >= 2) { total = 2; break; }
            }
        }
        memo.emplace(from, total);
        return total;
    };

    bool again = true;
    while (again) {
        again = false;
        // Candidate pairs (alpha, beta), beta one dimension above alpha.
        std::vector<std::pair<SimplexId, SimplexId>> cand;
        for (std::size_t b = 0; b < d.size(); ++b)
            if (critical[b])
                for (std::size_t a = 0; a < d.size(); ++a)
                    if (critical[a] && d.dim(static_cast<SimplexId>(a)) + 1 ==
                                           d.dim(static_cast<SimplexId>(b)))
                        cand.emplace_back(static_cast<SimplexId>(a), static_cast<SimplexId>(b));
        std::sort(cand.begin(), cand.end(), [&](const auto& x, const auto& y) {
            const int dx = d.dim(x.first), dy = d.dim(y.first);
            if (dx != dy) return dx < dy;
            const double bx = max_vertex_value(f0, d.simplex(x.second).vertices);
            const double by = max_vertex_value(f0, d.simplex(y.second).vertices);
            if (bx != by) return bx < by;
            const double ax = max_vertex_value(f0, d.simplex(x.first).vertices);
            const double ay = max_vertex_value(f0, d.simplex(y.first).vertices);
            if (ax != ay) return ax < ay;
            return x < y;
        });

        for (const auto& [alpha, beta] : cand) {
            std::map<SimplexId, int> memo;
            int total = 0;
            for (SimplexId nu : d.facets(beta)) {
                total += count_paths(count_paths, nu, alpha, memo);
                if (total >= 2) break;
            }
            if (total != 1) continue;

            // Collect the unique path beta > nu0 < B1 > nu1 < ... > alpha
            // first, then reverse it: each lower cell re-pairs with the
            // upper cell it was reached from.
            std::vector<SimplexId> seq;
            SimplexId upper = beta;
            while (true) {
                SimplexId chosen = -1;
                for (SimplexId nu : d.facets(upper)) {
                    if (upper != beta && partner[static_cast<std::size_t>(upper)] == nu)
                        continue; // the pair we arrived through
                    std::map<SimplexId, int> m2;
                    if (count_paths(count_paths, nu, alpha, m2) >= 1) { chosen = nu; break; }
                }
                if (chosen == -1)
                    throw Error(ErrorCode::CyclicField, "path walk lost a counted path");
                seq.push_back(upper);
                seq.push_back(chosen);
                if (chosen == alpha) break;
                upper = partner[static_cast<std::size_t>(chosen)];
            }
            for (std::size_t i = 0; i + 1 < seq.size(); i += 2) {
                partner[static_cast<std::size_t>(seq[i + 1])] = seq[i];
                partner[static_cast<std::size_t>(seq[i])] = seq[i + 1];
            }
            critical[static_cast<std::size_t>(alpha)] = false;
            critical[static_cast<std::size_t>(beta)] = false;
            again = true;
            break;
        }
    }
}

// The lower-link recursion. Returns pairings and critical cells of `d` by
// vertex lists, so results lift through cones.
LinkGradient king_extend(const Complex& d, const VertexField& f0) {
    LinkGradient out;
    if (d.empty()) return out;

    std::vector<SimplexId> verts = d.vertex_simplices();
    std::sort(verts.begin(), verts.end(), [&](SimplexId a, SimplexId b) {
        return f0.at(d.simplex(a).vertices[0]) < f0.at(d.simplex(b).vertices[0]);
    });

    for (SimplexId vs : verts) {
        const VertexId v = d.simplex(vs).vertices[0];
        const Complex link = lower_link(d, f0, v);
        if (link.empty()) {
            out.criticals.push_back({v});
            continue;
        }
        LinkGradient sub = king_extend(link, f0);

        std::vector<SimplexId> partner(link.size(), -1);
        std::vector<bool> critical(link.size(), false);
        for (const auto& [a, b] : sub.pairs) {
            const SimplexId ia = *link.find(a), ib = *link.find(b);
            partner[static_cast<std::size_t>(ia)] = ib;
            partner[static_cast<std::size_t>(ib)] = ia;
        }
        for (const auto& c : sub.criticals)
            critical[static_cast<std::size_t>(*link.find(c))] = true;

        cancel_gradient_paths(link, f0, partner, critical);

        // Steepest descending edge: pair v with [v, w] for the smallest
        // critical vertex w of the lower link.
        SimplexId ws = -1;
        for (std::size_t i = 0; i < link.size(); ++i)
            if (critical[i] && link.dim(static_cast<SimplexId>(i)) == 0 &&
                (ws == -1 || f0.at(link.simplex(static_cast<SimplexId>(i)).vertices[0]) <
                                 f0.at(link.simplex(ws).vertices[0])))
                ws = static_cast<SimplexId>(i);
        if (ws == -1)
            throw Error(ErrorCode::BadSimplex, "lower link without a critical vertex");
        const VertexId w = link.simplex(ws).vertices[0];

        auto cone = [&](const VertexList& sigma) {
            VertexList c = sigma;
            c.push_back(v);
            std::sort(c.begin(), c.end());
            return c;
        };
        out.pairs.emplace_back(VertexList{v}, cone({w}));
        for (std::size_t i = 0; i < link.size(); ++i) {
            const SimplexId p = partner[i];
            if (p != -1 && link.dim(p) == link.dim(static_cast<SimplexId>(i)) + 1)
                out.pairs.emplace_back(cone(link.simplex(static_cast<SimplexId>(i)).vertices),
                                       cone(link.simplex(p).vertices));
            if (critical[i] && static_cast<SimplexId>(i) != ws)
                out.criticals.push_back(cone(link.simplex(static_cast<SimplexId>(i)).vertices));
        }
    }
    return out;
}

// Hereditary lower link of v inside a stratum: link simplices sigma, all of
// whose vertices lie below v, such that every nonempty face tau <= sigma has
// both tau and v*tau in the stratum. This is a genuine subcomplex even when
// the stratum is not.
Complex stratum_lower_link(const Complex& k, const std::vector<bool>& in_stratum,
                           const VertexField& f0, VertexId v) {
    const double fv = f0.at(v);
    std::vector<Simplex> link;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& verts = k.simplex(static_cast<SimplexId>(i)).vertices;
        if (std::binary_search(verts.begin(), verts.end(), v)) continue;
        bool lower = true;
        for (VertexId wv : verts)
            if (!(f0.at(wv) < fv)) { lower = false; break; }
        if (!lower) continue;

        const std::size_t nv = verts.size();
        bool hereditary = true;
        std::vector<VertexId> sub;
        for (unsigned mask = 1; mask < (1u << nv) && hereditary; ++mask) {
            sub.clear();
            for (std::size_t j = 0; j < nv; ++j)
                if (mask & (1u << j)) sub.push_back(verts[j]);
            auto tau = k.find(sub);
            if (!tau || !in_stratum[static_cast<std::size_t>(*tau)]) { hereditary = false; break; }
            sub.push_back(v);
            auto cone_tau = k.find(sub);
            if (!cone_tau || !in_stratum[static_cast<std::size_t>(*cone_tau)]) hereditary = false;
        }
        if (hereditary) link.push_back(Simplex{verts});
    }
    return Complex::from_simplices(std::move(link));
}

struct StratumPass {
    VectorField field;
    std::vector<SimplexId> criticals;
    std::vector<bool> considered;
};

// One stratum's worth of the stratified extension. With the full complex as
// the single stratum this is exactly the classical extension.
StratumPass run_stratum(const Complex& k, const std::vector<bool>& in_stratum,
                        const VertexField& f0) {
    StratumPass pass;
    pass.considered.assign(k.size(), false);

    std::vector<std::pair<double, VertexId>> verts;
    for (SimplexId vs : k.vertex_simplices()) {
        if (!in_stratum[static_cast<std::size_t>(vs)]) continue;
        const VertexId v = k.simplex(vs).vertices[0];
        verts.emplace_back(f0.at(v), v);
    }
    std::sort(verts.begin(), verts.end());

    for (const auto& entry : verts) {
        const VertexId v = entry.second;
        const SimplexId vs = *k.vertex_simplex(v);
        const Complex link = stratum_lower_link(k, in_stratum, f0, v);
        pass.considered[static_cast<std::size_t>(vs)] = true;
        if (link.empty()) {
            pass.criticals.push_back(vs);
            continue;
        }
        LinkGradient sub = king_extend(link, f0);

        std::vector<SimplexId> partner(link.size(), -1);
        std::vector<bool> critical(link.size(), false);
        for (const auto& [a, b] : sub.pairs) {
            const SimplexId ia = *link.find(a), ib = *link.find(b);
            partner[static_cast<std::size_t>(ia)] = ib;
            partner[static_cast<std::size_t>(ib)] = ia;
        }
        for (const auto& c : sub.criticals)
            critical[static_cast<std::size_t>(*link.find(c))] = true;
        cancel_gradient_paths(link, f0, partner, critical);

        SimplexId ws = -1;
        for (std::size_t i = 0; i < link.size(); ++i)
            if (critical[i] && link.dim(static_cast<SimplexId>(i)) == 0 &&
                (ws == -1 || f0.at(link.simplex(static_cast<SimplexId>(i)).vertices[0]) <
                                 f0.at(link.simplex(ws).vertices[0])))
                ws = static_cast<SimplexId>(i);
        if (ws == -1)
            throw Error(ErrorCode::BadSimplex, "lower link without a critical vertex");

        auto cone_id = [&](const VertexList& sigma) {
            VertexList c = sigma;
            c.push_back(v);
            return *k.find(c);
        };
        const SimplexId vw = cone_id(link.simplex(ws).vertices);
        pass.field.pairs.emplace_back(vs, vw);
        pass.considered[static_cast<std::size_t>(vw)] = true;
        for (std::size_t i = 0; i < link.size(); ++i) {
            const SimplexId ci = cone_id(link.simplex(static_cast<SimplexId>(i)).vertices);
            pass.considered[static_cast<std::size_t>(ci)] = true;
            const SimplexId p = partner[i];
            if (p != -1 && link.dim(p) == link.dim(static_cast<SimplexId>(i)) + 1)
                pass.field.pairs.emplace_back(ci, cone_id(link.simplex(p).vertices));
            if (critical[i] && static_cast<SimplexId>(i) != ws) pass.criticals.push_back(ci);
        }
    }
    pass.field.normalize();
    return pass;
}

// Smallest gap between distinct vertex values; controls how tightly the
// extension hugs maxf without disturbing any comparison.
double min_value_gap(const VertexField& f0) {
    std::vector<double> vals;
    for (const auto& [v, x] : f0.value) vals.push_back(x);
    std::sort(vals.begin(), vals.end());
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < vals.size(); ++i) g = std::min(g, vals[i] - vals[i - 1]);
    return g;
}

// Assigns f values on one stratum: considered simplices get values within
// delta of their top vertex, ordered by a topological sort of the
// pair-reversed relation inside each lower star; unconsidered ones sit just
// above maxf, tie-broken by dimension.
void assign_values(const Complex& k, const std::vector<bool>& in_stratum,
                   const StratumPass& pass, const VertexField& f0, double delta,
                   ScalarField& out) {
    const int top_dim = k.dim();
    std::vector<SimplexId> partner(k.size(), -1);
    for (const auto& [a, b] : pass.field.pairs) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }

    // Group considered simplices by lower star (their maximal vertex).
    std::map<VertexId, std::vector<SimplexId>> stars;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!in_stratum[i]) continue;
        const SimplexId id = static_cast<SimplexId>(i);
        if (!pass.considered[i]) {
            const double m = max_vertex_value(f0, k.simplex(id).vertices);
            out.value[i] = m + delta * (1.0 + static_cast<double>(k.dim(id)) /
                                                  static_cast<double>(top_dim + 2));
            continue;
        }
        VertexId top = k.simplex(id).vertices[0];
        for (VertexId v : k.simplex(id).vertices)
            if (f0.at(v) > f0.at(top)) top = v;
        stars[top].push_back(id);
    }

    for (auto& [v, members] : stars) {
        const double fv = f0.at(v);
        const SimplexId vs = *k.vertex_simplex(v);
        const SimplexId vw = partner[static_cast<std::size_t>(vs)];
        out.value[static_cast<std::size_t>(vs)] = fv;
        if (vw != -1) out.value[static_cast<std::size_t>(vw)] = fv - delta / 2;

        std::vector<SimplexId> rest;
        for (SimplexId id : members)
            if (id != vs && id != vw) rest.push_back(id);
        if (rest.empty()) continue;

        std::map<SimplexId, int> local;
        for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> succ(rest.size());
        std::vector<int> indeg(rest.size(), 0);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            for (SimplexId tau : k.cofacets(rest[i])) {
                auto it = local.find(tau);
                if (it == local.end()) continue;
                if (partner[static_cast<std::size_t>(rest[i])] == tau) {
                    succ[i].push_back(it->second);
                    ++indeg[static_cast<std::size_t>(it->second)];
                } else {
                    succ[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
                    ++indeg[i];
                }
            }
        }
        std::vector<int> ready;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
        std::make_heap(ready.begin(), ready.end(), std::greater<>());
        std::size_t assigned = 0;
        const double m = static_cast<double>(rest.size());
        while (!ready.empty()) {
            std::pop_heap(ready.begin(), ready.end(), std::greater<>());
            const int i = ready.back();
            ready.pop_back();
            out.value[static_cast<std::size_t>(rest[static_cast<std::size_t>(i)])] =
                fv + delta * (m - static_cast<double>(assigned)) / (m + 1.0);
            ++assigned;
            for (int j : succ[static_cast<std::size_t>(i)])
                if (--indeg[static_cast<std::size_t>(j)] == 0) {
                    ready.push_back(j);
                    std::push_heap(ready.begin(), ready.end(), std::greater<>());
                }
        }
        if (assigned != rest.size())
            throw Error(ErrorCode::CyclicField, "cycle inside a lower star");
    }
}

} // namespace

DmfExtension extend_dmf(const Complex& k, const VertexField& f0, double eps) {
    f0.require_injective();
    if (eps <= 0)
        throw Error(ErrorCode::BadSimplex, "eps must be positive");

    const std::vector<bool> all(k.size(), true);
    StratumPass pass = run_stratum(k, all, f0);

    const double delta = std::min(eps / 2, min_value_gap(f0) / 4);
    DmfExtension out;
    out.field = pass.field;
    out.closeness = delta;
    out.f_tilde.value.assign(k.size(), 0.0);
    assign_values(k, all, pass, f0, delta, out.f_tilde);
    return out;
}

StratifiedExtension extend_stratified(const Complex& k, const Stratification& s,
                                      const VertexField& f0) {
    f0.require_injective();
    const StrataOrder order = strata_order(k, s); // throws on invalid S

    StratifiedExtension out;
    out.f_tilde.value.assign(k.size(), 0.0);
    out.stratum_fields.resize(s.size());
    const double delta = min_value_gap(f0) / 4;

    for (int si : order.linear) {
        std::vector<bool> in_stratum(k.size(), false);
        for (SimplexId id : s.strata[static_cast<std::size_t>(si)].members())
            in_stratum[static_cast<std::size_t>(id)] = true;
        StratumPass pass = run_stratum(k, in_stratum, f0);
        assign_values(k, in_stratum, pass, f0, delta, out.f_tilde);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (in_stratum[i] && !pass.considered[i])
                out.unconsidered.push_back(static_cast<SimplexId>(i));
        out.stratum_fields[static_cast<std::size_t>(si)] = std::move(pass.field);
    }
    std::sort(out.unconsidered.begin(), out.unconsidered.end());
    return out;
}

ScalarField extend_global(const Complex& k, const Stratification& s, const VertexField& f0) {
    const StratifiedExtension ext = extend_stratified(k, s, f0);
    VectorField v;
    for (const auto& vi : ext.stratum_fields)
        v.pairs.insert(v.pairs.end(), vi.pairs.begin(), vi.pairs.end());
    v.normalize();
    return separating_function(k, s, v).g;
}

} // namespace dsmt
