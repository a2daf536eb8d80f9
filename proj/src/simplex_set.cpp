#include "dsmt/simplex_set.hpp"

#include <numeric>
#include <set>

namespace dsmt {

void VertexField::require_injective() const {
    std::set<double> seen;
    for (const auto& [v, x] : value)
        if (!seen.insert(x).second)
            throw Error(ErrorCode::NonInjectiveVertexField, "vertex field is not injective");
}

SimplexSet closure(const Complex& k, const SimplexSet& a) {
    std::vector<bool> in(k.size(), false);
    std::vector<SimplexId> stack = a.members();
    for (SimplexId id : stack) in[static_cast<std::size_t>(id)] = true;
    while (!stack.empty()) {
        SimplexId id = stack.back();
        stack.pop_back();
        for (SimplexId f : k.facets(id)) {
            if (!in[static_cast<std::size_t>(f)]) {
                in[static_cast<std::size_t>(f)] = true;
                stack.push_back(f);
            }
        }
    }
    std::vector<SimplexId> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) out.push_back(static_cast<SimplexId>(i));
    return SimplexSet(k.size(), std::move(out));
}

SimplexSet interior(const Complex& k, const SimplexSet& a) {
    // star(sigma) lies in A iff sigma is in A and every codim-1 coface has
    // its star in A, so sweep from the top dimension down.
    const std::size_t n = k.size();
    std::vector<SimplexId> by_dim(n);
    std::iota(by_dim.begin(), by_dim.end(), 0);
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [&](SimplexId x, SimplexId y) { return k.dim(x) > k.dim(y); });

    std::vector<bool> in_a(n, false);
    for (SimplexId id : a.members()) in_a[static_cast<std::size_t>(id)] = true;

    std::vector<bool> in(n, false);
    for (SimplexId id : by_dim) {
        if (!in_a[static_cast<std::size_t>(id)]) continue;
        bool ok = true;
        for (SimplexId c : k.cofacets(id))
            if (!in[static_cast<std::size_t>(c)]) { ok = false; break; }
        if (ok) in[static_cast<std::size_t>(id)] = true;
    }
    std::vector<SimplexId> out;
    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) out.push_back(static_cast<SimplexId>(i));
    return SimplexSet(n, std::move(out));
}

SimplexSet frontier(const Complex& k, const SimplexSet& a) {
    return closure(k, a) - interior(k, a);
}

SimplexSet open_star(const Complex& k, SimplexId id) {
    std::vector<bool> in(k.size(), false);
    in[static_cast<std::size_t>(id)] = true;
    std::vector<SimplexId> stack{id};
    while (!stack.empty()) {
        SimplexId s = stack.back();
        stack.pop_back();
        for (SimplexId c : k.cofacets(s)) {
            if (!in[static_cast<std::size_t>(c)]) {
                in[static_cast<std::size_t>(c)] = true;
                stack.push_back(c);
            }
        }
    }
    std::vector<SimplexId> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) out.push_back(static_cast<SimplexId>(i));
    return SimplexSet(k.size(), std::move(out));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

} // namespace

std::vector<SimplexSet> pieces(const Complex& k, const SimplexSet& a) {
    // Two open simplices have connected union iff one is an iterated face of
    // the other, so join every member to each of its faces inside A; the
    // intermediate simplices of a face chain need not belong to A.
    UnionFind uf(k.size());
    std::vector<bool> in_a(k.size(), false);
    for (SimplexId id : a.members()) in_a[static_cast<std::size_t>(id)] = true;
    for (SimplexId id : a.members()) {
        const auto& verts = k.simplex(id).vertices;
        const std::size_t nv = verts.size();
        if (nv == 1) continue;
        std::vector<VertexId> sub;
        for (unsigned mask = 1; mask + 1 < (1u << nv); ++mask) {
            sub.clear();
            for (std::size_t j = 0; j < nv; ++j)
                if (mask & (1u << j)) sub.push_back(verts[j]);
            if (auto f = k.find(sub); f && in_a[static_cast<std::size_t>(*f)]) uf.unite(id, *f);
        }
    }

    std::vector<std::vector<SimplexId>> groups;
    std::vector<int> root_to_piece(k.size(), -1);
    for (SimplexId id : a.members()) {
        int r = uf.find(id);
        if (root_to_piece[static_cast<std::size_t>(r)] < 0) {
            root_to_piece[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(root_to_piece[static_cast<std::size_t>(r)])].push_back(id);
    }
    std::vector<SimplexSet> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.emplace_back(k.size(), std::move(g));
    return out;
}

SimplexSet sublevel_complex(const Complex& k, const ScalarField& f, double c) {
    std::vector<SimplexId> below;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (f.value[i] <= c) below.push_back(static_cast<SimplexId>(i));
    return closure(k, SimplexSet(k.size(), std::move(below)));
}

long long euler_characteristic(const Complex& k, const SimplexSet& a) {
    long long chi = 0;
    for (SimplexId id : a.members())
        chi += (k.dim(id) % 2 == 0) ? 1 : -1;
    return chi;
}

bool is_subcomplex(const Complex& k, const SimplexSet& a) {
    for (SimplexId id : a.members())
        for (SimplexId f : k.facets(id))
            if (!a.contains(f)) return false;
    return true;
}

Complex lower_link(const Complex& k, const VertexField& f0, VertexId v) {
    f0.require_injective();
    const double fv = f0.at(v);

    std::vector<Simplex> link;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& verts = k.simplex(static_cast<SimplexId>(i)).vertices;
        if (std::binary_search(verts.begin(), verts.end(), v)) continue;
        bool lower = true;
        for (VertexId w : verts)
            if (!(f0.at(w) < fv)) { lower = false; break; }
        if (!lower) continue;
        std::vector<VertexId> cone = verts;
        cone.push_back(v);
        if (k.find(cone)) link.push_back(Simplex{verts});
    }
    return Complex::from_simplices(std::move(link));
}

} // namespace dsmt
