#include "sgt/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sgt {

namespace {

// Word-array bitset sized for one bit per edge.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int nbits) : w(static_cast<size_t>((nbits + 63) / 64), 0) {}
    void set(int i) { w[static_cast<size_t>(i) / 64] |= 1ull << (i % 64); }
    void reset(int i) { w[static_cast<size_t>(i) / 64] &= ~(1ull << (i % 64)); }
    bool test(int i) const { return (w[static_cast<size_t>(i) / 64] >> (i % 64)) & 1u; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int first() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return static_cast<int>(k) * 64 + std::countr_zero(w[k]);
        return -1;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (size_t k = 0; k < w.size(); ++k) r.w[k] &= ~o.w[k];
        return r;
    }
    int inter_count(const Bits& o) const {
        int c = 0;
        for (size_t k = 0; k < w.size(); ++k) c += std::popcount(w[k] & o.w[k]);
        return c;
    }
};

// Branch-and-bound maximum independent set on a conflict graph given by
// per-vertex conflict bitsets.
struct MisSolver {
    const std::vector<Bits>& conf;
    int best = 0;

    explicit MisSolver(const std::vector<Bits>& c) : conf(c) {}

    void go(Bits cand, int cur) {
        // degree-<=1 vertices can always join some optimum
        for (;;) {
            if (cur + cand.count() <= best) return;
            int pick = -1;
            for (size_t k = 0; k < cand.w.size(); ++k) {
                std::uint64_t x = cand.w[k];
                while (x) {
                    int v = static_cast<int>(k) * 64 + std::countr_zero(x);
                    x &= x - 1;
                    if (conf[static_cast<size_t>(v)].inter_count(cand) <= 1) {
                        pick = v;
                        break;
                    }
                }
                if (pick >= 0) break;
            }
            if (pick < 0) break;
            cand.reset(pick);
            cand = cand.minus(conf[static_cast<size_t>(pick)]);
            ++cur;
        }
        if (!cand.any()) {
            best = std::max(best, cur);
            return;
        }
        // branch on a vertex with the most conflicts among candidates
        int v = -1, vd = -1;
        for (size_t k = 0; k < cand.w.size(); ++k) {
            std::uint64_t x = cand.w[k];
            while (x) {
                int u = static_cast<int>(k) * 64 + std::countr_zero(x);
                x &= x - 1;
                int d = conf[static_cast<size_t>(u)].inter_count(cand);
                if (d > vd) {
                    vd = d;
                    v = u;
                }
            }
        }
        Bits with = cand;
        with.reset(v);
        with = with.minus(conf[static_cast<size_t>(v)]);
        go(with, cur + 1);
        Bits without = cand;
        without.reset(v);
        go(without, cur);
    }
};

int mis_size(const std::vector<Bits>& conf, const Bits& cand) {
    MisSolver s(conf);
    s.go(cand, 0);
    return s.best;
}

MatchingResult solve(const Graph& g, bool induced) {
    auto edges = g.edges();  // lexicographically sorted
    int m = static_cast<int>(edges.size());
    MatchingResult out;
    if (m == 0) return out;

    std::vector<Bits> conf(static_cast<size_t>(m), Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[static_cast<size_t>(i)];
            auto [c, d] = edges[static_cast<size_t>(j)];
            bool clash = a == c || a == d || b == c || b == d;
            if (!clash && induced)
                clash = g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) ||
                        g.has_edge(b, d);
            if (clash) {
                conf[static_cast<size_t>(i)].set(j);
                conf[static_cast<size_t>(j)].set(i);
            }
        }

    Bits all(m);
    for (int i = 0; i < m; ++i) all.set(i);
    int target = mis_size(conf, all);
    out.size = target;

    // lexicographically smallest optimum: fix edges in index order whenever
    // the optimum is still attainable
    Bits cand = all;
    int have = 0;
    for (int i = 0; i < m && have < target; ++i) {
        if (!cand.test(i)) continue;
        Bits rest = cand;
        rest.reset(i);
        rest = rest.minus(conf[static_cast<size_t>(i)]);
        if (have + 1 + mis_size(conf, rest) == target) {
            out.witness.push_back(edges[static_cast<size_t>(i)]);
            ++have;
            cand = rest;
        } else {
            cand.reset(i);
        }
    }
    return out;
}

}  // namespace

MatchingResult matching_number(const Graph& g) { return solve(g, false); }

MatchingResult induced_matching_number(const Graph& g) { return solve(g, true); }

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
    std::uint64_t used = 0;
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) return false;
        std::uint64_t ends = (1ull << u) | (1ull << v);
        if (used & ends) return false;
        used |= ends;
    }
    return true;
}

bool is_induced_matching(const Graph& g, const std::vector<Edge>& m) {
    if (!is_matching(g, m)) return false;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) {
            int a[2] = {m[i].first, m[i].second}, b[2] = {m[j].first, m[j].second};
            for (int x : a)
                for (int y : b)
                    if (g.has_edge(x, y)) return false;
        }
    return true;
}

std::optional<int> unsaturated_cycle_vertex(const Graph& g, const std::vector<Edge>& m) {
    if (!is_induced_matching(g, m))
        throw std::invalid_argument("unsaturated_cycle_vertex: not an induced matching");
    std::uint64_t saturated = 0;
    for (auto [u, v] : m) saturated |= (1ull << u) | (1ull << v);
    std::uint64_t candidates = cycle_vertices(g) & ~saturated;
    if (!candidates) return std::nullopt;
    return std::countr_zero(candidates);
}

}  // namespace sgt
