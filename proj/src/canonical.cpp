#include "sgt/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sgt {

namespace {

// Backtracking search for the lexicographically smallest placement string.
// Labels are assigned one vertex at a time; the string is the concatenation
// of adjacency columns (bits towards already-placed vertices). Candidate
// cells come from an iterated neighborhood refinement in which placed
// vertices are singletons, so the search tree depends only on the
// isomorphism type.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> placed;            // vertex at each label
    std::vector<std::uint64_t> cur;     // column bits per label
    std::vector<std::uint64_t> best;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.order()), cur(static_cast<size_t>(graph.order())),
          best(static_cast<size_t>(graph.order())) {}

    std::vector<int> refine() const {
        std::vector<int> color(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = n;
        for (size_t i = 0; i < placed.size(); ++i)
            color[static_cast<size_t>(placed[i])] = static_cast<int>(i);
        // signature: hash of (own color, sorted neighbor colors); a hash
        // collision only coarsens the partition, never breaks invariance
        std::vector<std::uint64_t> sig(static_cast<size_t>(n));
        std::vector<std::uint64_t> uniq;
        std::vector<int> next(static_cast<size_t>(n));
        int nc[64];
        auto mix = [](std::uint64_t h, std::uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h * 0xbf58476d1ce4e5b9ull;
        };
        // The labels are hash ranks, so they can permute between rounds even
        // once the partition is stable; terminate on partition equality (with
        // a round cap in case a hash collision merges classes).
        auto same_partition = [this](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> fwd(static_cast<size_t>(n) + 1, -1);
            std::vector<int> rev(static_cast<size_t>(n) + 1, -1);
            for (int v = 0; v < n; ++v) {
                int& f = fwd[static_cast<size_t>(a[static_cast<size_t>(v)])];
                int& r = rev[static_cast<size_t>(b[static_cast<size_t>(v)])];
                if (f == -1 && r == -1) {
                    f = b[static_cast<size_t>(v)];
                    r = a[static_cast<size_t>(v)];
                } else if (f != b[static_cast<size_t>(v)] || r != a[static_cast<size_t>(v)]) {
                    return false;
                }
            }
            return true;
        };
        for (int round = 0; round <= n; ++round) {
            for (int v = 0; v < n; ++v) {
                int cnt = 0;
                std::uint64_t nb = g.neighbors(v);
                while (nb) {
                    nc[cnt++] = color[static_cast<size_t>(std::countr_zero(nb))];
                    nb &= nb - 1;
                }
                std::sort(nc, nc + cnt);
                std::uint64_t h = mix(0x12345678u, static_cast<std::uint64_t>(
                                                       color[static_cast<size_t>(v)]));
                for (int i = 0; i < cnt; ++i)
                    h = mix(h, static_cast<std::uint64_t>(nc[i]));
                sig[static_cast<size_t>(v)] = h;
            }
            uniq = sig;
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (int v = 0; v < n; ++v)
                next[static_cast<size_t>(v)] = static_cast<int>(
                    std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) -
                    uniq.begin());
            bool stable = same_partition(next, color);
            color = next;
            if (stable) break;
        }
        return color;
    }

    // returns true when best was replaced somewhere in the subtree
    bool dfs(bool pref_eq) {
        int d = static_cast<int>(placed.size());
        if (d == n) {
            if (!have_best || !pref_eq) {
                best = cur;
                have_best = true;
                return true;
            }
            return false;
        }
        std::vector<int> color = refine();
        // target cell: smallest color among unplaced vertices
        std::uint64_t placed_mask = 0;
        for (int v : placed) placed_mask |= 1ull << v;
        int target = -1;
        for (int v = 0; v < n; ++v)
            if (!((placed_mask >> v) & 1u) &&
                (target == -1 || color[static_cast<size_t>(v)] < target))
                target = color[static_cast<size_t>(v)];
        std::vector<int> cands;
        for (int v = 0; v < n; ++v)
            if (!((placed_mask >> v) & 1u) && color[static_cast<size_t>(v)] == target)
                cands.push_back(v);

        bool updated = false;
        std::vector<int> tried;
        for (int v : cands) {
            // twin pruning: swapping full-graph twins is an automorphism
            bool dominated = false;
            for (int w : tried) {
                std::uint64_t nu = g.neighbors(v), nw = g.neighbors(w);
                if (nu == nw || (nu | (1ull << v)) == (nw | (1ull << w))) {
                    dominated = true;
                    break;
                }
            }
            tried.push_back(v);
            if (dominated) continue;

            std::uint64_t col = 0;
            for (int i = 0; i < d; ++i)
                if (g.has_edge(v, placed[static_cast<size_t>(i)])) col |= 1ull << i;
            bool child_eq = false;
            if (have_best && pref_eq) {
                if (col > best[static_cast<size_t>(d)]) continue;
                child_eq = (col == best[static_cast<size_t>(d)]);
            }
            placed.push_back(v);
            cur[static_cast<size_t>(d)] = col;
            bool child_updated = dfs(child_eq);
            placed.pop_back();
            if (child_updated) {
                updated = true;
                pref_eq = true;  // new best shares the prefix through this level
            }
        }
        return updated;
    }
};

}  // namespace

std::vector<std::uint64_t> canonical_adjacency(const Graph& g) {
    int n = g.order();
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    if (n <= 1) return rows;
    CanonSearch search(g);
    search.dfs(false);
    for (int j = 1; j < n; ++j) {
        std::uint64_t col = search.best[static_cast<size_t>(j)];
        for (int i = 0; i < j; ++i)
            if ((col >> i) & 1u) {
                rows[static_cast<size_t>(i)] |= 1ull << j;
                rows[static_cast<size_t>(j)] |= 1ull << i;
            }
    }
    return rows;
}

std::string canonical_form(const Graph& g) {
    auto rows = canonical_adjacency(g);
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | ((rows[static_cast<size_t>(i)] >> j) & 1u));
            if (++nbits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
}

std::uint64_t canonical_key(const Graph& g) {
    int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_key: order above 11");
    auto rows = canonical_adjacency(g);
    std::uint64_t bits = 0;
    int pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++pos)
            if ((rows[static_cast<size_t>(i)] >> j) & 1u) bits |= 1ull << pos;
    return bits | (static_cast<std::uint64_t>(n) << 56);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_adjacency(a) == canonical_adjacency(b);
}

}  // namespace sgt
