#include "bitgraph.hpp"

#include <stdexcept>
#include <unordered_set>

namespace boxicity::detail {

std::vector<Mask> adjacency_masks(const Graph& g) {
    if (g.order() > kMaxMaskVertices) throw std::invalid_argument("bitmask kernels need n <= 64");
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u)) adj[u] |= bit(v);
    return adj;
}

bool is_chordal(std::span<const Mask> adj) {
    const int n = static_cast<int>(adj.size());
    // Maximum cardinality search, then check the visit order is a reverse
    // perfect elimination ordering.
    std::vector<int> weight(n, 0), visit(n, -1), at(n, -1);
    Mask unnumbered = n == 64 ? ~Mask{0} : bit(n) - 1;
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (Mask m = unnumbered; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        visit[best] = i;
        at[i] = best;
        unnumbered &= ~bit(best);
        for (Mask m = adj[best] & unnumbered; m; m &= m - 1) ++weight[std::countr_zero(m)];
    }
    Mask before = 0;
    for (int i = 0; i < n; ++i) {
        int v = at[i];
        Mask earlier = adj[v] & before;
        if (earlier) {
            int p = -1;
            for (Mask m = earlier; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (p < 0 || visit[w] > visit[p]) p = w;
            }
            if ((earlier & ~bit(p) & ~adj[p]) != 0) return false;
        }
        before |= bit(v);
    }
    return true;
}

namespace {

struct CliqueSearch {
    std::span<const Mask> adj;
    std::vector<Mask>& out;
    std::size_t limit;
    bool overflow = false;

    void run(Mask r, Mask p, Mask x) {
        if (overflow) return;
        if (p == 0 && x == 0) {
            out.push_back(r);
            if (out.size() > limit) overflow = true;
            return;
        }
        int pivot = -1, best = -1;
        for (Mask m = p | x; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int c = std::popcount(p & adj[u]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            run(r | bit(v), p & adj[v], x & adj[v]);
            if (overflow) return;
            p &= ~bit(v);
            x |= bit(v);
        }
    }
};

struct OrderSearch {
    std::span<const Mask> cliques;
    Mask full;
    std::vector<int> order;
    std::vector<std::unordered_set<Mask>> dead;  // dead[last]: placed sets known to fail

    bool run(Mask placed, Mask seen, int last) {
        if (placed == full) return true;
        if (dead[last].count(placed)) return false;
        const Mask open = cliques[last];
        for (Mask m = full & ~placed; m; m &= m - 1) {
            int i = std::countr_zero(m);
            // Vertices seen before must still be open in the previous clique.
            if ((cliques[i] & seen & ~open) != 0) continue;
            order.push_back(i);
            if (run(placed | bit(i), seen | cliques[i], i)) return true;
            order.pop_back();
        }
        dead[last].insert(placed);
        return false;
    }
};

}  // namespace

bool maximal_cliques(std::span<const Mask> adj, std::vector<Mask>& out, std::size_t limit) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return true;
    CliqueSearch search{adj, out, limit};
    search.run(0, n == 64 ? ~Mask{0} : bit(n) - 1, 0);
    return !search.overflow;
}

std::optional<std::vector<Mask>> consecutive_clique_order(std::span<const Mask> adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return std::vector<Mask>{};
    if (!is_chordal(adj)) return std::nullopt;
    std::vector<Mask> cliques;
    // Interval graphs have at most n maximal cliques.
    if (!maximal_cliques(adj, cliques, static_cast<std::size_t>(n))) return std::nullopt;

    const int c = static_cast<int>(cliques.size());
    OrderSearch search{cliques, c == 64 ? ~Mask{0} : bit(c) - 1, {}, std::vector<std::unordered_set<Mask>>(c)};
    for (int first = 0; first < c; ++first) {
        search.order = {first};
        if (search.run(bit(first), cliques[first], first)) {
            std::vector<Mask> ordered;
            ordered.reserve(c);
            for (int i : search.order) ordered.push_back(cliques[i]);
            return ordered;
        }
    }
    return std::nullopt;
}

}  // namespace boxicity::detail
