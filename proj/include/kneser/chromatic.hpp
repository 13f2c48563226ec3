#pragma once

// Exact hypergraph chromatic numbers. The search iterates t upward from a
// lower bound (caller-supplied or a greedy r-clique bound) to the greedy
// upper bound, with DSATUR-style selection generalized to hypergraphs: a
// color is forbidden for v exactly when assigning it would complete a
// monochromatic edge, and saturation counts forbidden colors.

#include <algorithm>
#include <bitset>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"

namespace kneser {

struct ChromaticResult {
    std::optional<int> value;           // nullopt = Infinite (loop edge)
    std::vector<int> witness_coloring;  // per vertex, colors 1..value
    long long nodes_explored = 0;       // across all deepening levels
    std::string infeasibility_note;

    bool infinite() const { return !value.has_value(); }
};

struct ChiOptions {
    int max_vertices = 120;
    int lower_hint = 1;
};

inline bool is_proper(const Hypergraph& h, const std::vector<int>& coloring) {
    if (coloring.size() != h.vertices.size())
        throw std::invalid_argument("coloring is not total on vertices");
    for (int c : coloring)
        if (c < 1) throw std::invalid_argument("colors must be positive");
    for (const auto& e : h.edges) {
        int c0 = coloring[static_cast<size_t>(e.front())];
        bool mono = true;
        for (int ix : e)
            if (coloring[static_cast<size_t>(ix)] != c0) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

namespace detail {

// distinct members per edge; an edge with a single distinct member is a loop
inline std::vector<std::vector<int>> distinct_edges(const Hypergraph& h, bool* loop) {
    std::vector<std::vector<int>> out;
    *loop = false;
    for (const auto& e : h.edges) {
        std::vector<int> d = e;
        d.erase(std::unique(d.begin(), d.end()), d.end());
        if (d.size() <= 1) *loop = true;
        out.push_back(std::move(d));
    }
    return out;
}

// Exact maximum edge-free (independent) vertex set by include/exclude
// branch and bound; returns nullopt if the node budget is exhausted.
inline std::optional<int> max_edge_free_set(int v,
                                            const std::vector<std::vector<int>>& edges,
                                            long long budget) {
    std::vector<std::vector<int>> incident(static_cast<size_t>(v));
    for (size_t ei = 0; ei < edges.size(); ++ei)
        for (int m : edges[ei]) incident[static_cast<size_t>(m)].push_back(static_cast<int>(ei));
    std::vector<char> in(static_cast<size_t>(v), 0);
    int best = 0;
    long long nodes = 0;
    bool out_of_budget = false;
    std::function<void(int, int)> go = [&](int i, int cur) {
        if (out_of_budget) return;
        if (++nodes > budget) { out_of_budget = true; return; }
        if (cur + (v - i) <= best) return;
        if (i == v) { best = cur; return; }
        bool can = true;
        for (int ei : incident[static_cast<size_t>(i)]) {
            bool all = true;
            for (int m : edges[static_cast<size_t>(ei)])
                if (m != i && !in[static_cast<size_t>(m)]) { all = false; break; }
            if (all) { can = false; break; }
        }
        if (can) {
            in[static_cast<size_t>(i)] = 1;
            go(i + 1, cur + 1);
            in[static_cast<size_t>(i)] = 0;
        }
        go(i + 1, cur);
    };
    go(0, 0);
    if (out_of_budget) return std::nullopt;
    return best;
}

struct ChiSearcher {
    int v;
    std::vector<std::vector<int>> edge_members;    // distinct members per edge
    std::vector<std::vector<int>> incident;        // per vertex: incident edge ids
    std::vector<int> degree;
    std::vector<int> color;  // 0 = uncolored
    long long nodes = 0;

    // incremental state: forbid[v*stride + c] counts edges that would become
    // monochromatic if v were colored c; each edge caches the (vertex, color)
    // pair it currently forbids, if any
    int stride = 0;
    std::vector<int> forbid;
    std::vector<int> edge_target, edge_color;

    // optional capacity prune: no color class can exceed the maximum
    // edge-free set size (0 = disabled)
    int class_cap = 0;
    std::vector<int> class_size;
    std::vector<int> eligible;  // per-node scratch

    explicit ChiSearcher(const Hypergraph& h, const std::vector<std::vector<int>>& edges)
        : v(static_cast<int>(h.vertices.size())),
          edge_members(edges),
          incident(h.vertices.size()),
          degree(h.vertices.size(), 0),
          color(h.vertices.size(), 0) {
        for (size_t ei = 0; ei < edge_members.size(); ++ei)
            for (int m : edge_members[ei]) {
                incident[static_cast<size_t>(m)].push_back(static_cast<int>(ei));
                ++degree[static_cast<size_t>(m)];
            }
    }

    bool forbidden(int vtx, int c) const {
        if (stride) return forbid[static_cast<size_t>(vtx) * stride + c] > 0;
        for (int ei : incident[static_cast<size_t>(vtx)]) {
            bool all = true;
            for (int o : edge_members[static_cast<size_t>(ei)])
                if (o != vtx && color[static_cast<size_t>(o)] != c) { all = false; break; }
            if (all) return true;
        }
        return false;
    }

    // recompute the forbids-cache of one edge after a member changed color
    void refresh_edge(int ei) {
        auto& tgt = edge_target[static_cast<size_t>(ei)];
        auto& tc = edge_color[static_cast<size_t>(ei)];
        if (tgt >= 0) {
            --forbid[static_cast<size_t>(tgt) * stride + tc];
            tgt = -1;
        }
        int uncolored = -1, mono = 0;
        for (int m : edge_members[static_cast<size_t>(ei)]) {
            int c = color[static_cast<size_t>(m)];
            if (c == 0) {
                if (uncolored >= 0) return;  // two holes: cannot forbid yet
                uncolored = m;
            } else if (mono == 0) {
                mono = c;
            } else if (mono != c) {
                return;  // mixed colors: edge can never become monochromatic
            }
        }
        if (uncolored >= 0 && mono > 0) {
            tgt = uncolored;
            tc = mono;
            ++forbid[static_cast<size_t>(tgt) * stride + tc];
        }
    }

    void assign(int vtx, int c) {
        color[static_cast<size_t>(vtx)] = c;
        ++class_size[static_cast<size_t>(c)];
        for (int ei : incident[static_cast<size_t>(vtx)]) refresh_edge(ei);
    }

    void unassign(int vtx) {
        --class_size[static_cast<size_t>(color[static_cast<size_t>(vtx)])];
        color[static_cast<size_t>(vtx)] = 0;
        for (int ei : incident[static_cast<size_t>(vtx)]) refresh_edge(ei);
    }

    bool solve(int t) {
        std::fill(color.begin(), color.end(), 0);
        stride = t + 1;
        class_size.assign(static_cast<size_t>(stride), 0);
        eligible.assign(static_cast<size_t>(stride), 0);
        forbid.assign(static_cast<size_t>(v) * stride, 0);
        edge_target.assign(edge_members.size(), -1);
        edge_color.assign(edge_members.size(), 0);
        for (size_t ei = 0; ei < edge_members.size(); ++ei)
            refresh_edge(static_cast<int>(ei));
        bool ok = extend(t, 0, 0);
        stride = 0;
        return ok;
    }

    bool extend(int t, int colored, int max_used) {
        if (colored == v) return true;
        ++nodes;
        // pick uncolored vertex with max saturation, tie-break by degree then index
        int pick = -1, pick_sat = -1;
        int limit_any = std::min(max_used + 1, t);
        std::fill(eligible.begin(), eligible.begin() + limit_any + 1, 0);
        for (int u = 0; u < v; ++u) {
            if (color[static_cast<size_t>(u)]) continue;
            int sat = 0;
            const int* row = forbid.data() + static_cast<size_t>(u) * stride;
            for (int c = 1; c <= limit_any; ++c) {
                if (row[c] > 0)
                    ++sat;
                else
                    ++eligible[static_cast<size_t>(c)];
            }
            if (sat == limit_any) return false;  // dead vertex
            if (sat > pick_sat ||
                (sat == pick_sat && degree[static_cast<size_t>(u)] >
                                        degree[static_cast<size_t>(pick)])) {
                pick = u;
                pick_sat = sat;
            }
        }
        if (class_cap > 0) {
            // every final class is at most class_cap large and can only gain
            // vertices that are eligible for it right now
            int uncolored = v - colored;
            long long capacity =
                static_cast<long long>(t - limit_any) * std::min(class_cap, uncolored);
            for (int c = 1; c <= limit_any; ++c)
                capacity += std::min(class_cap,
                                     class_size[static_cast<size_t>(c)] +
                                         eligible[static_cast<size_t>(c)]);
            if (capacity < v) return false;
        }
        for (int c = 1; c <= limit_any; ++c) {  // new color only as max_used+1
            if (forbid[static_cast<size_t>(pick) * stride + c] > 0) continue;
            assign(pick, c);
            if (extend(t, colored + 1, std::max(max_used, c))) return true;
            unassign(pick);
        }
        return false;
    }
};

// Every edge-free set extends to a maximal one, so chi <= t iff t maximal
// edge-free sets cover the vertices (shrink a cover back to a partition).
// Enumerating all maximal edge-free sets once therefore turns tight coloring
// levels into a small set-cover search. V <= 120 fits two 64-bit words.
using VertexMask = std::bitset<128>;

struct MaximalSetFamily {
    std::vector<VertexMask> sets;
    std::vector<std::vector<int>> covers;  // per vertex: indices of sets containing it
};

// include/exclude enumeration in vertex order with incremental per-vertex
// blocked-edge counters; nullopt if either budget is exhausted
inline std::optional<MaximalSetFamily> enumerate_maximal_edge_free(
    int v, const std::vector<std::vector<int>>& edges, int cap, long long node_budget,
    size_t set_budget) {
    std::vector<std::vector<int>> incident(static_cast<size_t>(v));
    for (size_t ei = 0; ei < edges.size(); ++ei)
        for (int m : edges[ei]) incident[static_cast<size_t>(m)].push_back(static_cast<int>(ei));
    std::vector<char> in(static_cast<size_t>(v), 0);
    std::vector<int> blocked(static_cast<size_t>(v), 0);  // completed edges at vertex
    std::vector<int> edge_target(edges.size(), -1);       // unique member missing from S
    auto refresh = [&](int ei) {
        int& tgt = edge_target[static_cast<size_t>(ei)];
        if (tgt >= 0) {
            --blocked[static_cast<size_t>(tgt)];
            tgt = -1;
        }
        int missing = -1;
        for (int m : edges[static_cast<size_t>(ei)]) {
            if (!in[static_cast<size_t>(m)]) {
                if (missing >= 0) return;  // two holes
                missing = m;
            }
        }
        if (missing >= 0) {
            tgt = missing;
            ++blocked[static_cast<size_t>(tgt)];
        }
    };
    MaximalSetFamily fam;
    std::vector<int> cur;
    long long nodes = 0;
    bool out_of_budget = false;
    std::function<void(int)> go = [&](int i) {
        if (out_of_budget) return;
        if (++nodes > node_budget) { out_of_budget = true; return; }
        if (i == v) {
            for (int u = 0; u < v; ++u)
                if (!in[static_cast<size_t>(u)] && blocked[static_cast<size_t>(u)] == 0)
                    return;  // not maximal
            if (fam.sets.size() >= set_budget) { out_of_budget = true; return; }
            VertexMask m;
            for (int u : cur) m.set(static_cast<size_t>(u));
            fam.sets.push_back(m);
            return;
        }
        if (static_cast<int>(cur.size()) < cap && blocked[static_cast<size_t>(i)] == 0) {
            in[static_cast<size_t>(i)] = 1;
            cur.push_back(i);
            for (int ei : incident[static_cast<size_t>(i)]) refresh(ei);
            go(i + 1);
            cur.pop_back();
            in[static_cast<size_t>(i)] = 0;
            for (int ei : incident[static_cast<size_t>(i)]) refresh(ei);
        }
        go(i + 1);
    };
    go(0);
    if (out_of_budget) return std::nullopt;
    fam.covers.resize(static_cast<size_t>(v));
    for (size_t si = 0; si < fam.sets.size(); ++si)
        for (int u = 0; u < v; ++u)
            if (fam.sets[si].test(static_cast<size_t>(u)))
                fam.covers[static_cast<size_t>(u)].push_back(static_cast<int>(si));
    return fam;
}

struct CoverSearcher {
    int v;
    int cap;  // maximum edge-free set size
    const MaximalSetFamily& fam;
    long long nodes = 0;
    std::vector<int> chosen;

    CoverSearcher(int v_, int cap_, const MaximalSetFamily& fam_)
        : v(v_), cap(cap_), fam(fam_) {}

    // true/false = exact verdict; nullopt = node budget exhausted
    std::optional<bool> solve(int t, long long node_budget) {
        chosen.clear();
        VertexMask unc;
        for (int u = 0; u < v; ++u) unc.set(static_cast<size_t>(u));
        budget_ = node_budget;
        out_of_budget_ = false;
        bool sat = dfs(unc, t);
        if (out_of_budget_) return std::nullopt;
        return sat;
    }

    std::vector<int> coloring() const {
        std::vector<int> col(static_cast<size_t>(v), 0);
        for (int u = 0; u < v; ++u)
            for (size_t ci = 0; ci < chosen.size(); ++ci)
                if (fam.sets[static_cast<size_t>(chosen[ci])].test(static_cast<size_t>(u))) {
                    col[static_cast<size_t>(u)] = static_cast<int>(ci) + 1;
                    break;
                }
        return col;
    }

   private:
    long long budget_ = 0;
    bool out_of_budget_ = false;

    bool dfs(const VertexMask& unc, int j) {
        if (out_of_budget_) return false;
        if (++nodes > budget_) { out_of_budget_ = true; return false; }
        if (unc.none()) return true;
        if (static_cast<long long>(unc.count()) > static_cast<long long>(cap) * j)
            return false;
        // branch on the uncovered vertex with the fewest covering sets
        int bestv = -1;
        size_t bestc = 0;
        for (int u = 0; u < v; ++u) {
            if (!unc.test(static_cast<size_t>(u))) continue;
            size_t c = fam.covers[static_cast<size_t>(u)].size();
            if (bestv < 0 || c < bestc) {
                bestc = c;
                bestv = u;
            }
        }
        for (int si : fam.covers[static_cast<size_t>(bestv)]) {
            chosen.push_back(si);
            if (dfs(unc & ~fam.sets[static_cast<size_t>(si)], j - 1)) return true;
            chosen.pop_back();
            if (out_of_budget_) return false;
        }
        return false;
    }
};

// Greedy set of vertices in which every r-subset is an edge; its size q gives
// the bound chi >= ceil(q/(r-1)). Set-edge hypergraphs only.
inline int greedy_clique(const Hypergraph& h) {
    std::set<std::vector<int>> edge_set(h.edges.begin(), h.edges.end());
    std::vector<int> order(h.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<int> deg(h.vertices.size(), 0);
    for (const auto& e : h.edges)
        for (int ix : e) ++deg[static_cast<size_t>(ix)];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]; });
    std::vector<int> clique;
    const int r = h.r;
    std::function<bool(std::vector<int>&, size_t, int, int)> all_edges =
        [&](std::vector<int>& tup, size_t from, int need, int fixed) {
            if (need == 0) {
                std::vector<int> e = tup;
                e.push_back(fixed);
                std::sort(e.begin(), e.end());
                return edge_set.count(e) > 0;
            }
            for (size_t i = from; i < clique.size(); ++i) {
                tup.push_back(clique[i]);
                bool ok = all_edges(tup, i + 1, need - 1, fixed);
                tup.pop_back();
                if (!ok) return false;
            }
            return true;
        };
    for (int cand : order) {
        if (static_cast<int>(clique.size()) < r - 1) {
            clique.push_back(cand);
            continue;
        }
        std::vector<int> tup;
        if (all_edges(tup, 0, r - 1, cand)) clique.push_back(cand);
    }
    if (static_cast<int>(clique.size()) < r) return 0;
    return static_cast<int>(clique.size());
}

}  // namespace detail

// Sequential greedy in descending-degree order; returns a proper coloring.
inline int greedy_upper(const Hypergraph& h, std::vector<int>* coloring = nullptr) {
    bool loop = false;
    auto edges = detail::distinct_edges(h, &loop);
    if (loop) throw std::invalid_argument("greedy_upper: hypergraph has a loop edge");
    detail::ChiSearcher s(h, edges);
    std::vector<int> order(h.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return s.degree[static_cast<size_t>(a)] > s.degree[static_cast<size_t>(b)];
    });
    int used = 0;
    for (int u : order) {
        int c = 1;
        while (s.forbidden(u, c)) ++c;
        s.color[static_cast<size_t>(u)] = c;
        used = std::max(used, c);
    }
    if (coloring) *coloring = s.color;
    return std::max(used, h.vertices.empty() ? 0 : 1);
}

inline ChromaticResult chi_exact(const Hypergraph& h, const ChiOptions& opts = {}) {
    ChromaticResult res;
    if (h.vertices.empty()) {
        res.value = 0;
        return res;
    }
    if (static_cast<int>(h.vertices.size()) > opts.max_vertices)
        throw std::runtime_error("chi_exact: vertex count exceeds cap " +
                                 std::to_string(opts.max_vertices));
    bool loop = false;
    auto edges = detail::distinct_edges(h, &loop);
    if (loop) {
        res.infeasibility_note = "loop edge: no coloring is proper";
        return res;  // Infinite
    }
    if (h.edges.empty()) {
        res.value = 1;
        res.witness_coloring.assign(h.vertices.size(), 1);
        return res;
    }

    std::vector<int> greedy_col;
    int ub = greedy_upper(h, &greedy_col);
    int lb = std::max(opts.lower_hint, 1);
    int q = detail::greedy_clique(h);
    if (q >= h.r) lb = std::max(lb, ceil_div(q, h.r - 1));

    detail::ChiSearcher s(h, edges);
    std::string note;
    if (ub > lb) {
        // maximum edge-free set size m bounds every color class, giving the
        // lower bound ceil(V/m) and a per-class capacity prune
        auto m = detail::max_edge_free_set(static_cast<int>(h.vertices.size()), edges,
                                           30'000'000);
        if (m && *m >= 1) {
            lb = std::max(lb, ceil_div(static_cast<int>(h.vertices.size()), *m));
            s.class_cap = *m;
            note += "max edge-free set " + std::to_string(*m) + "; ";
        }
    }
    const int nverts = static_cast<int>(h.vertices.size());
    std::optional<detail::MaximalSetFamily> msf;
    std::optional<detail::CoverSearcher> cover;
    bool tried_enum = false;
    for (int t = lb; t < ub; ++t) {
        // cover search over maximal edge-free sets when the capacity slack
        // t*cap - V is below cap (tight levels), vertex-based DSATUR otherwise
        bool tight = s.class_cap > 0 && nverts <= 128 &&
                     static_cast<long long>(t) * s.class_cap < nverts + s.class_cap;
        if (tight && !tried_enum) {
            tried_enum = true;
            msf = detail::enumerate_maximal_edge_free(nverts, edges, s.class_cap, 80'000'000,
                                                      200'000);
            if (msf) {
                cover.emplace(nverts, s.class_cap, *msf);
                note += std::to_string(msf->sets.size()) + " maximal edge-free sets; ";
            }
        }
        std::optional<bool> sat;
        bool used_cover = false;
        long long before = s.nodes;
        if (tight && cover) {
            long long cbefore = cover->nodes;
            sat = cover->solve(t, 400'000'000);
            if (sat) {
                used_cover = true;
                before = cbefore;
            }
        }
        if (!sat) sat = s.solve(t);  // cover unavailable or over budget
        long long after = used_cover ? cover->nodes : s.nodes;
        if (*sat) {
            res.value = t;
            res.witness_coloring = used_cover ? cover->coloring() : s.color;
            res.nodes_explored = s.nodes + (cover ? cover->nodes : 0);
            res.infeasibility_note = note;
            return res;
        }
        note += "t=" + std::to_string(t) + ": exhausted " + std::to_string(after - before) +
                (used_cover ? " cover nodes; " : " nodes; ");
    }
    res.value = ub;
    res.witness_coloring = greedy_col;
    res.nodes_explored = s.nodes + (cover ? cover->nodes : 0);
    res.infeasibility_note = note.empty() ? "greedy bound met lower bound" : note;
    return res;
}

// The standard Kneser coloring with t* = ceil((n - r(k-1))/(r-1)) colors:
// ground elements are grouped into runs of r-1 and a vertex is colored by the
// group of its minimum, capped at t*. Any r vertices sharing a color below t*
// have minima inside r-1 elements, so two of them intersect; the last class
// lives in too few elements to hold r disjoint k-subsets. Properness is
// verified, never assumed.
inline std::vector<int> standard_kneser_coloring(int n, int k, int r, const Hypergraph& h) {
    if (n < r * k) throw std::invalid_argument("standard coloring requires n >= rk");
    int tstar = ceil_div(n - r * (k - 1), r - 1);
    std::vector<int> coloring;
    coloring.reserve(h.vertices.size());
    for (const auto& vtx : h.vertices) {
        if (vtx.size() != k)
            throw std::invalid_argument("standard coloring expects k-subset vertices");
        coloring.push_back(std::min(ceil_div(vtx.min_element(), r - 1), tstar));
    }
    if (!is_proper(h, coloring))
        throw std::logic_error(
            "standard coloring not proper: hypergraph violates the disjoint-edge precondition");
    return coloring;
}

}  // namespace kneser
