#pragma once

// S-disjoint lifting: replicate ground element i into s_i copies, lift the
// family (adding copy pairs) and the partition, and produce the projection-
// induced vertex map into the S-disjoint hypergraph.

#include <numeric>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/defect.hpp"
#include "kneser/family.hpp"
#include "kneser/hypergraph.hpp"

namespace kneser {

struct Lifting {
    std::vector<int> weights;  // s_1..s_n
    int n = 0;
    int n_bar = 0;
    std::vector<int> projection;  // copy index (0-based) -> original element (1-based)
    std::vector<int> offset;      // original element (0-based) -> first copy (0-based)

    // f(A): image of a lifted subset in the original ground set
    Subset project(const Subset& abar) const {
        Subset img = Subset::empty(n);
        for (int e : abar.elements()) img = img.with(projection[static_cast<size_t>(e - 1)]);
        return img;
    }

    int copy_count(int orig) const { return weights[static_cast<size_t>(orig - 1)]; }

    // copies of orig occupy consecutive positions
    std::vector<int> copies(int orig) const {
        std::vector<int> out;
        int first = offset[static_cast<size_t>(orig - 1)];
        for (int c = 0; c < copy_count(orig); ++c) out.push_back(first + c + 1);
        return out;
    }
};

inline Lifting lift_ground(const std::vector<int>& weights) {
    Lifting lf;
    lf.weights = weights;
    lf.n = static_cast<int>(weights.size());
    for (int w : weights)
        if (w < 0) throw std::invalid_argument("weights must be non-negative");
    lf.n_bar = std::accumulate(weights.begin(), weights.end(), 0);
    if (lf.n_bar < 1) throw std::invalid_argument("all-zero weight vector");
    if (lf.n_bar > kMaxGround) throw std::invalid_argument("lifted ground set exceeds 64");
    for (int i = 0; i < lf.n; ++i) {
        lf.offset.push_back(static_cast<int>(lf.projection.size()));
        for (int c = 0; c < weights[static_cast<size_t>(i)]; ++c)
            lf.projection.push_back(i + 1);
    }
    return lf;
}

inline bool lifted_member(const Subset& abar, const Family& f, const Lifting& lf) {
    if (abar.empty_set()) return false;
    if (f.contains(lf.project(abar))) return true;
    // copy pairs: two different copies of the same element
    if (abar.size() == 2) {
        auto es = abar.elements();
        return lf.projection[static_cast<size_t>(es[0] - 1)] ==
               lf.projection[static_cast<size_t>(es[1] - 1)];
    }
    return false;
}

inline Family lift_family(const Family& f, const Lifting& lf, int max_ground = 16) {
    if (f.ground() != lf.n)
        throw std::invalid_argument("family ground set does not match lifting");
    if (lf.n_bar > max_ground)
        throw std::runtime_error("lift_family: n-bar exceeds enumeration cap " +
                                 std::to_string(max_ground));
    std::vector<Subset> out;
    word top = word{1} << lf.n_bar;
    for (word b = 1; b < top; ++b) {
        Subset a(lf.n_bar, b);
        if (lifted_member(a, f, lf)) out.push_back(a);
    }
    return Family(lf.n_bar, std::move(out), "lifted(" + f.desc() + ")");
}

inline Partition lift_partition(const Partition& p, const Lifting& lf,
                                std::vector<int>* weights_out = nullptr) {
    if (p.n != lf.n) throw std::invalid_argument("partition ground set does not match lifting");
    std::vector<Subset> blocks;
    std::vector<int> ws;
    for (const auto& blk : p.blocks) {
        Subset lifted = Subset::empty(lf.n_bar);
        int w = 0;
        for (int e : blk.elements()) {
            w += lf.copy_count(e);
            for (int c : lf.copies(e)) lifted = lifted.with(c);
        }
        ws.push_back(w);
        if (!lifted.empty_set()) blocks.push_back(lifted);
    }
    if (weights_out) *weights_out = ws;
    return Partition(lf.n_bar, std::move(blocks));
}

inline int s_weight(const Subset& p, const std::vector<int>& weights) {
    int w = 0;
    for (int e : p.elements()) w += weights[static_cast<size_t>(e - 1)];
    return w;
}

struct LiftHomReport {
    Hypergraph lifted;    // KG^r(F-bar, P-bar), plain, s = 0
    Hypergraph target;    // KG_S^r(F, P)
    VertexMap map;        // induced by the projection
    bool homomorphism = false;
    bool copy_pairs_excluded = false;  // no copy pair appears as a lifted vertex
};

// Build both hypergraphs and the projection-induced vertex map, then check
// the homomorphism and copy-pair-exclusion claims.
inline LiftHomReport lift_homomorphism(const Family& f, const Partition& p,
                                       const std::vector<int>& weights, int r) {
    Lifting lf = lift_ground(weights);
    Family fbar = lift_family(f, lf);
    Partition pbar = lift_partition(p, lf);
    LiftHomReport rep;
    rep.lifted = build_kneser(fbar, pbar, r, 0);
    rep.target = build_s_disjoint(f, p, weights, r);
    rep.copy_pairs_excluded = true;
    for (const auto& vtx : rep.lifted.vertices) {
        if (vtx.size() == 2 && !f.contains(lf.project(vtx))) {
            auto es = vtx.elements();
            if (lf.projection[static_cast<size_t>(es[0] - 1)] ==
                lf.projection[static_cast<size_t>(es[1] - 1)])
                rep.copy_pairs_excluded = false;
        }
        int tgt = rep.target.vertex_index(lf.project(vtx));
        if (tgt < 0)
            throw std::logic_error("projected vertex missing from the S-disjoint hypergraph");
        rep.map.assignment.push_back(tgt);
    }
    rep.homomorphism = is_homomorphism(rep.map, rep.lifted, rep.target);
    return rep;
}

}  // namespace kneser
