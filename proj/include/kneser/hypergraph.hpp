#pragma once

// Builders for the Kneser-type hypergraphs (plain / tilde / S-disjoint /
// t-wide) and a generic homomorphism verifier. Edges are materialized as
// sorted index vectors; multiset edges keep their multiplicities.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <json.hpp>

#include "kneser/core.hpp"
#include "kneser/family.hpp"

namespace kneser {

using json = nlohmann::ordered_json;

struct Hypergraph {
    int r = 2;
    std::vector<Subset> vertices;
    std::vector<std::vector<int>> edges;  // each sorted ascending, size r with multiplicity
    json meta = json::object();

    bool has_loop() const {
        return meta.contains("loop_edge") && meta["loop_edge"].get<bool>();
    }

    int vertex_index(const Subset& v) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        return -1;
    }

    json to_json() const {
        json j;
        j["r"] = r;
        j["vertices"] = json::array();
        for (const auto& v : vertices) j["vertices"].push_back(v.elements());
        j["edges"] = edges;
        j["meta"] = meta;
        return j;
    }

    static Hypergraph from_json(const json& j, int n) {
        Hypergraph h;
        h.r = j.at("r").get<int>();
        for (const auto& v : j.at("vertices"))
            h.vertices.push_back(Subset::of(n, v.get<std::vector<int>>()));
        h.edges = j.at("edges").get<std::vector<std::vector<int>>>();
        for (auto& e : h.edges) {
            if (static_cast<int>(e.size()) != h.r)
                throw std::invalid_argument("edge arity mismatch");
            std::sort(e.begin(), e.end());
            for (int ix : e)
                if (ix < 0 || ix >= static_cast<int>(h.vertices.size()))
                    throw std::invalid_argument("edge index out of range");
        }
        if (j.contains("meta")) h.meta = j.at("meta");
        return h;
    }
};

enum class KneserVariant { Plain, Tilde };

// KG^r(F,P,s) resp. its tilde relaxation. Vertices: admissible members of F
// (plain) or members with tilde excess <= floor(s/2) (tilde). Edges: r-subsets
// with pairwise intersections of size <= s.
inline Hypergraph build_kneser(const Family& f, const Partition& p, int r, int s,
                               KneserVariant variant = KneserVariant::Plain) {
    if (r < 2) throw std::invalid_argument("build_kneser requires r >= 2");
    if (s < 0) throw std::invalid_argument("build_kneser requires s >= 0");
    if (f.ground() != p.n)
        throw std::invalid_argument("family and partition over different ground sets");
    Hypergraph h;
    h.r = r;
    const int half = s / 2;
    for (const auto& m : f.members()) {
        bool keep = (variant == KneserVariant::Plain) ? is_admissible(m, p)
                                                      : tilde_excess(m, p) <= half;
        if (keep) h.vertices.push_back(m);
    }
    const int v = static_cast<int>(h.vertices.size());
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) { h.edges.push_back(cur); return; }
        for (int i = from; i < v; ++i) {
            bool ok = true;
            for (int j : cur)
                if ((h.vertices[static_cast<size_t>(i)] & h.vertices[static_cast<size_t>(j)]).size() > s) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    h.meta["builder"] = variant == KneserVariant::Plain ? "kneser" : "kneser-tilde";
    h.meta["family"] = f.desc();
    h.meta["partition"] = p.str();
    h.meta["s"] = s;
    h.meta["loop_edge"] = false;
    // s >= |F| for some member would make {F,...,F} a conceptual loop; set
    // edges never contain literal loops, so just flag the risk.
    h.meta["loop_risk"] = !f.empty() && s >= f.min_member_size();
    return h;
}

// KG_S^r(F,P): edges are all size-r multisets of admissible vertices covering
// each ground element i at most s_i times.
inline Hypergraph build_s_disjoint(const Family& f, const Partition& p,
                                   const std::vector<int>& weights, int r) {
    if (r < 2) throw std::invalid_argument("build_s_disjoint requires r >= 2");
    const int n = f.ground();
    if (p.n != n || static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("ground set mismatch in build_s_disjoint");
    Hypergraph h;
    h.r = r;
    for (const auto& m : f.members())
        if (is_admissible(m, p)) h.vertices.push_back(m);
    const int v = static_cast<int>(h.vertices.size());
    bool loop = false, repeat = false;
    std::vector<int> cover(static_cast<size_t>(n), 0);
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            h.edges.push_back(cur);
            bool all_same = std::all_of(cur.begin(), cur.end(),
                                        [&](int x) { return x == cur.front(); });
            if (all_same) loop = true;
            if (std::adjacent_find(cur.begin(), cur.end()) != cur.end()) repeat = true;
            return;
        }
        for (int i = from; i < v; ++i) {
            auto es = h.vertices[static_cast<size_t>(i)].elements();
            bool ok = true;
            for (int e : es)
                if (cover[static_cast<size_t>(e - 1)] + 1 > weights[static_cast<size_t>(e - 1)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int e : es) ++cover[static_cast<size_t>(e - 1)];
            cur.push_back(i);
            rec(i);  // multisets: repeats allowed
            cur.pop_back();
            for (int e : es) --cover[static_cast<size_t>(e - 1)];
        }
    };
    rec(0);
    h.meta["builder"] = "s-disjoint";
    h.meta["family"] = f.desc();
    h.meta["partition"] = p.str();
    h.meta["weights"] = weights;
    h.meta["loop_edge"] = loop;
    h.meta["multiset_edges"] = repeat;
    return h;
}

// Sub-hypergraph of KG^r(n,k,P) induced by the t-wide vertices.
inline Hypergraph induce_t_wide(int n, int k, const Partition& p, int r, int t) {
    if (t < 1 || t > n) throw std::invalid_argument("t must satisfy 1 <= t <= n");
    Hypergraph full = build_kneser(make_ksubsets(n, k), p, r, 0);
    Hypergraph h;
    h.r = r;
    std::vector<int> remap(full.vertices.size(), -1);
    for (size_t i = 0; i < full.vertices.size(); ++i) {
        const auto& vtx = full.vertices[i];
        if (vtx.max_element() - vtx.min_element() >= t) {
            remap[i] = static_cast<int>(h.vertices.size());
            h.vertices.push_back(vtx);
        }
    }
    for (const auto& e : full.edges) {
        std::vector<int> me;
        for (int ix : e) {
            if (remap[static_cast<size_t>(ix)] < 0) break;
            me.push_back(remap[static_cast<size_t>(ix)]);
        }
        if (static_cast<int>(me.size()) == r) h.edges.push_back(me);
    }
    h.meta = full.meta;
    h.meta["builder"] = "t-wide";
    h.meta["t"] = t;
    return h;
}

struct VertexMap {
    std::vector<int> assignment;  // source vertex index -> target vertex index
};

// f is a homomorphism iff the image multiset of every source edge is an edge
// of the target (compared as sorted multisets).
inline bool is_homomorphism(const VertexMap& m, const Hypergraph& src, const Hypergraph& dst) {
    if (m.assignment.size() != src.vertices.size())
        throw std::invalid_argument("vertex map not total on source vertices");
    std::set<std::vector<int>> dst_edges(dst.edges.begin(), dst.edges.end());
    for (const auto& e : src.edges) {
        std::vector<int> img;
        for (int ix : e) {
            int tgt = m.assignment[static_cast<size_t>(ix)];
            if (tgt < 0 || tgt >= static_cast<int>(dst.vertices.size()))
                throw std::invalid_argument("vertex map image out of range");
            img.push_back(tgt);
        }
        std::sort(img.begin(), img.end());
        if (!dst_edges.count(img)) return false;
    }
    return true;
}

}  // namespace kneser
