#pragma once

// Exact equitable colorability defects with certificates.
//
// ecd(F,r,s) ascends d = |X0| and returns the first feasible d. This is
// correct because feasibility is monotone in d: from a feasible witness,
// moving one element of a largest part into X0 keeps the parts equitable
// and cannot create a violation (parts only shrink). The monotonicity is
// property-tested, not just assumed.

#include <numeric>
#include <string>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/family.hpp"

namespace kneser {

struct DefectResult {
    int value = 0;
    Subset witness_x0;
    std::vector<Subset> witness_parts;
    std::string kind = "ecd";  // "ecd" | "ecd_S"
};

struct DefectOptions {
    int max_ground = 16;        // exhaustive-mode cap on n for ecd
    int max_lifted_ground = 14; // cap on n-bar for ecd_S direct enumeration
};

// Certificate checker: X0 + parts partition [n], parts equitable, and no
// member of F sits inside any part up to s exceptions.
inline bool is_avoiding_partition(const Subset& x0, const std::vector<Subset>& parts,
                                  const Family& f, int s) {
    const int n = f.ground();
    if (x0.ground() != n) throw std::invalid_argument("X0 over wrong ground set");
    word seen = x0.bits();
    int mn = kMaxGround + 1, mx = 0;
    for (const auto& p : parts) {
        if (p.ground() != n) throw std::invalid_argument("part over wrong ground set");
        if (seen & p.bits()) throw std::invalid_argument("X0/parts are not disjoint");
        seen |= p.bits();
        mn = std::min(mn, p.size());
        mx = std::max(mx, p.size());
    }
    if (seen != Subset::full(n).bits())
        throw std::invalid_argument("X0 and parts do not cover [1,n]");
    if (!parts.empty() && mx - mn > 1)
        throw std::invalid_argument("parts are not equitable");
    for (const auto& m : f.members())
        for (const auto& p : parts)
            if (subset_within_s(m, p, s)) return false;
    return true;
}

namespace detail {

// Does some member of F fit inside `part` up to s exceptions?
inline bool part_violated(word part, const std::vector<word>& members, int s) {
    for (word m : members)
        if (std::popcount(m & ~part) <= s) return true;
    return false;
}

// Backtracking over equitable part assignments of `rest` (ascending elements)
// into parts with the given size multiset. Parts are anchored at the minimum
// unassigned element, which kills part-permutation symmetry. Sizes are tried
// ascending so the first witness found is the canonical (lex-least) one.
struct PartSearch {
    const std::vector<word>& members;
    int s;
    std::vector<int> rest;           // unassigned elements, ascending
    std::vector<char> used;          // parallel to rest
    std::vector<std::pair<int, int>> size_counts;  // (size, remaining count), ascending
    std::vector<word> parts_out;

    bool run() { return place_next_part(); }

    bool place_next_part() {
        size_t first = 0;
        while (first < rest.size() && used[first]) ++first;
        if (first == rest.size()) return true;  // all elements placed
        int anchor = rest[first];
        used[first] = 1;
        for (auto& [sz, cnt] : size_counts) {
            if (cnt == 0) continue;
            word part = word{1} << (anchor - 1);
            if (part_violated(part, members, s)) break;  // larger sizes violate too
            --cnt;
            if (fill_part(part, sz - 1, first + 1)) { ++cnt; used[first] = 0; return true; }
            ++cnt;
        }
        used[first] = 0;
        return false;
    }

    bool fill_part(word part, int need, size_t from) {
        if (need == 0) {
            parts_out.push_back(part);
            if (place_next_part()) return true;
            parts_out.pop_back();
            return false;
        }
        for (size_t i = from; i < rest.size(); ++i) {
            if (used[i]) continue;
            word cand = part | (word{1} << (rest[i] - 1));
            if (part_violated(cand, members, s)) continue;
            used[i] = 1;
            if (fill_part(cand, need - 1, i + 1)) { used[i] = 0; return true; }
            used[i] = 0;
        }
        return false;
    }
};

inline bool feasible_with_x0(int n, word x0, int r, const std::vector<word>& members,
                             int s, std::vector<word>* parts) {
    int m = n - std::popcount(x0);
    int q = m / r, rem = m % r;
    PartSearch srch{members, s, {}, {}, {}, {}};
    for (int e = 1; e <= n; ++e)
        if (!((x0 >> (e - 1)) & 1)) srch.rest.push_back(e);
    srch.used.assign(srch.rest.size(), 0);
    if (q > 0) srch.size_counts.push_back({q, r - rem});
    if (rem > 0) srch.size_counts.push_back({q + 1, rem});
    // zero-size parts are vacuously fine (guarded: s < min member size)
    if (!srch.run()) return false;
    if (parts) {
        *parts = srch.parts_out;
        while (static_cast<int>(parts->size()) < r) parts->push_back(0);
    }
    return true;
}

// Visit d-subsets of [n] in lex order of ascending element lists.
inline bool for_each_dsubset(int n, int d, const std::function<bool(word)>& fn) {
    std::vector<int> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i + 1;
    if (d == 0) return fn(0);
    while (true) {
        word b = 0;
        for (int e : idx) b |= word{1} << (e - 1);
        if (fn(b)) return true;
        int i = d - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - (d - 1 - i)) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// Is some |X0| = d feasible for (F, r, s)? Exposed for the monotonicity test.
inline bool ecd_feasible_at(const Family& f, int r, int s, int d) {
    std::vector<word> members;
    for (const auto& m : f.members()) members.push_back(m.bits());
    return detail::for_each_dsubset(f.ground(), d, [&](word x0) {
        return detail::feasible_with_x0(f.ground(), x0, r, members, s, nullptr);
    });
}

inline DefectResult ecd(const Family& f, int r, int s, const DefectOptions& opts = {}) {
    const int n = f.ground();
    if (r < 2) throw std::invalid_argument("ecd requires r >= 2");
    if (s < 0) throw std::invalid_argument("ecd requires s >= 0");
    if (n > opts.max_ground)
        throw std::runtime_error("ecd: ground set exceeds exhaustive cap n <= " +
                                 std::to_string(opts.max_ground));
    if (!f.empty() && f.min_member_size() <= s)
        throw std::invalid_argument(
            "ecd undefined: some member has size <= s, every part (even empty) is violated");

    std::vector<word> members;
    for (const auto& m : f.members()) members.push_back(m.bits());

    for (int d = 0; d <= n; ++d) {
        DefectResult res;
        bool found = detail::for_each_dsubset(n, d, [&](word x0) {
            std::vector<word> parts;
            if (!detail::feasible_with_x0(n, x0, r, members, s, &parts)) return false;
            res.value = d;
            res.witness_x0 = Subset(n, x0);
            for (word p : parts) res.witness_parts.push_back(Subset(n, p));
            return true;
        });
        if (found) return res;
    }
    throw std::logic_error("ecd: no feasible d found (unreachable under the s guard)");
}

// ecd_S^r(F): n-bar minus the maximum total size of an equitable S-disjoint
// multiset family {A_1,...,A_r} with no member of F inside any A_i.
inline DefectResult ecd_s_disjoint(const Family& f, int r, const std::vector<int>& weights,
                                   const DefectOptions& opts = {}) {
    const int n = f.ground();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight vector length must equal n");
    if (r < 2) throw std::invalid_argument("ecd_S requires r >= 2");
    for (int w : weights)
        if (w < 0 || w > r) throw std::invalid_argument("weights must satisfy 0 <= s_i <= r");
    int nbar = std::accumulate(weights.begin(), weights.end(), 0);
    if (nbar > opts.max_lifted_ground)
        throw std::runtime_error("ecd_S: n-bar exceeds direct-enumeration cap " +
                                 std::to_string(opts.max_lifted_ground));

    // candidate parts: subsets containing no member of F (downward closed)
    std::vector<word> frees;
    word top = word{1} << n;
    for (word b = 0; b < top; ++b) {
        bool ok = true;
        for (const auto& m : f.members())
            if ((m.bits() & ~b) == 0) { ok = false; break; }
        if (ok) frees.push_back(b);
    }

    int best = -1;
    std::vector<word> best_parts;
    std::vector<int> cover(static_cast<size_t>(n), 0);
    std::vector<word> cur;
    // non-decreasing tuples over `frees` so each multiset is seen once
    std::function<void(size_t, int, int, int)> rec = [&](size_t from, int depth, int mn,
                                                         int mx) {
        if (depth == r) {
            int total = 0;
            for (word p : cur) total += std::popcount(p);
            if (total > best) { best = total; best_parts = cur; }
            return;
        }
        for (size_t i = from; i < frees.size(); ++i) {
            word p = frees[i];
            int sz = std::popcount(p);
            int nmn = std::min(mn, sz), nmx = std::max(mx, sz);
            if (nmx - nmn > 1) continue;  // equitability
            bool ok = true;
            for (int e = 0; e < n; ++e) {
                if ((p >> e) & 1) {
                    if (cover[static_cast<size_t>(e)] + 1 > weights[static_cast<size_t>(e)]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            for (int e = 0; e < n; ++e)
                if ((p >> e) & 1) ++cover[static_cast<size_t>(e)];
            cur.push_back(p);
            rec(i, depth + 1, nmn, nmx);
            cur.pop_back();
            for (int e = 0; e < n; ++e)
                if ((p >> e) & 1) --cover[static_cast<size_t>(e)];
        }
    };
    rec(0, 0, kMaxGround + 1, 0);

    DefectResult res;
    res.kind = "ecd_S";
    res.value = nbar - std::max(best, 0);
    res.witness_x0 = Subset::empty(n);
    for (word p : best_parts) res.witness_parts.push_back(Subset(n, p));
    return res;
}

}  // namespace kneser
