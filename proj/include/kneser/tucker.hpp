#pragma once

// The simplicial complex E_{n-1}(Z_p), the lambda-map built from a proper
// coloring of the target hypergraph, and an exhaustive checker for the three
// Z_p-Tucker conditions plus the concluding inequality.
//
// Z_p is represented by exponent residues 0..p-1; multiplication of roots of
// unity is addition of residues mod p.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kneser/chromatic.hpp"
#include "kneser/core.hpp"
#include "kneser/defect.hpp"
#include "kneser/family.hpp"
#include "kneser/hypergraph.hpp"

namespace kneser {

// A face of E_{n-1}(Z_p): per ground element j, either absent (-1) or a
// residue 0..p-1. Distinct second components hold by construction.
struct SignedFace {
    int p = 2;
    std::vector<int8_t> comp;  // size n

    SignedFace() = default;
    SignedFace(int p_, int n) : p(p_), comp(static_cast<size_t>(n), -1) {}

    int n() const { return static_cast<int>(comp.size()); }
    bool empty() const {
        for (int8_t c : comp)
            if (c >= 0) return false;
        return true;
    }
    int size() const {
        int s = 0;
        for (int8_t c : comp)
            if (c >= 0) ++s;
        return s;
    }
    bool subface_of(const SignedFace& o) const {
        for (size_t j = 0; j < comp.size(); ++j)
            if (comp[j] >= 0 && comp[j] != o.comp[j]) return false;
        return true;
    }
    SignedFace rotated(int w) const {
        SignedFace out = *this;
        for (auto& c : out.comp)
            if (c >= 0) c = static_cast<int8_t>((c + w) % p);
        return out;
    }
    // A^i: second components carrying residue i
    Subset component(int i) const {
        Subset s = Subset::empty(n());
        for (size_t j = 0; j < comp.size(); ++j)
            if (comp[j] == i) s = s.with(static_cast<int>(j) + 1);
        return s;
    }
    std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (size_t j = 0; j < comp.size(); ++j) {
            if (comp[j] < 0) continue;
            if (!first) os << ',';
            os << '(' << static_cast<int>(comp[j]) << ',' << (j + 1) << ')';
            first = false;
        }
        os << '}';
        return os.str();
    }
};

struct TuckerContext {
    Family fam;
    Partition part;
    int s = 0;
    int p = 2;
    KneserVariant variant = KneserVariant::Tilde;
    Hypergraph target;
    std::vector<int> coloring;  // proper coloring of target vertices, colors 1..t
    int t = 0;
    int alpha = 0;  // n - ecd^p(F, floor(s/2))
    int m = 0;      // alpha + t
    std::map<word, int> vertex_index;

    static TuckerContext make(Family fam, Partition part, int s, int p,
                              KneserVariant variant = KneserVariant::Tilde,
                              const std::vector<int>* coloring = nullptr) {
        TuckerContext ctx;
        ctx.fam = std::move(fam);
        ctx.part = std::move(part);
        ctx.s = s;
        ctx.p = p;
        ctx.variant = variant;
        if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
        ctx.target = build_kneser(ctx.fam, ctx.part, p, s, variant);
        if (coloring) {
            ctx.coloring = *coloring;
        } else {
            auto chrom = chi_exact(ctx.target);
            if (chrom.infinite()) throw std::invalid_argument("target hypergraph has a loop");
            ctx.coloring = chrom.witness_coloring;
        }
        if (!is_proper(ctx.target, ctx.coloring))
            throw std::invalid_argument("coloring of the target hypergraph is not proper");
        ctx.t = 0;
        for (int c : ctx.coloring) ctx.t = std::max(ctx.t, c);
        if (ctx.target.vertices.empty()) ctx.t = 1;  // degenerate, m > 0 still needed
        ctx.alpha = ctx.fam.ground() - ecd(ctx.fam, p, s / 2).value;
        ctx.m = ctx.alpha + ctx.t;
        for (size_t i = 0; i < ctx.target.vertices.size(); ++i)
            ctx.vertex_index[ctx.target.vertices[i].bits()] = static_cast<int>(i);
        return ctx;
    }

    static bool is_prime(int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
};

namespace detail {

inline int mod_inverse(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw std::logic_error("no modular inverse");
}

}  // namespace detail

// lambda(A) = (lambda_1, lambda_2) in Z_p x [m]; Case 1 when some member fits
// inside a component up to floor(s/2) exceptions (and qualifies as a vertex of
// the variant under test), Case 2 via the maximal admissible-per-component
// subface B.
inline std::pair<int, int> lambda_map(const SignedFace& a, const TuckerContext& ctx) {
    if (a.empty()) throw std::invalid_argument("lambda_map requires a non-empty face");
    const int p = ctx.p;
    const int half = ctx.s / 2;
    const int n = ctx.fam.ground();

    std::vector<word> comps;
    for (int i = 0; i < p; ++i) comps.push_back(a.component(i).bits());

    // Case 1: order-least qualifying member (members are stored in the
    // complete size-then-lex order already).
    for (const auto& f : ctx.fam.members()) {
        bool qualifies = (ctx.variant == KneserVariant::Tilde)
                             ? tilde_excess(f, ctx.part) <= half
                             : is_admissible(f, ctx.part);
        if (!qualifies) continue;
        int hit = -1, hits = 0;
        for (int i = 0; i < p; ++i) {
            if (std::popcount(f.bits() & ~comps[static_cast<size_t>(i)]) <= half) {
                hit = i;
                ++hits;
            }
        }
        if (hits == 0) continue;
        if (hits > 1)
            throw std::logic_error("Case 1: member fits multiple components (requires s < |F|)");
        int c = ctx.coloring[static_cast<size_t>(ctx.vertex_index.at(f.bits()))];
        return {hit, c + ctx.alpha};
    }

    // Case 2: maximal B with |B^i cap P_j| <= 1 for all i, j. Per (residue,
    // block) group keep the entry with the largest second component; that
    // maximizes pi_2(B) in the size-then-lex order.
    SignedFace b(p, n);
    for (size_t gi = 0; gi < ctx.part.blocks.size(); ++gi) {
        for (int i = 0; i < p; ++i) {
            int best = -1;
            for (int j : ctx.part.blocks[gi].elements())
                if (a.comp[static_cast<size_t>(j - 1)] == i) best = j;
            if (best >= 0) b.comp[static_cast<size_t>(best - 1)] = static_cast<int8_t>(i);
        }
    }

    std::vector<int> sizes(static_cast<size_t>(p), 0);
    for (int8_t c : b.comp)
        if (c >= 0) ++sizes[static_cast<size_t>(c)];
    int mn = sizes[0];
    for (int i = 1; i < p; ++i) mn = std::min(mn, sizes[static_cast<size_t>(i)]);
    int h = 0, sum_min = 0;
    for (int i = 0; i < p; ++i) {
        if (sizes[static_cast<size_t>(i)] == mn) {
            ++h;
            sum_min += i;
        }
    }
    int lambda2 = p * mn + p - h;
    if (lambda2 > ctx.alpha)
        throw std::logic_error("Case 2 invariant violated: lambda_2 > alpha");

    int lambda1;
    if (h < p) {
        lambda1 = (sum_min * detail::mod_inverse(h, p)) % p;  // (i_1...i_h)^{h'}
    } else {
        // all component sizes equal; restrict B to its first non-empty block
        int blk = -1;
        for (size_t gi = 0; gi < ctx.part.blocks.size(); ++gi) {
            for (int j : ctx.part.blocks[gi].elements())
                if (b.comp[static_cast<size_t>(j - 1)] >= 0) { blk = static_cast<int>(gi); break; }
            if (blk >= 0) break;
        }
        if (blk < 0) throw std::logic_error("Case 2 with empty B");
        std::vector<std::pair<int, int>> bprime;  // (second component, residue)
        for (int j : ctx.part.blocks[static_cast<size_t>(blk)].elements())
            if (b.comp[static_cast<size_t>(j - 1)] >= 0)
                bprime.push_back({j, b.comp[static_cast<size_t>(j - 1)]});
        int k = static_cast<int>(bprime.size());
        if (k < p) {
            int sum = 0;
            for (auto& [j, w] : bprime) sum += w;
            lambda1 = (sum * detail::mod_inverse(k, p)) % p;  // (j_1...j_k)^{k'}
        } else {
            // first component of the entry with the smallest second component
            lambda1 = bprime.front().second;  // block elements iterate ascending
        }
    }
    return {lambda1, lambda2};
}

struct TuckerReport {
    bool equivariant = true;
    bool condition2 = true;
    bool condition3 = true;
    bool inequality = true;
    int alpha = 0, m = 0, t = 0, n = 0, p = 0;
    long long faces_checked = 0;
    long long chains_checked = 0;
    std::string counterexample;

    bool all_pass() const { return equivariant && condition2 && condition3 && inequality; }
};

using LambdaFn = std::function<std::pair<int, int>(const SignedFace&)>;

// Exhaustive check of the three Z_p-Tucker conditions for a given lambda
// (injectable so fault-injection fixtures can corrupt it) and evaluation of
// the concluding inequality alpha + (m - alpha)(p - 1) >= n.
inline TuckerReport check_tucker_conditions(const TuckerContext& ctx,
                                            const LambdaFn& lambda = nullptr) {
    const int p = ctx.p, n = ctx.fam.ground();
    double face_count = 1;
    for (int j = 0; j < n; ++j) face_count *= (p + 1);
    if (face_count > 1e6)
        throw std::runtime_error("face enumeration guard exceeded: (p+1)^n > 1e6");

    LambdaFn lam = lambda ? lambda
                          : [&ctx](const SignedFace& a) { return lambda_map(a, ctx); };

    TuckerReport rep;
    rep.alpha = ctx.alpha;
    rep.m = ctx.m;
    rep.t = ctx.t;
    rep.n = n;
    rep.p = p;

    // condition 1: equivariance on every face and every omega
    {
        SignedFace a(p, n);
        std::function<bool(int)> rec = [&](int j) -> bool {
            if (j == n) {
                if (a.empty()) return true;
                ++rep.faces_checked;
                auto l = lam(a);
                for (int w = 1; w < p; ++w) {
                    auto lr = lam(a.rotated(w));
                    if (lr.second != l.second || lr.first != (l.first + w) % p) {
                        rep.equivariant = false;
                        rep.counterexample = "equivariance fails at A=" + a.str() +
                                             ", omega=" + std::to_string(w);
                        return false;
                    }
                }
                return true;
            }
            a.comp[static_cast<size_t>(j)] = -1;
            if (!rec(j + 1)) return false;
            for (int w = 0; w < p; ++w) {
                a.comp[static_cast<size_t>(j)] = static_cast<int8_t>(w);
                if (!rec(j + 1)) return false;
            }
            a.comp[static_cast<size_t>(j)] = -1;
            return true;
        };
        rec(0);
    }

    // condition 2: chains A1 <= A2 with equal lambda_2 <= alpha share lambda_1
    if (rep.equivariant || true) {
        SignedFace a1(p, n), a2(p, n);
        std::function<bool(int)> rec = [&](int j) -> bool {
            if (j == n) {
                if (a1.empty() || a1.subface_of(a2) == false) return true;
                ++rep.chains_checked;
                auto l1 = lam(a1), l2 = lam(a2);
                if (l1.second == l2.second && l1.second <= ctx.alpha &&
                    l1.first != l2.first) {
                    rep.condition2 = false;
                    rep.counterexample = "condition 2 fails on " + a1.str() +
                                         " subset of " + a2.str();
                    return false;
                }
                return true;
            }
            // states: absent in both; present in A2 only; present in both
            a1.comp[static_cast<size_t>(j)] = -1;
            a2.comp[static_cast<size_t>(j)] = -1;
            if (!rec(j + 1)) return false;
            for (int w = 0; w < p; ++w) {
                a2.comp[static_cast<size_t>(j)] = static_cast<int8_t>(w);
                a1.comp[static_cast<size_t>(j)] = -1;
                if (!rec(j + 1)) return false;
                a1.comp[static_cast<size_t>(j)] = static_cast<int8_t>(w);
                if (!rec(j + 1)) return false;
            }
            a1.comp[static_cast<size_t>(j)] = -1;
            a2.comp[static_cast<size_t>(j)] = -1;
            return true;
        };
        rec(0);
    }

    // condition 3: chains A1 <= ... <= Ap with equal lambda_2 > alpha cannot
    // have pairwise-distinct lambda_1 values
    {
        std::vector<SignedFace> chain(static_cast<size_t>(p), SignedFace(p, n));
        // per element: absent everywhere, or residue w present from chain
        // position q onward
        std::function<bool(int)> rec = [&](int j) -> bool {
            if (j == n) {
                if (chain[0].empty()) return true;
                ++rep.chains_checked;
                std::vector<std::pair<int, int>> ls;
                for (const auto& f : chain) ls.push_back(lam(f));
                bool same_l2 = true;
                for (const auto& l : ls)
                    if (l.second != ls[0].second) { same_l2 = false; break; }
                if (!same_l2 || ls[0].second <= ctx.alpha) return true;
                bool repeat = false;
                for (size_t x = 0; x < ls.size() && !repeat; ++x)
                    for (size_t y = x + 1; y < ls.size(); ++y)
                        if (ls[x].first == ls[y].first) { repeat = true; break; }
                if (!repeat) {
                    rep.condition3 = false;
                    rep.counterexample =
                        "condition 3 fails: pairwise-distinct lambda_1 on a chain ending " +
                        chain.back().str();
                    return false;
                }
                return true;
            }
            for (auto& f : chain) f.comp[static_cast<size_t>(j)] = -1;
            if (!rec(j + 1)) return false;
            for (int w = 0; w < p; ++w) {
                for (int q = 0; q < p; ++q) {  // present in chain[q..p-1]
                    for (int x = 0; x < p; ++x)
                        chain[static_cast<size_t>(x)].comp[static_cast<size_t>(j)] =
                            static_cast<int8_t>(x >= q ? w : -1);
                    if (!rec(j + 1)) return false;
                }
            }
            for (auto& f : chain) f.comp[static_cast<size_t>(j)] = -1;
            return true;
        };
        rec(0);
    }

    rep.inequality = ctx.alpha + (ctx.m - ctx.alpha) * (p - 1) >= n;
    if (!rep.inequality && rep.counterexample.empty())
        rep.counterexample = "inequality alpha+(m-alpha)(p-1) >= n fails";
    return rep;
}

}  // namespace kneser
