#pragma once

// Set families: the three named generators, explicit families, the s-goodness
// test, and the restricted family F(X,s).

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kneser/core.hpp"

namespace kneser {

using json = nlohmann::ordered_json;

class Family {
public:
    Family() = default;
    Family(int n, std::vector<Subset> members, std::string desc = "explicit")
        : n_(n), desc_(std::move(desc)) {
        for (const auto& m : members) {
            if (m.ground() != n)
                throw std::invalid_argument("family member over wrong ground set");
            if (m.empty_set())
                throw std::invalid_argument("family members must be non-empty");
        }
        std::sort(members.begin(), members.end(), order_less);
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }

    int ground() const { return n_; }
    const std::vector<Subset>& members() const { return members_; }
    const std::string& desc() const { return desc_; }
    bool empty() const { return members_.empty(); }
    size_t size() const { return members_.size(); }

    bool contains(const Subset& a) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), a, order_less);
        return it != members_.end() && *it == a;
    }

    int min_member_size() const {
        // members are sorted size-first
        if (members_.empty()) throw std::logic_error("min_member_size of empty family");
        return members_.front().size();
    }

private:
    int n_ = 0;
    std::vector<Subset> members_;
    std::string desc_;
};

namespace detail {

inline void for_each_subset(int n, const std::function<void(const Subset&)>& fn) {
    if (n > 24) throw std::invalid_argument("subset enumeration limited to n <= 24");
    word top = word{1} << n;
    for (word b = 0; b < top; ++b) fn(Subset(n, b));
}

// k-subsets of [n] in lex order of ascending element lists
inline void for_each_ksubset(int n, int k, const std::function<void(const Subset&)>& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) { fn(Subset::empty(n)); return; }
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (true) {
        fn(Subset::of(n, idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

inline Family make_ksubsets(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("ksubsets requires 1 <= k <= n");
    std::vector<Subset> out;
    detail::for_each_ksubset(n, k, [&](const Subset& s) { out.push_back(s); });
    return Family(n, std::move(out),
                  "ksubsets:n=" + std::to_string(n) + ",k=" + std::to_string(k));
}

// H(n,k,a,s): k-subsets F with F not contained-up-to-s in the tail
// A = {n-a+1,...,n}; equivalently |F cap A| < k - s.
inline Family make_hfamily(int n, int k, int a, int s) {
    if (k < 1 || k > n) throw std::invalid_argument("hfamily requires 1 <= k <= n");
    if (a < 0 || a >= n) throw std::invalid_argument("hfamily requires 0 <= a < n");
    if (s < 0 || s >= k) throw std::invalid_argument("hfamily requires 0 <= s < k");
    Subset tail = Subset::empty(n);
    for (int e = n - a + 1; e <= n; ++e) tail = tail.with(e);
    std::vector<Subset> out;
    detail::for_each_ksubset(n, k, [&](const Subset& f) {
        if ((f & tail).size() < k - s) out.push_back(f);
    });
    return Family(n, std::move(out),
                  "hfamily:n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                      ",a=" + std::to_string(a) + ",s=" + std::to_string(s));
}

// t-wide k-subsets: not inside any window {i,...,i+t-1}; for a k-subset this
// is max - min >= t.
inline Family make_twide(int n, int k, int t) {
    if (k < 1 || k > n) throw std::invalid_argument("twide requires 1 <= k <= n");
    if (t < 1 || t > n) throw std::invalid_argument("twide requires 1 <= t <= n");
    std::vector<Subset> out;
    detail::for_each_ksubset(n, k, [&](const Subset& f) {
        if (f.max_element() - f.min_element() >= t) out.push_back(f);
    });
    return Family(n, std::move(out),
                  "twide:n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                      ",t=" + std::to_string(t));
}

// {"n": int, "sets": [[int,...], ...]}
inline Family family_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Subset> members;
    for (const auto& s : j.at("sets"))
        members.push_back(Subset::of(n, s.get<std::vector<int>>()));
    return Family(n, std::move(members));
}

inline json family_to_json(const Family& f) {
    json j;
    j["n"] = f.ground();
    j["sets"] = json::array();
    for (const auto& m : f.members()) j["sets"].push_back(m.elements());
    return j;
}

// Family spec mini-grammar:
//   ksubsets:n=,k= | hfamily:n=,k=,a=,s= | twide:n=,k=,t= | file:<path>
inline Family enumerate_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec needs a generator prefix: " + spec);
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open family file: " + rest);
        return family_from_json(json::parse(in));
    }
    std::map<std::string, int> kv;
    size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("bad family spec parameter: " + item);
        kv[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto need = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument(std::string("family spec missing ") + key + ": " + spec);
        return it->second;
    };
    if (kind == "ksubsets") return make_ksubsets(need("n"), need("k"));
    if (kind == "hfamily") return make_hfamily(need("n"), need("k"), need("a"), need("s"));
    if (kind == "twide") return make_twide(need("n"), need("k"), need("t"));
    throw std::invalid_argument("unknown family generator: " + kind);
}

// Enumerate the P-admissible subsets of [n] (one element or none per block).
inline void for_each_admissible(const Partition& p,
                                const std::function<void(const Subset&)>& fn) {
    const size_t l = p.blocks.size();
    Subset cur = Subset::empty(p.n);
    std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == l) { fn(cur); return; }
        rec(bi + 1);  // skip this block
        for (int e : p.blocks[bi].elements()) {
            cur = cur.with(e);
            rec(bi + 1);
            cur = cur.without(e);
        }
    };
    rec(0);
}

// s-goodness: every admissible A that s-nearly-contains some member must
// s-nearly-contain an admissible member. Returns the first failing A if not.
inline bool is_good_pair(const Family& f, const Partition& p, int s,
                         Subset* counterexample = nullptr) {
    if (f.ground() != p.n)
        throw std::invalid_argument("family and partition over different ground sets");
    std::vector<Subset> admissible_members;
    for (const auto& m : f.members())
        if (is_admissible(m, p)) admissible_members.push_back(m);
    bool good = true;
    Subset bad = Subset::empty(p.n);
    for_each_admissible(p, [&](const Subset& a) {
        if (!good) return;
        bool hit = false;
        for (const auto& m : f.members())
            if (subset_within_s(m, a, s)) { hit = true; break; }
        if (!hit) return;
        for (const auto& m : admissible_members)
            if (subset_within_s(m, a, s)) return;
        good = false;
        bad = a;
    });
    if (!good && counterexample) *counterexample = bad;
    return good;
}

// F(X,s) = { A subseteq X : exists F in F with A subseteq F and |F \ A| <= s }
inline Family restricted_family(const Subset& x, const Family& f, int s) {
    if (x.ground() != f.ground())
        throw std::invalid_argument("restriction set over wrong ground set");
    const int n = f.ground();
    std::vector<Subset> out;
    // walk subsets of x directly via the (b - 1) & mask trick
    word mask = x.bits();
    word b = mask;
    while (true) {
        if (b != 0) {
            Subset a(n, b);
            for (const auto& m : f.members()) {
                if (a.subset_of(m) && m.minus(a).size() <= s) {
                    out.push_back(a);
                    break;
                }
            }
        }
        if (b == 0) break;
        b = (b - 1) & mask;
    }
    return Family(n, std::move(out), "restricted");
}

}  // namespace kneser
