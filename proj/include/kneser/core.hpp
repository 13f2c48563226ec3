#pragma once

// Ground sets, subsets as 64-bit masks, partitions, and the basic
// relations (containment up to s exceptions, admissibility, tilde excess).
// Everything downstream is exhaustive search over n <= 64, so subsets are
// plain machine words and all set algebra is word operations.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kneser {

using word = std::uint64_t;

inline constexpr int kMaxGround = 64;

class Subset {
public:
    Subset() = default;
    Subset(int n, word bits) : n_(n), bits_(bits) {
        if (n < 0 || n > kMaxGround)
            throw std::invalid_argument("ground set size out of range [0,64]");
        if (n < kMaxGround && (bits >> n) != 0)
            throw std::invalid_argument("subset has elements outside [1,n]");
    }

    static Subset empty(int n) { return Subset(n, 0); }
    static Subset full(int n) {
        return Subset(n, n == kMaxGround ? ~word{0} : ((word{1} << n) - 1));
    }
    static Subset of(int n, std::initializer_list<int> elems) {
        return of(n, std::vector<int>(elems));
    }
    static Subset of(int n, const std::vector<int>& elems) {
        word b = 0;
        for (int e : elems) {
            if (e < 1 || e > n)
                throw std::invalid_argument("element outside [1,n]");
            b |= word{1} << (e - 1);
        }
        return Subset(n, b);
    }

    int ground() const { return n_; }
    word bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty_set() const { return bits_ == 0; }
    bool contains(int e) const { return e >= 1 && e <= n_ && (bits_ >> (e - 1)) & 1; }

    Subset with(int e) const { return Subset(n_, bits_ | (word{1} << (e - 1))); }
    Subset without(int e) const { return Subset(n_, bits_ & ~(word{1} << (e - 1))); }

    Subset operator|(const Subset& o) const { check(o); return Subset(n_, bits_ | o.bits_); }
    Subset operator&(const Subset& o) const { check(o); return Subset(n_, bits_ & o.bits_); }
    Subset minus(const Subset& o) const { check(o); return Subset(n_, bits_ & ~o.bits_); }
    Subset complement() const { return full(n_).minus(*this); }

    bool subset_of(const Subset& o) const { check(o); return (bits_ & ~o.bits_) == 0; }

    bool operator==(const Subset& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Subset& o) const { return !(*this == o); }

    int min_element() const {
        if (bits_ == 0) throw std::logic_error("min_element of empty subset");
        return std::countr_zero(bits_) + 1;
    }
    int max_element() const {
        if (bits_ == 0) throw std::logic_error("max_element of empty subset");
        return 64 - std::countl_zero(bits_);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        word b = bits_;
        while (b) {
            out.push_back(std::countr_zero(b) + 1);
            b &= b - 1;
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (int e : elements()) {
            if (!first) os << ',';
            os << e;
            first = false;
        }
        os << '}';
        return os.str();
    }

    void check(const Subset& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("subsets over different ground sets");
    }

private:
    int n_ = 0;
    word bits_ = 0;
};

// Ascending-element-list lexicographic order; a strict prefix is smaller.
inline bool lex_less(const Subset& a, const Subset& b) {
    a.check(b);
    word d = a.bits() ^ b.bits();
    if (d == 0) return false;
    word low = d & (~d + 1);
    // The set owning the smallest differing element compares smaller.
    return (a.bits() & low) != 0;
}

// Size first, then lex: the "complete ordering" used everywhere, in
// particular by the Tucker map.
inline bool order_less(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

struct Partition {
    int n = 0;
    std::vector<Subset> blocks;

    Partition() = default;
    Partition(int n_, std::vector<Subset> blocks_) : n(n_), blocks(std::move(blocks_)) {
        word seen = 0;
        for (const auto& b : blocks) {
            if (b.ground() != n)
                throw std::invalid_argument("partition block over wrong ground set");
            if (b.empty_set())
                throw std::invalid_argument("partition block must be non-empty");
            if (seen & b.bits())
                throw std::invalid_argument("partition blocks overlap");
            seen |= b.bits();
        }
        if (seen != Subset::full(n).bits())
            throw std::invalid_argument("partition blocks do not cover [1,n]");
    }

    static Partition singletons(int n) {
        std::vector<Subset> bs;
        for (int i = 1; i <= n; ++i) bs.push_back(Subset::of(n, {i}));
        return Partition(n, std::move(bs));
    }

    // Consecutive blocks {1..sz},{sz+1..2sz},... with a short last block.
    static Partition consecutive_blocks(int n, int sz) {
        if (sz < 1) throw std::invalid_argument("block size must be positive");
        std::vector<Subset> bs;
        for (int start = 1; start <= n; start += sz) {
            Subset b = Subset::empty(n);
            for (int e = start; e <= std::min(n, start + sz - 1); ++e) b = b.with(e);
            bs.push_back(b);
        }
        return Partition(n, std::move(bs));
    }

    // Text shorthand: "1,2|3,4|5"; also "singletons" and "blocks:<size>".
    static Partition parse(const std::string& text, int n) {
        if (text.empty() || text == "singletons") return singletons(n);
        if (text.rfind("blocks:", 0) == 0)
            return consecutive_blocks(n, std::stoi(text.substr(7)));
        std::vector<Subset> bs;
        std::istringstream in(text);
        std::string blk;
        while (std::getline(in, blk, '|')) {
            std::vector<int> elems;
            std::istringstream bin(blk);
            std::string tok;
            while (std::getline(bin, tok, ',')) elems.push_back(std::stoi(tok));
            bs.push_back(Subset::of(n, elems));
        }
        return Partition(n, std::move(bs));
    }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (i) os << '|';
            auto es = blocks[i].elements();
            for (size_t j = 0; j < es.size(); ++j) {
                if (j) os << ',';
                os << es[j];
            }
        }
        return os.str();
    }

    int block_of(int e) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].contains(e)) return static_cast<int>(i);
        throw std::invalid_argument("element outside ground set");
    }

    int max_block_size() const {
        int m = 0;
        for (const auto& b : blocks) m = std::max(m, b.size());
        return m;
    }
};

// A subseteq_s B: at most s elements of A fall outside B.
inline bool subset_within_s(const Subset& a, const Subset& b, int s) {
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    a.check(b);
    return a.minus(b).size() <= s;
}

inline bool is_admissible(const Subset& a, const Partition& p) {
    if (a.ground() != p.n)
        throw std::invalid_argument("subset and partition over different ground sets");
    for (const auto& blk : p.blocks)
        if ((a & blk).size() > 1) return false;
    return true;
}

// sum_i max(|A cap P_i| - 1, 0); zero exactly when A is P-admissible.
inline int tilde_excess(const Subset& a, const Partition& p) {
    if (a.ground() != p.n)
        throw std::invalid_argument("subset and partition over different ground sets");
    int total = 0;
    for (const auto& blk : p.blocks) {
        int c = (a & blk).size();
        if (c > 1) total += c - 1;
    }
    return total;
}

inline int ceil_div(int num, int den) {
    // exact integer ceiling, valid for negative numerators
    int q = num / den, r = num % den;
    return q + ((r != 0 && ((r > 0) == (den > 0))) ? 1 : 0);
}

}  // namespace kneser
