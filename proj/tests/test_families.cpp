#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kneser/family.hpp"

using namespace kneser;

namespace {

// naive generator reference: filter all 2^n subsets by the definitions
std::vector<Subset> naive_ksubsets(int n, int k) {
    std::vector<Subset> out;
    for (word b = 1; b < (word{1} << n); ++b)
        if (std::popcount(b) == k) out.push_back(Subset(n, b));
    std::sort(out.begin(), out.end(), order_less);
    return out;
}

std::vector<Subset> naive_hfamily(int n, int k, int a, int s) {
    Subset tail = Subset::empty(n);
    for (int e = n - a + 1; e <= n; ++e) tail = tail.with(e);
    std::vector<Subset> out;
    for (const auto& f : naive_ksubsets(n, k))
        if (!subset_within_s(f, tail, s)) out.push_back(f);
    return out;
}

std::vector<Subset> naive_twide(int n, int k, int t) {
    std::vector<Subset> out;
    for (const auto& f : naive_ksubsets(n, k)) {
        bool in_window = false;
        for (int i = 1; i + t - 1 <= n; ++i) {
            Subset win = Subset::empty(n);
            for (int e = i; e <= i + t - 1; ++e) win = win.with(e);
            if (f.subset_of(win)) { in_window = true; break; }
        }
        if (!in_window) out.push_back(f);
    }
    return out;
}

}  // namespace

TEST_CASE("ksubsets(4,2) has the 6 pairs") {
    auto f = make_ksubsets(4, 2);
    CHECK(f.size() == 6);
    CHECK(f.contains(Subset::of(4, {1, 2})));
    CHECK(f.contains(Subset::of(4, {3, 4})));
}

TEST_CASE("generators agree with the naive filter") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= std::min(4, n); ++k) {
            CHECK(make_ksubsets(n, k).members() == naive_ksubsets(n, k));
            for (int t = 1; t <= n; ++t)
                CHECK(make_twide(n, k, t).members() == naive_twide(n, k, t));
            for (int s = 0; s < k; ++s)
                for (int a = 0; a < n; ++a)
                    CHECK(make_hfamily(n, k, a, s).members() == naive_hfamily(n, k, a, s));
        }
}

TEST_CASE("hfamily degenerates to ksubsets when a <= k-s-1") {
    CHECK(make_hfamily(8, 3, 2, 0).members() == make_ksubsets(8, 3).members());
    CHECK(make_hfamily(7, 3, 1, 1).members() == make_ksubsets(7, 3).members());
}

TEST_CASE("twide(5,2,2) drops exactly the 4 consecutive pairs") {
    auto f = make_twide(5, 2, 2);
    CHECK(f.size() == 6);
    CHECK(!f.contains(Subset::of(5, {1, 2})));
    CHECK(!f.contains(Subset::of(5, {4, 5})));
    CHECK(f.contains(Subset::of(5, {1, 3})));
}

TEST_CASE("twide t=1 keeps everything for k >= 2") {
    CHECK(make_twide(6, 2, 1).members() == make_ksubsets(6, 2).members());
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(make_ksubsets(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_hfamily(5, 2, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_hfamily(5, 2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_twide(5, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(Family(3, {Subset::empty(3)}), std::invalid_argument);
}

TEST_CASE("family ordering is size-then-lex and duplicate-free") {
    Family f(4, {Subset::of(4, {1, 2}), Subset::of(4, {3}), Subset::of(4, {1, 2})});
    REQUIRE(f.size() == 2);
    CHECK(f.members()[0] == Subset::of(4, {3}));
    CHECK(f.members()[1] == Subset::of(4, {1, 2}));
}

TEST_CASE("goodness: k-subsets with small blocks") {
    // hypotheses of the goodness remark: n >= r(k-1)+1, 0 <= s < k, |P_i| <= r
    auto P = Partition::parse("1,2|3,4|5", 5);
    CHECK(is_good_pair(make_ksubsets(5, 2), P, 0));
}

TEST_CASE("goodness holds on the remark's hypothesis grid") {
    for (int r : {2, 3})
        for (int n = 3; n <= 9; ++n)
            for (int k = 2; k <= std::min(4, n); ++k) {
                if (n < r * (k - 1) + 1) continue;
                auto f = make_ksubsets(n, k);
                for (int s = 0; s < k; ++s) {
                    CHECK(is_good_pair(f, Partition::singletons(n), s));
                    CHECK(is_good_pair(f, Partition::consecutive_blocks(n, r), s));
                }
            }
}

TEST_CASE("goodness: trivial cases") {
    Family f(3, {Subset::of(3, {1})});
    CHECK(is_good_pair(f, Partition::singletons(3), 0));
    CHECK(is_good_pair(f, Partition::singletons(3), 2));
}

TEST_CASE("goodness: H-family per the examples remark") {
    // (H(8,3,2,1), P) is 0-good when >= s+1 = 2 blocks avoid the tail {7,8}
    auto f = make_hfamily(8, 3, 2, 1);
    auto P = Partition::parse("1,2|3,4|5,6|7,8", 8);
    CHECK(is_good_pair(f, P, 0));
}

TEST_CASE("goodness counterexample is reported") {
    // family {{1,2}} with blocks 1,2|3,4: A={1,3} is admissible and {1,2} is
    // within 1 of it, but the only member is inadmissible
    Family f(4, {Subset::of(4, {1, 2})});
    auto P = Partition::parse("1,2|3,4", 4);
    Subset bad;
    CHECK(!is_good_pair(f, P, 1, &bad));
    // the witness really is a failing admissible subset
    CHECK(is_admissible(bad, P));
    bool hit = false, hit_adm = false;
    for (const auto& m : f.members()) {
        if (subset_within_s(m, bad, 1)) hit = true;
        if (is_admissible(m, P) && subset_within_s(m, bad, 1)) hit_adm = true;
    }
    CHECK(hit);
    CHECK(!hit_adm);
}

TEST_CASE("restricted family") {
    // X={1,2,3}, F={{1,2,4}}, s=1 -> {{1,2}}
    Family f(4, {Subset::of(4, {1, 2, 4})});
    auto res = restricted_family(Subset::of(4, {1, 2, 3}), f, 1);
    REQUIRE(res.size() == 1);
    CHECK(res.members()[0] == Subset::of(4, {1, 2}));
}

TEST_CASE("restricted family with s=0 over the full ground set is F itself") {
    auto f = make_ksubsets(5, 2);
    auto res = restricted_family(Subset::full(5), f, 0);
    CHECK(res.members() == f.members());
}

TEST_CASE("restricted family of the empty set is empty") {
    auto f = make_ksubsets(4, 2);
    CHECK(restricted_family(Subset::empty(4), f, 2).empty());
}

TEST_CASE("restricted family agrees with its definition by brute force") {
    Family f(5, {Subset::of(5, {1, 2, 4}), Subset::of(5, {2, 5}), Subset::of(5, {3})});
    for (word xb = 0; xb < 32; ++xb) {
        Subset x(5, xb);
        for (int s = 0; s <= 2; ++s) {
            auto res = restricted_family(x, f, s);
            for (word ab = 1; ab < 32; ++ab) {
                Subset a(5, ab);
                if (!a.subset_of(x)) continue;
                bool expect = false;
                for (const auto& m : f.members())
                    if (a.subset_of(m) && subset_within_s(m, a, s)) expect = true;
                CHECK(res.contains(a) == expect);
            }
        }
    }
}

TEST_CASE("enumerate_family parses the spec mini-grammar") {
    CHECK(enumerate_family("ksubsets:n=4,k=2").members() == make_ksubsets(4, 2).members());
    CHECK(enumerate_family("hfamily:n=8,k=3,a=2,s=1").members() ==
          make_hfamily(8, 3, 2, 1).members());
    CHECK(enumerate_family("twide:n=5,k=2,t=2").members() == make_twide(5, 2, 2).members());
    CHECK_THROWS_AS(enumerate_family("ksubsets:n=4"), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family("mystery:n=4,k=2"), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family("noprefix"), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family("file:/no/such/path.json"), std::invalid_argument);
}

TEST_CASE("families round-trip through JSON") {
    auto f = make_ksubsets(4, 2);
    auto j = family_to_json(f);
    CHECK(j.at("n") == 4);
    CHECK(j.at("sets").size() == 6);
    auto back = family_from_json(j);
    CHECK(back.members() == f.members());
}
