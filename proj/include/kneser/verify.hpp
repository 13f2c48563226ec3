#pragma once

// Closed-form defect oracles, theorem-inequality suites over declared
// parameter grids, and the conjecture counterexample hunter. Verdicts
// distinguish "hypothesis-not-met" from "violated" so grid sweeps never
// misreport out-of-hypothesis points.

#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kneser/chromatic.hpp"
#include "kneser/core.hpp"
#include "kneser/defect.hpp"
#include "kneser/family.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/lift.hpp"

namespace kneser {

struct HypothesisNotMet {};

// ecd^r(binom(n,k), s) = n - r(k-s-1) for n >= r(k-1)+1, 0 <= s < k
inline std::optional<int> formula_ecd_ksubsets(int n, int k, int r, int s) {
    if (!(n >= r * (k - 1) + 1 && s >= 0 && s < k)) return std::nullopt;
    return n - r * (k - s - 1);
}

// the three-case formula for ecd^r(H(n,k,a,s), s)
inline std::optional<int> formula_ecd_hfamily(int n, int k, int r, int s, int a) {
    if (!(k >= 2 && r >= 2 && n >= r * k && s >= 0 && s < k && n > a + s && a >= 0))
        return std::nullopt;
    if (a <= k - s - 1) return n - r * (k - s - 1);
    if (a <= r * (k - s) - 2) return n - r * (k - s - 1) - a / (k - s);
    return n - a;
}

// ecd^r(t-wide k-subsets, 0) under n > max(rt, r(k-1)). For t < k the t-wide
// family is all k-subsets; at t = k it drops exactly the consecutive k-blocks
// and the avoiding partitions are r disjoint consecutive k-blocks, so the
// n - rt case already applies there (the t = k boundary belongs to the second
// case, not the first).
inline std::optional<int> formula_ecd_twide(int n, int k, int r, int t) {
    if (!(n > std::max(r * t, r * (k - 1)) && t >= 1 && k >= 2 && r >= 2)) return std::nullopt;
    if (t < k) return n - r * (k - 1);
    return n - r * t;
}

inline int bound_value(int ecd_value, int r) {
    if (r < 2) throw std::invalid_argument("bound_value requires r >= 2");
    return ceil_div(ecd_value, r - 1);
}

struct VerdictRecord {
    std::string theorem_id;
    json parameters = json::object();
    json lhs;  // chi (int or "infinity")
    int rhs = 0;
    bool hypothesis_ok = false;
    std::string verdict;  // holds | violated | hypothesis-not-met | skipped-resource
    json witnesses = json::object();

    json to_json() const {
        json j;
        j["theorem"] = theorem_id;
        j["parameters"] = parameters;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["hypothesis_ok"] = hypothesis_ok;
        j["verdict"] = verdict;
        if (!witnesses.empty()) j["witnesses"] = witnesses;
        return j;
    }
};

namespace detail {

inline json chi_to_json(const ChromaticResult& c) {
    if (c.infinite()) return "infinity";
    return *c.value;
}

inline bool chi_at_least(const ChromaticResult& c, int rhs) {
    return c.infinite() || *c.value >= rhs;
}

inline json defect_witness_json(const DefectResult& d) {
    json j;
    j["value"] = d.value;
    j["x0"] = d.witness_x0.elements();
    j["parts"] = json::array();
    for (const auto& p : d.witness_parts) j["parts"].push_back(p.elements());
    j["kind"] = d.kind;
    return j;
}

}  // namespace detail

// One paper inequality (or the t-wide equality) at one parameter point.
// theorem_id in {kg_partition, kg_s, tilde, goodness, s_disjoint, h_family,
// t_wide}.
inline VerdictRecord check_theorem(const std::string& theorem_id, const Family& f,
                                   const Partition& p, int r, int s,
                                   const std::vector<int>& weights = {},
                                   int t_param = 0, int k_param = 0, int a_param = 0) {
    VerdictRecord rec;
    rec.theorem_id = theorem_id;
    const int n = f.ground();
    rec.parameters["family"] = f.desc();
    rec.parameters["partition"] = p.str();
    rec.parameters["n"] = n;
    rec.parameters["r"] = r;
    rec.parameters["s"] = s;

    auto finish = [&](const ChromaticResult& chrom, int rhs, bool equality = false) {
        rec.lhs = detail::chi_to_json(chrom);
        rec.rhs = rhs;
        bool ok = equality ? (!chrom.infinite() && *chrom.value == rhs)
                           : detail::chi_at_least(chrom, rhs);
        rec.verdict = ok ? "holds" : "violated";
    };

    try {
        bool member_guard = f.empty() || s < f.min_member_size();
        if (theorem_id == "kg_partition") {
            rec.hypothesis_ok = p.max_block_size() <= r;
            if (!rec.hypothesis_ok) { rec.verdict = "hypothesis-not-met"; return rec; }
            auto h = build_kneser(f, p, r, 0);
            auto d = ecd(f, r, 0);
            rec.witnesses["defect"] = detail::defect_witness_json(d);
            finish(chi_exact(h, {.lower_hint = bound_value(d.value, r)}),
                   bound_value(d.value, r));
        } else if (theorem_id == "kg_s" || theorem_id == "tilde" || theorem_id == "goodness") {
            rec.hypothesis_ok = member_guard && p.max_block_size() <= r;
            if (theorem_id == "kg_s")
                rec.hypothesis_ok = member_guard && static_cast<int>(p.blocks.size()) == n;
            if (theorem_id == "goodness")
                rec.hypothesis_ok = rec.hypothesis_ok && is_good_pair(f, p, s / 2);
            if (!rec.hypothesis_ok) { rec.verdict = "hypothesis-not-met"; return rec; }
            auto variant = theorem_id == "tilde" ? KneserVariant::Tilde : KneserVariant::Plain;
            auto h = build_kneser(f, p, r, s, variant);
            auto d = ecd(f, r, s / 2);
            rec.witnesses["defect"] = detail::defect_witness_json(d);
            finish(chi_exact(h, {.lower_hint = bound_value(d.value, r)}),
                   bound_value(d.value, r));
        } else if (theorem_id == "s_disjoint") {
            rec.parameters["weights"] = weights;
            bool wok = true;
            for (const auto& blk : p.blocks)
                if (s_weight(blk, weights) > r) wok = false;
            for (int w : weights)
                if (w < 0 || w > r) wok = false;
            rec.hypothesis_ok = wok;
            if (!rec.hypothesis_ok) { rec.verdict = "hypothesis-not-met"; return rec; }
            auto h = build_s_disjoint(f, p, weights, r);
            auto d = ecd_s_disjoint(f, r, weights);
            rec.witnesses["defect"] = detail::defect_witness_json(d);
            ChromaticResult chrom = chi_exact(h);
            finish(chrom, bound_value(d.value, r));
        } else if (theorem_id == "h_family") {
            int k = k_param, a = a_param;
            rec.parameters["k"] = k;
            rec.parameters["a"] = a;
            rec.hypothesis_ok = k >= 2 && r >= 2 && a >= 0 && a < n && n >= r * k &&
                                s >= 0 && s < k && a <= r * (k - s - 1);
            if (!rec.hypothesis_ok) { rec.verdict = "hypothesis-not-met"; return rec; }
            auto h = build_kneser(f, Partition::singletons(n), r, s);
            int rhs = bound_value(n - r * (k - s / 2 - 1), r);
            finish(chi_exact(h, {.lower_hint = rhs}), rhs);
        } else if (theorem_id == "t_wide") {
            int k = k_param, t = t_param;
            rec.parameters["k"] = k;
            rec.parameters["t"] = t;
            rec.hypothesis_ok = k >= 1 && r >= 2 && n >= r * k && t >= 1 &&
                                t <= r * (k - 2) + 1;
            if (!rec.hypothesis_ok) { rec.verdict = "hypothesis-not-met"; return rec; }
            auto h = induce_t_wide(n, k, Partition::singletons(n), r, t);
            int rhs = bound_value(n - r * (k - 1), r);
            // upper bound via the standard coloring, exact value via the solver
            auto std_col = standard_kneser_coloring(n, k, r, h);
            int used = 0;
            for (int c : std_col) used = std::max(used, c);
            auto chrom = chi_exact(h, {.lower_hint = rhs});
            rec.witnesses["standard_coloring_colors"] = used;
            finish(chrom, rhs, /*equality=*/true);
            if (rec.verdict == "holds" && used > rhs) rec.verdict = "violated";
        } else {
            throw std::invalid_argument("unknown theorem id: " + theorem_id);
        }
    } catch (const std::runtime_error& e) {
        rec.verdict = "skipped-resource";
        rec.witnesses["reason"] = e.what();
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Grid suites
// ---------------------------------------------------------------------------

struct SuiteReport {
    std::vector<VerdictRecord> records;
    int holds = 0, violated = 0, hypothesis_not_met = 0, skipped = 0, mismatches = 0;

    void tally(const VerdictRecord& r) {
        records.push_back(r);
        if (r.verdict == "holds") ++holds;
        else if (r.verdict == "violated") ++violated;
        else if (r.verdict == "hypothesis-not-met") ++hypothesis_not_met;
        else ++skipped;
    }

    json to_json() const {
        json j;
        j["holds"] = holds;
        j["violated"] = violated;
        j["hypothesis_not_met"] = hypothesis_not_met;
        j["skipped_resource"] = skipped;
        j["mismatches"] = mismatches;
        j["records"] = json::array();
        for (const auto& r : records) j["records"].push_back(r.to_json());
        return j;
    }
};

// Brute-force ecd vs the closed forms, exact integer match required.
inline SuiteReport check_ecd_against_formulas(const json& cfg) {
    SuiteReport rep;
    auto record = [&](const std::string& id, const json& params, int brute,
                      std::optional<int> formula) {
        VerdictRecord r;
        r.theorem_id = id;
        r.parameters = params;
        r.lhs = brute;
        r.hypothesis_ok = formula.has_value();
        if (!formula) {
            r.verdict = "hypothesis-not-met";
        } else {
            r.rhs = *formula;
            r.verdict = (brute == *formula) ? "holds" : "violated";
            if (brute != *formula) ++rep.mismatches;
        }
        rep.tally(r);
    };

    if (cfg.contains("ksubsets")) {
        const auto& g = cfg["ksubsets"];
        int n_max = g.value("n_max", 10), k_max = g.value("k_max", 4);
        for (int r : g.value("r", std::vector<int>{2, 3}))
            for (int n = 2; n <= n_max; ++n)
                for (int k = 2; k <= std::min(k_max, n); ++k)
                    for (int s = 0; s < k; ++s) {
                        auto fm = formula_ecd_ksubsets(n, k, r, s);
                        if (!fm) continue;
                        int brute = ecd(make_ksubsets(n, k), r, s).value;
                        record("formula_ksubsets",
                               {{"n", n}, {"k", k}, {"r", r}, {"s", s}}, brute, fm);
                    }
    }
    if (cfg.contains("hfamily")) {
        const auto& g = cfg["hfamily"];
        int n_max = g.value("n_max", 9), k_max = g.value("k_max", 4);
        for (int r : g.value("r", std::vector<int>{2, 3}))
            for (int n = 2; n <= n_max; ++n)
                for (int k = 2; k <= std::min(k_max, n); ++k)
                    for (int s = 0; s < k; ++s)
                        for (int a = 0; a < n; ++a) {
                            auto fm = formula_ecd_hfamily(n, k, r, s, a);
                            if (!fm) continue;
                            int brute = ecd(make_hfamily(n, k, a, s), r, s).value;
                            record("formula_hfamily",
                                   {{"n", n}, {"k", k}, {"r", r}, {"s", s}, {"a", a}},
                                   brute, fm);
                        }
    }
    if (cfg.contains("twide")) {
        const auto& g = cfg["twide"];
        int n_max = g.value("n_max", 10), k_max = g.value("k_max", 4);
        for (int r : g.value("r", std::vector<int>{2, 3}))
            for (int n = 2; n <= n_max; ++n)
                for (int k = 2; k <= std::min(k_max, n); ++k)
                    for (int t = 1; t <= n; ++t) {
                        auto fm = formula_ecd_twide(n, k, r, t);
                        if (!fm) continue;
                        Family fam = make_twide(n, k, t);
                        if (fam.empty()) {
                            // empty family has defect 0; formula region should
                            // not reach it, record a mismatch if it does
                            record("formula_twide",
                                   {{"n", n}, {"k", k}, {"r", r}, {"t", t}}, 0, fm);
                            continue;
                        }
                        int brute = ecd(fam, r, 0).value;
                        record("formula_twide",
                               {{"n", n}, {"k", k}, {"r", r}, {"t", t}}, brute, fm);
                    }
    }
    return rep;
}

// Inequality theorems over the declared grid (plain, tilde, goodness).
inline SuiteReport run_theorem_suite(const json& cfg) {
    SuiteReport rep;
    int n_max = cfg.value("n_max", 8), k_max = cfg.value("k_max", 3);
    auto rs = cfg.value("r", std::vector<int>{2, 3});
    auto ss = cfg.value("s", std::vector<int>{0, 1, 2});
    auto parts = cfg.value("partitions", std::vector<std::string>{"singletons", "blocks"});
    for (int r : rs)
        for (int n = 2; n <= n_max; ++n)
            for (int k = 2; k <= std::min(k_max, n); ++k) {
                Family fam = make_ksubsets(n, k);
                for (const auto& pkind : parts) {
                    Partition p = pkind == "singletons" ? Partition::singletons(n)
                                                        : Partition::consecutive_blocks(n, r);
                    for (int s : ss) {
                        if (s >= k) continue;
                        if (s == 0)
                            rep.tally(check_theorem("kg_partition", fam, p, r, 0));
                        if (pkind == "singletons")
                            rep.tally(check_theorem("kg_s", fam, p, r, s));
                        rep.tally(check_theorem("tilde", fam, p, r, s));
                        rep.tally(check_theorem("goodness", fam, p, r, s));
                    }
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Conjecture hunter: the strengthened bound with s in place of floor(s/2)
// ---------------------------------------------------------------------------

struct HuntReport {
    int points = 0, violations = 0, skipped = 0;
    std::vector<json> log;  // one record per grid point, deterministic order
    bool complete = true;

    json to_json() const {
        json j;
        j["points"] = points;
        j["violations"] = violations;
        j["skipped"] = skipped;
        j["complete"] = complete;
        return j;
    }
};

namespace detail {

// A reported violation must survive three independent checks: the chi witness
// is proper at chi, a fresh exhaustive search confirms infeasibility at chi-1,
// and the defect witness avoids the family.
inline bool hunt_certificates_ok(const Hypergraph& h, const ChromaticResult& chrom,
                                 const DefectResult& d, const Family& fam, int s) {
    if (chrom.infinite()) return false;
    if (!is_proper(h, chrom.witness_coloring)) return false;
    if (*chrom.value > 1) {
        bool loop = false;
        auto edges = distinct_edges(h, &loop);
        ChiSearcher fresh(h, edges);
        if (fresh.solve(*chrom.value - 1)) return false;
    }
    return is_avoiding_partition(d.witness_x0, d.witness_parts, fam, s);
}

}  // namespace detail

inline HuntReport hunt_counterexample(const json& cfg, const std::string& checkpoint_path = "") {
    HuntReport rep;
    int n_max = cfg.value("n_max", 8), k_max = cfg.value("k_max", 3);
    auto rs = cfg.value("r", std::vector<int>{2});
    auto ss = cfg.value("s", std::vector<int>{1, 2});
    // the four bound variants under the strengthened defect parameter
    const std::vector<std::string> variants{"kg_partition", "kg_s", "tilde", "goodness"};

    std::set<std::string> done;
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = json::parse(line);
            done.insert(j.at("id").get<std::string>());
        }
    }
    std::ofstream out;
    if (!checkpoint_path.empty())
        out.open(checkpoint_path, std::ios::app);

    for (int r : rs)
        for (int n = 2; n <= n_max; ++n)
            for (int k = 2; k <= std::min(k_max, n); ++k)
                for (int s : ss) {
                    if (s >= k) continue;  // loop-edge regime, bound is vacuous
                    Family fam = make_ksubsets(n, k);
                    Partition p = Partition::singletons(n);
                    // with the trivial partition the plain and tilde hypergraphs
                    // coincide; compute chi once per distinct graph
                    std::optional<ChromaticResult> chrom_s;
                    auto chi_of = [&](const Hypergraph& h, bool s_graph) -> ChromaticResult {
                        if (s_graph && chrom_s) return *chrom_s;
                        auto c = chi_exact(h);
                        if (s_graph) chrom_s = c;
                        return c;
                    };
                    for (const auto& variant : variants) {
                        std::string id = "ksubsets:n=" + std::to_string(n) +
                                         ",k=" + std::to_string(k) +
                                         ";r=" + std::to_string(r) +
                                         ";s=" + std::to_string(s) + ";" + variant;
                        ++rep.points;
                        if (done.count(id)) continue;
                        json entry;
                        entry["id"] = id;
                        entry["variant"] = variant;
                        // thm1 carries no s; the other three get s where the
                        // proven statements use floor(s/2)
                        int s_used = variant == "kg_partition" ? 0 : s;
                        auto kind = variant == "tilde" ? KneserVariant::Tilde
                                                       : KneserVariant::Plain;
                        int s_edges = variant == "kg_partition" ? 0 : s;
                        auto h = build_kneser(fam, p, r, s_edges, kind);
                        auto d = ecd(fam, r, s_used);
                        int rhs = bound_value(d.value, r);
                        auto chrom = chi_of(h, variant != "kg_partition");
                        entry["chi"] = detail::chi_to_json(chrom);
                        entry["strengthened_bound"] = rhs;
                        bool violated = !detail::chi_at_least(chrom, rhs);
                        if (violated) {
                            bool cert_ok =
                                detail::hunt_certificates_ok(h, chrom, d, fam, s_used);
                            entry["certificates_ok"] = cert_ok;
                            if (!cert_ok) violated = false;  // implementation bug, not a finding
                        }
                        entry["violated"] = violated;
                        if (violated) ++rep.violations;
                        rep.log.push_back(entry);
                        if (out.is_open()) out << entry.dump() << "\n";
                    }
                }
    return rep;
}

}  // namespace kneser
