// kneser: exact defects, chromatic numbers, liftings, Tucker-condition
// replay, and theorem verification for generalized Kneser-type hypergraphs.
//
// All JSON output is deterministic: identical configuration produces
// byte-identical bytes regardless of --workers (computation is sequential;
// the flag is accepted for script compatibility).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kneser/chromatic.hpp"
#include "kneser/defect.hpp"
#include "kneser/family.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/lift.hpp"
#include "kneser/tucker.hpp"
#include "kneser/verify.hpp"

using namespace kneser;

namespace {

std::vector<int> parse_weights(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

void emit(const json& j, bool as_json, const std::string& out_path,
          const std::string& human) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    return q + "\"";
}

void write_verdict_csv(const std::string& path, const SuiteReport& rep) {
    std::ofstream out(path);
    out << "theorem,parameters,lhs,rhs,verdict\r\n";
    for (const auto& r : rep.records) {
        out << csv_field(r.theorem_id) << "," << csv_field(r.parameters.dump()) << ","
            << csv_field(r.lhs.dump()) << "," << r.rhs << "," << csv_field(r.verdict)
            << "\r\n";
    }
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open config file: " + path);
    return json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for generalized Kneser-type hypergraphs"};
    app.require_subcommand(1);
    int workers = 1;
    app.add_option("--workers", workers, "worker count (output is identical for any value)")
        ->check(CLI::PositiveNumber);

    std::string family_spec, partition_str = "singletons", variant_str = "plain";
    std::string weights_str, hypergraph_path, config_path, out_path, csv_path;
    std::string checkpoint_path, suite = "all", emit_what = "homomorphism-report";
    int r = 2, s = 0, t = 0, p = 2;
    bool as_json = false, witness = false;
    std::optional<int> n_check;

    auto* cmd_ecd = app.add_subcommand("ecd", "equitable colorability defect");
    cmd_ecd->add_option("--family", family_spec)->required();
    cmd_ecd->add_option("--r", r)->required();
    cmd_ecd->add_option("--s", s);
    cmd_ecd->add_option("--weights", weights_str, "S-weights: compute ecd_S instead");
    cmd_ecd->add_flag("--witness", witness);
    cmd_ecd->add_flag("--json", as_json);
    cmd_ecd->add_option("--out", out_path);

    auto* cmd_chi = app.add_subcommand("chi", "exact chromatic number");
    cmd_chi->add_option("--hypergraph", hypergraph_path, "hypergraph JSON file");
    cmd_chi->add_option("--family", family_spec);
    cmd_chi->add_option("--partition", partition_str);
    cmd_chi->add_option("--r", r);
    cmd_chi->add_option("--s", s);
    cmd_chi->add_option("--variant", variant_str)
        ->check(CLI::IsMember({"plain", "tilde", "sdisjoint", "twide"}));
    cmd_chi->add_option("--weights", weights_str);
    cmd_chi->add_option("--t", t);
    cmd_chi->add_flag("--witness", witness);
    cmd_chi->add_flag("--json", as_json);
    cmd_chi->add_option("--out", out_path);

    auto* cmd_lift = app.add_subcommand("lift", "S-weight lifting");
    cmd_lift->add_option("--family", family_spec)->required();
    cmd_lift->add_option("--weights", weights_str)->required();
    cmd_lift->add_option("--partition", partition_str);
    cmd_lift->add_option("--r", r);
    cmd_lift->add_option("--emit", emit_what)
        ->check(CLI::IsMember({"family", "partition", "homomorphism-report"}));
    cmd_lift->add_flag("--json", as_json);
    cmd_lift->add_option("--out", out_path);

    auto* cmd_tucker = app.add_subcommand("tucker-check", "Z_p-Tucker condition replay");
    cmd_tucker->add_option("--p", p)->required();
    cmd_tucker->add_option("--n", n_check, "expected ground-set size (cross-check)");
    cmd_tucker->add_option("--family", family_spec)->required();
    cmd_tucker->add_option("--s", s);
    cmd_tucker->add_option("--partition", partition_str);
    std::string tucker_variant = "tilde";
    cmd_tucker->add_option("--variant", tucker_variant)
        ->check(CLI::IsMember({"plain", "tilde"}));
    cmd_tucker->add_flag("--json", as_json);
    cmd_tucker->add_option("--out", out_path);

    auto* cmd_verify = app.add_subcommand("verify", "formula and theorem suites");
    cmd_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"formulas", "theorems", "all"}));
    cmd_verify->add_option("--config", config_path)->required();
    cmd_verify->add_option("--out", out_path, "verdicts JSONL file");
    cmd_verify->add_option("--csv", csv_path, "verdict table CSV file");
    cmd_verify->add_flag("--json", as_json);

    auto* cmd_hunt = app.add_subcommand("hunt", "counterexample hunt for the strengthened bound");
    cmd_hunt->add_option("--config", config_path)->required();
    cmd_hunt->add_option("--checkpoint", checkpoint_path);
    cmd_hunt->add_flag("--json", as_json);
    cmd_hunt->add_option("--out", out_path);

    // let global flags like --workers appear after the subcommand
    for (CLI::App* sc : {cmd_ecd, cmd_chi, cmd_lift, cmd_tucker, cmd_verify, cmd_hunt})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_ecd->parsed()) {
            Family f = enumerate_family(family_spec);
            DefectResult d = weights_str.empty()
                                 ? ecd(f, r, s)
                                 : ecd_s_disjoint(f, r, parse_weights(weights_str));
            json j = detail::defect_witness_json(d);
            if (!witness) {
                j.erase("x0");
                j.erase("parts");
            }
            j["family"] = f.desc();
            j["r"] = r;
            if (weights_str.empty()) j["s"] = s;
            emit(j, as_json, out_path, std::to_string(d.value));
            return 0;
        }

        if (cmd_chi->parsed()) {
            Hypergraph h;
            if (!hypergraph_path.empty()) {
                std::ifstream in(hypergraph_path);
                if (!in)
                    throw std::invalid_argument("cannot open hypergraph file: " +
                                                hypergraph_path);
                json hj = json::parse(in);
                int n = 0;
                for (const auto& v : hj.at("vertices"))
                    for (int e : v.get<std::vector<int>>()) n = std::max(n, e);
                h = Hypergraph::from_json(hj, n);
            } else {
                if (family_spec.empty())
                    throw CLI::ValidationError("--family", "chi needs --family or --hypergraph");
                Family f = enumerate_family(family_spec);
                Partition part = Partition::parse(partition_str, f.ground());
                if (variant_str == "plain")
                    h = build_kneser(f, part, r, s, KneserVariant::Plain);
                else if (variant_str == "tilde")
                    h = build_kneser(f, part, r, s, KneserVariant::Tilde);
                else if (variant_str == "sdisjoint")
                    h = build_s_disjoint(f, part, parse_weights(weights_str), r);
                else
                    h = induce_t_wide(f.ground(), f.min_member_size(), part, r, t);
            }
            auto res = chi_exact(h);
            json j;
            j["chi"] = detail::chi_to_json(res);
            j["vertices"] = h.vertices.size();
            j["edges"] = h.edges.size();
            if (witness) j["witness_coloring"] = res.witness_coloring;
            std::string human = res.infinite() ? "infinity" : std::to_string(*res.value);
            emit(j, as_json, out_path, human);
            return 0;
        }

        if (cmd_lift->parsed()) {
            Family f = enumerate_family(family_spec);
            Partition part = Partition::parse(partition_str, f.ground());
            auto weights = parse_weights(weights_str);
            json j;
            std::string human;
            if (emit_what == "family") {
                j = family_to_json(lift_family(f, lift_ground(weights)));
                human = "lifted family with " + std::to_string(j["sets"].size()) + " members";
            } else if (emit_what == "partition") {
                std::vector<int> ws;
                auto pb = lift_partition(part, lift_ground(weights), &ws);
                j["partition"] = json::array();
                for (const auto& blk : pb.blocks) j["partition"].push_back(blk.elements());
                j["block_weights"] = ws;
                human = "lifted partition with " + std::to_string(pb.blocks.size()) + " blocks";
            } else {
                auto rep = lift_homomorphism(f, part, weights, r);
                j["homomorphism"] = rep.homomorphism;
                j["copy_pairs_excluded"] = rep.copy_pairs_excluded;
                j["lifted_vertices"] = rep.lifted.vertices.size();
                j["target_vertices"] = rep.target.vertices.size();
                j["vertex_map"] = rep.map.assignment;
                human = rep.homomorphism ? "homomorphism verified" : "NOT a homomorphism";
            }
            emit(j, as_json, out_path, human);
            return 0;
        }

        if (cmd_tucker->parsed()) {
            Family f = enumerate_family(family_spec);
            if (n_check && *n_check != f.ground())
                throw CLI::ValidationError("--n", "family ground set has size " +
                                                      std::to_string(f.ground()));
            Partition part = Partition::parse(partition_str, f.ground());
            auto variant = tucker_variant == "plain" ? KneserVariant::Plain
                                                     : KneserVariant::Tilde;
            auto ctx = TuckerContext::make(f, part, s, p, variant);
            auto rep = check_tucker_conditions(ctx);
            json j;
            j["p"] = rep.p;
            j["n"] = rep.n;
            j["alpha"] = rep.alpha;
            j["t"] = rep.t;
            j["m"] = rep.m;
            j["equivariant"] = rep.equivariant;
            j["condition2"] = rep.condition2;
            j["condition3"] = rep.condition3;
            j["inequality"] = rep.inequality;
            j["faces_checked"] = rep.faces_checked;
            j["chains_checked"] = rep.chains_checked;
            if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
            emit(j, as_json, out_path,
                 rep.all_pass() ? "all conditions hold" : "FAILED: " + rep.counterexample);
            return rep.all_pass() ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            json cfg = load_config(config_path);
            SuiteReport formulas, theorems;
            if (suite == "formulas" || suite == "all")
                formulas = check_ecd_against_formulas(cfg.value("formulas", json::object()));
            if (suite == "theorems" || suite == "all")
                theorems = run_theorem_suite(cfg.value("theorems", json::object()));
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                for (const auto& rec : formulas.records) out << rec.to_json().dump() << "\n";
                for (const auto& rec : theorems.records) out << rec.to_json().dump() << "\n";
            }
            if (!csv_path.empty()) {
                SuiteReport all;
                for (const auto& rec : formulas.records) all.tally(rec);
                for (const auto& rec : theorems.records) all.tally(rec);
                write_verdict_csv(csv_path, all);
            }
            json j;
            j["suite"] = suite;
            if (suite != "theorems") j["formulas"] = formulas.to_json();
            if (suite != "formulas") j["theorems"] = theorems.to_json();
            int bad = formulas.violated + formulas.mismatches + theorems.violated;
            std::string human = "holds=" + std::to_string(formulas.holds + theorems.holds) +
                                " violated=" + std::to_string(bad) + " hypothesis-not-met=" +
                                std::to_string(formulas.hypothesis_not_met +
                                               theorems.hypothesis_not_met) +
                                " skipped=" + std::to_string(formulas.skipped +
                                                             theorems.skipped);
            if (as_json || !out_path.empty()) {
                // summary JSON intentionally omits the full record list; the
                // JSONL file carries it
                json summary = j;
                if (summary.contains("formulas")) summary["formulas"].erase("records");
                if (summary.contains("theorems")) summary["theorems"].erase("records");
                emit(summary, as_json, "", human);
            } else {
                std::cout << human << "\n";
            }
            return bad > 0 ? 1 : 0;
        }

        if (cmd_hunt->parsed()) {
            json cfg = load_config(config_path);
            auto rep = hunt_counterexample(cfg.value("hunt", cfg), checkpoint_path);
            json j = rep.to_json();
            j["log"] = rep.log;
            std::string human = "points=" + std::to_string(rep.points) +
                                " violations=" + std::to_string(rep.violations);
            emit(j, as_json, out_path, human);
            return 0;  // hunter findings are findings, not errors
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
