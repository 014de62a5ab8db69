// Command-line front end: one verb per library operation family.
// Exit codes: 0 success / positive answer, 1 negative reasoning answer,
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mc/instances.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mc::InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonFlags {
    std::string sig_file;
    std::vector<std::string> model_files;
    std::string concept_text;
    std::string concept_file;
    std::string request_file;
    std::size_t k = 0;
    bool k_set = false;
    int nc = -1;
    int nr = -1;
    bool json_out = false;
    std::size_t budget = 0;
    std::string dialect = "ALC";
};

void add_sig_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--sig", f.sig_file, "signature JSON file");
    cmd->add_option("--nc", f.nc, "generic signature: number of concept names (A, B, ...)");
    cmd->add_option("--nr", f.nr, "generic signature: number of role names (r, s, ...)");
}

mc::Signature resolve_sig(const CommonFlags& f) {
    if (!f.sig_file.empty()) return mc::signature_from_json_text(read_file(f.sig_file));
    if (f.nc >= 0 || f.nr >= 0) {
        static const std::vector<std::string> cs = {"A", "B", "C", "D", "E"};
        static const std::vector<std::string> rs = {"r", "s", "t"};
        const int nc = std::max(f.nc, 0), nr = std::max(f.nr, 0);
        if (nc > static_cast<int>(cs.size()) || nr > static_cast<int>(rs.size())) {
            throw mc::InputError("generic signatures support at most 5 concept / 3 role names");
        }
        return mc::Signature({cs.begin(), cs.begin() + nc}, {rs.begin(), rs.begin() + nr});
    }
    throw mc::InputError("no signature given (use --sig or --nc/--nr)");
}

mc::Concept resolve_concept(const CommonFlags& f, const mc::Signature& sig, std::size_t which = 0) {
    if (!f.concept_file.empty()) {
        if (which > 0) throw mc::InputError("--concept-file supports a single concept");
        return mc::parse_concept(read_file(f.concept_file), sig);
    }
    // --concept may be repeated (stored separated by '\x1f' by the caller).
    std::vector<std::string> texts;
    std::stringstream ss(f.concept_text);
    std::string item;
    while (std::getline(ss, item, '\x1f')) texts.push_back(item);
    if (which >= texts.size()) throw mc::InputError("missing --concept argument");
    return mc::parse_concept(texts[which], sig);
}

std::vector<mc::PointedInterpretation> resolve_models(const CommonFlags& f,
                                                      const mc::Signature* sig) {
    std::vector<mc::PointedInterpretation> out;
    for (const auto& path : f.model_files) {
        out.push_back(mc::pointed_from_json_text(read_file(path), sig));
    }
    return out;
}

mc::Dialect resolve_dialect(const CommonFlags& f) {
    if (f.dialect == "EL") return mc::Dialect::EL;
    if (f.dialect == "EL_BOT") return mc::Dialect::EL_BOT;
    if (f.dialect == "ALC") return mc::Dialect::ALC;
    throw mc::InputError("unknown dialect: " + f.dialect + " (expected EL, EL_BOT or ALC)");
}

mc::FiniteUniverse resolve_universe(const CommonFlags& f, const mc::Signature& sig) {
    if (f.budget > 0) return mc::enumerate_universe(sig, f.k, f.budget);
    return mc::enumerate_universe(sig, f.k);
}

int answer(bool positive, const CommonFlags& f) {
    if (f.json_out) {
        std::cout << json{{"answer", positive}}.dump() << "\n";
    } else {
        std::cout << (positive ? "true" : "false") << "\n";
    }
    return positive ? 0 : 1;
}

json fragment_json(const mc::FiniteUniverse& u) {
    return json{{"nc", u.sig.concept_names().size()},
                {"nr", u.sig.role_names().size()},
                {"k", u.k}};
}

json verdict_json(const mc::PostulateVerdict& v, const mc::FiniteUniverse& u) {
    json w = nullptr;
    if (v.witness) w = json::parse(mc::pointed_to_json_text(u.models[*v.witness]));
    return json{{"postulate", mc::postulate_name(v.postulate)},
                {"status", v.pass ? "pass" : "fail"},
                {"witness", w},
                {"fragment", fragment_json(u)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"model change for description-logic concepts"};
    app.require_subcommand(1);
    CommonFlags f;

    // --concept is repeatable; CLI11 joins repeats with the separator below.
    auto add_concept_flags = [&](CLI::App* cmd) {
        cmd->add_option("--concept", f.concept_text, "concept text (repeatable)")
            ->join('\x1f');
        cmd->add_option("--concept-file", f.concept_file, "file with concept text");
    };
    auto add_model_flag = [&](CLI::App* cmd) {
        cmd->add_option("--model", f.model_files, "pointed interpretation JSON file (repeatable)");
    };
    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", f.json_out, "machine-readable output");
    };

    auto* cmd_parse = app.add_subcommand("parse", "parse and normalize a concept");
    add_sig_flags(cmd_parse, f); add_concept_flags(cmd_parse); add_json_flag(cmd_parse);

    auto* cmd_eval = app.add_subcommand("eval", "check a pointed interpretation against a concept");
    add_sig_flags(cmd_eval, f); add_model_flag(cmd_eval); add_concept_flags(cmd_eval);
    add_json_flag(cmd_eval);

    auto* cmd_bisim = app.add_subcommand("bisim", "(k-)bisimilarity of two pointed interpretations");
    add_sig_flags(cmd_bisim, f); add_model_flag(cmd_bisim); add_json_flag(cmd_bisim);
    cmd_bisim->add_option("--k", f.k, "bounded depth")->each([&](const std::string&) { f.k_set = true; });

    auto* cmd_subsume = app.add_subcommand("subsume", "subsumption between two concepts");
    add_sig_flags(cmd_subsume, f); add_concept_flags(cmd_subsume); add_json_flag(cmd_subsume);
    bool force_tableau = false;
    cmd_subsume->add_flag("--tableau", force_tableau, "force the tableau decision path");

    auto* cmd_sat = app.add_subcommand("sat", "concept satisfiability");
    add_sig_flags(cmd_sat, f); add_concept_flags(cmd_sat); add_json_flag(cmd_sat);

    auto* cmd_entail = app.add_subcommand("entail", "entailment between two concepts (tableau)");
    add_sig_flags(cmd_entail, f); add_concept_flags(cmd_entail); add_json_flag(cmd_entail);

    auto* cmd_canonical = app.add_subcommand("canonical", "canonical model of a satisfiable EL-bot concept");
    add_sig_flags(cmd_canonical, f); add_concept_flags(cmd_canonical);

    auto* cmd_tree = app.add_subcommand("tree2concept", "EL concept of a finite tree");
    add_sig_flags(cmd_tree, f); add_model_flag(cmd_tree);

    auto* cmd_dagger = app.add_subcommand("dagger", "characteristic translation of an EL-bot concept");
    add_sig_flags(cmd_dagger, f); add_concept_flags(cmd_dagger);

    auto* cmd_receive = app.add_subcommand("receive", "incorporate models into a base concept");
    auto* cmd_evict = app.add_subcommand("evict", "remove models from a base concept");
    auto* cmd_revise = app.add_subcommand("revise", "incorporate and remove models jointly");
    for (auto* c : {cmd_receive, cmd_evict, cmd_revise}) {
        c->add_option("--request", f.request_file, "change request JSON file")->required();
        add_json_flag(c);
    }

    auto* cmd_oracle = app.add_subcommand("oracle", "finite-universe brute-force checks");
    cmd_oracle->require_subcommand(1);
    auto* o_enum = cmd_oracle->add_subcommand("enumerate", "enumerate the bounded universe");
    auto* o_mod = cmd_oracle->add_subcommand("modset", "mod-set bitmask of a concept");
    auto* o_chi = cmd_oracle->add_subcommand("chi", "chi minima for a change request");
    auto* o_post = cmd_oracle->add_subcommand("postulates", "postulate verdicts for a revision run");
    for (auto* c : {o_enum, o_mod, o_chi, o_post}) {
        add_sig_flags(c, f);
        c->add_option("--k", f.k, "universe depth bound");
        c->add_option("--budget", f.budget, "override the class-count budget");
        add_json_flag(c);
    }
    add_concept_flags(o_mod);
    o_chi->add_option("--request", f.request_file, "change request JSON file")->required();
    o_post->add_option("--request", f.request_file, "change request JSON file")->required();
    for (auto* c : {o_chi, o_post}) {
        c->add_option("--dialect", f.dialect, "fragment: EL, EL_BOT or ALC (default ALC)");
    }

    auto* cmd_demo = app.add_subcommand("demo", "run canned worked-instance demos");
    std::string demo_name;
    bool demo_all = false;
    cmd_demo->add_option("--name", demo_name, "demo name");
    cmd_demo->add_flag("--all", demo_all, "run every demo");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            const auto sig = resolve_sig(f);
            const auto c = resolve_concept(f, sig);
            if (f.json_out) {
                std::cout << json{{"text", c.text()},
                                  {"dialect", mc::dialect_name(mc::dialect_of(c))},
                                  {"depth", mc::depth(c)}}.dump() << "\n";
            } else {
                std::cout << c.text() << "\n";
            }
            return 0;
        }
        if (*cmd_eval) {
            const auto sig = resolve_sig(f);
            const auto models = resolve_models(f, &sig);
            if (models.size() != 1) throw mc::InputError("eval expects exactly one --model");
            return answer(mc::model_check(models[0], resolve_concept(f, sig)), f);
        }
        if (*cmd_bisim) {
            const auto sig = resolve_sig(f);
            const auto models = resolve_models(f, &sig);
            if (models.size() != 2) throw mc::InputError("bisim expects exactly two --model files");
            const bool yes = f.k_set ? mc::k_bisimilar(models[0], models[1], f.k, sig)
                                     : mc::bisimilar(models[0], models[1], sig).has_value();
            return answer(yes, f);
        }
        if (*cmd_subsume) {
            const auto sig = resolve_sig(f);
            const auto c = resolve_concept(f, sig, 0);
            const auto d = resolve_concept(f, sig, 1);
            const bool el_path = !force_tableau && mc::dialect_of(c) != mc::Dialect::ALC &&
                                 mc::dialect_of(d) != mc::Dialect::ALC;
            return answer(el_path ? mc::el_subsumes(c, d) : mc::alc_entails(c, d), f);
        }
        if (*cmd_sat) {
            const auto sig = resolve_sig(f);
            return answer(mc::alc_satisfiable(resolve_concept(f, sig)), f);
        }
        if (*cmd_entail) {
            const auto sig = resolve_sig(f);
            return answer(mc::alc_entails(resolve_concept(f, sig, 0), resolve_concept(f, sig, 1)), f);
        }
        if (*cmd_canonical) {
            const auto sig = resolve_sig(f);
            std::cout << mc::pointed_to_json_text(mc::canonical_model(resolve_concept(f, sig)))
                      << "\n";
            return 0;
        }
        if (*cmd_tree) {
            const auto sig = resolve_sig(f);
            const auto models = resolve_models(f, &sig);
            if (models.size() != 1) throw mc::InputError("tree2concept expects exactly one --model");
            std::cout << mc::concept_of_tree(models[0]).text() << "\n";
            return 0;
        }
        if (*cmd_dagger) {
            const auto sig = resolve_sig(f);
            std::cout << mc::dagger(resolve_concept(f, sig), sig).text() << "\n";
            return 0;
        }
        if (*cmd_receive || *cmd_evict || *cmd_revise) {
            auto req = mc::change_request_from_json_text(read_file(f.request_file));
            req.validate(cmd_revise->parsed());
            mc::Concept result = *cmd_receive ? mc::receive_alc(req.base, req.positives, req.sig)
                                 : *cmd_evict ? mc::evict_alc(req.base, req.negatives, req.sig)
                                              : mc::revise_alc(req);
            if (f.json_out) {
                std::cout << json{{"result", result.text()}}.dump() << "\n";
            } else {
                std::cout << result.text() << "\n";
            }
            return 0;
        }
        if (*o_enum) {
            const auto sig = resolve_sig(f);
            const auto u = resolve_universe(f, sig);
            if (f.json_out) {
                json models = json::array();
                for (const auto& m : u.models) models.push_back(json::parse(mc::pointed_to_json_text(m)));
                std::cout << json{{"count", u.size()}, {"models", models}}.dump() << "\n";
            } else {
                std::cout << "models: " << u.size() << "\n";
            }
            return 0;
        }
        if (*o_mod) {
            const auto sig = resolve_sig(f);
            const auto u = resolve_universe(f, sig);
            const auto m = mc::mod_set(resolve_concept(f, sig), u);
            if (f.json_out) {
                std::cout << json{{"mask", m.to_string()}, {"count", m.count()}}.dump() << "\n";
            } else {
                std::cout << m.to_string() << "\n";
            }
            return 0;
        }
        if (*o_chi || *o_post) {
            auto req = mc::change_request_from_json_text(read_file(f.request_file));
            req.validate(/*for_revision=*/true);
            const auto u = resolve_universe(f, req.sig);
            const auto fr = mc::fr_family(u, resolve_dialect(f));
            const mc::ModelSet b = mc::satisfying_set(req.base, u);
            const mc::ModelSet mplus = u.class_mask(req.positives);
            const mc::ModelSet mminus = u.class_mask(req.negatives);
            if (*o_chi) {
                const auto minima = mc::chi_min(b, mplus, mminus, fr);
                if (f.json_out) {
                    json out = json::array();
                    for (const auto& m : minima) out.push_back(m.to_string());
                    std::cout << json{{"minima", out}}.dump() << "\n";
                } else {
                    for (const auto& m : minima) std::cout << m.to_string() << "\n";
                }
                return 0;
            }
            const mc::Concept revised = mc::revise_alc(req);
            mc::OperatorRun run{b, mplus, mminus, mc::satisfying_set(revised, u), fr};
            static const mc::Postulate all[] = {
                mc::Postulate::Success,          mc::Postulate::Persistence,
                mc::Postulate::Inclusion,        mc::Postulate::VacuousExpansion,
                mc::Postulate::VacuousRemoval,   mc::Postulate::Lethargy,
                mc::Postulate::FiniteTemperance, mc::Postulate::FiniteRetainment,
                mc::Postulate::Circumspection};
            bool all_pass = true;
            for (auto p : all) {
                const auto v = mc::check_postulate(run, p);
                all_pass = all_pass && v.pass;
                std::cout << verdict_json(v, u).dump() << "\n";
            }
            return all_pass ? 0 : 1;
        }
        if (*cmd_demo) {
            if (demo_all) return mc::run_all_demos(std::cout) ? 0 : 1;
            if (demo_name.empty()) throw mc::InputError("demo requires --name or --all");
            return mc::run_demo(demo_name, std::cout) ? 0 : 1;
        }
    } catch (const mc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
