// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 = success / affirmative answer, 1 = negative answer,
// 2 = error (bad input, bad usage).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vlink/vlink_c.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct CliError {
    std::string message;
};

[[noreturn]] void die(const std::string& msg) { throw CliError{msg}; }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) die("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using DiagramPtr = std::unique_ptr<vl_diagram, decltype(&vl_diagram_free)>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    vl_string_free(s);
    return out;
}

DiagramPtr load(const std::string& path) {
    vl_diagram* d = nullptr;
    if (vl_parse(read_input(path).c_str(), &d) != VL_OK) die(vl_last_error());
    return DiagramPtr(d, &vl_diagram_free);
}

void check(vl_status st) {
    if (st != VL_OK) die(vl_last_error());
}

std::string human_invariants(const nlohmann::json& j) {
    std::ostringstream out;
    out << "circles: " << j.at("mu").get<int>() << "\n";
    if (j.at("mu").get<int>() == 1) {
        out << "odd writhe: " << j.at("j").get<int>() << "\n";
        return out.str();
    }
    out << "parity: " << j.at("parity").get<std::string>() << "\n";
    out << "lk: " << j.at("lk").at(0).get<int>() << " " << j.at("lk").at(1).get<int>() << "\n";
    if (j.contains("j")) {
        out << "odd writhes: " << j.at("j").at(0).get<int>() << " " << j.at("j").at(1).get<int>()
            << "\n";
        const auto& f = j.at("fbar");
        out << "reduced linking class: " << f.at(0).get<int>() << " " << f.at(1).get<int>() << " "
            << f.at(2).get<int>() << " " << f.at(3).get<int>() << "\n";
    }
    return out.str();
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Gauss-diagram toolkit for one- and two-circle virtual links"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string in1, in2, spec, kinds = "all", word, profile;
    int max_chords = 8, max_states = 20000, steps = 20, add_budget = -1, census_chords = 2;
    unsigned long long seed = 1;
    int word_k = 0, word_l = 0;
    std::vector<std::string> specs;
    bool show_moves = false;

    auto* validate = app.add_subcommand("validate", "check a Gauss code (exit 0 valid, 1 invalid)");
    validate->add_option("input", in1, "file or - for stdin")->required();

    auto* key = app.add_subcommand("key", "print the canonical key of a diagram");
    key->add_option("input", in1)->required();

    auto* iso = app.add_subcommand("isomorphic",
                                   "are two diagrams equal up to rotation and relabelling?");
    iso->add_option("first", in1)->required();
    iso->add_option("second", in2)->required();

    auto* inv = app.add_subcommand("invariants", "classifying invariants of a diagram");
    inv->add_option("input", in1)->required();

    auto* equiv = app.add_subcommand(
        "equivalent", "are two diagrams related by Reidemeister and endpoint-swap moves?");
    equiv->add_option("first", in1)->required();
    equiv->add_option("second", in2)->required();

    auto* fequiv = app.add_subcommand(
        "forbidden-equivalent", "are two diagrams related by Reidemeister and forbidden moves?");
    fequiv->add_option("first", in1)->required();
    fequiv->add_option("second", in2)->required();

    auto* norm = app.add_subcommand("normal-form", "canonical representative of a diagram's class");
    norm->add_option("input", in1)->required();

    auto* mknorm = app.add_subcommand("make-normal", "normal form from an invariant profile");
    mknorm->add_option("profile", profile, "JSON as printed by `invariants --json`")->required();

    auto* apply = app.add_subcommand("apply", "apply moves or macros to a diagram");
    apply->add_option("input", in1)->required();
    apply->add_option("-m,--move", specs, "move spec, repeatable (e.g. xi:c=1,i=0)")->required();
    apply->add_flag("--show-moves", show_moves, "also list the primitive moves applied");

    auto* moves = app.add_subcommand("moves", "list every applicable move");
    moves->add_option("input", in1)->required();
    moves->add_option("--kinds", kinds, "comma list of xi,r1+,r1-,r2+,r2-,r3 (default all)");
    moves->add_option("--max-chords", max_chords, "bound for additions (default 8)");

    auto* scramble = app.add_subcommand("scramble", "apply random legal moves");
    scramble->add_option("input", in1)->required();
    scramble->add_option("--steps", steps, "number of moves (default 20)");
    scramble->add_option("--seed", seed, "random seed (default 1)");
    scramble->add_option("--kinds", kinds, "allowed move kinds (default all)");
    scramble->add_option("--max-chords", max_chords, "bound for additions (default 8)");
    scramble->add_flag("--show-moves", show_moves, "also list the applied moves");

    auto* bfs = app.add_subcommand("bfs", "search for a move path between two diagrams");
    bfs->add_option("first", in1)->required();
    bfs->add_option("second", in2)->required();
    bfs->add_option("--kinds", kinds, "allowed move kinds (default all)");
    bfs->add_option("--max-chords", max_chords, "bound for additions (default 8)");
    bfs->add_option("--max-states", max_states, "state budget (default 20000)");

    auto* census = app.add_subcommand(
        "census", "survey all two-circle diagrams up to a chord bound");
    census->add_option("--max-chords", census_chords, "chord bound (default 2)");
    census->add_option("--add-budget", add_budget, "chord bound during search (default bound+1)");
    census->add_option("--max-states", max_states, "state budget per group (default 20000)");

    auto* wnorm = app.add_subcommand("word-normalize", "normal form of a portion word");
    wnorm->add_option("word", word, "e.g. \"C+ A- Bh+^-1\"")->required();

    auto* realize = app.add_subcommand("realize-word", "diagram realizing a portion word");
    realize->add_option("word", word)->required();
    realize->add_option("--pairs1", word_k, "self-chord pairs on the first circle");
    realize->add_option("--pairs2", word_l, "self-chord pairs on the second circle");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    if (validate->parsed()) {
        vl_diagram* d = nullptr;
        if (vl_parse(read_input(in1).c_str(), &d) != VL_OK) {
            std::string msg = vl_last_error();
            if (as_json)
                std::cout << nlohmann::json{{"valid", false}, {"error", msg}}.dump() << "\n";
            else
                std::cout << "invalid: " << msg << "\n";
            return kExitNo;
        }
        DiagramPtr dp(d, &vl_diagram_free);
        int mu = 0, n = 0;
        check(vl_circle_count(d, &mu));
        check(vl_chord_count(d, &n));
        if (as_json)
            std::cout << nlohmann::json{{"valid", true}, {"circles", mu}, {"chords", n}}.dump()
                      << "\n";
        else
            std::cout << "valid: " << mu << " circle(s), " << n << " chord(s)\n";
        return kExitYes;
    }
    if (key->parsed()) {
        auto d = load(in1);
        char* s = nullptr;
        check(vl_canonical_key(d.get(), &s));
        std::cout << take_string(s) << "\n";
        return kExitYes;
    }
    if (iso->parsed()) {
        auto a = load(in1);
        auto b = load(in2);
        int r = 0;
        check(vl_isomorphic(a.get(), b.get(), &r));
        std::cout << (r ? "isomorphic" : "not isomorphic") << "\n";
        return r ? kExitYes : kExitNo;
    }
    if (inv->parsed()) {
        auto d = load(in1);
        char* s = nullptr;
        check(vl_invariants_json(d.get(), &s));
        std::string text = take_string(s);
        if (as_json)
            std::cout << text << "\n";
        else
            std::cout << human_invariants(nlohmann::json::parse(text));
        return kExitYes;
    }
    if (equiv->parsed() || fequiv->parsed()) {
        auto a = load(in1);
        auto b = load(in2);
        int r = 0;
        char* reason = nullptr;
        check(equiv->parsed() ? vl_xi_equivalent(a.get(), b.get(), &r, &reason)
                              : vl_forbidden_equivalent(a.get(), b.get(), &r, &reason));
        std::string why = take_string(reason);
        if (as_json) {
            std::cout << nlohmann::json{{"equivalent", r == 1}, {"reason", why}}.dump() << "\n";
        } else if (r) {
            std::cout << "equivalent\n";
        } else {
            std::cout << "not equivalent: " << why << " differ\n";
        }
        return r ? kExitYes : kExitNo;
    }
    if (norm->parsed() || mknorm->parsed()) {
        vl_diagram* n = nullptr;
        if (norm->parsed()) {
            auto d = load(in1);
            check(vl_normalize(d.get(), &n));
        } else {
            check(vl_make_normal(profile.c_str(), &n));
        }
        DiagramPtr np(n, &vl_diagram_free);
        char* s = nullptr;
        check(vl_serialize(n, &s));
        std::string code = take_string(s);
        if (as_json)
            std::cout << nlohmann::json{{"gauss", code}}.dump() << "\n";
        else
            std::cout << code << "\n";
        return kExitYes;
    }
    if (apply->parsed()) {
        auto d = load(in1);
        vl_diagram* cur = d.release();
        nlohmann::json applied = nlohmann::json::array();
        for (const auto& sp : specs) {
            if (show_moves && sp.rfind("macro:", 0) == 0) {
                char* mj = nullptr;
                if (vl_expand_macro(cur, sp.c_str(), &mj) != VL_OK) {
                    vl_diagram_free(cur);
                    die(vl_last_error());
                }
                for (const auto& m : nlohmann::json::parse(take_string(mj))) applied.push_back(m);
            } else if (show_moves) {
                applied.push_back(sp);
            }
            vl_diagram* next = nullptr;
            if (vl_apply(cur, sp.c_str(), &next) != VL_OK) {
                vl_diagram_free(cur);
                die(vl_last_error());
            }
            vl_diagram_free(cur);
            cur = next;
        }
        DiagramPtr out(cur, &vl_diagram_free);
        char* s = nullptr;
        check(vl_serialize(cur, &s));
        std::string code = take_string(s);
        if (as_json) {
            nlohmann::json j{{"gauss", code}};
            if (show_moves) j["moves"] = applied;
            std::cout << j.dump() << "\n";
        } else {
            if (show_moves)
                for (const auto& m : applied) std::cout << "# " << m.get<std::string>() << "\n";
            std::cout << code << "\n";
        }
        return kExitYes;
    }
    if (moves->parsed()) {
        auto d = load(in1);
        char* s = nullptr;
        check(vl_enumerate_moves(d.get(), kinds.c_str(), max_chords, &s));
        std::string text = take_string(s);
        if (as_json) {
            std::cout << text << "\n";
        } else {
            for (const auto& m : nlohmann::json::parse(text))
                std::cout << m.get<std::string>() << "\n";
        }
        return kExitYes;
    }
    if (scramble->parsed()) {
        auto d = load(in1);
        vl_diagram* out = nullptr;
        char* mj = nullptr;
        check(vl_scramble(d.get(), steps, seed, kinds.c_str(), max_chords, &out,
                          show_moves || as_json ? &mj : nullptr));
        DiagramPtr op(out, &vl_diagram_free);
        char* s = nullptr;
        check(vl_serialize(out, &s));
        std::string code = take_string(s);
        std::string moves_text = mj ? take_string(mj) : "[]";
        if (as_json) {
            std::cout << nlohmann::json{{"gauss", code},
                                        {"moves", nlohmann::json::parse(moves_text)}}
                             .dump()
                      << "\n";
        } else {
            if (show_moves)
                for (const auto& m : nlohmann::json::parse(moves_text))
                    std::cout << "# " << m.get<std::string>() << "\n";
            std::cout << code << "\n";
        }
        return kExitYes;
    }
    if (bfs->parsed()) {
        auto a = load(in1);
        auto b = load(in2);
        int found = 0;
        char* s = nullptr;
        check(vl_bfs(a.get(), b.get(), kinds.c_str(), max_chords, max_states, &found, &s));
        std::string text = take_string(s);
        auto j = nlohmann::json::parse(text);
        if (as_json) {
            std::cout << text << "\n";
        } else if (found) {
            std::cout << "connected in " << j.at("path").size() << " move(s):\n";
            for (const auto& m : j.at("path")) std::cout << m.get<std::string>() << "\n";
        } else {
            std::cout << "not connected (" << j.at("visited").get<int>() << " states, "
                      << (j.at("exhausted").get<bool>() ? "search exhausted" : "budget reached")
                      << ")\n";
        }
        return found ? kExitYes : kExitNo;
    }
    if (census->parsed()) {
        char* s = nullptr;
        int budget = add_budget < 0 ? census_chords + 1 : add_budget;
        check(vl_census(census_chords, budget, max_states, &s));
        std::cout << take_string(s) << "\n";
        return kExitYes;
    }
    if (wnorm->parsed()) {
        char* s = nullptr;
        check(vl_word_normalize(word.c_str(), &s));
        std::string text = take_string(s);
        if (as_json)
            std::cout << nlohmann::json{{"normal", text}}.dump() << "\n";
        else
            std::cout << text << "\n";
        return kExitYes;
    }
    if (realize->parsed()) {
        vl_diagram* d = nullptr;
        check(vl_realize_word(word.c_str(), word_k, word_l, &d));
        DiagramPtr dp(d, &vl_diagram_free);
        char* s = nullptr;
        check(vl_serialize(d, &s));
        std::string code = take_string(s);
        if (as_json)
            std::cout << nlohmann::json{{"gauss", code}}.dump() << "\n";
        else
            std::cout << code << "\n";
        return kExitYes;
    }
    return kExitError;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
