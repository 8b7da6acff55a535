#include "vlink/vlink_c.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/normal_forms.hpp"
#include "vlink/oracle.hpp"

using nlohmann::json;

struct vl_diagram {
    vlink::GaussDiagram d;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
vl_status guard(F&& f) {
    try {
        f();
        return VL_OK;
    } catch (const std::exception& e) {
        g_error = e.what();
        return VL_ERR;
    } catch (...) {
        g_error = "unknown error";
        return VL_ERR;
    }
}

const vlink::GaussDiagram& unwrap(const vl_diagram* d) {
    if (!d) throw vlink::DiagramError("null diagram handle");
    return d->d;
}

void require(const void* p, const char* what) {
    if (!p) throw vlink::DiagramError(std::string("null ") + what + " argument");
}

std::set<vlink::MoveKind> parse_kinds(const char* csv) {
    using vlink::MoveKind;
    const std::map<std::string, MoveKind> names = {
        {"xi", MoveKind::Xi},         {"r1+", MoveKind::R1Add}, {"r1-", MoveKind::R1Remove},
        {"r2+", MoveKind::R2Add},     {"r2-", MoveKind::R2Remove}, {"r3", MoveKind::R3},
    };
    std::set<MoveKind> out;
    if (!csv || !*csv || std::string(csv) == "all") {
        for (const auto& [n, k] : names) out.insert(k);
        return out;
    }
    std::string s(csv);
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        auto it = names.find(tok);
        if (it == names.end())
            throw vlink::DiagramError("unknown move kind '" + tok + "'");
        out.insert(it->second);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

json invariants_to_json(const vlink::InvariantProfile& p) {
    json j;
    j["mu"] = p.mu;
    if (p.mu == 1) {
        j["j"] = p.j_knot;
        return j;
    }
    j["parity"] = p.parity == vlink::LinkParity::Odd ? "odd" : "even";
    j["lk"] = {p.lk12, p.lk21};
    if (p.parity == vlink::LinkParity::Even) {
        j["j"] = {p.j1, p.j2};
        j["fbar"] = {p.fbar[0], p.fbar[1], p.fbar[2], p.fbar[3]};
    }
    return j;
}

vlink::InvariantProfile profile_from_json(const std::string& text) {
    json j = json::parse(text);
    vlink::InvariantProfile p;
    p.mu = j.at("mu").get<int>();
    if (p.mu == 1) {
        p.j_knot = j.at("j").get<int>();
        return p;
    }
    if (p.mu != 2) throw vlink::DiagramError("profile: mu must be 1 or 2");
    std::string parity = j.at("parity").get<std::string>();
    if (parity != "even" && parity != "odd")
        throw vlink::DiagramError("profile: parity must be \"even\" or \"odd\"");
    p.parity = parity == "odd" ? vlink::LinkParity::Odd : vlink::LinkParity::Even;
    if (p.parity == vlink::LinkParity::Odd) {
        auto lk = j.at("lk");
        p.lk12 = lk.at(0).get<int>();
        p.lk21 = lk.at(1).get<int>();
        return p;
    }
    auto jj = j.at("j");
    p.j1 = jj.at(0).get<int>();
    p.j2 = jj.at(1).get<int>();
    auto fb = j.at("fbar");
    for (int i = 0; i < 4; ++i) p.fbar[i] = fb.at(i).get<int>();
    if (j.contains("lk")) {
        p.lk12 = j["lk"].at(0).get<int>();
        p.lk21 = j["lk"].at(1).get<int>();
    } else {
        p.lk12 = p.fbar[0] + p.fbar[1];
        p.lk21 = p.fbar[2] + p.fbar[3];
    }
    return p;
}

struct MacroSpec {
    vlink::MacroKind kind;
    vlink::MacroDir dir = vlink::MacroDir::Forward;
    vlink::MacroWindow window;
};

MacroSpec parse_macro_spec(const std::string& spec) {
    // macro:<name>:c=..,i=..[,d=f|b][,s=+|-][,o=st|ts]
    const std::string prefix = "macro:";
    if (spec.rfind(prefix, 0) != 0)
        throw vlink::DiagramError("macro spec must start with 'macro:'");
    auto rest = spec.substr(prefix.size());
    auto colon = rest.find(':');
    if (colon == std::string::npos)
        throw vlink::DiagramError("macro spec: missing parameter list");
    std::string name = rest.substr(0, colon);
    std::string body = rest.substr(colon + 1);

    MacroSpec out{};
    using vlink::MacroKind;
    bool known = false;
    for (auto k : {MacroKind::Cross, MacroKind::OddSwap, MacroKind::ShellSlide,
                   MacroKind::ShellSign, MacroKind::ShellPairCancel, MacroKind::Exchange1,
                   MacroKind::Exchange2, MacroKind::Exchange3, MacroKind::ShellTriple}) {
        if (vlink::macro_name(k) == name) {
            out.kind = k;
            known = true;
        }
    }
    if (!known) throw vlink::DiagramError("unknown macro '" + name + "'");

    size_t pos = 0;
    bool have_c = false, have_i = false;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw vlink::DiagramError("macro spec: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "c") {
            int c = std::stoi(val);
            if (c < 1) throw vlink::DiagramError("macro spec: circle indices are 1-based");
            out.window.circle = c - 1;
            have_c = true;
        } else if (key == "i") {
            out.window.pos = std::stoi(val);
            have_i = true;
        } else if (key == "d") {
            if (val == "f")
                out.dir = vlink::MacroDir::Forward;
            else if (val == "b")
                out.dir = vlink::MacroDir::Backward;
            else
                throw vlink::DiagramError("macro spec: direction must be f or b");
        } else if (key == "s") {
            if (val == "+")
                out.window.sign = 1;
            else if (val == "-")
                out.window.sign = -1;
            else
                throw vlink::DiagramError("macro spec: bad sign '" + val + "'");
        } else if (key == "o") {
            if (val == "st")
                out.window.order = vlink::PairOrder::SourceFirst;
            else if (val == "ts")
                out.window.order = vlink::PairOrder::TargetFirst;
            else
                throw vlink::DiagramError("macro spec: bad order '" + val + "'");
        } else {
            throw vlink::DiagramError("macro spec: unknown key '" + key + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!have_c || !have_i)
        throw vlink::DiagramError("macro spec: fields c and i are required");
    return out;
}

std::vector<vlink::MoveInstance> moves_for_spec(const vlink::GaussDiagram& d,
                                                const std::string& spec) {
    if (spec.rfind("macro:", 0) == 0) {
        auto m = parse_macro_spec(spec);
        return vlink::expand_macro(d, m.kind, m.dir, m.window);
    }
    return {vlink::parse_move_spec(spec)};
}

}  // namespace

extern "C" {

const char* vl_last_error(void) { return g_error.c_str(); }

void vl_string_free(char* s) { delete[] s; }

void vl_diagram_free(vl_diagram* d) { delete d; }

vl_status vl_parse(const char* text, vl_diagram** out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        *out = new vl_diagram{vlink::parse_gauss_code(text)};
    });
}

vl_status vl_serialize(const vl_diagram* d, char** out) {
    return guard([&] {
        require(out, "out");
        *out = dup_string(vlink::serialize(unwrap(d)));
    });
}

vl_status vl_canonical_key(const vl_diagram* d, char** out) {
    return guard([&] {
        require(out, "out");
        *out = dup_string(vlink::canonical_key(unwrap(d)));
    });
}

vl_status vl_circle_count(const vl_diagram* d, int* out) {
    return guard([&] {
        require(out, "out");
        *out = unwrap(d).mu();
    });
}

vl_status vl_chord_count(const vl_diagram* d, int* out) {
    return guard([&] {
        require(out, "out");
        *out = unwrap(d).chord_count();
    });
}

vl_status vl_isomorphic(const vl_diagram* a, const vl_diagram* b, int* out) {
    return guard([&] {
        require(out, "out");
        *out = vlink::isomorphic(unwrap(a), unwrap(b)) ? 1 : 0;
    });
}

vl_status vl_invariants_json(const vl_diagram* d, char** out) {
    return guard([&] {
        require(out, "out");
        *out = dup_string(invariants_to_json(vlink::invariant_profile(unwrap(d))).dump());
    });
}

vl_status vl_xi_equivalent(const vl_diagram* a, const vl_diagram* b, int* result, char** reason) {
    return guard([&] {
        require(result, "result");
        std::string why;
        *result = vlink::xi_equivalent(unwrap(a), unwrap(b), &why) ? 1 : 0;
        if (reason) *reason = dup_string(why);
    });
}

vl_status vl_forbidden_equivalent(const vl_diagram* a, const vl_diagram* b, int* result,
                                  char** reason) {
    return guard([&] {
        require(result, "result");
        std::string why;
        *result = vlink::forbidden_equivalent(unwrap(a), unwrap(b), &why) ? 1 : 0;
        if (reason) *reason = dup_string(why);
    });
}

vl_status vl_normalize(const vl_diagram* d, vl_diagram** out) {
    return guard([&] {
        require(out, "out");
        *out = new vl_diagram{vlink::normalize(unwrap(d))};
    });
}

vl_status vl_make_normal(const char* profile_json, vl_diagram** out) {
    return guard([&] {
        require(profile_json, "profile");
        require(out, "out");
        *out = new vl_diagram{vlink::profile_to_normal(profile_from_json(profile_json))};
    });
}

vl_status vl_apply(const vl_diagram* d, const char* spec, vl_diagram** out) {
    return guard([&] {
        require(spec, "spec");
        require(out, "out");
        const auto& g = unwrap(d);
        *out = new vl_diagram{vlink::apply_moves(g, moves_for_spec(g, spec))};
    });
}

vl_status vl_expand_macro(const vl_diagram* d, const char* spec, char** moves_json) {
    return guard([&] {
        require(spec, "spec");
        require(moves_json, "out");
        const auto& g = unwrap(d);
        auto m = parse_macro_spec(spec);
        json arr = json::array();
        vlink::GaussDiagram cur = g;
        for (const auto& mv : vlink::expand_macro(g, m.kind, m.dir, m.window)) {
            arr.push_back(vlink::to_spec(mv));
            cur = vlink::apply_move(cur, mv);
        }
        *moves_json = dup_string(arr.dump());
    });
}

vl_status vl_enumerate_moves(const vl_diagram* d, const char* kinds, int max_chords, char** out) {
    return guard([&] {
        require(out, "out");
        json arr = json::array();
        for (const auto& m : vlink::enumerate_moves(unwrap(d), parse_kinds(kinds), max_chords))
            arr.push_back(vlink::to_spec(m));
        *out = dup_string(arr.dump());
    });
}

vl_status vl_scramble(const vl_diagram* d, int steps, unsigned long long seed, const char* kinds,
                      int max_chords, vl_diagram** out, char** moves_json) {
    return guard([&] {
        require(out, "out");
        auto res = vlink::random_scramble(unwrap(d), steps, seed, parse_kinds(kinds), max_chords);
        *out = new vl_diagram{std::move(res.diagram)};
        if (moves_json) {
            json arr = json::array();
            for (const auto& m : res.applied) arr.push_back(vlink::to_spec(m));
            *moves_json = dup_string(arr.dump());
        }
    });
}

vl_status vl_bfs(const vl_diagram* a, const vl_diagram* b, const char* kinds, int max_chords,
                 int max_states, int* found, char** out) {
    return guard([&] {
        auto res = vlink::bfs_connect(unwrap(a), unwrap(b), parse_kinds(kinds), max_chords,
                                      max_states);
        if (found) *found = res.found ? 1 : 0;
        if (out) {
            json j;
            j["found"] = res.found;
            j["visited"] = res.visited;
            j["exhausted"] = res.exhausted;
            json path = json::array();
            for (const auto& m : res.path) path.push_back(vlink::to_spec(m));
            j["path"] = path;
            *out = dup_string(j.dump());
        }
    });
}

vl_status vl_census(int max_chords, int add_budget, int max_states, char** out) {
    return guard([&] {
        require(out, "out");
        *out = dup_string(vlink::census_to_json(vlink::census(max_chords, add_budget, max_states)));
    });
}

vl_status vl_word_normalize(const char* word, char** out) {
    return guard([&] {
        require(word, "word");
        require(out, "out");
        *out = dup_string(
            vlink::format_word_normal(vlink::word_normalize(vlink::parse_word(word))));
    });
}

vl_status vl_realize_word(const char* word, int k, int l, vl_diagram** out) {
    return guard([&] {
        require(word, "word");
        require(out, "out");
        *out = new vl_diagram{vlink::realize_word(vlink::parse_word(word), k, l)};
    });
}

}  // extern "C"
