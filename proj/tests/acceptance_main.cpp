// Acceptance gate: one timed pass/fail line per criterion, nonzero exit on
// any failure. Exercises the C++ library directly.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/normal_forms.hpp"
#include "vlink/oracle.hpp"

using namespace vlink;

namespace {

const std::set<MoveKind> kAll = {MoveKind::Xi,    MoveKind::R1Add,    MoveKind::R1Remove,
                                 MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3};

struct Check {
    std::string name;
    double budget_ms;
    std::function<bool(std::string&)> run;
};

std::array<int, 4> fbar_class(int p, int q, int r, int s) {
    std::array<int, 4> raw{p, q, r, s}, swp{q, p, s, r};
    return std::min(raw, swp);
}

GaussDiagram random_diagram(std::mt19937_64& rng, int mu, int max_chords) {
    std::vector<Circle> circles(mu);
    std::map<int, int> signs;
    int n = static_cast<int>(rng() % (max_chords + 1));
    for (int id = 1; id <= n; ++id) {
        signs[id] = rng() % 2 == 0 ? 1 : -1;
        for (Role role : {Role::Source, Role::Target}) {
            auto& c = circles[rng() % mu];
            c.insert(c.begin() + rng() % (c.size() + 1), Endpoint{id, role});
        }
    }
    return GaussDiagram(circles, signs);
}

GaussDiagram random_even_link(std::mt19937_64& rng, int max_chords) {
    for (;;) {
        auto d = random_diagram(rng, 2, max_chords);
        if (link_parity(d) == LinkParity::Even) return d;
    }
}

PortionWord random_word(std::mt19937_64& rng, int len) {
    PortionWord w;
    for (int i = 0; i < len; ++i)
        w.push_back({"ABCD"[rng() % 4], rng() % 2 == 0, rng() % 2 == 0 ? 1 : -1,
                     rng() % 2 == 0 ? 1 : -1});
    return w;
}

bool check_pinned_example(std::string& msg) {
    auto g = build_even_normal(-5, 2, 3, -2, 1, 1);
    auto p = invariant_profile(g);
    auto st = sigma_tau(g);
    if (p.j1 != -5 || p.j2 != 3) {
        msg = "odd writhes off";
        return false;
    }
    if (!(st == SigmaTau{3, -2, 1, 2})) {
        msg = "sigma/tau off";
        return false;
    }
    if (p.fbar != fbar_class(3, -2, 1, 2)) {
        msg = "reduced linking class off";
        return false;
    }
    return true;
}

bool check_constructor_formulas(std::string& msg) {
    for (int m = -3; m <= 3; ++m)
        for (int l = -3; l <= 3; ++l)
            for (int p = -3; p <= 3; ++p)
                for (int q = -3; q <= 3; ++q)
                    for (int r = -3; r <= 3; ++r)
                        for (int s = -3; s <= 3; ++s) {
                            if (((p + q + r + s - m) % 2 + 2) % 2 != 0) continue;
                            auto ip = invariant_profile(build_even_normal(m, l, p, q, r, s));
                            bool odd_m = m % 2 != 0;
                            bool ok = ip.parity == LinkParity::Even && ip.j1 == m &&
                                      ip.j2 == 2 * l + q + s && ip.lk12 == p + q &&
                                      ip.lk21 == r + s + (odd_m ? 1 : 0) &&
                                      ip.fbar == fbar_class(p, q, r, s + (odd_m ? 1 : 0));
                            if (!ok) {
                                msg = "even constructor mismatch at m=" + std::to_string(m);
                                return false;
                            }
                        }
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            if (((a + b) % 2 + 2) % 2 == 0) continue;
            auto d = build_odd_normal(a, b);
            if (linking_pair(d) != std::pair<int, int>{a, b} ||
                link_parity(d) != LinkParity::Odd) {
                msg = "odd constructor mismatch";
                return false;
            }
        }
    return true;
}

bool check_move_invariance(std::string& msg) {
    std::mt19937_64 rng(1001);
    int done = 0;
    while (done < 1000) {
        auto d = random_diagram(rng, 1 + static_cast<int>(rng() % 2), 8);
        auto moves = enumerate_moves(d, kAll, d.chord_count() + 2);
        if (moves.empty()) continue;
        auto m = moves[rng() % moves.size()];
        if (!profile_difference(invariant_profile(apply_move(d, m)), invariant_profile(d))
                 .empty()) {
            msg = "move changed the profile: " + to_spec(m) + " on " + serialize(d);
            return false;
        }
        ++done;
    }
    for (int t = 0; t < 200; ++t) {
        auto d = random_diagram(rng, 2, 5);
        auto s = random_scramble(d, 30, 2000 + t, kAll, d.chord_count() + 3).diagram;
        if (!xi_equivalent(d, s) || canonical_key(normalize(d)) != canonical_key(normalize(s))) {
            msg = "scramble escaped the equivalence class of " + serialize(d);
            return false;
        }
    }
    return true;
}

bool check_congruence(std::string& msg) {
    std::mt19937_64 rng(1002);
    auto congruent = [](const InvariantProfile& p) {
        int j = p.j1 + p.j2, pr = p.fbar[0] + p.fbar[2], qs = p.fbar[1] + p.fbar[3];
        return (j - pr) % 2 == 0 && (j - qs) % 2 == 0;
    };
    for (int t = 0; t < 1000; ++t) {
        auto p = invariant_profile(random_even_link(rng, 7));
        if (!congruent(p)) {
            msg = "congruence failed on a random even diagram";
            return false;
        }
    }
    for (int t = 0; t < 200; ++t) {
        int p = static_cast<int>(rng() % 7) - 3, q = static_cast<int>(rng() % 7) - 3;
        int r = static_cast<int>(rng() % 7) - 3, s = static_cast<int>(rng() % 7) - 3;
        if (((p + r - q - s) % 2 + 2) % 2 != 0) ++s;
        auto ip = invariant_profile(build_even_normal(0, 0, p, q, r, s));
        if (ip.fbar != fbar_class(p, q, r, s) || !congruent(ip)) {
            msg = "realization missed the requested class";
            return false;
        }
    }
    return true;
}

bool check_exchange_identities(std::string& msg) {
    for (int k = -2; k <= 2; ++k)
        for (int l = -2; l <= 2; ++l)
            for (int p = -2; p <= 2; ++p)
                for (int q = -2; q <= 2; ++q)
                    for (int r = -2; r <= 2; ++r)
                        for (int s = -2; s <= 2; ++s) {
                            if (((p + q + r + s) % 2 + 2) % 2 == 0) {
                                auto lhs = build_even_normal(2 * k, l, p, q, r, s);
                                auto rhs = build_even_normal(2 * k, l + (-p + q - r + s) / 2,
                                                             q, p, s, r);
                                if (!xi_equivalent(lhs, rhs)) {
                                    msg = "even-case identity failed";
                                    return false;
                                }
                            } else {
                                auto lhs = build_even_normal(2 * k + 1, l, p, q, r, s);
                                auto rhs = build_even_normal(
                                    2 * k + 1, l + (-p + q - r + s + 1) / 2, q, p, s + 1, r - 1);
                                if (!xi_equivalent(lhs, rhs)) {
                                    msg = "odd-case identity failed";
                                    return false;
                                }
                            }
                        }
    return true;
}

bool check_word_engine(std::string& msg) {
    const char bases[] = {'A', 'B', 'C', 'D'};
    for (char x : bases)
        for (bool hat : {false, true})
            for (int sign : {1, -1}) {
                Letter pos{x, hat, 1, sign}, neg{x, hat, -1, sign};
                if (!(word_normalize({pos, neg}) == WordNormal{}) ||
                    !(word_normalize({neg, pos}) == WordNormal{})) {
                    msg = "inverse relation failed";
                    return false;
                }
            }
    for (bool hat : {false, true})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (char x : bases)
                    for (char y : bases) {
                        Letter a{x, hat, 1, s1}, b{y, hat, 1, s2};
                        if (!(word_normalize({a, b}) == word_normalize({b, a}))) {
                            msg = "commutation relation failed";
                            return false;
                        }
                    }
    for (bool hat : {false, true})
        for (int sign : {1, -1}) {
            Letter B{'B', hat, 1, sign}, C{'C', hat, 1, sign};
            Letter Bh{'B', !hat, 1, sign}, Ch{'C', !hat, 1, sign};
            if (!(word_normalize({B, B}) == word_normalize({C, C}))) {
                msg = "square relation failed";
                return false;
            }
            if (!(word_normalize({B, Bh}) == word_normalize({C, Ch}))) {
                msg = "mixed shell relation failed";
                return false;
            }
        }
    std::mt19937_64 rng(1003);
    for (int t = 0; t < 50; ++t) {  // unhatted portions reduce to A^p B^q (C)
        auto w = random_word(rng, rng() % 8);
        for (auto& l : w) {
            l.hat = false;
            if (l.base == 'D') l.base = 'A';
        }
        auto n = word_normalize(w);
        if (n.ahat != 0 || !(word_normalize(expand_word_normal(n)) == n)) {
            msg = "unhatted reduction left a foreign letter";
            return false;
        }
    }
    for (int t = 0; t < 500; ++t) {
        auto w = random_word(rng, rng() % 6);
        auto p1 = invariant_profile(realize_word(w, 0, 0));
        auto p2 = invariant_profile(realize_word(expand_word_normal(word_normalize(w)), 0, 0));
        if (p1.parity != p2.parity || p1.lk12 != p2.lk12 || p1.lk21 != p2.lk21 ||
            p1.fbar != p2.fbar || (p1.j1 - p2.j1) % 2 != 0 || (p1.j2 - p2.j2) % 2 != 0) {
            msg = "word normal form changed the realized invariants";
            return false;
        }
    }
    return true;
}

bool check_macro_contracts(std::string& msg) {
    struct Fixture {
        MacroKind kind;
        const char* code;
        MacroWindow window;
        size_t length;
    };
    const std::vector<Fixture> fixtures = {
        {MacroKind::Cross, "O1+ U1+ O2- U2- O3+ U3+", {0, 1, 1, PairOrder::SourceFirst}, 2},
        {MacroKind::ShellSlide, "O1+ O2- U1+ U2- O3+\nU3+", {0, 0, 1, PairOrder::SourceFirst},
         2},
        {MacroKind::ShellTriple, "O1+ U2- O3+ U1+ O2- U3+", {0, 0, 1, PairOrder::SourceFirst},
         2},
    };
    {
        // grow a cancelling double pair, then check the forward contract on it
        auto base = parse_gauss_code("O1+ U1+\n()");
        MacroWindow w{0, 0, 1, PairOrder::SourceFirst};
        auto grown = apply_moves(
            base, expand_macro(base, MacroKind::ShellPairCancel, MacroDir::Backward, w));
        if (!macro_matches(grown, MacroKind::ShellPairCancel, MacroDir::Forward, w)) {
            msg = "double-pair cancel pattern did not match";
            return false;
        }
        auto moves = expand_macro(grown, MacroKind::ShellPairCancel, MacroDir::Forward, w);
        if (moves.size() != 4) {
            msg = "double-pair cancel expansion length off";
            return false;
        }
        if (!isomorphic(apply_moves(grown, moves), base)) {
            msg = "double-pair cancel round trip failed";
            return false;
        }
    }
    for (const auto& f : fixtures) {
        auto d = parse_gauss_code(f.code);
        if (!macro_matches(d, f.kind, MacroDir::Forward, f.window)) {
            msg = std::string("macro pattern did not match: ") + macro_name(f.kind);
            return false;
        }
        auto moves = expand_macro(d, f.kind, MacroDir::Forward, f.window);
        if (moves.size() != f.length) {
            msg = std::string("macro expansion length off: ") + macro_name(f.kind);
            return false;
        }
        auto after = apply_moves(d, moves);
        if (!macro_matches(after, f.kind, MacroDir::Backward, f.window)) {
            msg = std::string("macro result missed the target pattern: ") + macro_name(f.kind);
            return false;
        }
        auto back = apply_moves(after, expand_macro(after, f.kind, MacroDir::Backward, f.window));
        if (!isomorphic(back, d)) {
            msg = std::string("macro round trip failed: ") + macro_name(f.kind);
            return false;
        }
    }
    // odd-circle swap: adjacent transposition within the primitive-move budget
    auto d = parse_gauss_code("O1+ U2- O3+ U1+ O2- U3+ O4-\nU4-");
    int len = static_cast<int>(d.circle(0).size());
    for (int i = 0; i + 1 < len; ++i) {
        MacroWindow w{0, i, 1, PairOrder::SourceFirst};
        if (!macro_matches(d, MacroKind::OddSwap, MacroDir::Forward, w)) {
            msg = "odd swap pattern rejected a legal window";
            return false;
        }
        auto moves = expand_macro(d, MacroKind::OddSwap, MacroDir::Forward, w);
        if (static_cast<int>(moves.size()) > 3 * len) {
            msg = "odd swap exceeded the move budget";
            return false;
        }
        auto circles = d.circles();
        std::swap(circles[0][i], circles[0][i + 1]);
        if (!isomorphic(apply_moves(d, moves), GaussDiagram(circles, d.chords()))) {
            msg = "odd swap did not realize the transposition";
            return false;
        }
    }
    return true;
}

bool check_oracle(std::string& msg) {
    auto d = parse_gauss_code("O1+ O2- U1+ U2- O3+\nU3+");
    auto slid = apply_moves(
        d, expand_macro(d, MacroKind::ShellSlide, MacroDir::Forward,
                        MacroWindow{0, 0, 1, PairOrder::SourceFirst}));
    auto r = bfs_connect(d, slid, {MoveKind::Xi}, d.chord_count(), 100000);
    if (!r.found || r.path.size() > 2) {
        msg = "shell slide not found within two moves";
        return false;
    }
    auto report = census(2, 3, 500000);
    if (report.diagram_count != 83) {
        msg = "census enumeration count off";
        return false;
    }
    for (const auto& g : report.groups)
        if (g.unresolved_pairs != 0) {
            msg = "census left unresolved pairs";
            return false;
        }
    // replayed paths stay inside one profile class; distinct classes stay apart
    std::mt19937_64 rng(1004);
    for (int t = 0; t < 30; ++t) {
        auto a = random_diagram(rng, 2, 4);
        auto b = random_scramble(a, 4, rng(), kAll, a.chord_count() + 2).diagram;
        auto res = bfs_connect(a, b, kAll, a.chord_count() + 2, 40000);
        if (!res.found) continue;
        auto cur = parse_gauss_code(canonical_key(a));
        auto profile = invariant_profile(cur);
        for (const auto& m : res.path) {
            cur = parse_gauss_code(canonical_key(apply_move(cur, m)));
            if (!profile_difference(invariant_profile(cur), profile).empty()) {
                msg = "a replayed path changed the profile";
                return false;
            }
        }
        if (canonical_key(cur) != canonical_key(b)) {
            msg = "a replayed path missed its goal";
            return false;
        }
    }
    for (int t = 0; t < 10; ++t) {
        auto a = random_diagram(rng, 2, 3);
        auto b = random_diagram(rng, 2, 3);
        if (profile_difference(invariant_profile(a), invariant_profile(b)).empty()) continue;
        if (bfs_connect(a, b, kAll, 5, 20000).found) {
            msg = "search connected diagrams with different profiles";
            return false;
        }
    }
    return true;
}

bool check_knots(std::string& msg) {
    auto classical = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
    auto virt = parse_gauss_code("O1+ O2+ U1+ U2+");
    if (knot_odd_writhe(classical) != 0 || knot_odd_writhe(virt) != 2) {
        msg = "trefoil odd writhes off";
        return false;
    }
    if (xi_equivalent(classical, virt)) {
        msg = "trefoils wrongly identified";
        return false;
    }
    std::mt19937_64 rng(1005);
    auto empty = parse_gauss_code("()");
    for (int t = 0; t < 50; ++t)
        if (!forbidden_equivalent(random_diagram(rng, 1, 6), empty)) {
            msg = "a knot escaped the forbidden-move class of the unknot";
            return false;
        }
    return true;
}

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {"pinned-example-values", 1000, check_pinned_example},
        {"constructor-formula-agreement", 60000, check_constructor_formulas},
        {"move-invariance-and-scrambles", 60000, check_move_invariance},
        {"class-congruence-and-realization", 60000, check_congruence},
        {"exchange-identities", 60000, check_exchange_identities},
        {"word-engine", 60000, check_word_engine},
        {"macro-contracts", 60000, check_macro_contracts},
        {"search-and-census", 300000, check_oracle},
        {"knot-case", 60000, check_knots},
    };
    int failures = 0;
    for (const auto& c : checks) {
        std::string msg;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (ms > c.budget_ms) {
            ok = false;
            msg = "over time budget";
        }
        std::printf("%-36s %s (%.0f ms)%s%s\n", c.name.c_str(), ok ? "PASS" : "FAIL", ms,
                    msg.empty() ? "" : " - ", msg.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
