#include "vlink/normal_forms.hpp"

#include <cstdlib>
#include <sstream>

namespace vlink {

namespace {

void need(bool cond, const std::string& msg) {
    if (!cond) throw DiagramError(msg);
}

int sgn(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

WordNormal word_normalize(const PortionWord& w) {
    // abelianized counts, expanding D = A B C^-1 and Dh = Ah Bh Ch^-1
    int a = 0, b = 0, c = 0, ah = 0, bh = 0, ch = 0;
    for (const auto& l : w) {
        need(l.exponent == 1 || l.exponent == -1, "word: letter exponent must be +1 or -1");
        need(l.sign == 1 || l.sign == -1, "word: letter sign must be +1 or -1");
        int v = l.exponent * l.sign;
        int& pa = l.hat ? ah : a;
        int& pb = l.hat ? bh : b;
        int& pc = l.hat ? ch : c;
        switch (l.base) {
            case 'A': pa += v; break;
            case 'B': pb += v; break;
            case 'C': pc += v; break;
            case 'D': pa += v; pb += v; pc -= v; break;
            default: need(false, std::string("word: unknown letter '") + l.base + "'");
        }
    }
    // two C's trade for two B's; a lone C trades for B Bh Ch^-1
    int u = ((c % 2) + 2) % 2;
    b += (c - u) / 2;
    b += (c - u) / 2;
    if (u == 1) {
        b += 1;
        bh += 1;
        ch -= 1;
    }
    int v = ((ch % 2) + 2) % 2;
    bh += (ch - v);
    WordNormal n;
    n.a = a;
    n.b = b;
    n.ahat = ah;
    n.bhat = bh;
    n.chat = v;
    return n;
}

PortionWord parse_word(const std::string& text) {
    PortionWord out;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok == "1") continue;
        Letter l;
        size_t i = 0;
        need(i < tok.size() && std::string("ABCD").find(tok[i]) != std::string::npos,
             "word: bad letter in token '" + tok + "'");
        l.base = tok[i++];
        if (i < tok.size() && tok[i] == 'h') {
            l.hat = true;
            ++i;
        }
        if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
            l.sign = tok[i] == '+' ? 1 : -1;
            ++i;
        }
        if (i < tok.size() && tok[i] == '^') {
            std::string e = tok.substr(i + 1);
            need(e == "1" || e == "-1", "word: exponent must be 1 or -1 in token '" + tok + "'");
            l.exponent = e == "1" ? 1 : -1;
            i = tok.size();
        }
        need(i == tok.size(), "word: trailing characters in token '" + tok + "'");
        out.push_back(l);
    }
    return out;
}

std::string format_word(const PortionWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.base;
        if (l.hat) out += 'h';
        out += l.sign > 0 ? '+' : '-';
        if (l.exponent == -1) out += "^-1";
    }
    return out;
}

std::string format_word_normal(const WordNormal& n) {
    std::string out;
    auto block = [&](const std::string& name, int count) {
        if (count == 0) return;
        if (!out.empty()) out += ' ';
        out += name;
        if (count != 1) out += "^" + std::to_string(count);
    };
    block("A", n.a);
    block("B", n.b);
    block("Ah", n.ahat);
    block("Bh", n.bhat);
    block("Ch", n.chat);
    return out.empty() ? "1" : out;
}

PortionWord expand_word_normal(const WordNormal& n) {
    PortionWord w;
    auto block = [&](char base, bool hat, int count) {
        for (int i = 0; i < std::abs(count); ++i)
            w.push_back({base, hat, 1, count > 0 ? 1 : -1});
    };
    block('A', false, n.a);
    block('B', false, n.b);
    block('A', true, n.ahat);
    block('B', true, n.bhat);
    block('C', true, n.chat);
    return w;
}

GaussDiagram realize_word(const PortionWord& w, int k, int l) {
    std::vector<Circle> circles(2);
    std::map<int, int> signs;
    int next_id = 1;

    // |k| mutually interleaved self-chord pairs, both chords straddled once
    auto add_pairs = [&](int circle, int count) {
        for (int i = 0; i < std::abs(count); ++i) {
            int x = next_id++, y = next_id++;
            signs[x] = signs[y] = sgn(count);
            auto& circ = circles[circle];
            circ.push_back({x, Role::Source});
            circ.push_back({y, Role::Source});
            circ.push_back({x, Role::Target});
            circ.push_back({y, Role::Target});
        }
    };
    add_pairs(0, k);
    add_pairs(1, l);

    // per-letter endpoint groups; the second circle reads them in reverse
    std::vector<std::vector<Endpoint>> c2_groups;
    for (const auto& lt : w) {
        need(std::string("ABCD").find(lt.base) != std::string::npos,
             std::string("word: unknown letter '") + lt.base + "'");
        int chord_sign = lt.exponent * lt.sign;
        int id = next_id++;
        signs[id] = chord_sign;
        Role r1 = lt.hat ? Role::Target : Role::Source;
        Role r2 = lt.hat ? Role::Source : Role::Target;
        bool shell1 = lt.base == 'C' || lt.base == 'D';
        bool shell2 = lt.base == 'B' || lt.base == 'D';

        std::vector<Endpoint> g1;
        if (shell1) {
            int s = next_id++;
            signs[s] = chord_sign;
            g1 = {{s, Role::Source}, {id, r1}, {s, Role::Target}};
        } else {
            g1 = {{id, r1}};
        }
        circles[0].insert(circles[0].end(), g1.begin(), g1.end());

        std::vector<Endpoint> g2;
        if (shell2) {
            int s = next_id++;
            signs[s] = chord_sign;
            g2 = {{s, Role::Source}, {id, r2}, {s, Role::Target}};
        } else {
            g2 = {{id, r2}};
        }
        c2_groups.push_back(std::move(g2));
    }
    for (auto it = c2_groups.rbegin(); it != c2_groups.rend(); ++it)
        circles[1].insert(circles[1].end(), it->begin(), it->end());

    return GaussDiagram(circles, signs);
}

GaussDiagram build_odd_normal(int a, int b) {
    need(((a + b) % 2 + 2) % 2 == 1, "odd normal form: a + b must be odd");
    WordNormal n;
    n.a = a;
    n.ahat = b;
    return realize_word(expand_word_normal(n), 0, 0);
}

GaussDiagram build_even_normal(int m, int l, int p, int q, int r, int s) {
    need(((p + q + r + s - m) % 2 + 2) % 2 == 0,
         "even normal form: p+q+r+s and m must have the same parity");
    WordNormal n;
    n.a = p;
    n.b = q;
    n.ahat = r;
    n.bhat = s;
    PortionWord w = expand_word_normal(n);
    int k;
    if (m % 2 == 0) {
        k = m / 2;
    } else {
        k = (m - 1) / 2;
        w.push_back({'C', true, 1, 1});  // positive hatted C carries the odd writhe unit
    }
    return realize_word(w, k, l);
}

GaussDiagram build_knot_normal(int j) {
    need(j % 2 == 0, "knot normal form: odd writhe must be even");
    std::vector<Circle> circles(1);
    std::map<int, int> signs;
    for (int i = 0; i < std::abs(j) / 2; ++i) {
        int x = 2 * i + 1, y = 2 * i + 2;
        signs[x] = signs[y] = sgn(j);
        auto& circ = circles[0];
        circ.push_back({x, Role::Source});
        circ.push_back({y, Role::Source});
        circ.push_back({x, Role::Target});
        circ.push_back({y, Role::Target});
    }
    return GaussDiagram(circles, signs);
}

GaussDiagram profile_to_normal(const InvariantProfile& pr) {
    need(pr.mu == 1 || pr.mu == 2, "normal form: supported for one or two circles");
    GaussDiagram out({{}, {}}, {});
    if (pr.mu == 1) {
        need(pr.j_knot % 2 == 0,
             "inconsistent profile: a one-circle diagram has even odd writhe");
        out = build_knot_normal(pr.j_knot);
    } else if (pr.parity == LinkParity::Odd) {
        need(((pr.lk12 + pr.lk21) % 2 + 2) % 2 == 1,
             "inconsistent profile: linking numbers of an odd diagram have odd sum");
        out = build_odd_normal(pr.lk12, pr.lk21);
    } else {
        int m = pr.j1;
        auto [P, Q, R, S] = pr.fbar;
        need(pr.fbar == std::min(std::array<int, 4>{P, Q, R, S}, std::array<int, 4>{Q, P, S, R}),
             "inconsistent profile: reduced linking class is not in canonical form");
        int p = P, q = Q, r = R, s = S;
        if (((m % 2) + 2) % 2 == 1) s = S - 1;
        need(pr.lk12 == P + Q && pr.lk21 == R + S,
             "inconsistent profile: linking numbers disagree with the reduced linking class");
        int rest = pr.j2 - q - s;
        need(rest % 2 == 0, "inconsistent profile: odd writhe parity mismatch");
        out = build_even_normal(m, rest / 2, p, q, r, s);
    }
    auto check = invariant_profile(out);
    need(profile_difference(check, pr).empty(),
         "inconsistent profile: no normal form attains it");
    return out;
}

GaussDiagram normalize(const GaussDiagram& d) {
    return profile_to_normal(invariant_profile(d));
}

bool xi_equivalent(const GaussDiagram& d1, const GaussDiagram& d2, std::string* reason) {
    auto p1 = invariant_profile(d1);
    auto p2 = invariant_profile(d2);
    auto diff = profile_difference(p1, p2);
    if (reason) *reason = diff;
    return diff.empty();
}

bool forbidden_equivalent(const GaussDiagram& d1, const GaussDiagram& d2, std::string* reason) {
    if (reason) reason->clear();
    if (d1.mu() != d2.mu()) {
        if (reason) *reason = "component count";
        return false;
    }
    need(d1.mu() == 1 || d1.mu() == 2,
         "forbidden-move equivalence: supported for one or two circles");
    if (d1.mu() == 1) return true;
    if (linking_pair(d1) != linking_pair(d2)) {
        if (reason) *reason = "linking numbers";
        return false;
    }
    return true;
}

}  // namespace vlink
