#include "vlink/invariants.hpp"

#include <algorithm>

namespace vlink {

namespace {

void need(bool cond, const std::string& msg) {
    if (!cond) throw DiagramError(msg);
}

void need_two_circles(const GaussDiagram& d, const char* what) {
    need(d.mu() == 2, std::string(what) + ": diagram must have exactly two circles");
}

// endpoints strictly between positions a and b walking forward from a
int between(const GaussDiagram& d, int c, int a, int b) {
    int len = static_cast<int>(d.circle(c).size());
    int span = b - a;
    if (span < 0) span += len;
    return span == 0 ? 0 : span - 1;
}

}  // namespace

int linking_number(const GaussDiagram& d, int i, int j) {
    need(i >= 0 && i < d.mu() && j >= 0 && j < d.mu() && i != j,
         "linking number: bad circle pair");
    int sum = 0;
    for (const auto& [id, sg] : d.chords()) {
        auto [s, t] = d.endpoints(id);
        if (s.circle == i && t.circle == j) sum += sg;
    }
    return sum;
}

std::pair<int, int> linking_pair(const GaussDiagram& d) {
    need_two_circles(d, "linking pair");
    return {linking_number(d, 0, 1), linking_number(d, 1, 0)};
}

LinkParity link_parity(const GaussDiagram& d) {
    need_two_circles(d, "parity");
    int nonself = 0;
    for (const auto& [id, sg] : d.chords())
        if (!d.is_self_chord(id)) ++nonself;
    return nonself % 2 == 0 ? LinkParity::Even : LinkParity::Odd;
}

bool is_odd_self_chord(const GaussDiagram& d, int chord_id) {
    if (!d.is_self_chord(chord_id)) return false;
    auto [s, t] = d.endpoints(chord_id);
    return between(d, s.circle, s.position, t.position) % 2 == 1;
}

int odd_writhe(const GaussDiagram& d, int c) {
    need(c >= 0 && c < d.mu(), "odd writhe: circle index out of range");
    int sum = 0;
    for (const auto& [id, sg] : d.chords()) {
        auto [s, t] = d.endpoints(id);
        if (s.circle == c && t.circle == c && is_odd_self_chord(d, id)) sum += sg;
    }
    return sum;
}

int knot_odd_writhe(const GaussDiagram& d) {
    need(d.mu() == 1, "knot odd writhe: diagram must have exactly one circle");
    return odd_writhe(d, 0);
}

bool chords_equivalent(const GaussDiagram& d, int id1, int id2) {
    need_two_circles(d, "chord equivalence");
    need(d.has_chord(id1) && d.has_chord(id2), "chord equivalence: unknown chord id");
    need(!d.is_self_chord(id1) && !d.is_self_chord(id2),
         "chord equivalence: both chords must be nonself-chords");
    if (id1 == id2) return true;
    auto on_circle = [&](int id, int c) {
        auto [s, t] = d.endpoints(id);
        return s.circle == c ? s : t;
    };
    int count = 0;
    for (int c = 0; c < 2; ++c) {
        auto a = on_circle(id1, c);
        auto b = on_circle(id2, c);
        count += between(d, c, a.position, b.position);
    }
    return count % 2 == 0;
}

SigmaTau sigma_tau(const GaussDiagram& d) {
    need_two_circles(d, "sigma/tau");
    int gamma0 = -1;
    for (int c = 0; c < 2 && gamma0 < 0; ++c)
        for (const auto& e : d.circle(c))
            if (!d.is_self_chord(e.chord_id)) {
                gamma0 = e.chord_id;
                break;
            }
    SigmaTau out;
    if (gamma0 < 0) return out;
    for (const auto& [id, sg] : d.chords()) {
        if (d.is_self_chord(id)) continue;
        auto [s, t] = d.endpoints(id);
        bool eq = chords_equivalent(d, id, gamma0);
        if (s.circle == 0)
            (eq ? out.s12 : out.t12) += sg;
        else
            (eq ? out.s21 : out.t21) += sg;
    }
    return out;
}

std::array<int, 4> reduced_linking_class(const GaussDiagram& d) {
    auto st = sigma_tau(d);
    std::array<int, 4> a{st.s12, st.t12, st.s21, st.t21};
    std::array<int, 4> b{st.t12, st.s12, st.t21, st.s21};
    return std::min(a, b);
}

InvariantProfile invariant_profile(const GaussDiagram& d) {
    need(d.mu() == 1 || d.mu() == 2, "invariant profile: supported for one or two circles");
    InvariantProfile p;
    p.mu = d.mu();
    if (d.mu() == 1) {
        p.j_knot = knot_odd_writhe(d);
        return p;
    }
    p.parity = link_parity(d);
    std::tie(p.lk12, p.lk21) = linking_pair(d);
    if (p.parity == LinkParity::Even) {
        p.j1 = odd_writhe(d, 0);
        p.j2 = odd_writhe(d, 1);
        p.fbar = reduced_linking_class(d);
    }
    return p;
}

bool profiles_equal(const InvariantProfile& a, const InvariantProfile& b) {
    return profile_difference(a, b).empty();
}

std::string profile_difference(const InvariantProfile& a, const InvariantProfile& b) {
    if (a.mu != b.mu) return "component count";
    if (a.mu == 1) {
        if (a.j_knot != b.j_knot) return "odd writhe";
        return "";
    }
    if (a.parity != b.parity) return "parity";
    if (a.parity == LinkParity::Odd) {
        if (a.lk12 != b.lk12 || a.lk21 != b.lk21) return "linking numbers";
        return "";
    }
    if (a.j1 != b.j1 || a.j2 != b.j2) return "odd writhes";
    if (a.fbar != b.fbar) return "reduced linking class";
    return "";
}

}  // namespace vlink
