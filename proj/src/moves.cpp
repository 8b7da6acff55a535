#include "vlink/moves.hpp"

#include <algorithm>
#include <sstream>

namespace vlink {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DiagramError(msg); }

void need(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

int clen(const GaussDiagram& d, int c) { return static_cast<int>(d.circle(c).size()); }

int cyc(int i, int len) {
    int r = i % len;
    return r < 0 ? r + len : r;
}

const Endpoint& at(const GaussDiagram& d, int c, int i) {
    const auto& circ = d.circle(c);
    return circ[cyc(i, static_cast<int>(circ.size()))];
}

void check_circle(const GaussDiagram& d, int c, const char* what) {
    need(c >= 0 && c < d.mu(), std::string(what) + ": circle index out of range");
}

std::string win(int c, int i) {
    return " (circle " + std::to_string(c + 1) + ", position " + std::to_string(i) + ")";
}

// Block start of two cyclically adjacent positions p, q; returns the position
// whose cyclic successor is the other one.
int block_start(int p, int q, int len) {
    if (cyc(p + 1, len) == q) return p;
    if (cyc(q + 1, len) == p) return q;
    return -1;
}

void do_xi(std::vector<Circle>& circles, int c, int pos) {
    auto& circ = circles[c];
    int len = static_cast<int>(circ.size());
    need(len >= 3, "xi: circle has fewer than three endpoints" + win(c, pos));
    need(pos >= 0 && pos < len, "xi: position out of range" + win(c, pos));
    std::swap(circ[pos], circ[cyc(pos + 2, len)]);
}

// r3 pattern: three adjacent endpoint pairs realizing one side of the
// three-strand relation, all chord signs equal. side 0 = left, 1 = right.
int r3_side(const GaussDiagram& d, const MoveInstance& m) {
    EndpointRef starts[3] = {m.p1, m.p2, m.p3};
    Endpoint e[3], f[3];
    std::vector<EndpointRef> refs;
    for (int k = 0; k < 3; ++k) {
        int c = starts[k].circle;
        if (c < 0 || c >= d.mu()) return -1;
        int len = clen(d, c);
        if (len < 2) return -1;
        int a = starts[k].position;
        if (a < 0 || a >= len) return -1;
        e[k] = at(d, c, a);
        f[k] = at(d, c, a + 1);
        refs.push_back({c, a});
        refs.push_back({c, cyc(a + 1, len)});
    }
    std::sort(refs.begin(), refs.end());
    if (std::adjacent_find(refs.begin(), refs.end()) != refs.end()) return -1;

    auto same_sign = [&](int x, int y, int z) {
        return d.sign(x) == d.sign(y) && d.sign(y) == d.sign(z);
    };
    // left: (Ox Oy) (Ux Oz) (Uy Uz)
    {
        int x = e[0].chord_id, y = f[0].chord_id;
        if (e[0].role == Role::Source && f[0].role == Role::Source && x != y &&
            e[1] == Endpoint{x, Role::Target} && f[1].role == Role::Source) {
            int z = f[1].chord_id;
            if (z != x && z != y && e[2] == Endpoint{y, Role::Target} &&
                f[2] == Endpoint{z, Role::Target} && same_sign(x, y, z))
                return 0;
        }
    }
    // right: (Oy Ox) (Oz Ux) (Uz Uy)
    {
        int y = e[0].chord_id, x = f[0].chord_id;
        if (e[0].role == Role::Source && f[0].role == Role::Source && x != y &&
            e[1].role == Role::Source && f[1] == Endpoint{x, Role::Target}) {
            int z = e[1].chord_id;
            if (z != x && z != y && e[2] == Endpoint{z, Role::Target} &&
                f[2] == Endpoint{y, Role::Target} && same_sign(x, y, z))
                return 1;
        }
    }
    return -1;
}

}  // namespace

GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m) {
    auto circles = d.circles();
    auto signs = d.chords();

    switch (m.kind) {
        case MoveKind::Xi: {
            check_circle(d, m.circle, "xi");
            do_xi(circles, m.circle, m.pos);
            break;
        }
        case MoveKind::R1Add: {
            check_circle(d, m.circle, "r1+");
            need(m.sign == 1 || m.sign == -1, "r1+: sign must be +1 or -1");
            auto& circ = circles[m.circle];
            int len = static_cast<int>(circ.size());
            need(m.gap >= 0 && m.gap <= len, "r1+: gap out of range" + win(m.circle, m.gap));
            int id = d.max_chord_id() + 1;
            Endpoint first{id, m.order == PairOrder::SourceFirst ? Role::Source : Role::Target};
            Endpoint second{id, m.order == PairOrder::SourceFirst ? Role::Target : Role::Source};
            circ.insert(circ.begin() + m.gap, {first, second});
            signs[id] = m.sign;
            break;
        }
        case MoveKind::R1Remove: {
            need(d.has_chord(m.x), "r1-: no chord with id " + std::to_string(m.x));
            need(d.is_self_chord(m.x), "r1-: chord " + std::to_string(m.x) + " is not a self-chord");
            auto [s, t] = d.endpoints(m.x);
            int len = clen(d, s.circle);
            int start = block_start(s.position, t.position, len);
            need(start >= 0, "r1-: endpoints of chord " + std::to_string(m.x) + " are not adjacent");
            auto& circ = circles[s.circle];
            int hi = std::max(s.position, t.position);
            int lo = std::min(s.position, t.position);
            circ.erase(circ.begin() + hi);
            circ.erase(circ.begin() + lo);
            signs.erase(m.x);
            break;
        }
        case MoveKind::R2Add: {
            check_circle(d, m.circle, "r2+");
            check_circle(d, m.circle_t, "r2+");
            need(m.sign == 1 || m.sign == -1, "r2+: sign must be +1 or -1");
            int u = d.max_chord_id() + 1;
            int w = u + 1;
            std::vector<Endpoint> src = {{u, Role::Source}, {w, Role::Source}};
            std::vector<Endpoint> tgt = m.pattern == R2Pattern::Interleaved
                                            ? std::vector<Endpoint>{{u, Role::Target}, {w, Role::Target}}
                                            : std::vector<Endpoint>{{w, Role::Target}, {u, Role::Target}};
            int ls = static_cast<int>(circles[m.circle].size());
            int lt = static_cast<int>(circles[m.circle_t].size());
            need(m.gap >= 0 && m.gap <= ls, "r2+: source gap out of range" + win(m.circle, m.gap));
            need(m.gap_t >= 0 && m.gap_t <= lt,
                 "r2+: target gap out of range" + win(m.circle_t, m.gap_t));
            auto insert_at = [&](int c, int g, const std::vector<Endpoint>& block) {
                circles[c].insert(circles[c].begin() + g, block.begin(), block.end());
            };
            if (m.circle != m.circle_t) {
                insert_at(m.circle, m.gap, src);
                insert_at(m.circle_t, m.gap_t, tgt);
            } else if (m.gap < m.gap_t) {
                insert_at(m.circle, m.gap, src);
                insert_at(m.circle_t, m.gap_t + 2, tgt);
            } else if (m.gap_t < m.gap) {
                insert_at(m.circle_t, m.gap_t, tgt);
                insert_at(m.circle, m.gap + 2, src);
            } else if (m.order == PairOrder::SourceFirst) {
                insert_at(m.circle, m.gap, src);
                insert_at(m.circle_t, m.gap + 2, tgt);
            } else {
                insert_at(m.circle_t, m.gap_t, tgt);
                insert_at(m.circle, m.gap + 2, src);
            }
            signs[u] = m.sign;
            signs[w] = -m.sign;
            break;
        }
        case MoveKind::R2Remove: {
            need(d.has_chord(m.x), "r2-: no chord with id " + std::to_string(m.x));
            need(d.has_chord(m.y), "r2-: no chord with id " + std::to_string(m.y));
            need(m.x != m.y, "r2-: the two chords must differ");
            need(d.sign(m.x) == -d.sign(m.y), "r2-: chord signs must be opposite");
            auto sx = d.endpoint(m.x, Role::Source), sy = d.endpoint(m.y, Role::Source);
            auto tx = d.endpoint(m.x, Role::Target), ty = d.endpoint(m.y, Role::Target);
            need(sx.circle == sy.circle &&
                     block_start(sx.position, sy.position, clen(d, sx.circle)) >= 0,
                 "r2-: source endpoints are not adjacent");
            need(tx.circle == ty.circle &&
                     block_start(tx.position, ty.position, clen(d, tx.circle)) >= 0,
                 "r2-: target endpoints are not adjacent");
            // erase per circle, highest index first
            std::map<int, std::vector<int>> doomed;
            for (auto r : {sx, sy, tx, ty}) doomed[r.circle].push_back(r.position);
            for (auto& [c, ps] : doomed) {
                std::sort(ps.rbegin(), ps.rend());
                for (int p : ps) circles[c].erase(circles[c].begin() + p);
            }
            signs.erase(m.x);
            signs.erase(m.y);
            break;
        }
        case MoveKind::R3: {
            int side = r3_side(d, m);
            need(side >= 0, "r3: pattern does not match at the given windows");
            for (auto ref : {m.p1, m.p2, m.p3}) {
                auto& circ = circles[ref.circle];
                int len = static_cast<int>(circ.size());
                std::swap(circ[ref.position], circ[cyc(ref.position + 1, len)]);
            }
            break;
        }
    }
    return GaussDiagram(circles, signs);
}

GaussDiagram apply_moves(const GaussDiagram& d, const std::vector<MoveInstance>& ms) {
    GaussDiagram cur = d;
    for (const auto& m : ms) cur = apply_move(cur, m);
    return cur;
}

MoveInstance invert(const GaussDiagram& before, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::Xi:
        case MoveKind::R3:
            return m;
        case MoveKind::R1Add: {
            MoveInstance inv;
            inv.kind = MoveKind::R1Remove;
            inv.x = before.max_chord_id() + 1;
            return inv;
        }
        case MoveKind::R2Add: {
            MoveInstance inv;
            inv.kind = MoveKind::R2Remove;
            inv.x = before.max_chord_id() + 1;
            inv.y = before.max_chord_id() + 2;
            return inv;
        }
        case MoveKind::R1Remove: {
            need(before.has_chord(m.x) && before.is_self_chord(m.x),
                 "invert r1-: chord missing or not a self-chord");
            auto [s, t] = before.endpoints(m.x);
            int len = clen(before, s.circle);
            int start = block_start(s.position, t.position, len);
            need(start >= 0, "invert r1-: endpoints not adjacent");
            MoveInstance inv;
            inv.kind = MoveKind::R1Add;
            inv.circle = s.circle;
            inv.sign = before.sign(m.x);
            inv.order = at(before, s.circle, start).role == Role::Source ? PairOrder::SourceFirst
                                                                         : PairOrder::TargetFirst;
            // survivors strictly before the block start
            int other = cyc(start + 1, len);
            int g = 0;
            for (int j = 0; j < start; ++j)
                if (j != other) ++g;
            inv.gap = g;
            return inv;
        }
        case MoveKind::R2Remove: {
            auto sx = before.endpoint(m.x, Role::Source), sy = before.endpoint(m.y, Role::Source);
            auto tx = before.endpoint(m.x, Role::Target), ty = before.endpoint(m.y, Role::Target);
            int lens = clen(before, sx.circle), lent = clen(before, tx.circle);
            int qs = block_start(sx.position, sy.position, lens);
            int qt = block_start(tx.position, ty.position, lent);
            need(sx.circle == sy.circle && qs >= 0 && tx.circle == ty.circle && qt >= 0,
                 "invert r2-: pattern does not match");
            MoveInstance inv;
            inv.kind = MoveKind::R2Add;
            // the chord whose source opens the source block carries the sign parameter
            int u = at(before, sx.circle, qs).chord_id;
            inv.sign = before.sign(u);
            inv.pattern = at(before, tx.circle, qt).chord_id == u ? R2Pattern::Interleaved
                                                               : R2Pattern::Nested;
            auto survivors_before = [&](int c, int q) {
                std::set<int> removed;
                for (auto r : {sx, sy, tx, ty})
                    if (r.circle == c) removed.insert(r.position);
                int g = 0;
                for (int j = 0; j < q; ++j)
                    if (!removed.count(j)) ++g;
                return g;
            };
            inv.circle = sx.circle;
            inv.gap = survivors_before(sx.circle, qs);
            inv.circle_t = tx.circle;
            inv.gap_t = survivors_before(tx.circle, qt);
            if (inv.circle == inv.circle_t && inv.gap == inv.gap_t) {
                inv.order = cyc(qs + 2, lens) == qt ? PairOrder::SourceFirst
                                                    : PairOrder::TargetFirst;
            }
            return inv;
        }
    }
    fail("invert: unknown move kind");
}

std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d,
                                          const std::set<MoveKind>& kinds,
                                          int max_chords) {
    std::vector<MoveInstance> out;
    int n = d.chord_count();

    if (kinds.count(MoveKind::Xi)) {
        for (int c = 0; c < d.mu(); ++c) {
            int len = clen(d, c);
            if (len < 3) continue;
            for (int i = 0; i < len; ++i) {
                MoveInstance m;
                m.kind = MoveKind::Xi;
                m.circle = c;
                m.pos = i;
                out.push_back(m);
            }
        }
    }
    if (kinds.count(MoveKind::R1Remove)) {
        for (const auto& [id, sg] : d.chords()) {
            if (!d.is_self_chord(id)) continue;
            auto [s, t] = d.endpoints(id);
            if (block_start(s.position, t.position, clen(d, s.circle)) < 0) continue;
            MoveInstance m;
            m.kind = MoveKind::R1Remove;
            m.x = id;
            out.push_back(m);
        }
    }
    if (kinds.count(MoveKind::R2Remove)) {
        for (auto it = d.chords().begin(); it != d.chords().end(); ++it) {
            for (auto jt = std::next(it); jt != d.chords().end(); ++jt) {
                if (it->second != -jt->second) continue;
                MoveInstance m;
                m.kind = MoveKind::R2Remove;
                m.x = it->first;
                m.y = jt->first;
                auto sx = d.endpoint(m.x, Role::Source), sy = d.endpoint(m.y, Role::Source);
                auto tx = d.endpoint(m.x, Role::Target), ty = d.endpoint(m.y, Role::Target);
                if (sx.circle != sy.circle || tx.circle != ty.circle) continue;
                if (block_start(sx.position, sy.position, clen(d, sx.circle)) < 0) continue;
                if (block_start(tx.position, ty.position, clen(d, tx.circle)) < 0) continue;
                out.push_back(m);
            }
        }
    }
    if (kinds.count(MoveKind::R1Add) && n + 1 <= max_chords) {
        for (int c = 0; c < d.mu(); ++c) {
            int len = clen(d, c);
            int gaps = std::max(len, 1);
            for (int g = 0; g < gaps; ++g)
                for (int s : {1, -1})
                    for (auto o : {PairOrder::SourceFirst, PairOrder::TargetFirst}) {
                        MoveInstance m;
                        m.kind = MoveKind::R1Add;
                        m.circle = c;
                        m.gap = g;
                        m.sign = s;
                        m.order = o;
                        out.push_back(m);
                    }
        }
    }
    if (kinds.count(MoveKind::R2Add) && n + 2 <= max_chords) {
        for (int cs = 0; cs < d.mu(); ++cs) {
            int gs_max = std::max(clen(d, cs), 1);
            for (int gs = 0; gs < gs_max; ++gs)
                for (int ct = 0; ct < d.mu(); ++ct) {
                    int gt_max = std::max(clen(d, ct), 1);
                    for (int gt = 0; gt < gt_max; ++gt)
                        for (int s : {1, -1})
                            for (auto p : {R2Pattern::Nested, R2Pattern::Interleaved}) {
                                bool tie = cs == ct && gs == gt;
                                for (auto o : {PairOrder::SourceFirst, PairOrder::TargetFirst}) {
                                    if (!tie && o == PairOrder::TargetFirst) continue;
                                    MoveInstance m;
                                    m.kind = MoveKind::R2Add;
                                    m.circle = cs;
                                    m.gap = gs;
                                    m.circle_t = ct;
                                    m.gap_t = gt;
                                    m.sign = s;
                                    m.pattern = p;
                                    m.order = o;
                                    out.push_back(m);
                                }
                            }
                }
        }
    }
    if (kinds.count(MoveKind::R3)) {
        // scan source-source adjacent pairs as the first window of either side
        for (int c = 0; c < d.mu(); ++c) {
            int len = clen(d, c);
            for (int a = 0; a < len; ++a) {
                const auto& e = at(d, c, a);
                const auto& f = at(d, c, a + 1);
                if (e.role != Role::Source || f.role != Role::Source) continue;
                for (int side = 0; side < 2; ++side) {
                    int x = side == 0 ? e.chord_id : f.chord_id;
                    int y = side == 0 ? f.chord_id : e.chord_id;
                    if (x == y) continue;
                    auto ux = d.endpoint(x, Role::Target);
                    auto uy = d.endpoint(y, Role::Target);
                    // locate the second window around Ux, the third around Uy
                    int lx = clen(d, ux.circle), ly = clen(d, uy.circle);
                    MoveInstance m;
                    m.kind = MoveKind::R3;
                    m.p1 = {c, a};
                    if (side == 0) {
                        m.p2 = {ux.circle, ux.position};
                        m.p3 = {uy.circle, uy.position};
                    } else {
                        m.p2 = {ux.circle, cyc(ux.position - 1, lx)};
                        m.p3 = {uy.circle, cyc(uy.position - 1, ly)};
                    }
                    if (r3_side(d, m) == side) out.push_back(m);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }
std::string order_str(PairOrder o) { return o == PairOrder::SourceFirst ? "st" : "ts"; }
std::string pattern_str(R2Pattern p) { return p == R2Pattern::Interleaved ? "i" : "n"; }
std::string ref_str(const EndpointRef& r) {
    return std::to_string(r.circle + 1) + ":" + std::to_string(r.position);
}

std::map<std::string, std::string> parse_fields(const std::string& body) {
    std::map<std::string, std::string> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        need(eq != std::string::npos, "move spec: expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int parse_int(const std::map<std::string, std::string>& f, const std::string& key) {
    auto it = f.find(key);
    need(it != f.end(), "move spec: missing field '" + key + "'");
    try {
        size_t used = 0;
        int v = std::stoi(it->second, &used);
        need(used == it->second.size(), "move spec: bad integer '" + it->second + "'");
        return v;
    } catch (const DiagramError&) {
        throw;
    } catch (...) {
        fail("move spec: bad integer '" + it->second + "'");
    }
}

int parse_sign(const std::map<std::string, std::string>& f) {
    auto it = f.find("s");
    need(it != f.end(), "move spec: missing field 's'");
    if (it->second == "+" || it->second == "+1" || it->second == "1") return 1;
    if (it->second == "-" || it->second == "-1") return -1;
    fail("move spec: bad sign '" + it->second + "'");
}

PairOrder parse_order(const std::map<std::string, std::string>& f) {
    auto it = f.find("o");
    if (it == f.end()) return PairOrder::SourceFirst;
    if (it->second == "st") return PairOrder::SourceFirst;
    if (it->second == "ts") return PairOrder::TargetFirst;
    fail("move spec: bad order '" + it->second + "' (want st or ts)");
}

EndpointRef parse_ref(const std::map<std::string, std::string>& f, const std::string& key) {
    auto it = f.find(key);
    need(it != f.end(), "move spec: missing field '" + key + "'");
    auto colon = it->second.find(':');
    need(colon != std::string::npos, "move spec: bad window '" + it->second + "' (want c:i)");
    try {
        int c = std::stoi(it->second.substr(0, colon));
        int i = std::stoi(it->second.substr(colon + 1));
        need(c >= 1, "move spec: circle indices are 1-based");
        return {c - 1, i};
    } catch (const DiagramError&) {
        throw;
    } catch (...) {
        fail("move spec: bad window '" + it->second + "'");
    }
}

}  // namespace

std::string to_spec(const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::Xi:
            return "xi:c=" + std::to_string(m.circle + 1) + ",i=" + std::to_string(m.pos);
        case MoveKind::R1Add:
            return "r1+:c=" + std::to_string(m.circle + 1) + ",g=" + std::to_string(m.gap) +
                   ",s=" + sign_str(m.sign) + ",o=" + order_str(m.order);
        case MoveKind::R1Remove:
            return "r1-:id=" + std::to_string(m.x);
        case MoveKind::R2Add:
            return "r2+:cs=" + std::to_string(m.circle + 1) + ",gs=" + std::to_string(m.gap) +
                   ",ct=" + std::to_string(m.circle_t + 1) + ",gt=" + std::to_string(m.gap_t) +
                   ",s=" + sign_str(m.sign) + ",p=" + pattern_str(m.pattern) +
                   ",o=" + order_str(m.order);
        case MoveKind::R2Remove:
            return "r2-:x=" + std::to_string(m.x) + ",y=" + std::to_string(m.y);
        case MoveKind::R3:
            return "r3:p1=" + ref_str(m.p1) + ",p2=" + ref_str(m.p2) + ",p3=" + ref_str(m.p3);
    }
    fail("to_spec: unknown move kind");
}

MoveInstance parse_move_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto f = parse_fields(body);
    MoveInstance m;
    if (head == "xi") {
        m.kind = MoveKind::Xi;
        int c = parse_int(f, "c");
        need(c >= 1, "move spec: circle indices are 1-based");
        m.circle = c - 1;
        m.pos = parse_int(f, "i");
    } else if (head == "r1+") {
        m.kind = MoveKind::R1Add;
        int c = parse_int(f, "c");
        need(c >= 1, "move spec: circle indices are 1-based");
        m.circle = c - 1;
        m.gap = parse_int(f, "g");
        m.sign = parse_sign(f);
        m.order = parse_order(f);
    } else if (head == "r1-") {
        m.kind = MoveKind::R1Remove;
        m.x = parse_int(f, "id");
    } else if (head == "r2+") {
        m.kind = MoveKind::R2Add;
        int cs = parse_int(f, "cs"), ct = parse_int(f, "ct");
        need(cs >= 1 && ct >= 1, "move spec: circle indices are 1-based");
        m.circle = cs - 1;
        m.gap = parse_int(f, "gs");
        m.circle_t = ct - 1;
        m.gap_t = parse_int(f, "gt");
        m.sign = parse_sign(f);
        auto it = f.find("p");
        if (it != f.end()) {
            if (it->second == "n")
                m.pattern = R2Pattern::Nested;
            else if (it->second == "i")
                m.pattern = R2Pattern::Interleaved;
            else
                fail("move spec: bad pattern '" + it->second + "' (want n or i)");
        }
        m.order = parse_order(f);
    } else if (head == "r2-") {
        m.kind = MoveKind::R2Remove;
        m.x = parse_int(f, "x");
        m.y = parse_int(f, "y");
    } else if (head == "r3") {
        m.kind = MoveKind::R3;
        m.p1 = parse_ref(f, "p1");
        m.p2 = parse_ref(f, "p2");
        m.p3 = parse_ref(f, "p3");
    } else {
        fail("move spec: unknown move '" + head + "'");
    }
    return m;
}

namespace {

MoveInstance mk_xi(int c, int pos, int len) {
    MoveInstance m;
    m.kind = MoveKind::Xi;
    m.circle = c;
    m.pos = cyc(pos, len);
    return m;
}

// is the chord at positions i, i+2 one self-chord? (a shell around i+1)
bool shell_at(const GaussDiagram& d, int c, int i) {
    return at(d, c, i).chord_id == at(d, c, i + 2).chord_id;
}

bool window_ok(const GaussDiagram& d, int c, int i, int size) {
    if (c < 0 || c >= d.mu()) return false;
    int len = clen(d, c);
    return len >= size && i >= 0 && i < len;
}

}  // namespace

bool macro_matches(const GaussDiagram& d, MacroKind k, MacroDir dir, const MacroWindow& w) {
    int c = w.circle, i = w.pos;
    switch (k) {
        case MacroKind::Cross:
            return window_ok(d, c, i, 4);
        case MacroKind::OddSwap:
            return window_ok(d, c, i, 3) && clen(d, c) % 2 == 1;
        case MacroKind::ShellSlide: {
            if (!window_ok(d, c, i, 5)) return false;
            int off = dir == MacroDir::Forward ? 0 : 1;
            return shell_at(d, c, i + off) && shell_at(d, c, i + off + 1) &&
                   at(d, c, i + off).chord_id != at(d, c, i + off + 1).chord_id;
        }
        case MacroKind::ShellSign: {
            if (dir == MacroDir::Forward)
                return window_ok(d, c, i, 3) && shell_at(d, c, i);
            if (!window_ok(d, c, i, 7)) return false;
            if (!(shell_at(d, c, i) && shell_at(d, c, i + 3) && shell_at(d, c, i + 4)))
                return false;
            int y = at(d, c, i).chord_id, z = at(d, c, i + 3).chord_id, x = at(d, c, i + 4).chord_id;
            if (y == z || z == x || y == x) return false;
            if (!(d.sign(z) == d.sign(x) && d.sign(y) == -d.sign(z))) return false;
            return at(d, c, i).role == at(d, c, i + 3).role &&
                   at(d, c, i + 2).role == at(d, c, i + 5).role;
        }
        case MacroKind::ShellPairCancel: {
            if (dir == MacroDir::Backward) {
                return c >= 0 && c < d.mu() && i >= 0 && i <= clen(d, c);
            }
            if (!window_ok(d, c, i, 8)) return false;
            if (!(shell_at(d, c, i) && shell_at(d, c, i + 1) && shell_at(d, c, i + 4) &&
                  shell_at(d, c, i + 5)))
                return false;
            int a = at(d, c, i).chord_id, b = at(d, c, i + 1).chord_id;
            int cc = at(d, c, i + 4).chord_id, dd = at(d, c, i + 5).chord_id;
            std::set<int> ids = {a, b, cc, dd};
            if (ids.size() != 4) return false;
            if (!(d.sign(a) == d.sign(b) && d.sign(cc) == d.sign(dd) &&
                  d.sign(cc) == -d.sign(a)))
                return false;
            return at(d, c, i + 1).role == at(d, c, i + 4).role &&
                   at(d, c, i + 3).role == at(d, c, i + 6).role &&
                   at(d, c, i).role == at(d, c, i + 5).role &&
                   at(d, c, i + 2).role == at(d, c, i + 7).role;
        }
        case MacroKind::Exchange1:
            return window_ok(d, c, i, 7) && shell_at(d, c, i) && shell_at(d, c, i + 4) &&
                   at(d, c, i).chord_id != at(d, c, i + 4).chord_id;
        case MacroKind::Exchange2:
            return window_ok(d, c, i, 4) && shell_at(d, c, i + 1);
        case MacroKind::Exchange3:
            return window_ok(d, c, i, 5) && shell_at(d, c, i + 1);
        case MacroKind::ShellTriple: {
            if (dir == MacroDir::Backward) return window_ok(d, c, i, 2);
            if (!window_ok(d, c, i, 4)) return false;
            return at(d, c, i).chord_id == at(d, c, i + 3).chord_id;
        }
    }
    return false;
}

std::vector<MoveInstance> expand_macro(const GaussDiagram& d, MacroKind k, MacroDir dir,
                                       const MacroWindow& w) {
    need(macro_matches(d, k, dir, w),
         "macro " + macro_name(k) + ": pattern does not match" + win(w.circle, w.pos));
    int c = w.circle, i = w.pos;
    int len = clen(d, c);
    std::vector<MoveInstance> out;
    switch (k) {
        case MacroKind::Cross:
            out = {mk_xi(c, i, len), mk_xi(c, i + 1, len)};
            break;
        case MacroKind::OddSwap: {
            int half = (len - 1) / 2;
            for (int j = 0; j <= half - 2; ++j) {
                out.push_back(mk_xi(c, i + 2 * j, len));
                out.push_back(mk_xi(c, i + 2 * j + 1, len));
            }
            out.push_back(mk_xi(c, i + 2 * (half - 1), len));
            break;
        }
        case MacroKind::ShellSlide:
            if (dir == MacroDir::Forward)
                out = {mk_xi(c, i + 2, len), mk_xi(c, i, len)};
            else
                out = {mk_xi(c, i, len), mk_xi(c, i + 2, len)};
            break;
        case MacroKind::ShellSign: {
            if (dir == MacroDir::Forward) {
                int eps = d.sign(at(d, c, i).chord_id);
                MoveInstance add;
                add.kind = MoveKind::R2Add;
                add.circle = c;
                add.gap = i;
                add.circle_t = c;
                add.gap_t = i;
                add.sign = -eps;
                add.pattern = R2Pattern::Interleaved;
                add.order = PairOrder::SourceFirst;
                int L = len + 4;
                out = {add, mk_xi(c, i + 1, L), mk_xi(c, i + 3, L), mk_xi(c, i + 1, L),
                       mk_xi(c, i + 3, L)};
            } else {
                MoveInstance rem;
                rem.kind = MoveKind::R2Remove;
                rem.x = at(d, c, i).chord_id;
                rem.y = at(d, c, i + 3).chord_id;
                out = {mk_xi(c, i + 3, len), mk_xi(c, i + 1, len), mk_xi(c, i + 3, len),
                       mk_xi(c, i + 1, len), rem};
            }
            break;
        }
        case MacroKind::ShellPairCancel: {
            if (dir == MacroDir::Forward) {
                MoveInstance rem1;
                rem1.kind = MoveKind::R2Remove;
                rem1.x = at(d, c, i + 1).chord_id;
                rem1.y = at(d, c, i + 4).chord_id;
                MoveInstance rem2;
                rem2.kind = MoveKind::R2Remove;
                rem2.x = at(d, c, i).chord_id;
                rem2.y = at(d, c, i + 5).chord_id;
                out = {mk_xi(c, i + 2, len), mk_xi(c, i + 4, len), rem1, rem2};
            } else {
                MoveInstance add1;
                add1.kind = MoveKind::R2Add;
                add1.circle = c;
                add1.gap = i;
                add1.circle_t = c;
                add1.gap_t = i;
                add1.sign = w.sign;
                add1.pattern = R2Pattern::Interleaved;
                add1.order = PairOrder::SourceFirst;
                auto add2 = add1;
                add2.gap = i + 1;
                add2.gap_t = i + 1;
                int L = len + 8;
                out = {add1, add2, mk_xi(c, i + 4, L), mk_xi(c, i + 2, L)};
            }
            break;
        }
        case MacroKind::Exchange1:
            out = {mk_xi(c, i + 1, len), mk_xi(c, i + 3, len), mk_xi(c, i + 1, len)};
            break;
        case MacroKind::Exchange2:
            out = {mk_xi(c, i, len)};
            break;
        case MacroKind::Exchange3:
            out = {mk_xi(c, i, len), mk_xi(c, i + 2, len), mk_xi(c, i, len)};
            break;
        case MacroKind::ShellTriple: {
            if (dir == MacroDir::Forward) {
                MoveInstance rem;
                rem.kind = MoveKind::R1Remove;
                rem.x = at(d, c, i).chord_id;
                out = {mk_xi(c, i, len), rem};
            } else {
                MoveInstance add;
                add.kind = MoveKind::R1Add;
                add.circle = c;
                add.gap = i + 2 <= len ? i + 2 : i + 2 - len;
                add.sign = w.sign;
                add.order = w.order;
                int L = len + 2;
                int bpos = add.gap > i ? i : i + 2;
                out = {add, mk_xi(c, bpos, L)};
            }
            break;
        }
    }
    return out;
}

std::string macro_name(MacroKind k) {
    switch (k) {
        case MacroKind::Cross: return "cross";
        case MacroKind::OddSwap: return "odd-swap";
        case MacroKind::ShellSlide: return "shell-slide";
        case MacroKind::ShellSign: return "shell-sign";
        case MacroKind::ShellPairCancel: return "shell-pair-cancel";
        case MacroKind::Exchange1: return "exchange-1";
        case MacroKind::Exchange2: return "exchange-2";
        case MacroKind::Exchange3: return "exchange-3";
        case MacroKind::ShellTriple: return "shell-triple";
    }
    return "?";
}

}  // namespace vlink
