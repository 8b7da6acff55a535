#include "vlink/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace vlink {

GaussDiagram::GaussDiagram(std::vector<Circle> circles, std::map<int, int> chord_signs)
    : circles_(std::move(circles)), chord_signs_(std::move(chord_signs)) {
    validate();
}

int GaussDiagram::sign(int chord_id) const {
    auto it = chord_signs_.find(chord_id);
    if (it == chord_signs_.end())
        throw DiagramError("unknown chord id " + std::to_string(chord_id));
    return it->second;
}

int GaussDiagram::max_chord_id() const {
    return chord_signs_.empty() ? 0 : chord_signs_.rbegin()->first;
}

std::pair<EndpointRef, EndpointRef> GaussDiagram::endpoints(int chord_id) const {
    EndpointRef src{-1, -1}, tgt{-1, -1};
    for (int c = 0; c < mu(); ++c) {
        const auto& circ = circles_[c];
        for (int i = 0; i < static_cast<int>(circ.size()); ++i) {
            if (circ[i].chord_id != chord_id) continue;
            if (circ[i].role == Role::Source)
                src = {c, i};
            else
                tgt = {c, i};
        }
    }
    if (src.circle < 0 || tgt.circle < 0)
        throw DiagramError("unknown chord id " + std::to_string(chord_id));
    return {src, tgt};
}

EndpointRef GaussDiagram::endpoint(int chord_id, Role role) const {
    auto [src, tgt] = endpoints(chord_id);
    return role == Role::Source ? src : tgt;
}

bool GaussDiagram::is_self_chord(int chord_id) const {
    auto [src, tgt] = endpoints(chord_id);
    return src.circle == tgt.circle;
}

std::pair<int, int> GaussDiagram::chord_type(int chord_id) const {
    auto [src, tgt] = endpoints(chord_id);
    return {src.circle, tgt.circle};
}

void GaussDiagram::validate() const {
    if (circles_.empty()) throw DiagramError("diagram must have at least one circle");
    std::map<int, int> source_count, target_count;
    for (const auto& circ : circles_) {
        for (const auto& ep : circ) {
            if (!chord_signs_.count(ep.chord_id))
                throw DiagramError("endpoint refers to unknown chord id " +
                                   std::to_string(ep.chord_id));
            (ep.role == Role::Source ? source_count : target_count)[ep.chord_id]++;
        }
    }
    for (const auto& [id, sign] : chord_signs_) {
        if (id <= 0) throw DiagramError("chord ids must be positive");
        if (sign != 1 && sign != -1)
            throw DiagramError("chord sign must be +1 or -1 for id " + std::to_string(id));
        if (source_count[id] != 1 || target_count[id] != 1)
            throw DiagramError("chord id " + std::to_string(id) +
                               " must occur exactly once as O and once as U");
    }
}

namespace {

std::string format_token(const Endpoint& ep, int sign) {
    std::string s;
    s += ep.role == Role::Source ? 'O' : 'U';
    s += std::to_string(ep.chord_id);
    s += sign > 0 ? '+' : '-';
    return s;
}

}  // namespace

GaussDiagram parse_gauss_code(const std::string& text) {
    std::vector<Circle> circles;
    std::map<int, int> signs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        Circle circ;
        std::istringstream toks(line);
        std::string tok;
        bool empty_marker = false;
        while (toks >> tok) {
            if (tok == "()") {
                empty_marker = true;
                continue;
            }
            if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
                throw DiagramError("bad token '" + tok + "'");
            char sign_ch = tok.back();
            if (sign_ch != '+' && sign_ch != '-')
                throw DiagramError("bad token '" + tok + "': missing sign");
            int id = 0;
            try {
                size_t pos = 0;
                id = std::stoi(tok.substr(1, tok.size() - 2), &pos);
                if (pos != tok.size() - 2) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw DiagramError("bad token '" + tok + "': invalid chord id");
            }
            if (id <= 0) throw DiagramError("bad token '" + tok + "': id must be positive");
            int sign = sign_ch == '+' ? 1 : -1;
            auto it = signs.find(id);
            if (it != signs.end() && it->second != sign)
                throw DiagramError("sign mismatch for id " + std::to_string(id));
            signs[id] = sign;
            circ.push_back({id, tok[0] == 'O' ? Role::Source : Role::Target});
        }
        if (empty_marker && !circ.empty())
            throw DiagramError("'()' cannot be mixed with endpoint tokens on one line");
        circles.push_back(std::move(circ));
    }
    if (circles.empty()) throw DiagramError("no circles in input");
    return GaussDiagram(std::move(circles), std::move(signs));
}

std::string serialize(const GaussDiagram& d) {
    std::string out;
    for (int c = 0; c < d.mu(); ++c) {
        if (c > 0) out += '\n';
        const auto& circ = d.circle(c);
        if (circ.empty()) {
            out += "()";
            continue;
        }
        for (size_t i = 0; i < circ.size(); ++i) {
            if (i > 0) out += ' ';
            out += format_token(circ[i], d.sign(circ[i].chord_id));
        }
    }
    return out;
}

namespace {

// Serialize under a fixed rotation tuple, relabelling ids by first occurrence.
std::string rotated_key(const GaussDiagram& d, const std::vector<int>& rot) {
    std::map<int, int> relabel;
    int next = 1;
    std::string out;
    for (int c = 0; c < d.mu(); ++c) {
        if (c > 0) out += '\n';
        const auto& circ = d.circle(c);
        int len = static_cast<int>(circ.size());
        if (len == 0) {
            out += "()";
            continue;
        }
        for (int i = 0; i < len; ++i) {
            const Endpoint& ep = circ[(i + rot[c]) % len];
            auto [it, inserted] = relabel.try_emplace(ep.chord_id, next);
            if (inserted) ++next;
            if (i > 0) out += ' ';
            out += format_token({it->second, ep.role}, d.sign(ep.chord_id));
        }
    }
    return out;
}

}  // namespace

std::string canonical_key(const GaussDiagram& d) {
    std::vector<int> rot(d.mu(), 0);
    std::string best;
    bool first = true;
    while (true) {
        std::string key = rotated_key(d, rot);
        if (first || key < best) {
            best = std::move(key);
            first = false;
        }
        // Advance the rotation tuple (odometer over circle lengths).
        int c = 0;
        for (; c < d.mu(); ++c) {
            int len = std::max<int>(1, static_cast<int>(d.circle(c).size()));
            if (++rot[c] < len) break;
            rot[c] = 0;
        }
        if (c == d.mu()) break;
    }
    return best;
}

bool isomorphic(const GaussDiagram& a, const GaussDiagram& b) {
    return canonical_key(a) == canonical_key(b);
}

}  // namespace vlink
