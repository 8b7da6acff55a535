#include "vlink/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "json.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

namespace {

std::string profile_to_string(const InvariantProfile& p) {
    if (p.mu == 1) return "mu=1 j=" + std::to_string(p.j_knot);
    std::string out = "mu=2 parity=";
    out += p.parity == LinkParity::Odd ? "odd" : "even";
    if (p.parity == LinkParity::Odd) {
        out += " lk=(" + std::to_string(p.lk12) + "," + std::to_string(p.lk21) + ")";
    } else {
        out += " j=(" + std::to_string(p.j1) + "," + std::to_string(p.j2) + ")";
        out += " fbar=(" + std::to_string(p.fbar[0]) + "," + std::to_string(p.fbar[1]) + "," +
               std::to_string(p.fbar[2]) + "," + std::to_string(p.fbar[3]) + ")";
    }
    return out;
}

}  // namespace

SearchResult bfs_connect(const GaussDiagram& from, const GaussDiagram& to,
                         const std::set<MoveKind>& kinds, int max_chords, int max_states) {
    SearchResult res;
    std::string start = canonical_key(from);
    std::string goal = canonical_key(to);

    struct Edge {
        std::string parent;
        MoveInstance move;
    };
    std::map<std::string, Edge> seen;
    seen[start] = {};
    std::deque<std::string> queue{start};
    bool truncated = false;

    auto reconstruct = [&](const std::string& key) {
        std::vector<MoveInstance> path;
        std::string cur = key;
        while (cur != start) {
            const auto& e = seen.at(cur);
            path.push_back(e.move);
            cur = e.parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    if (start == goal) {
        res.found = true;
        res.visited = 1;
        res.exhausted = true;
        return res;
    }

    while (!queue.empty()) {
        std::string key = queue.front();
        queue.pop_front();
        ++res.visited;
        GaussDiagram d = parse_gauss_code(key);
        for (const auto& m : enumerate_moves(d, kinds, max_chords)) {
            std::string next = canonical_key(apply_move(d, m));
            if (seen.count(next)) continue;
            seen[next] = {key, m};
            if (next == goal) {
                res.found = true;
                res.path = reconstruct(next);
                return res;
            }
            if (static_cast<int>(seen.size()) >= max_states) {
                truncated = true;
            } else {
                queue.push_back(next);
            }
        }
    }
    res.exhausted = !truncated;
    return res;
}

ScrambleResult random_scramble(const GaussDiagram& d, int steps, std::uint64_t seed,
                               const std::set<MoveKind>& kinds, int max_chords) {
    std::mt19937_64 rng(seed);
    ScrambleResult out{d, {}};
    for (int i = 0; i < steps; ++i) {
        auto moves = enumerate_moves(out.diagram, kinds, max_chords);
        if (moves.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
        const auto& m = moves[pick(rng)];
        out.diagram = apply_move(out.diagram, m);
        out.applied.push_back(m);
    }
    return out;
}

CensusReport census(int max_chords, int add_budget, int max_states) {
    if (max_chords < 0) throw DiagramError("census: chord bound must be non-negative");
    // Every two-circle diagram with n chords, up to rotation and relabelling:
    // permute the 2n endpoint tokens, split them between the circles, and
    // range over sign patterns.
    std::map<std::string, GaussDiagram> all;
    for (int n = 0; n <= max_chords; ++n) {
        std::vector<Endpoint> tokens;
        for (int id = 1; id <= n; ++id) {
            tokens.push_back({id, Role::Source});
            tokens.push_back({id, Role::Target});
        }
        std::vector<int> perm(tokens.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        do {
            for (size_t split = 0; split <= tokens.size(); ++split) {
                for (int mask = 0; mask < (1 << n); ++mask) {
                    std::vector<Circle> circles(2);
                    for (size_t i = 0; i < tokens.size(); ++i)
                        circles[i < split ? 0 : 1].push_back(tokens[perm[i]]);
                    std::map<int, int> signs;
                    for (int id = 1; id <= n; ++id) signs[id] = (mask >> (id - 1)) & 1 ? 1 : -1;
                    GaussDiagram d(circles, signs);
                    all.try_emplace(canonical_key(d), d);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::map<std::string, std::vector<const GaussDiagram*>> groups;
    for (const auto& [key, d] : all) groups[profile_to_string(invariant_profile(d))].push_back(&d);

    std::set<MoveKind> kinds = {MoveKind::Xi,       MoveKind::R3,       MoveKind::R1Remove,
                                MoveKind::R2Remove, MoveKind::R1Add,    MoveKind::R2Add};
    CensusReport report;
    report.diagram_count = static_cast<int>(all.size());
    for (const auto& [profile, members] : groups) {
        CensusGroup g;
        g.profile = profile;
        g.member_count = static_cast<int>(members.size());
        // one flood fill per group from the first member; the depth at which
        // each other member appears is its path length
        std::set<std::string> wanted;
        for (size_t i = 1; i < members.size(); ++i) wanted.insert(canonical_key(*members[i]));
        std::map<std::string, int> depth;
        std::deque<std::string> queue;
        std::string start = canonical_key(*members[0]);
        depth[start] = 0;
        queue.push_back(start);
        size_t found = 0;
        if (wanted.count(start)) ++found;  // defensive; keys are distinct
        while (!queue.empty() && found < wanted.size() &&
               static_cast<int>(depth.size()) < max_states) {
            std::string key = queue.front();
            queue.pop_front();
            GaussDiagram d = parse_gauss_code(key);
            int dd = depth[key];
            for (const auto& m : enumerate_moves(d, kinds, add_budget)) {
                std::string next = canonical_key(apply_move(d, m));
                if (depth.count(next)) continue;
                depth[next] = dd + 1;
                if (wanted.count(next)) ++found;
                queue.push_back(next);
            }
        }
        for (const auto& key : wanted) {
            auto it = depth.find(key);
            if (it != depth.end()) {
                ++g.connected_pairs;
                ++g.path_length_histogram[it->second];
            } else {
                ++g.unresolved_pairs;
            }
        }
        report.groups.push_back(std::move(g));
    }
    return report;
}

std::string census_to_json(const CensusReport& r) {
    nlohmann::json j;
    j["diagram_count"] = r.diagram_count;
    j["groups"] = nlohmann::json::array();
    for (const auto& g : r.groups) {
        nlohmann::json e;
        e["profile"] = g.profile;
        e["member_count"] = g.member_count;
        e["connected_pairs"] = g.connected_pairs;
        e["unresolved_pairs"] = g.unresolved_pairs;
        nlohmann::json hist = nlohmann::json::object();
        for (const auto& [len, cnt] : g.path_length_histogram)
            hist[std::to_string(len)] = cnt;
        e["path_length_histogram"] = hist;
        j["groups"].push_back(e);
    }
    return j.dump(2);
}

}  // namespace vlink
