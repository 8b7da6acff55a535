#pragma once

#include <string>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

// One letter of a portion word. Base letters name a nonself-chord together
// with its decorating shells: A bare, B with a shell on the second circle,
// C with a shell on the first circle, D with both. Unhatted letters run from
// the first circle to the second, hatted ones the other way.
struct Letter {
    char base = 'A';  // 'A', 'B', 'C', or 'D'
    bool hat = false;
    int exponent = 1;  // +1 or -1
    int sign = 1;      // chord sign carried by the letter
    friend bool operator==(const Letter&, const Letter&) = default;
};

using PortionWord = std::vector<Letter>;

// Normalized word A^a B^b Ah^ahat Bh^bhat Ch^chat with chat in {0, 1}.
struct WordNormal {
    int a = 0, b = 0, ahat = 0, bhat = 0;
    int chat = 0;
    friend bool operator==(const WordNormal&, const WordNormal&) = default;
};

WordNormal word_normalize(const PortionWord& w);

PortionWord parse_word(const std::string& text);
std::string format_word(const PortionWord& w);
std::string format_word_normal(const WordNormal& n);
PortionWord expand_word_normal(const WordNormal& n);

// Two-circle diagram realizing a portion word plus k interleaved self-chord
// pairs on the first circle and l on the second.
GaussDiagram realize_word(const PortionWord& w, int k, int l);

// Normal form for links with oddly many nonself-chords: a bare chords one
// way, b the other; requires a + b odd.
GaussDiagram build_odd_normal(int a, int b);

// Normal form for links with evenly many nonself-chords, with first odd
// writhe m, second odd writhe 2l + q + s, and word A^p B^q Ah^r Bh^s
// (followed by Ch when m is odd).
GaussDiagram build_even_normal(int m, int l, int p, int q, int r, int s);

// One-circle normal form with odd writhe j; requires j even.
GaussDiagram build_knot_normal(int j);

// Normal-form diagram with the given profile; throws on inconsistent input.
GaussDiagram profile_to_normal(const InvariantProfile& p);

// Canonical representative of the move-equivalence class of d.
GaussDiagram normalize(const GaussDiagram& d);

// Equivalence under Reidemeister moves plus the endpoint-swap move. If
// reason is non-null it receives the first differing invariant, or "".
bool xi_equivalent(const GaussDiagram& d1, const GaussDiagram& d2, std::string* reason = nullptr);

// Equivalence under Reidemeister plus forbidden moves: trivial for knots,
// decided by the linking numbers for two-circle diagrams.
bool forbidden_equivalent(const GaussDiagram& d1, const GaussDiagram& d2,
                          std::string* reason = nullptr);

}  // namespace vlink
