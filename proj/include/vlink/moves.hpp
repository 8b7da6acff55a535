#pragma once

#include <set>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

enum class MoveKind { Xi, R1Add, R1Remove, R2Add, R2Remove, R3 };

enum class PairOrder { SourceFirst, TargetFirst };
enum class R2Pattern { Nested, Interleaved };

// An addressable primitive move. Fields are interpreted per kind:
//   Xi:       circle, pos          (swaps endpoints at pos and pos+2)
//   R1Add:    circle, gap, sign, order
//   R1Remove: x                    (free self-chord id)
//   R2Add:    circle, gap (source block), circle_t, gap_t (target block),
//             sign (of chord x), pattern, order (block order on gap ties)
//   R2Remove: x, y
//   R3:       p1, p2, p3           (starts of the three adjacent pairs)
struct MoveInstance {
    MoveKind kind = MoveKind::Xi;
    int circle = 0;
    int pos = 0;
    int gap = 0;
    int sign = 1;
    PairOrder order = PairOrder::SourceFirst;
    R2Pattern pattern = R2Pattern::Interleaved;
    int x = 0, y = 0;
    int circle_t = 0, gap_t = 0;
    EndpointRef p1, p2, p3;

    friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
    friend auto operator<=>(const MoveInstance&, const MoveInstance&) = default;
};

GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m);
GaussDiagram apply_moves(const GaussDiagram& d, const std::vector<MoveInstance>& ms);

// Inverse instance, computed against the diagram the move applies to.
MoveInstance invert(const GaussDiagram& before, const MoveInstance& m);

// Complete, deterministically ordered list of applicable instances of the
// requested kinds. Add kinds are suppressed when they would exceed max_chords.
std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d,
                                          const std::set<MoveKind>& kinds,
                                          int max_chords);

// Move-spec grammar, e.g. "xi:c=1,i=0", "r1-:id=3",
// "r1+:c=1,g=0,s=+,o=st", "r2-:x=1,y=2",
// "r2+:cs=1,gs=0,ct=2,gt=0,s=+,o=n", "r3:p1=1:0,p2=1:2,p3=2:1".
std::string to_spec(const MoveInstance& m);
MoveInstance parse_move_spec(const std::string& spec);

// Derived macro moves (verified expansions into primitive moves).
enum class MacroKind {
    Cross,            // two adjacent endpoint pairs swap places
    OddSwap,          // adjacent transposition on a circle with oddly many endpoints
    ShellSlide,       // a shell-pair passes an endpoint
    ShellSign,        // shell of sign e <-> shell of sign -e plus an (e,e) shell-pair
    ShellPairCancel,  // two consecutive shell-pairs of opposite signs cancel
    Exchange1,        // two shell-straddled endpoints separated by one endpoint swap
    Exchange2,        // endpoint swaps with the shell-straddled endpoint to its right
    Exchange3,        // two endpoints separated by a shell group swap
    ShellTriple,      // a self-chord straddling exactly two endpoints is removed,
                      // swapping the straddled endpoints
};

enum class MacroDir { Forward, Backward };

// Window of a macro: anchor position (or insertion gap for the growing
// direction of ShellTriple / ShellPairCancel), plus sign/order parameters
// where the expansion creates chords.
struct MacroWindow {
    int circle = 0;
    int pos = 0;  // position anchor, or gap for backward ShellTriple / ShellPairCancel
    int sign = 1;
    PairOrder order = PairOrder::SourceFirst;

    friend bool operator==(const MacroWindow&, const MacroWindow&) = default;
};

// True iff the macro's left-hand pattern matches at the window.
bool macro_matches(const GaussDiagram& d, MacroKind k, MacroDir dir, const MacroWindow& w);

// Primitive move list realizing the macro; throws DiagramError on mismatch.
std::vector<MoveInstance> expand_macro(const GaussDiagram& d, MacroKind k, MacroDir dir,
                                       const MacroWindow& w);

std::string macro_name(MacroKind k);

}  // namespace vlink
