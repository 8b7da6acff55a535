#pragma once

#include <array>
#include <string>
#include <utility>

#include "vlink/diagram.hpp"

namespace vlink {

// Sum of signs of chords with source on circle i and target on circle j (i != j).
int linking_number(const GaussDiagram& d, int i, int j);

// (lk12, lk21); requires a two-circle diagram.
std::pair<int, int> linking_pair(const GaussDiagram& d);

enum class LinkParity { Even, Odd };

// Parity of the number of nonself-chords; requires a two-circle diagram.
LinkParity link_parity(const GaussDiagram& d);

// A self-chord is odd when an arc between its endpoints contains an odd
// number of other endpoints. Measured from source to target along the circle;
// both arcs agree whenever the circle has evenly many endpoints.
bool is_odd_self_chord(const GaussDiagram& d, int chord_id);

// Sum of signs of odd self-chords on circle c.
int odd_writhe(const GaussDiagram& d, int c);

// Odd writhe of a one-circle diagram.
int knot_odd_writhe(const GaussDiagram& d);

// Two nonself-chords are equivalent when one arc between their endpoints on
// the first circle plus one arc on the second carries evenly many endpoints.
bool chords_equivalent(const GaussDiagram& d, int id1, int id2);

struct SigmaTau {
    int s12 = 0, t12 = 0, s21 = 0, t21 = 0;
    friend bool operator==(const SigmaTau&, const SigmaTau&) = default;
};

// Splitting of the linking numbers by equivalence with the reference chord
// gamma0 (the first nonself-chord in scan order on circle 1, then circle 2).
// All zeros when the diagram has no nonself-chord.
SigmaTau sigma_tau(const GaussDiagram& d);

// Canonical representative of [(s12, t12), (s21, t21)] modulo the swap
// ((p,q),(r,s)) ~ ((q,p),(s,r)): the lexicographically smaller tuple.
std::array<int, 4> reduced_linking_class(const GaussDiagram& d);

struct InvariantProfile {
    int mu = 0;
    int j_knot = 0;                    // mu == 1
    LinkParity parity = LinkParity::Even;  // mu == 2
    int lk12 = 0, lk21 = 0;
    int j1 = 0, j2 = 0;
    std::array<int, 4> fbar{0, 0, 0, 0};
};

InvariantProfile invariant_profile(const GaussDiagram& d);

// True iff the profiles agree on every classifying value for their shape.
bool profiles_equal(const InvariantProfile& a, const InvariantProfile& b);

// Empty when equal, otherwise names the first classifying value that differs.
std::string profile_difference(const InvariantProfile& a, const InvariantProfile& b);

}  // namespace vlink
