#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlink {

// Raised for malformed Gauss code, invalid diagrams and illegal operations.
class DiagramError : public std::runtime_error {
public:
    explicit DiagramError(const std::string& what) : std::runtime_error(what) {}
};

enum class Role { Source, Target };  // O (over, arrow tail) / U (under, arrow head)

struct Endpoint {
    int chord_id = 0;
    Role role = Role::Source;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// One circle = cyclic sequence of endpoints; position order is the orientation.
using Circle = std::vector<Endpoint>;

// A position on a circle.
struct EndpointRef {
    int circle = 0;    // 0-based internally; 1-based in text interfaces
    int position = 0;

    friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
    friend auto operator<=>(const EndpointRef&, const EndpointRef&) = default;
};

// Ordered, oriented circles with signed, oriented chords. Immutable by
// convention: operations return new diagrams.
class GaussDiagram {
public:
    GaussDiagram() = default;
    GaussDiagram(std::vector<Circle> circles, std::map<int, int> chord_signs);

    int mu() const { return static_cast<int>(circles_.size()); }
    const std::vector<Circle>& circles() const { return circles_; }
    const Circle& circle(int c) const { return circles_.at(c); }
    const std::map<int, int>& chords() const { return chord_signs_; }
    int chord_count() const { return static_cast<int>(chord_signs_.size()); }
    int sign(int chord_id) const;
    bool has_chord(int chord_id) const { return chord_signs_.count(chord_id) > 0; }
    int max_chord_id() const;

    // Both endpoint positions of a chord; source first.
    std::pair<EndpointRef, EndpointRef> endpoints(int chord_id) const;
    EndpointRef endpoint(int chord_id, Role role) const;

    bool is_self_chord(int chord_id) const;
    // Source circle and target circle (0-based) of a chord.
    std::pair<int, int> chord_type(int chord_id) const;

    // Mutators used by the move engine; validate() is re-run by apply_move.
    std::vector<Circle>& mutable_circles() { return circles_; }
    std::map<int, int>& mutable_chords() { return chord_signs_; }

    void validate() const;  // throws DiagramError

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<Circle> circles_;
    std::map<int, int> chord_signs_;  // id -> sign (+1/-1)
};

// Gauss-code grammar: one line per circle, '#' comment lines,
// token = ('O'|'U') id ('+'|'-'), "()" = chord-free circle.
GaussDiagram parse_gauss_code(const std::string& text);
std::string serialize(const GaussDiagram& d);

// Lexicographically least serialization over all per-circle rotations, with
// chord ids relabelled by first occurrence. Circles are never reordered or
// reflected: links are ordered and oriented.
std::string canonical_key(const GaussDiagram& d);
bool isomorphic(const GaussDiagram& a, const GaussDiagram& b);

}  // namespace vlink
