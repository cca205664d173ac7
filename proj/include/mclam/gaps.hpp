#pragma once

#include "mclam/lamination.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mclam {

/// A face of the disk subdivision induced by a lamination: the combinatorial
/// stand-in for a Fatou component. Identified by its (sorted) set of
/// boundary chords.
struct Gap {
    std::vector<Chord> boundary;

    bool operator==(const Gap& other) const = default;
    std::strong_ordering operator<=>(const Gap& other) const = default;
};

/// Identified-angle matrix name [a1,b1;a2,b2] of a component, with
/// a1 < b1 < a2 < b2, where {a1,b2} is the outer boundary chord (the one
/// separating the component from angle 0) and {b1,a2} the inner one.
struct ComponentLabel {
    Angle a1, b1, a2, b2;

    ComponentLabel(Angle a1_, Angle b1_, Angle a2_, Angle b2_);

    Chord outer() const { return Chord(a1, b2); }
    Chord inner() const { return Chord(b1, a2); }

    bool operator==(const ComponentLabel& other) const = default;
    std::strong_ordering operator<=>(const ComponentLabel& other) const = default;

    /// "[a1,b1;a2,b2]", e.g. "[1/6,1/3;2/3,5/6]".
    std::string str() const;
    static ComponentLabel parse(std::string_view text);
};

/// All faces of the unit disk cut along the lamination's chords. There are
/// exactly chords+1 of them; outer_index marks the face touching the circle
/// immediately below angle 0, which is excluded from labeling and diffs.
struct GapSet {
    std::vector<Gap> gaps;
    std::size_t outer_index = 0;
};

/// Throws std::invalid_argument if the lamination has crossing chords.
GapSet compute_gaps(const Lamination& lam);

/// The boundary chord separating the gap from angle 0, i.e. the unique one
/// whose open arc (lo, hi) contains every other boundary chord. Stable once
/// the gap exists, no matter how far the lamination is later extended.
/// For a gap with a single boundary chord the data cannot tell which side
/// the face is on; only the outermost face (see GapSet::outer_index) is
/// ambiguous that way, and callers skip it.
std::optional<Chord> outer_chord(const Gap& gap);

/// Names the gap by the convention above. The outer chord is forced: it is
/// the unique boundary chord spanning all the others. The inner chord is
/// the boundary chord whose endpoints share a denominator, taking the
/// lowest such denominator (ties broken by smaller angle). Returns nullopt
/// when the gap has no such pair yet ("unlabelable at this depth").
std::optional<ComponentLabel> label_gap(const Gap& gap);

/// Fixed shorthand table for the named basilica components
/// (M, L, R, T, B, 2L, 2R, 2T, 2B, LT, LB, RT, RB).
/// Throws std::invalid_argument for unknown names.
ComponentLabel name_to_label(std::string_view name);

/// Reverse lookup into the shorthand table; nullopt if the label is unnamed.
std::optional<std::string> label_to_name(const ComponentLabel& label);

const std::vector<std::string>& known_component_names();

/// Faces plus the adjacency structure: two gaps are adjacent iff they share
/// a boundary chord, and every chord borders exactly two gaps, so the gap
/// graph of a lamination is a tree.
class GapGraph {
public:
    explicit GapGraph(const Lamination& lam);

    const GapSet& gap_set() const { return set_; }
    const std::vector<Gap>& gaps() const { return set_.gaps; }
    std::size_t outer_index() const { return set_.outer_index; }

    /// The two faces bordering a chord. Throws if the chord is not in the
    /// lamination.
    std::pair<std::size_t, std::size_t> faces_of(const Chord& c) const;

    std::optional<std::size_t> find_by_label(const ComponentLabel& label) const;

    /// Finds the face whose outer (angle-0 separating) boundary chord is c.
    /// Stable across generations, so usable to re-locate a gap after the
    /// lamination is extended.
    std::optional<std::size_t> find_by_outer(const Chord& c) const;

    /// Unique path between two faces (the gap graph is a tree), endpoints
    /// included.
    std::vector<std::size_t> path(std::size_t from, std::size_t to) const;

    const std::vector<std::pair<std::size_t, Chord>>& neighbors(std::size_t face) const {
        return adj_[face];
    }

private:
    GapSet set_;
    std::vector<std::vector<std::pair<std::size_t, Chord>>> adj_;
};

/// Breadth-first shortest path in the gap graph from the gap labeled L to
/// the gap labeled target, both endpoints included. Throws
/// std::invalid_argument ("insufficient generation") when the target gap
/// does not exist at this lamination's depth.
std::vector<Gap> adjacency_path(const Lamination& lam, const ComponentLabel& target);

/// Gaps compared by exact boundary-chord-set equality; returns (gaps only
/// in a, gaps only in b). The outermost faces are excluded. Throws
/// std::invalid_argument when the generations differ.
std::pair<std::vector<Gap>, std::vector<Gap>> gap_diff(const Lamination& a,
                                                       const Lamination& b);

}  // namespace mclam
