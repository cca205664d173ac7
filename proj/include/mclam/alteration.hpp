#pragma once

#include "mclam/gaps.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mclam {

/// One split-and-reidentify step. The four angles involved are the halving
/// preimages of the meeting chord's endpoints; removed holds how they were
/// paired before the step, added how they are paired after it.
struct AlterationStep {
    Chord meeting;  // s_i, the chord where gap i meets gap i-1 in the basilica
    std::pair<Chord, Chord> removed;
    std::pair<Chord, Chord> added;
};

struct AlterationResult {
    /// The gap path U_0 = L, ..., U_N = target through the source basilica.
    std::vector<Gap> path;
    /// label_gap of each path gap where the depth allows one.
    std::vector<std::optional<ComponentLabel>> path_labels;
    std::vector<AlterationStep> steps;  // steps.size() == path.size() - 1
    /// Snapshots after steps 1..N-1 (kind intermediate).
    std::vector<Lamination> intermediates;
    /// The altered lamination (equals the source when the target is L).
    Lamination final;
    /// The basilica actually used, after any automatic extension.
    Lamination source;
};

/// The fortune-teller flip. Of the three pairings of 4 distinct points on a
/// circle exactly two are internally non-crossing; given one of them, returns
/// the other. Applying it twice restores the input. Throws
/// std::invalid_argument on crossing or degenerate input.
std::pair<Chord, Chord> toggle_pairing(const Chord& c1, const Chord& c2);

/// The shared boundary chord of two adjacent gaps. Throws
/// std::invalid_argument if the gaps share no chord or more than one.
Chord meeting_chord(const Gap& g1, const Gap& g2);

/// How the target component may be specified.
class AlterTarget {
public:
    static AlterTarget name(std::string shorthand);
    static AlterTarget label(ComponentLabel label);
    /// An explicit component path; it must start at L and each consecutive
    /// pair must be adjacent. Non-paths are rejected, not re-routed.
    static AlterTarget explicit_path(std::vector<ComponentLabel> path);

    const std::variant<std::string, ComponentLabel, std::vector<ComponentLabel>>& value() const {
        return value_;
    }

private:
    std::variant<std::string, ComponentLabel, std::vector<ComponentLabel>> value_;
};

/// Runs the alteration algorithm: finds the shortest gap path from L to the
/// target in the source basilica, then for each step i breaks the current
/// pairing of the four halving preimages of the meeting chord s_i and
/// re-identifies them the other non-crossing way.
///
/// Meeting chords are always taken from the source basilica, never from the
/// working lamination. When allow_extend is set the basilica is deepened as
/// needed (at least N+4, and far enough that every step's preimage chords
/// exist); otherwise an insufficient depth is an error.
///
/// Throws std::invalid_argument for unusable inputs (source not a basilica,
/// unknown or unreachable target, non-path) and std::logic_error when an
/// internal consistency check fails (the four preimage angles of a step do
/// not form two current chords, or a toggle would introduce a crossing).
AlterationResult alter(const Lamination& source_basilica, const AlterTarget& target,
                       bool allow_extend = true);

/// Low-level form: alteration along an explicit gap path (path[0] must be
/// the gap labeled L) in the given basilica. No automatic extension.
AlterationResult alter_path(const Lamination& source_basilica, const std::vector<Gap>& gap_path);

/// (chord changes per side, gap changes per side) between the altered
/// lamination and the original it came from. For a type-N alteration these
/// are 2N and 2N+1.
std::pair<std::size_t, std::size_t> leaf_diff_report(const AlterationResult& result,
                                                     const Lamination& original);

}  // namespace mclam
