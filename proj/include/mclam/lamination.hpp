#pragma once

#include "mclam/angle.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mclam {

/// A leaf of a lamination: an unordered pair of distinct angles, stored with
/// lo < hi. Represents the identification lo ~ hi.
struct Chord {
    Angle lo;
    Angle hi;

    /// Canonicalizes the pair. Throws std::invalid_argument if a == b.
    Chord(Angle a, Angle b);

    bool operator==(const Chord& other) const = default;
    std::strong_ordering operator<=>(const Chord& other) const = default;

    /// Text form "lo-hi", e.g. "1/3-2/3".
    std::string str() const;
    static Chord parse(std::string_view text);
};

/// True iff the chords cross inside the open disk: the four endpoints are
/// pairwise distinct and exactly one endpoint of c2 lies in the open arc
/// (c1.lo, c1.hi). Chords sharing an endpoint do not cross.
bool chords_cross(const Chord& c1, const Chord& c2);

enum class LamKind { basilica, altered, intermediate };

std::string kind_name(LamKind kind);
LamKind kind_from_name(std::string_view name);

/// A finite set of pairwise non-crossing chords of the closed unit disk,
/// together with the generation depth it was built to. Chords are kept
/// sorted and de-duplicated, so equal laminations serialize identically.
class Lamination {
public:
    Lamination() : generation_(0), kind_(LamKind::basilica) {}
    Lamination(std::vector<Chord> chords, int generation, LamKind kind);

    const std::vector<Chord>& chords() const { return chords_; }
    int generation() const { return generation_; }
    LamKind kind() const { return kind_; }

    bool contains(const Chord& c) const;
    std::size_t size() const { return chords_.size(); }

    bool operator==(const Lamination& other) const {
        return chords_ == other.chords_;
    }

private:
    std::vector<Chord> chords_;
    int generation_;
    LamKind kind_;
};

/// Result of a non-crossing check: ok() iff no pair of chords crosses;
/// otherwise crossings lists every offending pair.
struct ValidationReport {
    std::vector<std::pair<Chord, Chord>> crossings;
    bool ok() const { return crossings.empty(); }
};

/// Reports every crossing pair. Never throws.
ValidationReport validate(const Lamination& lam);

/// The basilica lamination truncated at the given generation.
///
/// Generation 0 is the minor leaf {1/3, 2/3}, fixed under doubling.
/// Generation 1 adds its other preimage {1/6, 5/6}, hardcoded because its
/// own preimage angles land on the endpoints of the critical diameter.
/// Each further generation pulls every newest chord {a, b} back through
/// angle doubling: of the four preimage angles a/2, (a+1)/2, b/2, (b+1)/2,
/// exactly one preimage of each endpoint lies in each open half-arc cut by
/// the critical diameter {1/6, 2/3}; pairing the preimages that share a
/// half-arc is the unique choice that avoids crossing the diameter.
Lamination basilica(int generation);

/// Image under angle doubling: { {2a, 2b} : {a,b} in lam, 2a != 2b }.
/// Chords collapsing to a point (diameters) are dropped. The generation is
/// decremented with a floor of 0.
Lamination pushforward(const Lamination& lam);

/// Applies the antipode to every chord endpoint. Laminations produced by
/// this artifact satisfy rotate_half(lam) == lam.
Lamination rotate_half(const Lamination& lam);

/// Symmetric set difference, partitioned into (only in a, only in b).
std::pair<std::vector<Chord>, std::vector<Chord>> chord_diff(const Lamination& a,
                                                             const Lamination& b);

/// Serializes to the lamination text format:
///   line 1: "lamination v1 generation=<g> kind=<basilica|altered|intermediate>"
///   then one chord per line, "<num>/<den> <num>/<den>", lo first,
///   sorted by (lo, hi). Same lamination, same bytes.
std::string to_text(const Lamination& lam);
Lamination lamination_from_text(std::string_view text);

void save_lamination(const Lamination& lam, const std::string& path);
Lamination load_lamination(const std::string& path);

}  // namespace mclam
