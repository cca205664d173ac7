#pragma once

#include "mclam/lamination.hpp"

#include <cstddef>
#include <vector>

namespace mclam::detail {

// Circular sweep over chord endpoints. Every angle maps to an exact integer
// position on a common denominator, so circular order reduces to integer
// order. Events come back already sorted for a stack sweep that starts just
// below angle 0 and sees a valid lamination as balanced parentheses:
// at equal positions closes come before opens, inner chords close first,
// outer chords open first.
struct SweepEvent {
    std::size_t chord;
    bool is_close;
};

struct SweepEvents {
    std::vector<SweepEvent> events;
    bool positions_unique = true;
};

SweepEvents build_sweep_events(const std::vector<Chord>& chords);

}  // namespace mclam::detail
