#include "endpoint_sweep.hpp"

#include <algorithm>
#include <cstdint>

namespace mclam::detail {

namespace {

template <typename Key>
struct KeyedEvent {
    Key pos;
    bool is_close;
    std::size_t chord;
    Key partner_ccw;  // ccw distance to the chord's other endpoint
};

template <typename Key>
SweepEvents sort_events(std::vector<KeyedEvent<Key>> keyed) {
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.is_close != b.is_close) return a.is_close;  // closes first
        // Inner chords close first; outer chords open first. Both orders
        // correspond to descending ccw distance to the partner endpoint.
        return a.partner_ccw > b.partner_ccw;
    });
    SweepEvents out;
    out.events.reserve(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].pos == keyed[i - 1].pos) out.positions_unique = false;
        out.events.push_back({keyed[i].chord, keyed[i].is_close});
    }
    return out;
}

}  // namespace

SweepEvents build_sweep_events(const std::vector<Chord>& chords) {
    // Denominators usually divide the largest one (they always do for the
    // basilica family); only fall back to a running lcm when they do not.
    BigInt common = 1;
    for (const Chord& c : chords) {
        if (c.lo.den() > common) common = c.lo.den();
        if (c.hi.den() > common) common = c.hi.den();
    }
    for (const Chord& c : chords) {
        if (common % c.lo.den() != 0 || common % c.hi.den() != 0) {
            common = 1;
            for (const Chord& d : chords) {
                common = boost::multiprecision::lcm(common, d.lo.den());
                common = boost::multiprecision::lcm(common, d.hi.den());
            }
            break;
        }
    }

    if (common <= BigInt(INT64_MAX / 4)) {
        const std::int64_t c64 = common.convert_to<std::int64_t>();
        std::vector<KeyedEvent<std::int64_t>> keyed;
        keyed.reserve(chords.size() * 2);
        for (std::size_t i = 0; i < chords.size(); ++i) {
            std::int64_t lo = chords[i].lo.num().convert_to<std::int64_t>() *
                              (c64 / chords[i].lo.den().convert_to<std::int64_t>());
            std::int64_t hi = chords[i].hi.num().convert_to<std::int64_t>() *
                              (c64 / chords[i].hi.den().convert_to<std::int64_t>());
            keyed.push_back({lo, false, i, hi - lo});
            keyed.push_back({hi, true, i, c64 - (hi - lo)});
        }
        return sort_events(std::move(keyed));
    }

    std::vector<KeyedEvent<BigInt>> keyed;
    keyed.reserve(chords.size() * 2);
    for (std::size_t i = 0; i < chords.size(); ++i) {
        BigInt lo = chords[i].lo.num() * (common / chords[i].lo.den());
        BigInt hi = chords[i].hi.num() * (common / chords[i].hi.den());
        keyed.push_back({lo, false, i, hi - lo});
        keyed.push_back({hi, true, i, common - (hi - lo)});
    }
    return sort_events(std::move(keyed));
}

}  // namespace mclam::detail
