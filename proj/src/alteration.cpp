#include "mclam/alteration.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace mclam {

namespace {

// Canonical order for a chord pair.
std::pair<Chord, Chord> ordered(Chord a, Chord b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

// Generation of a basilica chord: endpoints reduce to denominator 3*2^g.
int chord_generation(const Chord& c) {
    BigInt den = c.lo.den() < c.hi.den() ? c.hi.den() : c.lo.den();
    if (den % 3 != 0) {
        throw std::invalid_argument("chord " + c.str() + " is not a basilica chord");
    }
    BigInt q = den / 3;
    int g = 0;
    while (q > 1) {
        if (q % 2 != 0) {
            throw std::invalid_argument("chord " + c.str() + " is not a basilica chord");
        }
        q /= 2;
        ++g;
    }
    return g;
}

void require_basilica(const Lamination& lam) {
    if (lam.kind() != LamKind::basilica || !(lam == basilica(lam.generation()))) {
        throw std::invalid_argument("alter: source is not a basilica lamination");
    }
}

}  // namespace

std::pair<Chord, Chord> toggle_pairing(const Chord& c1, const Chord& c2) {
    std::array<Angle, 4> pts = {c1.lo, c1.hi, c2.lo, c2.hi};
    std::sort(pts.begin(), pts.end());
    for (int i = 0; i < 3; ++i) {
        if (pts[i] == pts[i + 1]) {
            throw std::invalid_argument("toggle_pairing: endpoints not pairwise distinct");
        }
    }
    if (chords_cross(c1, c2)) {
        throw std::invalid_argument("toggle_pairing: chords cross");
    }
    auto [w, x, y, z] = pts;
    auto parallel = ordered(Chord(w, x), Chord(y, z));
    auto nested = ordered(Chord(w, z), Chord(x, y));
    auto input = ordered(c1, c2);
    if (input == parallel) return nested;
    if (input == nested) return parallel;
    throw std::invalid_argument("toggle_pairing: chords cross");
}

Chord meeting_chord(const Gap& g1, const Gap& g2) {
    std::vector<Chord> shared;
    std::set_intersection(g1.boundary.begin(), g1.boundary.end(), g2.boundary.begin(),
                          g2.boundary.end(), std::back_inserter(shared));
    if (shared.empty()) {
        throw std::invalid_argument("meeting_chord: gaps are not adjacent");
    }
    if (shared.size() > 1) {
        throw std::invalid_argument("meeting_chord: gaps share more than one chord");
    }
    return shared.front();
}

AlterTarget AlterTarget::name(std::string shorthand) {
    AlterTarget t;
    t.value_ = std::move(shorthand);
    return t;
}

AlterTarget AlterTarget::label(ComponentLabel label) {
    AlterTarget t;
    t.value_ = std::move(label);
    return t;
}

AlterTarget AlterTarget::explicit_path(std::vector<ComponentLabel> path) {
    AlterTarget t;
    t.value_ = std::move(path);
    return t;
}

AlterationResult alter_path(const Lamination& source_basilica, const std::vector<Gap>& gap_path) {
    require_basilica(source_basilica);
    if (gap_path.empty()) {
        throw std::invalid_argument("alter: empty gap path");
    }
    {
        auto first = label_gap(gap_path.front());
        if (!first || !(*first == name_to_label("L"))) {
            throw std::invalid_argument("alter: path must start at the gap labeled L");
        }
    }

    AlterationResult result;
    result.path = gap_path;
    for (const Gap& g : gap_path) {
        result.path_labels.push_back(label_gap(g));
    }
    result.source = source_basilica;

    // Validating adjacency up front doubles as the path check.
    std::vector<Chord> meetings;
    for (std::size_t i = 1; i < gap_path.size(); ++i) {
        meetings.push_back(meeting_chord(gap_path[i - 1], gap_path[i]));
    }

    if (meetings.empty()) {
        result.final = source_basilica;  // target is L itself
        return result;
    }

    std::set<Chord> working(source_basilica.chords().begin(), source_basilica.chords().end());
    const std::size_t n_steps = meetings.size();
    for (std::size_t i = 0; i < n_steps; ++i) {
        const Chord& s = meetings[i];
        auto [a0, a1] = s.lo.halved();
        auto [b0, b1] = s.hi.halved();
        std::set<Angle> four = {a0, a1, b0, b1};

        std::vector<Chord> touched;
        for (const Chord& c : working) {
            if (four.count(c.lo) || four.count(c.hi)) touched.push_back(c);
        }
        bool well_formed = touched.size() == 2 && four.count(touched[0].lo) &&
                           four.count(touched[0].hi) && four.count(touched[1].lo) &&
                           four.count(touched[1].hi);
        if (!well_formed) {
            throw std::logic_error("alter: preimage angles of " + s.str() +
                                   " do not form two current chords");
        }

        auto removed = ordered(touched[0], touched[1]);
        auto added = toggle_pairing(removed.first, removed.second);
        working.erase(removed.first);
        working.erase(removed.second);
        working.insert(added.first);
        working.insert(added.second);
        result.steps.push_back({s, removed, added});

        bool last = i + 1 == n_steps;
        Lamination snapshot(std::vector<Chord>(working.begin(), working.end()),
                            source_basilica.generation(),
                            last ? LamKind::altered : LamKind::intermediate);
        if (!validate(snapshot).ok()) {
            throw std::logic_error("alter: step " + std::to_string(i + 1) +
                                   " introduced a crossing");
        }
        if (last) {
            result.final = snapshot;
        } else {
            result.intermediates.push_back(std::move(snapshot));
        }
    }

    if (!(rotate_half(result.final) == result.final)) {
        throw std::logic_error("alter: result lost 180 degree symmetry");
    }
    return result;
}

namespace {

// Locate L and the target in a basilica of the given depth; nullopt parts
// when not yet present.
struct Located {
    std::optional<std::size_t> start;
    std::optional<std::size_t> goal;
};

Located locate(const GapGraph& graph, const ComponentLabel& target) {
    Located out;
    out.start = graph.find_by_label(name_to_label("L"));
    out.goal = graph.find_by_label(target);
    return out;
}

AlterationResult alter_to_label(const Lamination& source, const ComponentLabel& target,
                                bool allow_extend) {
    require_basilica(source);
    constexpr int kSearchSlack = 16;

    Lamination lam = source;
    std::vector<std::size_t> face_path;
    std::optional<GapGraph> graph;
    int depth = lam.generation();
    const int depth_cap = depth + kSearchSlack;
    for (;;) {
        graph.emplace(lam);
        Located loc = locate(*graph, target);
        if (loc.start && loc.goal) {
            face_path = graph->path(*loc.start, *loc.goal);
            break;
        }
        if (!allow_extend || depth >= depth_cap) {
            throw std::invalid_argument("alter: insufficient generation (target " + target.str() +
                                        " not found at depth " + std::to_string(depth) + ")");
        }
        ++depth;
        lam = basilica(depth);
    }

    // Every step needs the preimage chords of its meeting chord, i.e. one
    // generation beyond the deepest meeting chord.
    int step_need = 0;
    for (std::size_t i = 1; i < face_path.size(); ++i) {
        Chord s = meeting_chord(graph->gaps()[face_path[i - 1]], graph->gaps()[face_path[i]]);
        step_need = std::max(step_need, chord_generation(s) + 1);
    }
    if (!allow_extend && step_need > depth) {
        throw std::invalid_argument("alter: insufficient generation (need depth " +
                                    std::to_string(step_need) + ", have " +
                                    std::to_string(depth) + ")");
    }
    // Extend at least to N+4 so the diff depth covers the naming chords of
    // every affected gap. A trivial path (target = L) forces no depth.
    int n = static_cast<int>(face_path.size()) - 1;
    int required = n == 0 || !allow_extend ? std::max(depth, step_need)
                                           : std::max({depth, step_need, n + 4});
    if (required > depth) {
        // Re-locate the path after extension; gaps keep their outer chord.
        std::vector<Chord> outers;
        for (std::size_t i = 1; i < face_path.size(); ++i) {
            outers.push_back(*outer_chord(graph->gaps()[face_path[i]]));
        }
        lam = basilica(required);
        graph.emplace(lam);
        auto start = graph->find_by_label(name_to_label("L"));
        if (!start) throw std::logic_error("alter: gap L vanished after extension");
        face_path.assign({*start});
        for (const Chord& oc : outers) {
            auto f = graph->find_by_outer(oc);
            if (!f) throw std::logic_error("alter: path gap vanished after extension");
            face_path.push_back(*f);
        }
    }

    std::vector<Gap> gap_path;
    for (std::size_t f : face_path) gap_path.push_back(graph->gaps()[f]);
    return alter_path(lam, gap_path);
}

AlterationResult alter_along_labels(const Lamination& source,
                                    const std::vector<ComponentLabel>& labels,
                                    bool allow_extend) {
    require_basilica(source);
    if (labels.empty()) {
        throw std::invalid_argument("alter: empty explicit path");
    }
    if (!(labels.front() == name_to_label("L"))) {
        throw std::invalid_argument("alter: explicit path must start at L");
    }

    constexpr int kSearchSlack = 16;
    Lamination lam = source;
    int depth = lam.generation();
    const int depth_cap = depth + kSearchSlack;
    for (;;) {
        GapGraph graph(lam);
        std::vector<std::size_t> faces;
        bool all_found = true;
        for (const ComponentLabel& l : labels) {
            auto f = graph.find_by_label(l);
            if (!f) {
                all_found = false;
                break;
            }
            faces.push_back(*f);
        }
        if (all_found) {
            // Adjacency of consecutive pairs, and depth for every step.
            int step_need = 0;
            for (std::size_t i = 1; i < faces.size(); ++i) {
                Chord s = meeting_chord(graph.gaps()[faces[i - 1]], graph.gaps()[faces[i]]);
                step_need = std::max(step_need, chord_generation(s) + 1);
            }
            if (!allow_extend && step_need > depth) {
                throw std::invalid_argument("alter: insufficient generation (need depth " +
                                            std::to_string(step_need) + ", have " +
                                            std::to_string(depth) + ")");
            }
            int n = static_cast<int>(labels.size()) - 1;
            int required = n == 0 || !allow_extend ? std::max(depth, step_need)
                                                   : std::max({depth, step_need, n + 4});
            if (required <= depth) {
                std::vector<Gap> gap_path;
                for (std::size_t f : faces) gap_path.push_back(graph.gaps()[f]);
                return alter_path(lam, gap_path);
            }
            depth = required;
            lam = basilica(depth);
            continue;
        }
        if (!allow_extend || depth >= depth_cap) {
            throw std::invalid_argument(
                "alter: insufficient generation (explicit path gap not found at depth " +
                std::to_string(depth) + ")");
        }
        ++depth;
        lam = basilica(depth);
    }
}

}  // namespace

AlterationResult alter(const Lamination& source_basilica, const AlterTarget& target,
                       bool allow_extend) {
    if (const auto* name = std::get_if<std::string>(&target.value())) {
        return alter_to_label(source_basilica, name_to_label(*name), allow_extend);
    }
    if (const auto* label = std::get_if<ComponentLabel>(&target.value())) {
        return alter_to_label(source_basilica, *label, allow_extend);
    }
    return alter_along_labels(source_basilica,
                              std::get<std::vector<ComponentLabel>>(target.value()), allow_extend);
}

std::pair<std::size_t, std::size_t> leaf_diff_report(const AlterationResult& result,
                                                     const Lamination& original) {
    auto [chords_final, chords_orig] = chord_diff(result.final, original);
    if (chords_final.size() != chords_orig.size()) {
        throw std::logic_error("leaf_diff_report: unbalanced chord diff");
    }
    auto [gaps_final, gaps_orig] = gap_diff(result.final, original);
    if (gaps_final.size() != gaps_orig.size()) {
        throw std::logic_error("leaf_diff_report: unbalanced gap diff");
    }
    return {chords_final.size(), gaps_final.size()};
}

}  // namespace mclam
