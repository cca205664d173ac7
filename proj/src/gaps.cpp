#include "mclam/gaps.hpp"

#include "endpoint_sweep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mclam {

ComponentLabel::ComponentLabel(Angle a1_, Angle b1_, Angle a2_, Angle b2_)
    : a1(std::move(a1_)), b1(std::move(b1_)), a2(std::move(a2_)), b2(std::move(b2_)) {
    if (!(a1 < b1 && b1 < a2 && a2 < b2)) {
        throw std::invalid_argument("ComponentLabel: angles must satisfy a1 < b1 < a2 < b2");
    }
}

std::string ComponentLabel::str() const {
    return "[" + a1.str() + "," + b1.str() + ";" + a2.str() + "," + b2.str() + "]";
}

ComponentLabel ComponentLabel::parse(std::string_view text) {
    if (text.size() < 9 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("ComponentLabel: expected \"[a1,b1;a2,b2]\"");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string_view::npos) {
        throw std::invalid_argument("ComponentLabel: expected \"[a1,b1;a2,b2]\"");
    }
    auto split_pair = [](std::string_view s) {
        auto comma = s.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("ComponentLabel: expected \"[a1,b1;a2,b2]\"");
        }
        return std::pair{Angle::parse(s.substr(0, comma)), Angle::parse(s.substr(comma + 1))};
    };
    auto [a1, b1] = split_pair(body.substr(0, semi));
    auto [a2, b2] = split_pair(body.substr(semi + 1));
    return ComponentLabel(a1, b1, a2, b2);
}

GapSet compute_gaps(const Lamination& lam) {
    if (!validate(lam).ok()) {
        throw std::invalid_argument("compute_gaps: lamination has crossing chords");
    }
    const auto& chords = lam.chords();
    GapSet out;
    if (chords.empty()) {
        out.gaps.push_back(Gap{});
        out.outer_index = 0;
        return out;
    }

    // Walk the circle once. Entering a chord pushes the current face and
    // starts the face behind the chord; leaving it pops. Every chord is
    // thereby attached to exactly the two faces it borders.
    auto ev = detail::build_sweep_events(chords);
    std::vector<std::vector<std::size_t>> face_chords;
    face_chords.emplace_back();
    std::vector<std::size_t> stack;
    std::size_t current = 0;
    for (const auto& e : ev.events) {
        if (!e.is_close) {
            face_chords[current].push_back(e.chord);
            stack.push_back(current);
            face_chords.emplace_back();
            current = face_chords.size() - 1;
            face_chords[current].push_back(e.chord);
        } else {
            if (stack.empty()) {
                throw std::logic_error("compute_gaps: sweep underflow on valid lamination");
            }
            current = stack.back();
            stack.pop_back();
        }
    }
    if (!stack.empty() || current != 0) {
        throw std::logic_error("compute_gaps: sweep did not return to the outer face");
    }

    out.gaps.reserve(face_chords.size());
    for (auto& indices : face_chords) {
        Gap g;
        g.boundary.reserve(indices.size());
        for (std::size_t i : indices) g.boundary.push_back(chords[i]);
        std::sort(g.boundary.begin(), g.boundary.end());
        out.gaps.push_back(std::move(g));
    }
    out.outer_index = 0;
    return out;
}

std::optional<Chord> outer_chord(const Gap& gap) {
    if (gap.boundary.empty()) return std::nullopt;
    // Boundary is sorted, so only the first chord can span all the others.
    const Chord& candidate = gap.boundary.front();
    for (std::size_t i = 1; i < gap.boundary.size(); ++i) {
        const Chord& c = gap.boundary[i];
        if (!(candidate.lo < c.lo && c.hi < candidate.hi)) return std::nullopt;
    }
    return candidate;
}

std::optional<ComponentLabel> label_gap(const Gap& gap) {
    if (gap.boundary.size() < 2) return std::nullopt;
    auto outer = outer_chord(gap);
    if (!outer) return std::nullopt;

    // Inner chord: lowest denominator among boundary chords whose endpoints
    // share one. The chords produced by an M-step toggle pair a denominator
    // with its half and never serve as the inner name of a component.
    const Chord* inner = nullptr;
    for (const Chord& c : gap.boundary) {
        if (c == *outer) continue;
        if (c.lo.den() != c.hi.den()) continue;
        if (!inner || c.lo.den() < inner->lo.den() ||
            (c.lo.den() == inner->lo.den() && c.lo < inner->lo)) {
            inner = &c;
        }
    }
    if (!inner) return std::nullopt;
    return ComponentLabel(outer->lo, inner->lo, inner->hi, outer->hi);
}

namespace {

const std::vector<std::pair<std::string, ComponentLabel>>& name_table() {
    static const std::vector<std::pair<std::string, ComponentLabel>> table = [] {
        auto lbl = [](const char* text) { return ComponentLabel::parse(text); };
        std::vector<std::pair<std::string, ComponentLabel>> t;
        t.emplace_back("M", lbl("[1/6,1/3;2/3,5/6]"));
        t.emplace_back("L", lbl("[1/3,5/12;7/12,2/3]"));
        t.emplace_back("R", lbl("[1/12,1/6;5/6,11/12]"));
        t.emplace_back("T", lbl("[5/24,11/48;13/48,7/24]"));
        t.emplace_back("B", lbl("[17/24,35/48;37/48,19/24]"));
        t.emplace_back("2L", lbl("[5/12,11/24;13/24,7/12]"));
        t.emplace_back("2R", lbl("[1/24,1/12;11/12,23/24]"));
        t.emplace_back("2T", lbl("[11/48,23/96;25/96,13/48]"));
        t.emplace_back("2B", lbl("[35/48,71/96;73/96,37/48]"));
        t.emplace_back("LT", lbl("[17/48,35/96;37/96,19/48]"));
        t.emplace_back("LB", lbl("[29/48,59/96;61/96,31/48]"));
        t.emplace_back("RT", lbl("[5/48,11/96;13/96,7/48]"));
        t.emplace_back("RB", lbl("[41/48,83/96;85/96,43/48]"));
        return t;
    }();
    return table;
}

}  // namespace

ComponentLabel name_to_label(std::string_view name) {
    for (const auto& [n, label] : name_table()) {
        if (n == name) return label;
    }
    throw std::invalid_argument("unknown component name \"" + std::string(name) + "\"");
}

std::optional<std::string> label_to_name(const ComponentLabel& label) {
    for (const auto& [n, l] : name_table()) {
        if (l == label) return n;
    }
    return std::nullopt;
}

const std::vector<std::string>& known_component_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, l] : name_table()) out.push_back(n);
        return out;
    }();
    return names;
}

GapGraph::GapGraph(const Lamination& lam) : set_(compute_gaps(lam)) {
    std::map<Chord, std::vector<std::size_t>> chord_faces;
    for (std::size_t f = 0; f < set_.gaps.size(); ++f) {
        for (const Chord& c : set_.gaps[f].boundary) {
            chord_faces[c].push_back(f);
        }
    }
    adj_.resize(set_.gaps.size());
    for (const auto& [c, faces] : chord_faces) {
        if (faces.size() != 2) {
            throw std::logic_error("GapGraph: chord " + c.str() + " borders " +
                                   std::to_string(faces.size()) + " faces");
        }
        adj_[faces[0]].emplace_back(faces[1], c);
        adj_[faces[1]].emplace_back(faces[0], c);
    }
}

std::pair<std::size_t, std::size_t> GapGraph::faces_of(const Chord& c) const {
    for (std::size_t f = 0; f < set_.gaps.size(); ++f) {
        const auto& b = set_.gaps[f].boundary;
        if (std::binary_search(b.begin(), b.end(), c)) {
            for (const auto& [other, chord] : adj_[f]) {
                if (chord == c) return {f, other};
            }
        }
    }
    throw std::invalid_argument("faces_of: chord " + c.str() + " not in lamination");
}

std::optional<std::size_t> GapGraph::find_by_label(const ComponentLabel& label) const {
    for (std::size_t f = 0; f < set_.gaps.size(); ++f) {
        if (f == set_.outer_index) continue;
        auto l = label_gap(set_.gaps[f]);
        if (l && *l == label) return f;
    }
    return std::nullopt;
}

std::optional<std::size_t> GapGraph::find_by_outer(const Chord& c) const {
    for (std::size_t f = 0; f < set_.gaps.size(); ++f) {
        if (f == set_.outer_index) continue;
        auto oc = outer_chord(set_.gaps[f]);
        if (oc && *oc == c) return f;
    }
    return std::nullopt;
}

std::vector<std::size_t> GapGraph::path(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> parent(set_.gaps.size(), SIZE_MAX);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop_front();
        if (f == to) break;
        for (const auto& [next, chord] : adj_[f]) {
            if (parent[next] == SIZE_MAX) {
                parent[next] = f;
                queue.push_back(next);
            }
        }
    }
    if (parent[to] == SIZE_MAX) {
        throw std::logic_error("GapGraph::path: gap graph is disconnected");
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Gap> adjacency_path(const Lamination& lam, const ComponentLabel& target) {
    GapGraph graph(lam);
    auto start = graph.find_by_label(name_to_label("L"));
    if (!start) {
        throw std::invalid_argument("adjacency_path: insufficient generation (gap L not present)");
    }
    auto goal = graph.find_by_label(target);
    if (!goal) {
        throw std::invalid_argument("adjacency_path: insufficient generation (target " +
                                    target.str() + " not found)");
    }
    std::vector<Gap> out;
    for (std::size_t f : graph.path(*start, *goal)) {
        out.push_back(graph.gaps()[f]);
    }
    return out;
}

std::pair<std::vector<Gap>, std::vector<Gap>> gap_diff(const Lamination& a,
                                                       const Lamination& b) {
    if (a.generation() != b.generation()) {
        throw std::invalid_argument("gap_diff: generations differ (" +
                                    std::to_string(a.generation()) + " vs " +
                                    std::to_string(b.generation()) + ")");
    }
    auto collect = [](const Lamination& lam) {
        GapSet set = compute_gaps(lam);
        std::vector<Gap> gaps;
        gaps.reserve(set.gaps.size() - 1);
        for (std::size_t f = 0; f < set.gaps.size(); ++f) {
            if (f != set.outer_index) gaps.push_back(std::move(set.gaps[f]));
        }
        std::sort(gaps.begin(), gaps.end());
        return gaps;
    };
    auto ga = collect(a);
    auto gb = collect(b);
    std::vector<Gap> only_a;
    std::vector<Gap> only_b;
    std::set_difference(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(only_a));
    std::set_difference(gb.begin(), gb.end(), ga.begin(), ga.end(), std::back_inserter(only_b));
    return {std::move(only_a), std::move(only_b)};
}

}  // namespace mclam
