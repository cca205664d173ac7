#include "mclam/lamination.hpp"

#include "endpoint_sweep.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mclam {

Chord::Chord(Angle a, Angle b) {
    if (a == b) {
        throw std::invalid_argument("Chord: endpoints coincide at " + a.str());
    }
    if (b < a) std::swap(a, b);
    lo = std::move(a);
    hi = std::move(b);
}

std::string Chord::str() const {
    return lo.str() + "-" + hi.str();
}

Chord Chord::parse(std::string_view text) {
    auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        throw std::invalid_argument("Chord: expected \"lo-hi\", got \"" + std::string(text) + "\"");
    }
    return Chord(Angle::parse(text.substr(0, dash)), Angle::parse(text.substr(dash + 1)));
}

bool chords_cross(const Chord& c1, const Chord& c2) {
    if (c1.lo == c2.lo || c1.lo == c2.hi || c1.hi == c2.lo || c1.hi == c2.hi) {
        return false;
    }
    bool lo_inside = in_open_arc(c2.lo, c1.lo, c1.hi);
    bool hi_inside = in_open_arc(c2.hi, c1.lo, c1.hi);
    return lo_inside != hi_inside;
}

std::string kind_name(LamKind kind) {
    switch (kind) {
        case LamKind::basilica: return "basilica";
        case LamKind::altered: return "altered";
        case LamKind::intermediate: return "intermediate";
    }
    throw std::logic_error("kind_name: bad enum value");
}

LamKind kind_from_name(std::string_view name) {
    if (name == "basilica") return LamKind::basilica;
    if (name == "altered") return LamKind::altered;
    if (name == "intermediate") return LamKind::intermediate;
    throw std::invalid_argument("unknown lamination kind \"" + std::string(name) + "\"");
}

Lamination::Lamination(std::vector<Chord> chords, int generation, LamKind kind)
    : chords_(std::move(chords)), generation_(generation), kind_(kind) {
    if (generation < 0) {
        throw std::invalid_argument("Lamination: negative generation");
    }
    std::sort(chords_.begin(), chords_.end());
    chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
}

bool Lamination::contains(const Chord& c) const {
    return std::binary_search(chords_.begin(), chords_.end(), c);
}

ValidationReport validate(const Lamination& lam) {
    const auto& chords = lam.chords();
    ValidationReport report;
    if (chords.size() < 2) return report;

    // Non-crossing chord sets are exactly balanced parenthesis structures,
    // so a single stack sweep certifies validity in O(k log k).
    auto ev = detail::build_sweep_events(chords);
    if (ev.positions_unique) {
        std::vector<std::size_t> stack;
        bool balanced = true;
        for (const auto& e : ev.events) {
            if (!e.is_close) {
                stack.push_back(e.chord);
            } else if (!stack.empty() && stack.back() == e.chord) {
                stack.pop_back();
            } else {
                balanced = false;
                break;
            }
        }
        if (balanced && stack.empty()) return report;
    }

    // Something interleaves (or endpoints are shared); collect every
    // offending pair the slow way.
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            if (chords_cross(chords[i], chords[j])) {
                report.crossings.emplace_back(chords[i], chords[j]);
            }
        }
    }
    return report;
}

Lamination basilica(int generation) {
    if (generation < 0) {
        throw std::invalid_argument("basilica: negative generation");
    }
    const Angle third = Angle::make(1, 3);
    const Angle two_thirds = Angle::make(2, 3);
    const Angle sixth = Angle::make(1, 6);

    std::vector<Chord> chords;
    chords.emplace_back(third, two_thirds);  // minor leaf, generation 0
    if (generation >= 1) {
        chords.emplace_back(sixth, Angle::make(5, 6));
    }

    // The critical diameter {1/6, 2/3} splits the circle into the open
    // half-arcs H1 = (1/6, 2/3) and H2 = (2/3, 1/6); the two preimages of
    // any angle differ by 1/2, so exactly one falls in each half.
    auto half_of = [&](const Angle& t) { return in_open_arc(t, sixth, two_thirds); };

    std::vector<Chord> layer;
    if (generation >= 1) {
        layer.emplace_back(sixth, Angle::make(5, 6));
    }
    for (int g = 2; g <= generation; ++g) {
        std::vector<Chord> next;
        next.reserve(layer.size() * 2);
        for (const Chord& c : layer) {
            auto [a0, a1] = c.lo.halved();
            auto [b0, b1] = c.hi.halved();
            // pair preimages lying in the same half-arc
            if (half_of(a0) == half_of(b0)) {
                next.emplace_back(a0, b0);
                next.emplace_back(a1, b1);
            } else {
                next.emplace_back(a0, b1);
                next.emplace_back(a1, b0);
            }
        }
        chords.insert(chords.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return Lamination(std::move(chords), generation, LamKind::basilica);
}

Lamination pushforward(const Lamination& lam) {
    std::vector<Chord> image;
    image.reserve(lam.size());
    for (const Chord& c : lam.chords()) {
        Angle lo = c.lo.doubled();
        Angle hi = c.hi.doubled();
        if (lo == hi) continue;  // diameter collapses to a point
        image.emplace_back(lo, hi);
    }
    int g = lam.generation() > 0 ? lam.generation() - 1 : 0;
    return Lamination(std::move(image), g, lam.kind());
}

Lamination rotate_half(const Lamination& lam) {
    std::vector<Chord> rotated;
    rotated.reserve(lam.size());
    for (const Chord& c : lam.chords()) {
        rotated.emplace_back(c.lo.antipode(), c.hi.antipode());
    }
    return Lamination(std::move(rotated), lam.generation(), lam.kind());
}

std::pair<std::vector<Chord>, std::vector<Chord>> chord_diff(const Lamination& a,
                                                             const Lamination& b) {
    std::vector<Chord> only_a;
    std::vector<Chord> only_b;
    std::set_difference(a.chords().begin(), a.chords().end(), b.chords().begin(),
                        b.chords().end(), std::back_inserter(only_a));
    std::set_difference(b.chords().begin(), b.chords().end(), a.chords().begin(),
                        a.chords().end(), std::back_inserter(only_b));
    return {std::move(only_a), std::move(only_b)};
}

std::string to_text(const Lamination& lam) {
    std::ostringstream out;
    out << "lamination v1 generation=" << lam.generation() << " kind=" << kind_name(lam.kind())
        << "\n";
    for (const Chord& c : lam.chords()) {
        out << c.lo.str() << " " << c.hi.str() << "\n";
    }
    return out.str();
}

Lamination lamination_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header)) {
        throw std::invalid_argument("lamination: empty input");
    }
    std::istringstream hs(header);
    std::string magic, version, gen_field, kind_field;
    hs >> magic >> version >> gen_field >> kind_field;
    if (magic != "lamination" || version != "v1" || gen_field.rfind("generation=", 0) != 0 ||
        kind_field.rfind("kind=", 0) != 0) {
        throw std::invalid_argument("lamination: bad header \"" + header + "\"");
    }
    int generation = std::stoi(gen_field.substr(11));
    LamKind kind = kind_from_name(kind_field.substr(5));

    std::vector<Chord> chords;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string lo, hi;
        if (!(ls >> lo >> hi)) {
            throw std::invalid_argument("lamination: bad chord line \"" + line + "\"");
        }
        chords.emplace_back(Angle::parse(lo), Angle::parse(hi));
    }
    return Lamination(std::move(chords), generation, kind);
}

void save_lamination(const Lamination& lam, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open \"" + path + "\" for writing");
    }
    out << to_text(lam);
    if (!out) {
        throw std::runtime_error("write failed for \"" + path + "\"");
    }
}

Lamination load_lamination(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return lamination_from_text(buf.str());
}

}  // namespace mclam
