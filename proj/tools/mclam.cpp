// Command-line entry point wiring the lamination combinatorics and the
// numerical dynamics together. Every subcommand is reproducible: identical
// arguments produce byte-identical output files.

#include "mclam/alteration.hpp"
#include "mclam/dynamics.hpp"
#include "mclam/gaps.hpp"
#include "mclam/lamination.hpp"
#include "mclam/render.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace mclam;

// Distinguishes malformed argument values (exit 2) from failures of the
// requested computation (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("expected complex as \"re,im\", got \"" + text + "\"");
    }
    try {
        std::size_t used = 0;
        double re = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        std::string imag_part = text.substr(comma + 1);
        double im = std::stod(imag_part, &used);
        if (used != imag_part.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::exception&) {
        throw UsageError("expected complex as \"re,im\", got \"" + text + "\"");
    }
}

ComponentLabel parse_target_element(const std::string& text) {
    try {
        if (!text.empty() && text.front() == '[') {
            return ComponentLabel::parse(text);
        }
        return name_to_label(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Splits on commas that are not inside a [...] label.
std::vector<std::string> split_path_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string gap_display_name(const std::optional<ComponentLabel>& label) {
    if (!label) return "?";
    if (auto name = label_to_name(*label)) return *name;
    return label->str();
}

void emit_lamination(const Lamination& lam, const std::optional<std::string>& out_path) {
    if (out_path) {
        save_lamination(lam, *out_path);
    } else {
        std::cout << to_text(lam);
    }
}

int cmd_basilica(int depth, const std::optional<std::string>& out_path) {
    if (depth < 0) {
        throw UsageError("--depth must be non-negative");
    }
    if (depth > 22) {
        // the chord count doubles per generation; 2^21 chords at depth 22
        // is already a ~130 MB file
        throw UsageError("--depth above 22 is not supported by the command line tool");
    }
    emit_lamination(basilica(depth), out_path);
    return 0;
}

int cmd_alter(const std::string& target_spec, const std::string& path_spec,
              std::optional<int> depth, const std::string& out_path,
              const std::optional<std::string>& steps_dir) {
    if (target_spec.empty() == path_spec.empty()) {
        throw UsageError("alter needs exactly one of --target or --path");
    }
    AlterTarget target = [&] {
        if (!target_spec.empty()) {
            // validates both label syntax and shorthand names up front
            return AlterTarget::label(parse_target_element(target_spec));
        }
        std::vector<ComponentLabel> labels;
        for (const std::string& part : split_path_spec(path_spec)) {
            labels.push_back(parse_target_element(part));
        }
        return AlterTarget::explicit_path(std::move(labels));
    }();

    Lamination source = basilica(depth.value_or(2));
    AlterationResult result = alter(source, target, !depth.has_value());

    std::cout << "path:";
    for (const auto& label : result.path_labels) {
        std::cout << " " << gap_display_name(label);
    }
    std::cout << "\n";
    std::cout << "N=" << result.steps.size() << " generation=" << result.final.generation()
              << "\n";
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
        const AlterationStep& s = result.steps[i];
        std::cout << "step " << (i + 1) << ": s=" << s.meeting.str()
                  << " removed=" << s.removed.first.str() << "," << s.removed.second.str()
                  << " added=" << s.added.first.str() << "," << s.added.second.str() << "\n";
    }

    if (steps_dir) {
        std::filesystem::create_directories(*steps_dir);
        for (std::size_t i = 0; i < result.steps.size(); ++i) {
            const Lamination& snapshot =
                i + 1 < result.steps.size() ? result.intermediates[i] : result.final;
            save_lamination(snapshot, (std::filesystem::path(*steps_dir) /
                                       ("step" + std::to_string(i + 1) + ".lam"))
                                          .string());
        }
    }
    save_lamination(result.final, out_path);
    return 0;
}

int cmd_diff(const std::string& path_a, const std::string& path_b) {
    Lamination a = load_lamination(path_a);
    Lamination b = load_lamination(path_b);
    auto [chords_a, chords_b] = chord_diff(a, b);
    auto [gaps_a, gaps_b] = gap_diff(a, b);
    auto side = [](std::size_t x, std::size_t y) {
        return x == y ? std::to_string(x) : std::to_string(x) + ":" + std::to_string(y);
    };
    std::cout << "chords=" << side(chords_a.size(), chords_b.size())
              << " gaps=" << side(gaps_a.size(), gaps_b.size()) << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    Lamination lam = load_lamination(path);
    bool ok = true;

    ValidationReport report = validate(lam);
    if (report.ok()) {
        std::cout << "non-crossing: ok\n";
    } else {
        ok = false;
        std::cout << "non-crossing: FAIL (" << report.crossings.size() << " crossing pairs)\n";
        for (const auto& [c1, c2] : report.crossings) {
            std::cout << "  " << c1.str() << " x " << c2.str() << "\n";
        }
    }

    if (rotate_half(lam) == lam) {
        std::cout << "symmetry-180: ok\n";
    } else {
        ok = false;
        std::cout << "symmetry-180: FAIL\n";
    }

    Lamination image = pushforward(lam);
    Lamination reference = basilica(lam.generation() > 0 ? lam.generation() - 1 : 0);
    bool inside = true;
    for (const Chord& c : image.chords()) {
        if (!reference.contains(c)) {
            inside = false;
            break;
        }
    }
    if (inside) {
        std::cout << "pushforward-into-basilica: ok\n";
    } else {
        ok = false;
        std::cout << "pushforward-into-basilica: FAIL\n";
    }
    return ok ? 0 : 1;
}

int cmd_gaps(const std::string& path) {
    Lamination lam = load_lamination(path);
    GapSet set = compute_gaps(lam);

    std::vector<std::pair<ComponentLabel, std::size_t>> labeled;
    std::vector<std::size_t> unlabeled;
    for (std::size_t f = 0; f < set.gaps.size(); ++f) {
        if (f == set.outer_index) continue;
        if (auto label = label_gap(set.gaps[f])) {
            labeled.emplace_back(*label, f);
        } else {
            unlabeled.push_back(f);
        }
    }
    std::sort(labeled.begin(), labeled.end());
    std::sort(unlabeled.begin(), unlabeled.end(), [&](std::size_t x, std::size_t y) {
        return set.gaps[x].boundary < set.gaps[y].boundary;
    });

    for (const auto& [label, f] : labeled) {
        auto name = label_to_name(label);
        std::cout << "label=" << label.str() << " name=" << (name ? *name : "-")
                  << " boundary=" << set.gaps[f].boundary.size() << " chords\n";
    }
    for (std::size_t f : unlabeled) {
        std::cout << "label=- name=- boundary=" << set.gaps[f].boundary.size() << " chords\n";
    }
    return 0;
}

int cmd_path(const std::string& target_spec, std::optional<int> depth) {
    ComponentLabel target = parse_target_element(target_spec);
    Lamination lam = basilica(depth.value_or(2));
    std::vector<Gap> gap_path;
    if (depth) {
        gap_path = adjacency_path(lam, target);
    } else {
        // grow until the target's gap is labelable
        constexpr int kSearchCap = 18;
        for (int g = 2;; ++g) {
            try {
                gap_path = adjacency_path(basilica(g), target);
                break;
            } catch (const std::invalid_argument&) {
                if (g >= kSearchCap) throw;
            }
        }
    }
    std::cout << "path:";
    for (const Gap& g : gap_path) {
        std::cout << " " << gap_display_name(label_gap(g));
    }
    std::cout << "\nN=" << (gap_path.size() - 1) << "\n";
    return 0;
}

int cmd_svg(const std::string& lam_path, const std::string& out_path,
            const std::string& highlight_spec, const std::string& highlight_color) {
    Lamination lam = load_lamination(lam_path);
    std::vector<HighlightSet> highlights;
    if (!highlight_spec.empty()) {
        HighlightSet set;
        set.color = highlight_color;
        for (const std::string& part : split_path_spec(highlight_spec)) {
            try {
                set.chords.push_back(Chord::parse(part));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        highlights.push_back(std::move(set));
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open \"" + out_path + "\" for writing");
    }
    out << lamination_to_svg(lam, highlights);
    return 0;
}

int cmd_julia(int n, const std::string& a_spec, const std::string& b_spec,
              const RenderConfig& cfg_in, const std::string& center_spec,
              const std::string& palette_name, const std::string& out_path) {
    MapParams params(n, parse_complex(a_spec), parse_complex(b_spec));
    RenderConfig cfg = cfg_in;
    cfg.center = parse_complex(center_spec);
    try {
        cfg.palette = palette_from_name(palette_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_ppm(render_julia(params, cfg), out_path);
    return 0;
}

int cmd_classify(int n, const std::string& a_spec, const std::string& b_spec,
                 const OrbitOptions& opts) {
    MapParams params(n, parse_complex(a_spec), parse_complex(b_spec));
    ClassifyReport report = classify_map(params, opts);
    auto print_orbit = [](const char* name, const OrbitResult& r) {
        std::cout << name << ": status=" << (r.escaped() ? "escaped" : "bounded")
                  << " iterations=" << r.iterations << " period="
                  << (r.cycle_period ? std::to_string(*r.cycle_period) : std::string("-"))
                  << " multiplier_modulus=";
        if (r.multiplier) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", std::abs(*r.multiplier));
            std::cout << buf;
        } else {
            std::cout << "-";
        }
        std::cout << " attracting=" << (r.attracting() ? "yes" : "no") << "\n";
    };
    print_orbit("v_plus", report.v_plus);
    print_orbit("v_minus", report.v_minus);
    std::cout << "same_cycle=" << (report.same_cycle ? "yes" : "no") << "\n";
    return 0;
}

int cmd_symmetry(int n, const std::string& a_spec, const std::string& b_spec, int samples,
                 std::uint64_t seed) {
    MapParams params(n, parse_complex(a_spec), parse_complex(b_spec));
    double residual = symmetry_residual(params, samples, seed);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", residual);
    std::cout << "samples=" << samples << " seed=" << seed << " residual=" << buf << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Basilica laminations, their alterations, and generalized McMullen maps"};
    app.require_subcommand(1);

    // basilica
    auto* basilica_cmd = app.add_subcommand("basilica", "Generate the basilica lamination");
    int basilica_depth = 6;
    std::string basilica_out;
    basilica_cmd->add_option("--depth", basilica_depth, "Pullback generation")
        ->capture_default_str();
    basilica_cmd->add_option("--out", basilica_out, "Output file (stdout when omitted)");

    // alter
    auto* alter_cmd = app.add_subcommand("alter", "Split and re-identify toward a target gap");
    std::string alter_target, alter_path_spec, alter_out, alter_steps_dir;
    int alter_depth = -1;
    alter_cmd->add_option("--target", alter_target,
                          "Target component: shorthand name or [a1,b1;a2,b2]");
    alter_cmd->add_option("--path", alter_path_spec,
                          "Explicit component path starting at L, e.g. L,M,T");
    alter_cmd->add_option("--depth", alter_depth,
                          "Fixed basilica generation (default: auto, at least N+4)");
    alter_cmd->add_option("--out", alter_out, "Output lamination file")->required();
    alter_cmd->add_option("--steps-dir", alter_steps_dir,
                          "Directory for per-step lamination files step<i>.lam");

    // diff
    auto* diff_cmd = app.add_subcommand("diff", "Chord and gap differences of two laminations");
    std::string diff_a, diff_b;
    diff_cmd->add_option("a", diff_a, "First lamination file")->required();
    diff_cmd->add_option("b", diff_b, "Second lamination file")->required();

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "Check non-crossing, 180 degree symmetry, pushforward into the basilica");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "Lamination file")->required();

    // gaps
    auto* gaps_cmd = app.add_subcommand("gaps", "List the gaps of a lamination");
    std::string gaps_path;
    gaps_cmd->add_option("file", gaps_path, "Lamination file")->required();

    // path
    auto* path_cmd = app.add_subcommand("path", "Shortest gap path from L to a target");
    std::string path_target;
    int path_depth = -1;
    path_cmd->add_option("--target", path_target, "Target component")->required();
    path_cmd->add_option("--depth", path_depth, "Fixed basilica generation (default: auto)");

    // svg
    auto* svg_cmd = app.add_subcommand("svg", "Render a lamination diagram as SVG");
    std::string svg_in, svg_out, svg_highlight, svg_highlight_color = "green";
    svg_cmd->add_option("file", svg_in, "Lamination file")->required();
    svg_cmd->add_option("--out", svg_out, "Output SVG file")->required();
    svg_cmd->add_option("--highlight", svg_highlight,
                        "Chords to highlight, e.g. \"1/6-1/3,2/3-5/6\"");
    svg_cmd->add_option("--highlight-color", svg_highlight_color, "Stroke color for highlights")
        ->capture_default_str();

    // julia
    auto* julia_cmd = app.add_subcommand("julia", "Escape-time rendering of J(F_{n,a,b})");
    int julia_n = 3;
    std::string julia_a, julia_b, julia_center = "0,0", julia_palette = "classic", julia_out;
    RenderConfig julia_cfg;
    julia_cmd->add_option("--n", julia_n, "Exponent n (n >= 3)")->required();
    julia_cmd->add_option("--a", julia_a, "Parameter a as re,im")->required();
    julia_cmd->add_option("--b", julia_b, "Parameter b as re,im")->required();
    julia_cmd->add_option("--width", julia_cfg.width, "Image width")->capture_default_str();
    julia_cmd->add_option("--height", julia_cfg.height, "Image height")->capture_default_str();
    julia_cmd->add_option("--center", julia_center, "Image center as re,im")
        ->capture_default_str();
    julia_cmd->add_option("--scale", julia_cfg.scale, "Complex-plane width of the image")
        ->capture_default_str();
    julia_cmd->add_option("--max-iter", julia_cfg.max_iter, "Iteration cutoff")
        ->capture_default_str();
    julia_cmd->add_option("--escape-radius", julia_cfg.escape_radius, "Escape radius")
        ->capture_default_str();
    julia_cmd->add_option("--palette", julia_palette, "classic or gray")->capture_default_str();
    julia_cmd->add_option("--supersample", julia_cfg.supersample, "1 or 2")
        ->capture_default_str();
    julia_cmd->add_option("--threads", julia_cfg.threads, "Worker threads (0 = hardware)")
        ->capture_default_str();
    julia_cmd->add_option("--out", julia_out, "Output PPM file")->required();

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify the critical-value orbits of F_{n,a,b}");
    int classify_n = 3;
    std::string classify_a, classify_b;
    OrbitOptions classify_opts;
    classify_cmd->add_option("--n", classify_n, "Exponent n (n >= 3)")->required();
    classify_cmd->add_option("--a", classify_a, "Parameter a as re,im")->required();
    classify_cmd->add_option("--b", classify_b, "Parameter b as re,im")->required();
    classify_cmd->add_option("--max-iter", classify_opts.max_iter, "Iteration cutoff")
        ->capture_default_str();
    classify_cmd->add_option("--escape-radius", classify_opts.escape_radius, "Escape radius")
        ->capture_default_str();
    classify_cmd->add_option("--tol", classify_opts.tol, "Cycle recurrence tolerance")
        ->capture_default_str();

    // symmetry
    auto* symmetry_cmd =
        app.add_subcommand("symmetry", "Residual of the n-fold circular symmetry of F_{n,a,b}");
    int symmetry_n = 3, symmetry_samples = 1000;
    std::uint64_t symmetry_seed = 1;
    std::string symmetry_a, symmetry_b;
    symmetry_cmd->add_option("--n", symmetry_n, "Exponent n (n >= 3)")->required();
    symmetry_cmd->add_option("--a", symmetry_a, "Parameter a as re,im")->required();
    symmetry_cmd->add_option("--b", symmetry_b, "Parameter b as re,im")->required();
    symmetry_cmd->add_option("--samples", symmetry_samples, "Sample count")
        ->capture_default_str();
    symmetry_cmd->add_option("--seed", symmetry_seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (*basilica_cmd) {
            return cmd_basilica(basilica_depth, basilica_out.empty()
                                                    ? std::nullopt
                                                    : std::optional<std::string>(basilica_out));
        }
        if (*alter_cmd) {
            return cmd_alter(alter_target, alter_path_spec,
                             alter_depth >= 0 ? std::optional<int>(alter_depth) : std::nullopt,
                             alter_out,
                             alter_steps_dir.empty() ? std::nullopt
                                                     : std::optional<std::string>(alter_steps_dir));
        }
        if (*diff_cmd) return cmd_diff(diff_a, diff_b);
        if (*verify_cmd) return cmd_verify(verify_path);
        if (*gaps_cmd) return cmd_gaps(gaps_path);
        if (*path_cmd) {
            return cmd_path(path_target,
                            path_depth >= 0 ? std::optional<int>(path_depth) : std::nullopt);
        }
        if (*svg_cmd) return cmd_svg(svg_in, svg_out, svg_highlight, svg_highlight_color);
        if (*julia_cmd) {
            return cmd_julia(julia_n, julia_a, julia_b, julia_cfg, julia_center, julia_palette,
                             julia_out);
        }
        if (*classify_cmd) return cmd_classify(classify_n, classify_a, classify_b, classify_opts);
        if (*symmetry_cmd) {
            return cmd_symmetry(symmetry_n, symmetry_a, symmetry_b, symmetry_samples,
                                symmetry_seed);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
