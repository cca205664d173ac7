#pragma once

#include "mclam/dynamics.hpp"
#include "mclam/lamination.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mclam {

enum class Palette { classic, gray };

Palette palette_from_name(std::string_view name);

struct RenderConfig {
    int width = 512;
    int height = 512;
    Complex center{0.0, 0.0};
    double scale = 4.0;  // complex-plane width covered by the image
    int max_iter = 500;
    double escape_radius = 1e6;
    Palette palette = Palette::classic;
    int supersample = 1;  // 1 or 2
    int threads = 0;      // 0 = hardware concurrency
};

struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<unsigned char> rgb;  // row-major RGB triples, 3*width*height bytes
};

struct RenderStats {
    long escaped_pixels = 0;
    long bounded_pixels = 0;
};

/// Escape-time rendering of J(F_{n,a,b}). Escaped pixels are colored by a
/// smoothed iteration count; bounded pixels by their phase within the
/// attracting cycle (nearest cycle point at cutoff), so adjacent Fatou
/// components alternate shade. Output is byte-identical for identical
/// inputs regardless of thread count.
ImageBuffer render_julia(const MapParams& params, const RenderConfig& cfg,
                         RenderStats* stats = nullptr);

/// Per-pixel classification on the same grid (no supersampling): escaped
/// pixels carry their iteration count, bounded ones 1000000 + cycle phase.
/// Used by the rotation-symmetry checks.
std::vector<std::int32_t> render_classes(const MapParams& params, const RenderConfig& cfg);

struct HighlightSet {
    std::string color;
    std::vector<Chord> chords;
};

/// SVG 1.1 chord diagram of a lamination: the unit circle with every chord
/// drawn as a straight segment between e^{2 pi i lo} and e^{2 pi i hi},
/// viewBox "-1.1 -1.1 2.2 2.2". Chords listed in a highlight set take that
/// set's stroke color (first matching set wins). Element order follows the
/// sorted chord order, so equal inputs give identical output.
std::string lamination_to_svg(const Lamination& lam,
                              const std::vector<HighlightSet>& highlights = {});

/// Binary PPM: "P6\n<width> <height>\n255\n" followed by raw RGB bytes.
void write_ppm(const ImageBuffer& img, const std::string& path);
ImageBuffer read_ppm(const std::string& path);

}  // namespace mclam
