#include "mclam/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mclam {

Palette palette_from_name(std::string_view name) {
    if (name == "classic") return Palette::classic;
    if (name == "gray") return Palette::gray;
    throw std::invalid_argument("unknown palette \"" + std::string(name) + "\"");
}

namespace {

constexpr std::int32_t kBoundedClassBase = 1000000;

struct PointSample {
    bool escaped = false;
    int iter = 0;
    double smooth = 0.0;  // smoothed iteration count, escaped only
    int phase = -1;       // nearest cycle point index, bounded only
};

std::vector<Complex> reference_cycle(const MapParams& params, double escape_radius) {
    OrbitOptions opts;
    opts.escape_radius = escape_radius;
    auto [v_plus, v_minus] = critical_values(params);
    OrbitResult orbit = iterate_orbit(params, v_plus, opts);
    std::vector<Complex> cycle;
    if (orbit.cycle_period && orbit.representative) {
        Complex z = *orbit.representative;
        for (int i = 0; i < *orbit.cycle_period; ++i) {
            cycle.push_back(z);
            z = eval_F(params, z);
        }
    }
    return cycle;
}

PointSample sample_point(const MapParams& params, const RenderConfig& cfg,
                         const std::vector<Complex>& cycle, Complex z0) {
    PointSample s;
    Complex z = z0;
    const double radius2 = cfg.escape_radius * cfg.escape_radius;
    auto abs2 = [](Complex w) { return w.real() * w.real() + w.imag() * w.imag(); };

    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || abs2(z) > radius2) {
        s.escaped = true;
        s.iter = 0;
        s.smooth = 0.0;
        return s;
    }
    for (int k = 1; k <= cfg.max_iter; ++k) {
        if (z == Complex(0.0, 0.0)) {
            s.escaped = true;  // the pole maps straight to infinity
            s.iter = k;
            s.smooth = static_cast<double>(k);
            return s;
        }
        z = eval_F(params, z);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            s.escaped = true;
            s.iter = k;
            s.smooth = static_cast<double>(k);
            return s;
        }
        if (abs2(z) > radius2) {
            s.escaped = true;
            s.iter = k;
            double nu = std::log2(std::log(std::abs(z)) / std::log(cfg.escape_radius));
            s.smooth = static_cast<double>(k) + 1.0 - std::clamp(nu, 0.0, 1.0);
            return s;
        }
    }
    s.escaped = false;
    s.iter = cfg.max_iter;
    if (!cycle.empty()) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            double d = std::abs(z - cycle[i]);
            if (d < best) {
                best = d;
                s.phase = static_cast<int>(i);
            }
        }
    }
    return s;
}

struct Rgb {
    unsigned char r, g, b;
};

Rgb escaped_color(Palette palette, double smooth) {
    auto channel = [](double v) {
        return static_cast<unsigned char>(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
    };
    if (palette == Palette::gray) {
        double v = 0.5 + 0.5 * std::cos(0.17 * smooth);
        unsigned char c = channel(v);
        return {c, c, c};
    }
    double t = 0.17 * smooth;
    return {channel(0.5 + 0.5 * std::cos(t)), channel(0.5 + 0.5 * std::cos(t + 0.9)),
            channel(0.5 + 0.5 * std::cos(t + 1.8))};
}

Rgb bounded_color(Palette palette, int phase) {
    if (phase < 0) {
        return palette == Palette::gray ? Rgb{40, 40, 40} : Rgb{18, 18, 26};
    }
    if (palette == Palette::gray) {
        unsigned char c = static_cast<unsigned char>(64 + 48 * (phase % 4));
        return {c, c, c};
    }
    static constexpr Rgb shades[] = {
        {30, 48, 110}, {96, 132, 204},  {26, 96, 88},
        {120, 188, 170}, {84, 40, 110}, {170, 120, 200},
    };
    return shades[phase % 6];
}

Complex pixel_to_plane(const RenderConfig& cfg, double px, double py) {
    const double step = cfg.scale / cfg.width;
    const double re = cfg.center.real() + (px - cfg.width / 2.0) * step;
    const double im = cfg.center.imag() - (py - cfg.height / 2.0) * step;
    return {re, im};
}

void parallel_rows(int height, int threads, const std::function<void(int, int)>& run) {
    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    n_threads = std::min(n_threads, height);
    if (n_threads == 1) {
        run(0, height);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
        int begin = static_cast<int>(static_cast<long>(height) * t / n_threads);
        int end = static_cast<int>(static_cast<long>(height) * (t + 1) / n_threads);
        pool.emplace_back(run, begin, end);
    }
    for (auto& th : pool) th.join();
}

void check_config(const RenderConfig& cfg) {
    if (cfg.width < 1 || cfg.height < 1) {
        throw std::invalid_argument("render: width and height must be positive");
    }
    if (!(cfg.scale > 0)) {
        throw std::invalid_argument("render: scale must be positive");
    }
    if (cfg.max_iter < 1) {
        throw std::invalid_argument("render: max_iter must be positive");
    }
    if (cfg.supersample != 1 && cfg.supersample != 2) {
        throw std::invalid_argument("render: supersample must be 1 or 2");
    }
}

}  // namespace

ImageBuffer render_julia(const MapParams& params, const RenderConfig& cfg, RenderStats* stats) {
    check_config(cfg);
    const std::vector<Complex> cycle = reference_cycle(params, cfg.escape_radius);

    ImageBuffer img;
    img.width = cfg.width;
    img.height = cfg.height;
    img.rgb.assign(static_cast<std::size_t>(3) * cfg.width * cfg.height, 0);

    std::vector<long> escaped_per_row(cfg.height, 0);
    parallel_rows(cfg.height, cfg.threads, [&](int row_begin, int row_end) {
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < cfg.width; ++x) {
                int acc_r = 0, acc_g = 0, acc_b = 0;
                int escaped_subsamples = 0;
                const int ss = cfg.supersample;
                for (int sy = 0; sy < ss; ++sy) {
                    for (int sx = 0; sx < ss; ++sx) {
                        double px = x + (sx + 0.5) / ss;
                        double py = y + (sy + 0.5) / ss;
                        PointSample s =
                            sample_point(params, cfg, cycle, pixel_to_plane(cfg, px, py));
                        Rgb c = s.escaped ? escaped_color(cfg.palette, s.smooth)
                                          : bounded_color(cfg.palette, s.phase);
                        acc_r += c.r;
                        acc_g += c.g;
                        acc_b += c.b;
                        if (s.escaped) ++escaped_subsamples;
                    }
                }
                const int total = ss * ss;
                std::size_t at = 3 * (static_cast<std::size_t>(y) * cfg.width + x);
                img.rgb[at + 0] = static_cast<unsigned char>(acc_r / total);
                img.rgb[at + 1] = static_cast<unsigned char>(acc_g / total);
                img.rgb[at + 2] = static_cast<unsigned char>(acc_b / total);
                if (escaped_subsamples * 2 >= total) ++escaped_per_row[y];
            }
        }
    });

    if (stats) {
        stats->escaped_pixels = 0;
        for (long n : escaped_per_row) stats->escaped_pixels += n;
        stats->bounded_pixels =
            static_cast<long>(cfg.width) * cfg.height - stats->escaped_pixels;
    }
    return img;
}

std::vector<std::int32_t> render_classes(const MapParams& params, const RenderConfig& cfg) {
    check_config(cfg);
    const std::vector<Complex> cycle = reference_cycle(params, cfg.escape_radius);
    std::vector<std::int32_t> classes(static_cast<std::size_t>(cfg.width) * cfg.height, 0);
    parallel_rows(cfg.height, cfg.threads, [&](int row_begin, int row_end) {
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < cfg.width; ++x) {
                PointSample s =
                    sample_point(params, cfg, cycle, pixel_to_plane(cfg, x + 0.5, y + 0.5));
                classes[static_cast<std::size_t>(y) * cfg.width + x] =
                    s.escaped ? s.iter : kBoundedClassBase + std::max(s.phase, 0);
            }
        }
    });
    return classes;
}

std::string lamination_to_svg(const Lamination& lam, const std::vector<HighlightSet>& highlights) {
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    auto point = [&](const Angle& t) {
        double tau = 2.0 * 3.14159265358979323846 *
                     (t.num().convert_to<double>() / t.den().convert_to<double>());
        return std::pair{fmt(std::cos(tau)), fmt(-std::sin(tau))};
    };
    auto stroke_of = [&](const Chord& c) -> std::string {
        for (const HighlightSet& set : highlights) {
            if (std::find(set.chords.begin(), set.chords.end(), c) != set.chords.end()) {
                return set.color;
            }
        }
        return "black";
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    out << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"0.008\"/>\n";
    for (const Chord& c : lam.chords()) {
        auto [x1, y1] = point(c.lo);
        auto [x2, y2] = point(c.hi);
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << stroke_of(c) << "\" stroke-width=\"0.006\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_ppm(const ImageBuffer& img, const std::string& path) {
    if (img.rgb.size() != static_cast<std::size_t>(3) * img.width * img.height) {
        throw std::invalid_argument("write_ppm: buffer size does not match dimensions");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open \"" + path + "\" for writing");
    }
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.rgb.data()),
              static_cast<std::streamsize>(img.rgb.size()));
    if (!out) {
        throw std::runtime_error("write failed for \"" + path + "\"");
    }
}

ImageBuffer read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open \"" + path + "\"");
    }
    std::string magic;
    int width = 0, height = 0, maxval = 0;
    in >> magic >> width >> height >> maxval;
    if (magic != "P6" || width < 1 || height < 1 || maxval != 255) {
        throw std::runtime_error("\"" + path + "\" is not a P6/255 PPM");
    }
    in.get();  // single whitespace after the header
    ImageBuffer img;
    img.width = width;
    img.height = height;
    img.rgb.resize(static_cast<std::size_t>(3) * width * height);
    in.read(reinterpret_cast<char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.rgb.size())) {
        throw std::runtime_error("\"" + path + "\" is truncated");
    }
    return img;
}

}  // namespace mclam
