#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "apollo/circleform.hpp"
#include "apollo/packing.hpp"

namespace apollo {

struct Rgb {
    uint8_t r, g, b;
    bool operator==(const Rgb&) const = default;
};

/// Pinned colors: depth 0 black, overflow white, twelve-step blue cycle.
struct Palette {
    Rgb zero{0, 0, 0};
    Rgb overflow{255, 255, 255};
    std::array<Rgb, 12> cycle{{{25, 25, 112},
                               {0, 0, 205},
                               {30, 144, 255},
                               {0, 191, 255},
                               {135, 206, 235},
                               {70, 130, 180},
                               {100, 149, 237},
                               {65, 105, 225},
                               {0, 0, 139},
                               {72, 61, 139},
                               {106, 90, 205},
                               {123, 104, 238}}};

    Rgb color_for(long depth, long max_depth) const {
        if (depth == 0) return zero;
        if (depth >= max_depth) return overflow;
        return cycle[static_cast<size_t>((depth - 1) % 12)];
    }
};

struct Window {
    double xmin, xmax, ymin, ymax;
};

/// Row-major RGB raster; pixel (i,j) samples the cell center
/// (xmin + (i+0.5)*w/width, ymax - (j+0.5)*h/height).
struct Raster {
    int width = 0, height = 0;
    Window window{0, 1, 0, 1};
    std::vector<uint8_t> pixels;  // 3 bytes per pixel

    Rgb at(int i, int j) const {
        size_t k = 3 * (static_cast<size_t>(j) * width + i);
        return {pixels[k], pixels[k + 1], pixels[k + 2]};
    }
};

enum class DepthMode { Spinor, Web };

/// Renders the depth field: per-pixel depth of the parameter point (spinor
/// mode) or of the triple (1, x, y) (web mode). Deterministic for any worker
/// count; pixel centers are evaluated symmetrically so mirror-symmetric
/// windows produce exactly mirror-symmetric rasters.
Raster render_depth(const Window& window, int width, int height, long max_depth,
                    DepthMode mode, int workers = 0);

/// Binary PPM: "P6\n{w} {h}\n255\n" + raw RGB.
void write_ppm(const Raster& r, std::ostream& out);
std::string ppm_bytes(const Raster& r);

/// SVG with one circle element per disk (lines as line elements), sorted by
/// descending radius then lexicographic center. Optional curvature labels.
std::string render_packing_svg(const Packing& p, const Window& window, int width_px,
                               bool labels = false);

/// Applies all words up to the given length over {T, T', S, F, H} to the
/// four mirror loci and the three zero-region boundary circles, deduplicates,
/// clips to the window, and draws mirrors black and the zero-depth family in
/// a distinct stroke.
std::string render_tessellation_svg(int max_word_length, const Window& window, int width_px);

/// The deduplicated tessellation circle set (exact forms), exposed for the
/// closure checks.
std::vector<CircleForm> tessellation_circles(int max_word_length);
/// Initial loci: mirrors x=0, y=1/2, |z|=1, |z-i|=1 flagged as mirrors, and
/// the zero-region boundaries y=0, y=1, |z-i/2|=1/2.
std::vector<std::pair<CircleForm, bool>> tessellation_base_loci();

}  // namespace apollo
