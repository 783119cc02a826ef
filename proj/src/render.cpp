#include "apollo/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "apollo/depth.hpp"
#include "apollo/symmetry.hpp"

namespace apollo {

namespace {

// Midpoint form of the pixel-center rule: offsets negate exactly under
// i -> width-1-i, so symmetric windows sample exactly mirrored points.
double pixel_coord(double lo, double hi, int index, int count) {
    double center = (lo + hi) / 2.0;
    double offset = static_cast<double>(2 * index + 1 - count) * (hi - lo) / (2.0 * count);
    return center + offset;
}

long depth_at(double x, double y, long max_depth, DepthMode mode) {
    if (mode == DepthMode::Web) {
        DepthResult r = depth_triple(Triple{Scalar(1.0), Scalar(x), Scalar(y)}, max_depth);
        return r.overflow ? max_depth : r.depth;
    }
    // Fold onto the quarter strip first: the depth field is invariant under
    // both mirrors, and folding makes the raster symmetry exact in floats.
    double fx = std::abs(x);
    double fy = 0.5 + std::abs(y - 0.5);
    DepthResult r = depth_z(ProjPoint::xy(fx, fy), max_depth);
    return r.overflow ? max_depth : r.depth;
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

Raster render_depth(const Window& window, int width, int height, long max_depth,
                    DepthMode mode, int workers) {
    if (width <= 0 || height <= 0 || window.xmin >= window.xmax || window.ymin >= window.ymax)
        throw Error("degenerate raster window");
    if (max_depth < 1) throw Error("max_depth must be >= 1");

    Raster r;
    r.width = width;
    r.height = height;
    r.window = window;
    r.pixels.assign(static_cast<size_t>(width) * height * 3, 0);

    Palette palette;
    auto fill_row = [&](int j) {
        double y = pixel_coord(window.ymin, window.ymax, height - 1 - j, height);
        for (int i = 0; i < width; ++i) {
            double x = pixel_coord(window.xmin, window.xmax, i, width);
            Rgb c = palette.color_for(depth_at(x, y, max_depth, mode), max_depth);
            size_t k = 3 * (static_cast<size_t>(j) * width + i);
            r.pixels[k] = c.r;
            r.pixels[k + 1] = c.g;
            r.pixels[k + 2] = c.b;
        }
    };

    int n = std::min(worker_count(workers), height);
    if (n <= 1) {
        for (int j = 0; j < height; ++j) fill_row(j);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (int t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (int j = next.fetch_add(1); j < height; j = next.fetch_add(1)) fill_row(j);
            });
        for (auto& th : pool) th.join();
    }
    return r;
}

void write_ppm(const Raster& r, std::ostream& out) {
    out << "P6\n" << r.width << " " << r.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(r.pixels.data()),
              static_cast<std::streamsize>(r.pixels.size()));
}

std::string ppm_bytes(const Raster& r) {
    std::ostringstream os;
    write_ppm(r, os);
    return os.str();
}

namespace {

// Numbers printed with 9 significant digits, trailing zeros trimmed.
std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct SvgTransform {
    Window win;
    double scale;  // pixels per unit
    double px(double x) const { return (x - win.xmin) * scale; }
    double py(double y) const { return (win.ymax - y) * scale; }
};

void svg_header(std::ostringstream& os, const SvgTransform& t, int width_px, int height_px) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
       << height_px << "\" viewBox=\"0 0 " << fmt(width_px) << " " << fmt(height_px) << "\">\n";
    (void)t;
}

struct LineSeg {
    double x1, y1, x2, y2;
    bool ok = false;
};

// Clips the line <n, z> = d to the window rectangle.
LineSeg clip_line(double nx, double ny, double d, const Window& w) {
    std::vector<std::pair<double, double>> pts;
    auto push = [&](double x, double y) {
        for (auto [px, py] : pts)
            if (std::abs(px - x) < 1e-12 && std::abs(py - y) < 1e-12) return;
        pts.emplace_back(x, y);
    };
    if (std::abs(ny) > 1e-15) {
        for (double x : {w.xmin, w.xmax}) {
            double y = (d - nx * x) / ny;
            if (y >= w.ymin - 1e-12 && y <= w.ymax + 1e-12) push(x, y);
        }
    }
    if (std::abs(nx) > 1e-15) {
        for (double y : {w.ymin, w.ymax}) {
            double x = (d - ny * y) / nx;
            if (x >= w.xmin - 1e-12 && x <= w.xmax + 1e-12) push(x, y);
        }
    }
    LineSeg seg;
    if (pts.size() >= 2) {
        seg = {pts[0].first, pts[0].second, pts[1].first, pts[1].second, true};
    }
    return seg;
}

bool circle_touches_window(double cx, double cy, double r, const Window& w) {
    return cx + r >= w.xmin && cx - r <= w.xmax && cy + r >= w.ymin && cy - r <= w.ymax;
}

}  // namespace

std::string render_packing_svg(const Packing& p, const Window& window, int width_px,
                               bool labels) {
    double scale = width_px / (window.xmax - window.xmin);
    int height_px = static_cast<int>(std::lround((window.ymax - window.ymin) * scale));
    SvgTransform t{window, scale};
    double stroke = 0.005 * (window.ymax - window.ymin) * scale;

    struct Item {
        bool line;
        double radius;
        double a, b, c, d;  // circle: cx, cy, r; line: endpoints
        double curv;
    };
    std::vector<Item> items;
    for (const PackedDisk& d : p.disks) {
        if (d.is_line()) {
            LineSeg seg = clip_line(d.curv_center.re.value(), d.curv_center.im.value(),
                                    d.line_offset().value(), window);
            if (seg.ok)
                items.push_back(
                    {true, std::numeric_limits<double>::infinity(),
                     seg.x1, seg.y1, seg.x2, seg.y2, 0.0});
        } else {
            ComplexScalar c = d.center();
            double r = d.radius().value();
            if (circle_touches_window(c.re.value(), c.im.value(), r, window))
                items.push_back({false, r, c.re.value(), c.im.value(), r, 0.0,
                                 d.curv.value()});
        }
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.radius != b.radius) return a.radius > b.radius;
        if (a.a != b.a) return a.a < b.a;
        return a.b < b.b;
    });

    std::ostringstream os;
    svg_header(os, t, width_px, height_px);
    os << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fmt(stroke) << "\">\n";
    for (const Item& it : items) {
        if (it.line) {
            os << "<line x1=\"" << fmt(t.px(it.a)) << "\" y1=\"" << fmt(t.py(it.b))
               << "\" x2=\"" << fmt(t.px(it.c)) << "\" y2=\"" << fmt(t.py(it.d)) << "\"/>\n";
        } else {
            os << "<circle cx=\"" << fmt(t.px(it.a)) << "\" cy=\"" << fmt(t.py(it.b))
               << "\" r=\"" << fmt(it.c * t.scale) << "\"/>\n";
        }
    }
    os << "</g>\n";
    if (labels) {
        os << "<g fill=\"#000000\" text-anchor=\"middle\" font-family=\"sans-serif\">\n";
        for (const Item& it : items) {
            if (it.line) continue;
            double fs = std::max(1.0, 0.8 * it.c * t.scale);
            std::ostringstream label;
            label << it.curv;
            os << "<text x=\"" << fmt(t.px(it.a)) << "\" y=\""
               << fmt(t.py(it.b) + fs * 0.35) << "\" font-size=\"" << fmt(fs) << "\">"
               << label.str() << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<std::pair<CircleForm, bool>> tessellation_base_loci() {
    const ComplexScalar i_unit{Scalar(0), Scalar(1)};
    const ComplexScalar half_i{Scalar(0), Scalar::ratio(1, 2)};
    const ComplexScalar ex{Scalar(1), Scalar(0)};
    const ComplexScalar ey{Scalar(0), Scalar(1)};
    std::vector<std::pair<CircleForm, bool>> loci;
    // Mirrors.
    loci.emplace_back(CircleForm::line(ex, Scalar(0)), true);                    // x = 0
    loci.emplace_back(CircleForm::line(ey, Scalar::ratio(1, 2)), true);          // y = 1/2
    loci.emplace_back(CircleForm::circle({Scalar(0), Scalar(0)}, Scalar(1)), true);  // |z| = 1
    loci.emplace_back(CircleForm::circle(i_unit, Scalar(1)), true);              // |z-i| = 1
    // Zero-depth boundaries.
    loci.emplace_back(CircleForm::line(ey, Scalar(0)), false);                   // y = 0
    loci.emplace_back(CircleForm::line(ey, Scalar(1)), false);                   // y = 1
    loci.emplace_back(CircleForm::circle(half_i, Scalar::ratio(1, 2)), false);   // dark disk
    return loci;
}

namespace {

using TessKey = std::array<Rational, 4>;

TessKey tess_key(const CircleForm& c) {
    CircleForm k = c.canonical();
    return {k.A.rational(), k.B.re.rational(), k.B.im.rational(), k.C.rational()};
}

}  // namespace

std::vector<CircleForm> tessellation_circles(int max_word_length) {
    if (max_word_length > 8) throw Error("tessellation word length capped at 8");
    const GenName gens[] = {GenName::T, GenName::TInv, GenName::S, GenName::F, GenName::H};

    std::map<TessKey, CircleForm> seen;
    std::vector<CircleForm> frontier;
    for (auto& [form, mirror] : tessellation_base_loci()) {
        (void)mirror;
        CircleForm canon = form.canonical();
        if (seen.emplace(tess_key(canon), canon).second) frontier.push_back(canon);
    }
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<CircleForm> next;
        for (const CircleForm& c : frontier)
            for (GenName g : gens) {
                CircleForm img = circle_apply_moebius(c, generator(g)).canonical();
                if (seen.emplace(tess_key(img), img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    std::vector<CircleForm> out;
    out.reserve(seen.size());
    for (auto& [key, form] : seen) out.push_back(form);
    return out;
}

std::string render_tessellation_svg(int max_word_length, const Window& window, int width_px) {
    const GenName gens[] = {GenName::T, GenName::TInv, GenName::S, GenName::F, GenName::H};

    // Track the mirror family and the zero-depth family separately; both are
    // closed under the group action.
    std::map<TessKey, std::pair<CircleForm, bool>> seen;
    std::vector<std::pair<CircleForm, bool>> frontier;
    for (auto& [form, mirror] : tessellation_base_loci()) {
        CircleForm canon = form.canonical();
        if (seen.emplace(tess_key(canon), std::make_pair(canon, mirror)).second)
            frontier.emplace_back(canon, mirror);
    }
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<std::pair<CircleForm, bool>> next;
        for (auto& [c, mirror] : frontier)
            for (GenName g : gens) {
                CircleForm img = circle_apply_moebius(c, generator(g)).canonical();
                if (seen.emplace(tess_key(img), std::make_pair(img, mirror)).second)
                    next.emplace_back(img, mirror);
            }
        frontier = std::move(next);
    }

    double scale = width_px / (window.xmax - window.xmin);
    int height_px = static_cast<int>(std::lround((window.ymax - window.ymin) * scale));
    SvgTransform t{window, scale};
    double stroke = 0.005 * (window.ymax - window.ymin) * scale;

    struct Item {
        bool line;
        bool mirror;
        double radius;
        double a, b, c, d;
    };
    std::vector<Item> items;
    for (auto& [key, entry] : seen) {
        auto& [form, mirror] = entry;
        CircleForm f = form;
        if (f.is_line()) {
            double nx = f.B.re.value(), ny = f.B.im.value();
            double d = -f.C.value() / 2.0;
            LineSeg seg = clip_line(nx, ny, d, window);
            if (seg.ok)
                items.push_back({true, mirror, std::numeric_limits<double>::infinity(),
                                 seg.x1, seg.y1, seg.x2, seg.y2});
        } else {
            ComplexScalar c = f.center();
            double r = f.radius().value();
            if (circle_touches_window(c.re.value(), c.im.value(), r, window))
                items.push_back({false, mirror, r, c.re.value(), c.im.value(), r, 0.0});
        }
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.mirror != b.mirror) return a.mirror > b.mirror;
        if (a.radius != b.radius) return a.radius > b.radius;
        if (a.a != b.a) return a.a < b.a;
        return a.b < b.b;
    });

    std::ostringstream os;
    svg_header(os, t, width_px, height_px);
    for (int pass = 0; pass < 2; ++pass) {
        bool mirror_pass = pass == 0;
        os << "<g fill=\"none\" stroke=\"" << (mirror_pass ? "#000000" : "#cc0000")
           << "\" stroke-width=\"" << fmt(mirror_pass ? stroke : 1.6 * stroke) << "\">\n";
        for (const Item& it : items) {
            if (it.mirror != mirror_pass) continue;
            if (it.line)
                os << "<line x1=\"" << fmt(t.px(it.a)) << "\" y1=\"" << fmt(t.py(it.b))
                   << "\" x2=\"" << fmt(t.px(it.c)) << "\" y2=\"" << fmt(t.py(it.d))
                   << "\"/>\n";
            else
                os << "<circle cx=\"" << fmt(t.px(it.a)) << "\" cy=\"" << fmt(t.py(it.b))
                   << "\" r=\"" << fmt(it.c * t.scale) << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace apollo
