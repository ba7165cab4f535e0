#include "cword/geometry.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cword {

LatticePath path_of_word(const Word& w) {
    LatticePath p;
    p.dimension = w.alphabet >= 3 ? 3 : 2;
    p.steps.reserve(w.size());
    for (Letter a : w.letters) {
        if (a > 2) throw std::invalid_argument("path letters must be 0, 1 or 2");
        p.steps.push_back(static_cast<Step>(a));
    }
    return p;
}

Word word_of_path(const LatticePath& p) {
    std::vector<Letter> letters;
    letters.reserve(p.steps.size());
    for (Step s : p.steps) letters.push_back(static_cast<Letter>(s));
    return Word(std::move(letters), p.dimension == 3 ? 3 : 2);
}

std::pair<LatticePath, Word> path3d(const PlaneSpec& spec) {
    if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("slope parts must be positive");
    if (std::gcd(spec.m, spec.n) != 1) throw std::invalid_argument("not coprime");
    const long long m = spec.m, n = spec.n;
    LatticePath path;
    path.dimension = 3;
    long long x = 0, y = 0, z = 0;
    bool x_next = true;  // xi and eta alternate, xi first
    while (true) {
        if ((z + 1) * m <= n * (x + y)) {
            path.steps.push_back(Step::Z);
            ++z;
        } else if (x_next) {
            path.steps.push_back(Step::X);
            ++x;
            x_next = false;
        } else {
            path.steps.push_back(Step::Y);
            ++y;
            x_next = true;
        }
        if (x == y && z * m == n * (x + y) && x > 0) break;
    }
    return {path, word_of_path(path)};
}

LatticePath project_to_diagonal(const LatticePath& path) {
    LatticePath out;
    out.dimension = 2;
    out.steps.reserve(path.steps.size());
    for (Step s : path.steps)
        out.steps.push_back(s == Step::Z ? Step::Y : Step::X);
    return out;
}

LatticePath path2d(const Slope& s) { return path_of_word(christoffel(s)); }

namespace {

struct Pt {
    double x = 0, y = 0;
};

const char* step_color(Step s) {
    switch (s) {
        case Step::X: return "#1f77b4";  // blue
        case Step::Y: return "#2ca02c";  // green
        case Step::Z: return "#d62728";  // red
    }
    return "#000000";
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    std::string s = os.str();
    while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.'))
        s.pop_back();
    return s;
}

std::string svg_document(double width, double height, const std::string& body) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << fmt(width) << "\" height=\"" << fmt(height) << "\">\n"
       << body << "</svg>\n";
    return os.str();
}

}  // namespace

std::string svg_path(const LatticePath& path, const SvgStyle& style) {
    // Isometric screen coordinates, 30-degree axes; 2D paths use plain axes.
    const double c30 = std::sqrt(3.0) / 2.0, s30 = 0.5;
    std::vector<Pt> pts;
    {
        long long x = 0, y = 0, z = 0;
        auto plot = [&]() -> Pt {
            if (path.dimension == 3)
                return {(x - y) * c30, (x + y) * s30 - z};
            return {static_cast<double>(x), static_cast<double>(y)};
        };
        pts.push_back(plot());
        for (Step s : path.steps) {
            if (s == Step::X) ++x;
            else if (s == Step::Y) ++y;
            else ++z;
            pts.push_back(plot());
        }
    }

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const Pt& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    if (style.guide) {
        max_x = std::max(max_x, static_cast<double>(style.guide->first));
        max_y = std::max(max_y, static_cast<double>(style.guide->second));
    }

    const double sc = style.scale, mg = style.margin;
    auto sx = [&](double x) { return mg + (x - min_x) * sc; };
    auto sy = [&](double y) { return mg + (max_y - y) * sc; };  // flip: SVG y grows down

    std::ostringstream body;
    if (style.guide) {
        body << "  <line class=\"guide\" x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0))
             << "\" x2=\"" << fmt(sx(style.guide->first)) << "\" y2=\""
             << fmt(sy(style.guide->second))
             << "\" stroke=\"#999999\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        body << "  <line x1=\"" << fmt(sx(pts[i].x)) << "\" y1=\"" << fmt(sy(pts[i].y))
             << "\" x2=\"" << fmt(sx(pts[i + 1].x)) << "\" y2=\"" << fmt(sy(pts[i + 1].y))
             << "\" stroke=\"" << step_color(path.steps[i])
             << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }
    return svg_document(sx(max_x) + mg, sy(min_y) + mg, body.str());
}

std::string svg_necklace(const CircularWord& cw, const SvgStyle& style) {
    const Word& w = cw.canonical();
    const std::size_t ell = w.size();
    const double radius = std::max<double>(3.0, static_cast<double>(ell)) * style.scale / 8.0;
    const double cx = radius + style.margin, cy = radius + style.margin;
    const double pi = 3.14159265358979323846;

    std::vector<Pt> vertex(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        double angle = -pi / 2 + 2 * pi * static_cast<double>(i) / static_cast<double>(ell);
        vertex[i] = {cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
    }

    static const char* palette[] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
    std::ostringstream body;
    body << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
         << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (int a = 0; a < w.alphabet; ++a) {
        std::ostringstream points;
        bool present = false;
        for (std::size_t i = 0; i < ell; ++i) {
            if (w.letters[i] != a) continue;
            if (present) points << ' ';
            points << fmt(vertex[i].x) << ',' << fmt(vertex[i].y);
            present = true;
        }
        if (!present) continue;
        body << "  <polygon class=\"letter-" << a << "\" points=\"" << points.str()
             << "\" fill=\"none\" stroke=\"" << palette[a % 8] << "\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t i = 0; i < ell; ++i) {
        body << "  <circle cx=\"" << fmt(vertex[i].x) << "\" cy=\"" << fmt(vertex[i].y)
             << "\" r=\"3\" fill=\"" << palette[w.letters[i] % 8] << "\"/>\n";
    }
    return svg_document(2 * (radius + style.margin), 2 * (radius + style.margin), body.str());
}

}  // namespace cword
