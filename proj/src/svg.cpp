#include "minkcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace minkcover {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

} // namespace

Svg::Svg(int width, int height) : width_(width), height_(height) {}

void Svg::line(double x1, double y1, double x2, double y2, const std::string& stroke,
               double width) {
    body_ += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
             "\" y2=\"" + fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             fmt(width) + "\"/>\n";
}

void Svg::polyline(const std::vector<Point2>& pts, const std::string& stroke, double width) {
    body_ += "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) body_ += ' ';
        body_ += fmt(pts[i].x) + "," + fmt(pts[i].y);
    }
    body_ += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) +
             "\"/>\n";
}

void Svg::polygon(const std::vector<Point2>& pts, const std::string& stroke,
                  const std::string& fill, double width) {
    body_ += "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) body_ += ' ';
        body_ += fmt(pts[i].x) + "," + fmt(pts[i].y);
    }
    body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             fmt(width) + "\"/>\n";
}

void Svg::circle(double cx, double cy, double r, const std::string& fill) {
    body_ += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
             "\" fill=\"" + fill + "\"/>\n";
}

void Svg::text(double x, double y, const std::string& s, int font_size,
               const std::string& anchor) {
    body_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-family=\"monospace\"" +
             " font-size=\"" + std::to_string(font_size) + "\" text-anchor=\"" + anchor +
             "\">" + s + "</text>\n";
}

std::string Svg::str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width_) + "\" height=\"" + std::to_string(height_) +
                      "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
                      std::to_string(height_) + "\">\n";
    out += "<rect width=\"" + std::to_string(width_) + "\" height=\"" +
           std::to_string(height_) + "\" fill=\"white\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

void Svg::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << str();
    if (!f) throw std::runtime_error("failed writing " + path);
}

std::string plot_chart(const std::vector<PlotSeries>& series, const std::string& x_label,
                       const std::string& y_label, const std::string& title) {
    const int w = 640, h = 420;
    const double left = 70, right = 20, top = 40, bottom = 50;
    Svg svg(w, h);

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool have = false;
    for (const PlotSeries& s : series)
        for (const Point2& pt : s.points) {
            if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) continue;
            if (!have) {
                xmin = xmax = pt.x;
                ymin = ymax = pt.y;
                have = true;
            } else {
                xmin = std::min(xmin, pt.x);
                xmax = std::max(xmax, pt.x);
                ymin = std::min(ymin, pt.y);
                ymax = std::max(ymax, pt.y);
            }
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    const double ypad = ymax > ymin ? 0.05 * (ymax - ymin) : 1.0;
    ymin -= ypad;
    ymax += ypad;

    const auto mx = [&](double x) {
        return left + (x - xmin) / (xmax - xmin) * (w - left - right);
    };
    const auto my = [&](double y) {
        return h - bottom - (y - ymin) / (ymax - ymin) * (h - top - bottom);
    };

    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        svg.line(mx(xv), h - bottom, mx(xv), h - bottom + 4, "#333333");
        svg.text(mx(xv), h - bottom + 18, fmt_tick(xv), 11, "middle");
        svg.line(left - 4, my(yv), left, my(yv), "#333333");
        svg.text(left - 8, my(yv) + 4, fmt_tick(yv), 11, "end");
        if (i > 0) svg.line(left, my(yv), w - right, my(yv), "#e0e0e0");
    }
    svg.line(left, h - bottom, w - right, h - bottom, "#333333");
    svg.line(left, top, left, h - bottom, "#333333");
    svg.text(w / 2.0, h - 12, x_label, 12, "middle");
    svg.text(16, top - 12, y_label, 12, "start");
    svg.text(w / 2.0, 20, title, 14, "middle");

    double legend_y = top + 8;
    for (const PlotSeries& s : series) {
        std::vector<Point2> mapped;
        mapped.reserve(s.points.size());
        for (const Point2& pt : s.points)
            if (std::isfinite(pt.x) && std::isfinite(pt.y)) mapped.push_back({mx(pt.x), my(pt.y)});
        svg.polyline(mapped, s.color);
        if (!s.label.empty()) {
            svg.line(left + 10, legend_y, left + 34, legend_y, s.color, 2.0);
            svg.text(left + 40, legend_y + 4, s.label, 11, "start");
            legend_y += 16;
        }
    }
    return svg.str();
}

std::string plot_hexagon_in_ball(BallParameter p, const SymmetricHexagon& hex,
                                 const std::string& title) {
    const int w = 480, h = 480;
    const double lo = -1.35, hi = 1.35;
    Svg svg(w, h);
    const auto mx = [&](double x) { return (x - lo) / (hi - lo) * w; };
    const auto my = [&](double y) { return h - (y - lo) / (hi - lo) * h; };

    svg.line(mx(lo), my(0), mx(hi), my(0), "#cccccc");
    svg.line(mx(0), my(lo), mx(0), my(hi), "#cccccc");

    std::vector<Point2> boundary;
    if (p.is_finite()) {
        const int n = 256;
        boundary.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * std::numbers::pi * i / n;
            const Point2 dir{std::cos(th), std::sin(th)};
            const double r = 1.0 / gauge(dir, p);
            boundary.push_back({mx(r * dir.x), my(r * dir.y)});
        }
    } else if (p.kind() == BallParameter::Kind::limit_one) {
        boundary = {{mx(1), my(0)}, {mx(0), my(1)}, {mx(-1), my(0)}, {mx(0), my(-1)}};
    } else {
        boundary = {{mx(1), my(1)}, {mx(-1), my(1)}, {mx(-1), my(-1)}, {mx(1), my(-1)}};
    }
    svg.polygon(boundary, "#1f77b4", "none");

    const std::vector<Point2> verts = {hex.w1, hex.w2, hex.w3, -hex.w1, -hex.w2, -hex.w3};
    std::vector<Point2> mapped;
    mapped.reserve(verts.size());
    for (const Point2& v : verts) mapped.push_back({mx(v.x), my(v.y)});
    svg.polygon(mapped, "#d62728", "#fddbc7");
    for (const Point2& v : mapped) svg.circle(v.x, v.y, 3.0, "#d62728");

    svg.text(w / 2.0, 24, title, 14, "middle");
    return svg.str();
}

} // namespace minkcover
