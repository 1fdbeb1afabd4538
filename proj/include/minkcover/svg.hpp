#pragma once

// Minimal static SVG writer for the CLI plots. Output formatting is fixed so
// identical inputs produce byte-identical documents.

#include <string>
#include <vector>

#include "minkcover/geometry.hpp"

namespace minkcover {

class Svg {
public:
    Svg(int width, int height);

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0);
    void polyline(const std::vector<Point2>& pts, const std::string& stroke,
                  double width = 1.5);
    void polygon(const std::vector<Point2>& pts, const std::string& stroke,
                 const std::string& fill, double width = 1.5);
    void circle(double cx, double cy, double r, const std::string& fill);
    void text(double x, double y, const std::string& s, int font_size = 12,
              const std::string& anchor = "start");

    [[nodiscard]] std::string str() const;
    void write(const std::string& path) const;

private:
    int width_;
    int height_;
    std::string body_;
};

// Line chart with axes, tick labels, and one polyline per series.
struct PlotSeries {
    std::vector<Point2> points;
    std::string color;
    std::string label;
};

[[nodiscard]] std::string plot_chart(const std::vector<PlotSeries>& series,
                                     const std::string& x_label, const std::string& y_label,
                                     const std::string& title);

// Ball boundary with an inscribed hexagon; the viewport is the fixed square
// [-1.35, 1.35]^2 so diagrams for different p are comparable.
[[nodiscard]] std::string plot_hexagon_in_ball(BallParameter p, const SymmetricHexagon& hex,
                                               const std::string& title);

} // namespace minkcover
