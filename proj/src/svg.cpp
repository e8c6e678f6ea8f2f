#include "ddrsim/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace ddrsim {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    if (std::abs(v) >= 1e6 || (v != 0.0 && std::abs(v) < 1e-3))
        std::snprintf(buf, sizeof buf, "%.3g", v);
    else
        std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> ticks(double lo, double hi, double step) {
    std::vector<double> out;
    const long n = std::lround((hi - lo) / step);
    for (long i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

}  // namespace

double nice_step(double span, int target) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / std::max(1, target);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    const double m = f <= 1.0 ? 1.0 : f <= 2.0 ? 2.0 : f <= 5.0 ? 5.0 : 10.0;
    return m * mag;
}

std::string render_line_chart(const std::vector<Series>& series, const ChartOptions& o) {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    if (!std::isfinite(x_min)) x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    // Counts and rounds start at zero.
    x_min = std::min(x_min, 0.0);
    y_min = std::min(y_min, 0.0);

    const double x_step = nice_step(x_max - x_min, 8);
    const double y_step = nice_step(y_max - y_min, 6);
    x_max = std::max(x_min + x_step, std::ceil(x_max / x_step) * x_step);
    y_max = std::max(y_min + y_step, std::ceil(y_max / y_step) * y_step);

    const double left = 80, right = 180, top = 50, bottom = 60;
    const double pw = o.width - left - right;
    const double ph = o.height - top - bottom;
    auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) { return top + (y_max - y) / (y_max - y_min) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(o.width) + "\" height=\"" +
         std::to_string(o.height) + "\" viewBox=\"0 0 " + std::to_string(o.width) + " " +
         std::to_string(o.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(o.width) + "\" height=\"" + std::to_string(o.height) +
         "\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" +
         escape(o.title) + "</text>\n";

    s += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double x : ticks(x_min, x_max, x_step))
        s += "<line x1=\"" + num(sx(x)) + "\" y1=\"" + num(top) + "\" x2=\"" + num(sx(x)) + "\" y2=\"" +
             num(top + ph) + "\"/>\n";
    for (double y : ticks(y_min, y_max, y_step))
        s += "<line x1=\"" + num(left) + "\" y1=\"" + num(sy(y)) + "\" x2=\"" + num(left + pw) + "\" y2=\"" +
             num(sy(y)) + "\"/>\n";
    s += "</g>\n";

    s += "<g fill=\"black\">\n";
    for (double x : ticks(x_min, x_max, x_step))
        s += "<text x=\"" + num(sx(x)) + "\" y=\"" + num(top + ph + 18) + "\" text-anchor=\"middle\">" +
             tick_label(x) + "</text>\n";
    for (double y : ticks(y_min, y_max, y_step))
        s += "<text x=\"" + num(left - 8) + "\" y=\"" + num(sy(y) + 4) + "\" text-anchor=\"end\">" + tick_label(y) +
             "</text>\n";
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(o.height - 15.0) + "\" text-anchor=\"middle\">" +
         escape(o.x_label) + "</text>\n";
    s += "<text x=\"20\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num(top + ph / 2) + ")\">" + escape(o.y_label) + "</text>\n";
    s += "</g>\n";

    s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % kPalette.size()];
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (auto [x, y] : series[i].points) {
            if (!first) s += ' ';
            first = false;
            s += num(sx(x)) + "," + num(sy(y));
        }
        s += "\"/>\n";

        const double ly = top + 10 + 20.0 * static_cast<double>(i);
        const double lx = left + pw + 15;
        s += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 25) + "\" y2=\"" + num(ly) +
             "\" stroke=\"" + color + "\" stroke-width=\"3\"/>\n";
        s += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) + "\">" + escape(series[i].label) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace ddrsim
