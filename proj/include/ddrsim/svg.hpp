#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ddrsim {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y), x ascending
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 900;
    int height = 540;
};

/// Static SVG line chart: axes with rounded ticks, one polyline per series and
/// a legend. Output bytes depend only on the inputs.
std::string render_line_chart(const std::vector<Series>& series, const ChartOptions& options);

/// Tick step of the form {1,2,5}x10^k giving roughly `target` intervals over span.
double nice_step(double span, int target);

}  // namespace ddrsim
