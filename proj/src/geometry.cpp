#include "ddrsim/geometry.hpp"

#include <cmath>
#include <string>

#include "ddrsim/errors.hpp"

namespace ddrsim {

double distance_squared(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double distance(const Point& a, const Point& b) { return std::sqrt(distance_squared(a, b)); }

const char* to_string(Side s) {
    switch (s) {
        case Side::inner: return "inner";
        case Side::top: return "top";
        case Side::right: return "right";
        case Side::bottom: return "bottom";
        case Side::left: return "left";
    }
    return "?";
}

namespace {

int ring_count_for(double field_side, double ring_spacing) {
    if (!std::isfinite(field_side) || field_side <= 0.0)
        throw ConfigError("field side must be a positive finite length, got " +
                          std::to_string(field_side));
    if (!std::isfinite(ring_spacing) || ring_spacing <= 0.0)
        throw ConfigError("ring spacing must be a positive finite length, got " +
                          std::to_string(ring_spacing));
    const double ratio = (field_side / 2.0) / ring_spacing;
    const double rounded = std::round(ratio);
    // Ring count n = C_p(x) / d must be a whole number of rings.
    if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
        throw ConfigError("ring count n = (field_side/2)/ring_spacing = " + std::to_string(ratio) +
                          " is not an integer; the concentric-square construction needs whole rings "
                          "(choose ring_spacing = (field_side/2)/n)");
    if (rounded < 2.0)
        throw ConfigError("ring count n = " + std::to_string(ratio) + " must be at least 2");
    return static_cast<int>(rounded);
}

}  // namespace

SegmentLayout::SegmentLayout(double field_side, double ring_spacing)
    : field_side_(field_side),
      ring_spacing_(0.0),
      ring_count_(ring_count_for(field_side, ring_spacing)),
      center_{field_side / 2.0, field_side / 2.0} {
    const int n = ring_count_;
    ring_spacing_ = field_side_ / (2.0 * n);

    segments_.reserve(1 + 4 * (n - 1));
    auto add = [&](int ring, Side side, int x0, int y0, int x1, int y1) {
        Segment s;
        s.id = static_cast<SegmentId>(segments_.size()) + 1;
        s.ring = ring;
        s.side = side;
        s.rect = Rect{{grid(x0), grid(y0)}, {grid(x1), grid(y1)}};
        s.area = s.rect.area();
        s.centroid = s.rect.center();
        segments_.push_back(s);
    };

    add(1, Side::inner, n - 1, n - 1, n + 1, n + 1);
    for (int k = 2; k <= n; ++k) {
        const int a = k - 1;  // inner half-width in grid steps
        const int b = k;      // outer half-width
        add(k, Side::top, n - b, n + a, n + a, n + b);
        add(k, Side::right, n + a, n - a, n + b, n + b);
        add(k, Side::bottom, n - a, n - b, n + b, n - a);
        add(k, Side::left, n - b, n - b, n - a, n + a);
    }
}

SegmentLayout SegmentLayout::from_ring_count(double field_side, int ring_count) {
    if (ring_count < 2) throw ConfigError("ring count must be at least 2, got " + std::to_string(ring_count));
    return SegmentLayout(field_side, field_side / (2.0 * ring_count));
}

// Grid lines are computed as L*j/(2n) so that j = 0 and j = 2n land exactly on the field edges.
double SegmentLayout::grid(int j) const { return field_side_ * j / (2.0 * ring_count_); }

const Segment& SegmentLayout::segment(SegmentId id) const {
    if (id < 1 || id > static_cast<SegmentId>(segments_.size()))
        throw ConfigError("segment id " + std::to_string(id) + " out of range");
    return segments_[static_cast<std::size_t>(id - 1)];
}

SegmentId SegmentLayout::segment_of(const Point& p) const {
    if (!(p.x >= 0.0 && p.x <= field_side_ && p.y >= 0.0 && p.y <= field_side_))
        throw OutOfField("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                         ") lies outside the field");
    for (const auto& s : segments_)
        if (s.rect.contains(p)) return s.id;
    // Unreachable: the segments tile the closed field exactly.
    throw OutOfField("point not covered by any segment");
}

SquareCorners SegmentLayout::square_corners(int k) const {
    if (k < 1 || k > ring_count_)
        throw ConfigError("square index " + std::to_string(k) + " outside [1, " +
                          std::to_string(ring_count_) + "]");
    const int n = ring_count_;
    const double lo = grid(n - k);
    const double hi = grid(n + k);
    return {{hi, hi}, {hi, lo}, {lo, hi}, {lo, lo}};
}

SegmentId SegmentLayout::segment_at(int ring, Side side) const {
    if (ring < 2 || ring > ring_count_ || side == Side::inner)
        throw ConfigError("no segment at ring " + std::to_string(ring));
    return 2 + 4 * (ring - 2) + static_cast<int>(side);
}

}  // namespace ddrsim
