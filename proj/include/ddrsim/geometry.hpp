#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace ddrsim {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);
double distance_squared(const Point& a, const Point& b);

/// Axis-aligned rectangle, closed on all sides.
struct Rect {
    Point lo;  // bottom-left
    Point hi;  // top-right

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return width() * height(); }
    Point center() const { return {(lo.x + hi.x) / 2.0, (lo.y + hi.y) / 2.0}; }
    bool contains(const Point& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Position of a ring segment inside its annulus. The inner square has none.
enum class Side { inner = -1, top = 0, right = 1, bottom = 2, left = 3 };

const char* to_string(Side s);

using SegmentId = int;

struct Segment {
    SegmentId id = 0;  // 1-based; 1 is the inner square
    int ring = 0;      // 1 = inner square, n = outermost ring
    Side side = Side::inner;
    Rect rect;
    double area = 0.0;
    Point centroid;  // reference point for cluster-head ranking
};

struct SquareCorners {
    Point top_right;
    Point bottom_right;
    Point top_left;
    Point bottom_left;
};

/// Concentric-square segmentation of an L x L field centered on the base station.
///
/// Ring 1 is the inner square of side 2d. Each ring k >= 2 is the annulus between
/// squares k-1 and k, cut into four congruent pinwheel rectangles of size
/// (2k-1)d x d, ordered top, right, bottom, left. Immutable once built.
class SegmentLayout {
public:
    /// Throws ConfigError unless field_side / (2 * ring_spacing) is an integer >= 2.
    SegmentLayout(double field_side, double ring_spacing);

    static SegmentLayout from_ring_count(double field_side, int ring_count);

    double field_side() const { return field_side_; }
    double ring_spacing() const { return ring_spacing_; }
    int ring_count() const { return ring_count_; }
    Point center() const { return center_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const Segment& segment(SegmentId id) const;

    /// Smallest-id segment whose closed rectangle contains p. Throws OutOfField.
    SegmentId segment_of(const Point& p) const;

    /// Corners of the k-th concentric square (half-width k*d). Throws ConfigError.
    SquareCorners square_corners(int k) const;

    /// Segment of ring `ring` at position `side`; ring must be >= 2.
    SegmentId segment_at(int ring, Side side) const;

private:
    double grid(int j) const;  // coordinate of grid line j in [0, 2n]

    double field_side_;
    double ring_spacing_;
    int ring_count_;
    Point center_;
    std::vector<Segment> segments_;
};

}  // namespace ddrsim
