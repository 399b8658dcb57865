#pragma once

#include <complex>
#include <utility>
#include <variant>
#include <vector>

namespace pvkit::path {

using Complex = std::complex<double>;

/// Circular arc center + radius*e^{it}, traversed from theta_start to
/// theta_end. theta_end < theta_start encodes clockwise traversal.
struct ArcPath {
    Complex center;
    double radius;
    double theta_start;
    double theta_end;

    ArcPath(Complex center, double radius, double theta_start, double theta_end);

    Complex point(double t) const;
    Complex derivative(double t) const; // i * radius * e^{it}
    Complex start() const { return point(theta_start); }
    Complex end() const { return point(theta_end); }
};

/// Straight segment start + t*(end - start), t in [0, 1].
struct SegmentPath {
    Complex start;
    Complex end;

    SegmentPath(Complex start, Complex end);

    Complex point(double t) const { return start + t * (end - start); }
    Complex derivative(double) const { return end - start; }
};

using PathPiece = std::variant<ArcPath, SegmentPath>;

Complex start_point(const PathPiece& piece);
Complex end_point(const PathPiece& piece);

/// Signed parameter interval (begin, end) of a piece; arcs use their angle
/// range, segments [0, 1].
std::pair<double, double> parameter_interval(const PathPiece& piece);

/// (gamma(t), gamma'(t)). Throws std::invalid_argument if t lies outside
/// the piece's parameter domain.
std::pair<Complex, Complex> point_and_derivative(const PathPiece& piece, double t);

ArcPath reverse(const ArcPath& arc);
SegmentPath reverse(const SegmentPath& seg);
PathPiece reverse(const PathPiece& piece);

/// Ordered chain of arcs and segments. Consecutive endpoints must
/// coincide within kChainTol.
class CompositePath {
public:
    static constexpr double kChainTol = 1e-12;

    explicit CompositePath(std::vector<PathPiece> pieces);

    const std::vector<PathPiece>& pieces() const noexcept { return pieces_; }
    Complex start() const { return start_point(pieces_.front()); }
    Complex end() const { return end_point(pieces_.back()); }
    bool is_closed() const;

private:
    std::vector<PathPiece> pieces_;
};

CompositePath reverse(const CompositePath& path);

using ParametricPath = std::variant<ArcPath, SegmentPath, CompositePath>;

bool is_closed(const ParametricPath& path);
ParametricPath reverse(const ParametricPath& path);

/// Closed excursion contour in the upper half plane around a real point w:
/// counterclockwise outer semicircle of radius R, the real-axis pieces
/// [w-R, w-r] and [w+r, w+R], and a clockwise inner semicircle of radius r
/// that excludes w. Requires 0 < r < R.
CompositePath upper_indented_contour(double w, double r, double R);

/// Lower-half-plane mirror: clockwise outer semicircle, inner arc dipping
/// below the axis from w-r to w+r.
CompositePath lower_indented_contour(double w, double r, double R);

/// Full counterclockwise circle, theta 0..2*pi.
ArcPath full_circle(Complex center, double radius);

} // namespace pvkit::path
