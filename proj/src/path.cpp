#include "pvkit/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pvkit::path {

namespace {

constexpr Complex kImagUnit{0.0, 1.0};

void check_in_domain(double t, double a, double b) {
    double lo = std::min(a, b), hi = std::max(a, b);
    // A whisker of slack for endpoints reconstructed in floating point.
    double slack = 1e-12 * std::max(1.0, hi - lo);
    if (t < lo - slack || t > hi + slack)
        throw std::invalid_argument("parameter t outside path domain");
}

} // namespace

ArcPath::ArcPath(Complex center_, double radius_, double theta_start_, double theta_end_)
    : center(center_), radius(radius_), theta_start(theta_start_), theta_end(theta_end_) {
    if (!(radius > 0.0)) throw std::invalid_argument("arc radius must be positive");
    if (theta_start == theta_end) throw std::invalid_argument("arc must span a nonzero angle");
}

Complex ArcPath::point(double t) const { return center + radius * std::exp(kImagUnit * t); }

Complex ArcPath::derivative(double t) const {
    return kImagUnit * radius * std::exp(kImagUnit * t);
}

SegmentPath::SegmentPath(Complex start_, Complex end_) : start(start_), end(end_) {
    if (start == end) throw std::invalid_argument("segment endpoints must differ");
}

Complex start_point(const PathPiece& piece) {
    return std::visit([](const auto& p) -> Complex {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ArcPath>)
            return p.start();
        else
            return p.start;
    }, piece);
}

Complex end_point(const PathPiece& piece) {
    return std::visit([](const auto& p) -> Complex {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ArcPath>)
            return p.end();
        else
            return p.end;
    }, piece);
}

std::pair<double, double> parameter_interval(const PathPiece& piece) {
    if (const auto* arc = std::get_if<ArcPath>(&piece))
        return {arc->theta_start, arc->theta_end};
    return {0.0, 1.0};
}

std::pair<Complex, Complex> point_and_derivative(const PathPiece& piece, double t) {
    auto [a, b] = parameter_interval(piece);
    check_in_domain(t, a, b);
    return std::visit([t](const auto& p) {
        return std::pair<Complex, Complex>{p.point(t), p.derivative(t)};
    }, piece);
}

ArcPath reverse(const ArcPath& arc) {
    return ArcPath(arc.center, arc.radius, arc.theta_end, arc.theta_start);
}

SegmentPath reverse(const SegmentPath& seg) { return SegmentPath(seg.end, seg.start); }

PathPiece reverse(const PathPiece& piece) {
    return std::visit([](const auto& p) -> PathPiece { return reverse(p); }, piece);
}

CompositePath::CompositePath(std::vector<PathPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("composite path needs at least one piece");
    for (size_t k = 0; k + 1 < pieces_.size(); ++k) {
        if (std::abs(end_point(pieces_[k]) - start_point(pieces_[k + 1])) > kChainTol)
            throw std::invalid_argument("composite path pieces do not chain (gap at piece " +
                                        std::to_string(k + 1) + ")");
    }
}

bool CompositePath::is_closed() const { return std::abs(end() - start()) <= kChainTol; }

CompositePath reverse(const CompositePath& path) {
    std::vector<PathPiece> rev;
    rev.reserve(path.pieces().size());
    for (auto it = path.pieces().rbegin(); it != path.pieces().rend(); ++it)
        rev.push_back(reverse(*it));
    return CompositePath(std::move(rev));
}

bool is_closed(const ParametricPath& path) {
    return std::visit([](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CompositePath>)
            return p.is_closed();
        else if constexpr (std::is_same_v<T, ArcPath>)
            return std::abs(p.end() - p.start()) <= CompositePath::kChainTol;
        else
            return false;
    }, path);
}

ParametricPath reverse(const ParametricPath& path) {
    return std::visit([](const auto& p) -> ParametricPath { return reverse(p); }, path);
}

CompositePath upper_indented_contour(double w, double r, double R) {
    if (!(0.0 < r && r < R)) throw std::invalid_argument("contour requires 0 < r < R");
    Complex c{w, 0.0};
    std::vector<PathPiece> pieces;
    pieces.emplace_back(ArcPath(c, R, 0.0, M_PI));                        // outer, counterclockwise
    pieces.emplace_back(SegmentPath(Complex(w - R, 0.0), Complex(w - r, 0.0)));
    pieces.emplace_back(ArcPath(c, r, M_PI, 0.0));                        // inner, clockwise over w
    pieces.emplace_back(SegmentPath(Complex(w + r, 0.0), Complex(w + R, 0.0)));
    return CompositePath(std::move(pieces));
}

CompositePath lower_indented_contour(double w, double r, double R) {
    if (!(0.0 < r && r < R)) throw std::invalid_argument("contour requires 0 < r < R");
    Complex c{w, 0.0};
    std::vector<PathPiece> pieces;
    pieces.emplace_back(ArcPath(c, R, 0.0, -M_PI));                       // outer, clockwise
    pieces.emplace_back(SegmentPath(Complex(w - R, 0.0), Complex(w - r, 0.0)));
    pieces.emplace_back(ArcPath(c, r, M_PI, 2.0 * M_PI));                 // inner, dips below w
    pieces.emplace_back(SegmentPath(Complex(w + r, 0.0), Complex(w + R, 0.0)));
    return CompositePath(std::move(pieces));
}

ArcPath full_circle(Complex center, double radius) {
    return ArcPath(center, radius, 0.0, 2.0 * M_PI);
}

} // namespace pvkit::path
