#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace shrinkcert {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Union of {z = h} and {z = -h} over r_inner <= r <= r_outer.
struct DoubledAnnulus {
    double r_inner = 0.0;
    double r_outer = kInfinity;
    double h = 0.0;
};

// {r = R, |z| <= h}
struct Cylinder {
    double R = 1.0;
    double h = kInfinity;
};

struct Sphere {
    double R = 2.0;
};

// z = +-(sqrt(R^2 - r^2) + h)
struct SphericalCaps {
    double R = 1.0;
    double h = 0.0;
};

// Ray from (r_inner, h) rising at angle phi above the horizontal, truncated at
// radius r_outer, plus its mirror image.
struct DoubledCone {
    double r_inner = 0.0;
    double r_outer = kInfinity;
    double h = 0.0;
    double phi = 0.0;
};

// r^2/a^2 + z^2/b^2 = 1, b in [0, a]
struct Ellipsoid {
    double a = 1.0;
    double b = 1.0;
};

// z = b sqrt(1 - r^2/a^2) while that exceeds h, then z = h out to infinity.
// sheets = 2 adds the mirror image.
struct CappedGraph {
    double h = 0.0;
    double a = 3.0;
    double b = 3.0;
    int sheets = 1;
};

// Straight tubes of radius eps around `count` horizontal rays from the origin,
// covering rho_in <= rho <= rho_out along each ray.
struct RayTubes {
    int count = 1;
    double eps = 1e-3;
    double rho_in = 0.0;
    double rho_out = kInfinity;
};

// Tubes of radius delta around `count` vertical segments |z| <= half_height
// standing on the circle of radius ring_radius.
struct VerticalTubes {
    int count = 1;
    double delta = 1e-3;
    double ring_radius = 1.0;
    double half_height = 1.0;
};

// Caps S(R, Omega) plus the doubled arc of radius Omega - h about (R, h),
// swept from the vertical at t = 0 down to the angle (1 - t) pi / 2.
struct SweptEnds {
    double R = 1.0;
    double Omega = 10.0;
    double h = 0.0;
    double t = 0.0;
};

using Piece = std::variant<DoubledAnnulus, Cylinder, Sphere, SphericalCaps, DoubledCone, Ellipsoid, CappedGraph,
                           RayTubes, VerticalTubes, SweptEnds>;

std::string piece_type(const Piece& piece);
void validate(const Piece& piece);

struct SurfaceTerm {
    Piece piece;
    int multiplicity = 1;
    std::string role;
};

// Area removed when tubes are glued in; itemized and never subtracted from
// the certified upper bound.
struct Deduction {
    std::string label;
    double area = 0.0;
};

struct CompositeSurface {
    std::vector<SurfaceTerm> pieces;
    std::string label;
    std::vector<Deduction> deductions;
};

void validate(const CompositeSurface& surface);

enum class AxisFrame {
    vertical,        // rotation about a vertical axis at distance axis_offset from the z-axis
    horizontal_ray,  // rotation about a horizontal ray through the origin
};

enum class CurveKind { line, ellipse_arc };

// line: (r0, z0) + u (dr, dz), 0 <= u <= length
// ellipse_arc: (r0 + ar cos u, z0 + bz sin u), theta0 <= u <= theta1
struct ProfileSegment {
    CurveKind curve = CurveKind::line;
    double r0 = 0.0, z0 = 0.0;
    double dr = 1.0, dz = 0.0, length = 0.0;
    double ar = 0.0, bz = 0.0, theta0 = 0.0, theta1 = 0.0;
    bool mirror = false;
    int multiplicity = 1;
    AxisFrame frame = AxisFrame::vertical;
    double axis_offset = 0.0;
    // Gaussian-area bound for whatever was cut off an infinite segment.
    double tail_bound = 0.0;

    double u_begin() const { return curve == CurveKind::line ? 0.0 : theta0; }
    double u_end() const { return curve == CurveKind::line ? length : theta1; }
    void point(double u, double& r, double& z) const;
    double speed(double u) const;
};

struct RadialProfile {
    std::vector<ProfileSegment> segments;
    std::string label;

    double z_min() const;
    double z_max() const;
};

struct TruncationRule {
    double threshold = 1e-18;
    double tau = 1.0;
    double center_norm = 0.0;
};

RadialProfile lower_to_profile(const Piece& piece, const TruncationRule& rule = {});

// Keeps the z >= 0 sheet of every mirrored segment.
RadialProfile upper_sheet(const RadialProfile& profile);
RadialProfile translate_vertical(const RadialProfile& profile, double shift);

nlohmann::json to_json(const Piece& piece);
Piece piece_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CompositeSurface& surface);
CompositeSurface surface_from_json(const nlohmann::json& j);

}  // namespace shrinkcert
