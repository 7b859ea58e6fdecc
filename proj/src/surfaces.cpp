#include "shrinkcert/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shrinkcert/special_functions.hpp"

namespace shrinkcert {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

bool finite_or_inf(double x) { return !std::isnan(x); }

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ProfileSegment make_line(double r0, double z0, double dr, double dz, double length, bool mirror) {
    ProfileSegment s;
    s.curve = CurveKind::line;
    s.r0 = r0;
    s.z0 = z0;
    s.dr = dr;
    s.dz = dz;
    s.length = length;
    s.mirror = mirror;
    return s;
}

ProfileSegment make_arc(double cr, double cz, double ar, double bz, double t0, double t1, bool mirror) {
    ProfileSegment s;
    s.curve = CurveKind::ellipse_arc;
    s.r0 = cr;
    s.z0 = cz;
    s.ar = ar;
    s.bz = bz;
    s.theta0 = t0;
    s.theta1 = t1;
    s.mirror = mirror;
    return s;
}

// Truncate an infinite line so that every dropped point sits at distance at
// least D = 2 sqrt(tau ln(1/threshold)) beyond the center, and bound the tail.
void truncate_line(ProfileSegment& s, const TruncationRule& rule) {
    if (std::isfinite(s.length)) return;
    const double p0 = std::hypot(s.r0, s.z0);
    const double d = 2.0 * std::sqrt(rule.tau * std::log(1.0 / rule.threshold));
    const double c0 = p0 + rule.center_norm;
    s.length = c0 + d;
    const double per_copy = std::exp(-d * d / (4.0 * rule.tau)) +
                            (c0 + p0) / (2.0 * rule.tau) * std::sqrt(std::numbers::pi * rule.tau) *
                                erfc(d / (2.0 * std::sqrt(rule.tau))).value;
    s.tail_bound = per_copy * s.multiplicity * (s.mirror ? 2.0 : 1.0);
}

double arc_z_max(const ProfileSegment& s) {
    double zmax = std::max(s.z0 + s.bz * std::sin(s.theta0), s.z0 + s.bz * std::sin(s.theta1));
    for (double crit : {kHalfPi, -kHalfPi, 3.0 * kHalfPi}) {
        if (crit >= s.theta0 && crit <= s.theta1) zmax = std::max(zmax, s.z0 + s.bz * std::sin(crit));
    }
    return zmax;
}

double arc_z_min(const ProfileSegment& s) {
    double zmin = std::min(s.z0 + s.bz * std::sin(s.theta0), s.z0 + s.bz * std::sin(s.theta1));
    for (double crit : {kHalfPi, -kHalfPi, 3.0 * kHalfPi}) {
        if (crit >= s.theta0 && crit <= s.theta1) zmin = std::min(zmin, s.z0 + s.bz * std::sin(crit));
    }
    return zmin;
}

double seg_z_max(const ProfileSegment& s) {
    if (s.curve == CurveKind::line) {
        if (!std::isfinite(s.length)) return s.dz > 0 ? kInfinity : s.z0;
        return std::max(s.z0, s.z0 + s.dz * s.length);
    }
    return arc_z_max(s);
}

double seg_z_min(const ProfileSegment& s) {
    if (s.curve == CurveKind::line) {
        if (!std::isfinite(s.length)) return s.dz < 0 ? -kInfinity : s.z0;
        return std::min(s.z0, s.z0 + s.dz * s.length);
    }
    return arc_z_min(s);
}

double num(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing field ") + key);
    const auto& v = j.at(key);
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return kInfinity;
        throw std::invalid_argument(std::string("field ") + key + " is not numeric");
    }
    return v.get<double>();
}

nlohmann::json enc(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

}  // namespace

void ProfileSegment::point(double u, double& r, double& z) const {
    if (curve == CurveKind::line) {
        r = r0 + u * dr;
        z = z0 + u * dz;
    } else {
        r = r0 + ar * std::cos(u);
        z = z0 + bz * std::sin(u);
    }
}

double ProfileSegment::speed(double u) const {
    if (curve == CurveKind::line) return std::hypot(dr, dz);
    return std::hypot(ar * std::sin(u), bz * std::cos(u));
}

double RadialProfile::z_min() const {
    double z = kInfinity;
    for (const auto& s : segments) z = std::min(z, s.mirror ? -seg_z_max(s) : seg_z_min(s));
    return z;
}

double RadialProfile::z_max() const {
    double z = -kInfinity;
    for (const auto& s : segments) z = std::max(z, s.mirror ? std::max(seg_z_max(s), -seg_z_min(s)) : seg_z_max(s));
    return z;
}

std::string piece_type(const Piece& piece) {
    return std::visit(overloaded{
                          [](const DoubledAnnulus&) { return std::string("doubled_annulus"); },
                          [](const Cylinder&) { return std::string("cylinder"); },
                          [](const Sphere&) { return std::string("sphere"); },
                          [](const SphericalCaps&) { return std::string("spherical_caps"); },
                          [](const DoubledCone&) { return std::string("doubled_cone"); },
                          [](const Ellipsoid&) { return std::string("ellipsoid"); },
                          [](const CappedGraph&) { return std::string("capped_graph"); },
                          [](const RayTubes&) { return std::string("ray_tubes"); },
                          [](const VerticalTubes&) { return std::string("vertical_tubes"); },
                          [](const SweptEnds&) { return std::string("swept_ends"); },
                      },
                      piece);
}

void validate(const Piece& piece) {
    std::visit(overloaded{
                   [](const DoubledAnnulus& p) {
                       require(std::isfinite(p.r_inner) && p.r_inner >= 0.0, "annulus: r_inner must be >= 0");
                       require(finite_or_inf(p.r_outer) && p.r_outer > p.r_inner, "annulus: r_outer must exceed r_inner");
                       require(std::isfinite(p.h) && p.h >= 0.0, "annulus: h must be >= 0");
                   },
                   [](const Cylinder& p) {
                       require(std::isfinite(p.R) && p.R > 0.0, "cylinder: R must be > 0");
                       require(finite_or_inf(p.h) && p.h > 0.0, "cylinder: half height must be > 0");
                   },
                   [](const Sphere& p) { require(std::isfinite(p.R) && p.R > 0.0, "sphere: R must be > 0"); },
                   [](const SphericalCaps& p) {
                       require(std::isfinite(p.R) && p.R > 0.0, "caps: R must be > 0");
                       require(std::isfinite(p.h) && p.h >= 0.0, "caps: offset must be >= 0");
                   },
                   [](const DoubledCone& p) {
                       require(std::isfinite(p.r_inner) && p.r_inner >= 0.0, "cone: r_inner must be >= 0");
                       require(finite_or_inf(p.r_outer) && p.r_outer > p.r_inner, "cone: r_outer must exceed r_inner");
                       require(std::isfinite(p.h) && p.h >= 0.0, "cone: h must be >= 0");
                       require(p.phi >= 0.0 && p.phi <= kHalfPi, "cone: phi must lie in [0, pi/2]");
                       require(!(p.phi == kHalfPi && std::isfinite(p.r_outer)),
                               "cone: phi = pi/2 with finite r_outer; use Cylinder");
                   },
                   [](const Ellipsoid& p) {
                       require(std::isfinite(p.a) && p.a > 0.0, "ellipsoid: a must be > 0");
                       require(p.b >= 0.0 && p.b <= p.a, "ellipsoid: b must lie in [0, a]");
                   },
                   [](const CappedGraph& p) {
                       require(std::isfinite(p.h) && p.h >= 0.0, "capped graph: h must be >= 0");
                       require(std::isfinite(p.a) && p.a > 0.0, "capped graph: a must be > 0");
                       require(p.b >= p.h && p.b <= p.a, "capped graph: b must lie in [h, a]");
                       require(p.sheets == 1 || p.sheets == 2, "capped graph: sheets must be 1 or 2");
                   },
                   [](const RayTubes& p) {
                       require(p.count >= 1, "ray tubes: count must be positive");
                       require(std::isfinite(p.eps) && p.eps > 0.0, "ray tubes: eps must be > 0");
                       require(std::isfinite(p.rho_in) && p.rho_in >= 0.0, "ray tubes: rho_in must be >= 0");
                       require(finite_or_inf(p.rho_out) && p.rho_out > p.rho_in, "ray tubes: rho_out must exceed rho_in");
                   },
                   [](const VerticalTubes& p) {
                       require(p.count >= 1, "vertical tubes: count must be positive");
                       require(std::isfinite(p.delta) && p.delta > 0.0, "vertical tubes: delta must be > 0");
                       require(std::isfinite(p.ring_radius) && p.ring_radius > 0.0, "vertical tubes: ring radius must be > 0");
                       require(std::isfinite(p.half_height) && p.half_height > 0.0, "vertical tubes: half height must be > 0");
                   },
                   [](const SweptEnds& p) {
                       require(std::isfinite(p.R) && p.R > 0.0, "ends: R must be > 0");
                       require(std::isfinite(p.h) && p.h >= 0.0, "ends: h must be >= 0");
                       require(std::isfinite(p.Omega) && p.Omega > p.h, "ends: Omega must exceed h");
                       require(p.t >= 0.0 && p.t <= 1.0, "ends: t must lie in [0, 1]");
                   },
               },
               piece);
}

void validate(const CompositeSurface& surface) {
    if (surface.pieces.empty()) throw std::invalid_argument("composite surface has no pieces");
    for (const auto& term : surface.pieces) {
        require(term.multiplicity == 1 || term.multiplicity == 2, "piece multiplicity must be 1 or 2");
        validate(term.piece);
    }
}

RadialProfile lower_to_profile(const Piece& piece, const TruncationRule& rule) {
    validate(piece);
    if (!(rule.threshold > 0.0 && rule.threshold < 1.0) || !(rule.tau > 0.0) || !(rule.center_norm >= 0.0))
        throw std::invalid_argument("invalid truncation rule");
    RadialProfile out;
    out.label = piece_type(piece);
    std::visit(overloaded{
                   [&](const DoubledAnnulus& p) {
                       out.segments.push_back(make_line(p.r_inner, p.h, 1.0, 0.0, p.r_outer - p.r_inner, true));
                   },
                   [&](const Cylinder& p) { out.segments.push_back(make_line(p.R, 0.0, 0.0, 1.0, p.h, true)); },
                   [&](const Sphere& p) { out.segments.push_back(make_arc(0.0, 0.0, p.R, p.R, 0.0, kHalfPi, true)); },
                   [&](const SphericalCaps& p) {
                       out.segments.push_back(make_arc(0.0, p.h, p.R, p.R, 0.0, kHalfPi, true));
                   },
                   [&](const DoubledCone& p) {
                       const double c = std::cos(p.phi);
                       const double s = std::sin(p.phi);
                       const double len = std::isfinite(p.r_outer) ? (p.r_outer - p.r_inner) / c : kInfinity;
                       out.segments.push_back(make_line(p.r_inner, p.h, c, s, len, true));
                   },
                   [&](const Ellipsoid& p) { out.segments.push_back(make_arc(0.0, 0.0, p.a, p.b, 0.0, kHalfPi, true)); },
                   [&](const CappedGraph& p) {
                       const bool mirror = p.sheets == 2;
                       const double th = (p.b > p.h) ? std::asin(p.h / p.b) : kHalfPi;
                       if (th < kHalfPi) out.segments.push_back(make_arc(0.0, 0.0, p.a, p.b, th, kHalfPi, mirror));
                       const double rj = (p.b > p.h) ? p.a * std::cos(th) : 0.0;
                       out.segments.push_back(make_line(rj, p.h, 1.0, 0.0, kInfinity, mirror));
                   },
                   [&](const RayTubes& p) {
                       ProfileSegment s = make_line(p.eps, p.rho_in, 0.0, 1.0, p.rho_out - p.rho_in, false);
                       s.frame = AxisFrame::horizontal_ray;
                       s.multiplicity = p.count;
                       out.segments.push_back(s);
                   },
                   [&](const VerticalTubes& p) {
                       ProfileSegment s = make_line(p.delta, 0.0, 0.0, 1.0, p.half_height, true);
                       s.axis_offset = p.ring_radius;
                       s.multiplicity = p.count;
                       out.segments.push_back(s);
                   },
                   [&](const SweptEnds& p) {
                       out.segments.push_back(make_arc(0.0, p.Omega, p.R, p.R, 0.0, kHalfPi, true));
                       if (p.t > 0.0) {
                           const double L = p.Omega - p.h;
                           out.segments.push_back(make_arc(p.R, p.h, L, L, (1.0 - p.t) * kHalfPi, kHalfPi, true));
                       }
                   },
               },
               piece);
    for (auto& s : out.segments)
        if (s.curve == CurveKind::line) truncate_line(s, rule);
    return out;
}

RadialProfile upper_sheet(const RadialProfile& profile) {
    RadialProfile out = profile;
    for (auto& s : out.segments) {
        if (s.mirror) {
            s.mirror = false;
            s.tail_bound *= 0.5;
        }
    }
    return out;
}

RadialProfile translate_vertical(const RadialProfile& profile, double shift) {
    RadialProfile out;
    out.label = profile.label;
    for (const auto& s : profile.segments) {
        if (s.frame != AxisFrame::vertical || s.axis_offset != 0.0)
            throw std::invalid_argument("vertical translation needs segments about the z-axis");
        ProfileSegment a = s;
        a.mirror = false;
        if (s.mirror) {
            a.tail_bound *= 0.5;
            ProfileSegment b = a;
            b.z0 = -b.z0;
            if (b.curve == CurveKind::line)
                b.dz = -b.dz;
            else
                b.bz = -b.bz;
            b.z0 += shift;
            out.segments.push_back(b);
        }
        a.z0 += shift;
        out.segments.push_back(a);
    }
    return out;
}

nlohmann::json to_json(const Piece& piece) {
    nlohmann::json j;
    j["type"] = piece_type(piece);
    std::visit(overloaded{
                   [&](const DoubledAnnulus& p) {
                       j["r_inner"] = enc(p.r_inner);
                       j["r_outer"] = enc(p.r_outer);
                       j["h"] = enc(p.h);
                   },
                   [&](const Cylinder& p) {
                       j["R"] = enc(p.R);
                       j["h"] = enc(p.h);
                   },
                   [&](const Sphere& p) { j["R"] = enc(p.R); },
                   [&](const SphericalCaps& p) {
                       j["R"] = enc(p.R);
                       j["h"] = enc(p.h);
                   },
                   [&](const DoubledCone& p) {
                       j["r_inner"] = enc(p.r_inner);
                       j["r_outer"] = enc(p.r_outer);
                       j["h"] = enc(p.h);
                       j["phi"] = enc(p.phi);
                   },
                   [&](const Ellipsoid& p) {
                       j["a"] = enc(p.a);
                       j["b"] = enc(p.b);
                   },
                   [&](const CappedGraph& p) {
                       j["h"] = enc(p.h);
                       j["a"] = enc(p.a);
                       j["b"] = enc(p.b);
                       j["sheets"] = p.sheets;
                   },
                   [&](const RayTubes& p) {
                       j["count"] = p.count;
                       j["eps"] = enc(p.eps);
                       j["rho_in"] = enc(p.rho_in);
                       j["rho_out"] = enc(p.rho_out);
                   },
                   [&](const VerticalTubes& p) {
                       j["count"] = p.count;
                       j["delta"] = enc(p.delta);
                       j["ring_radius"] = enc(p.ring_radius);
                       j["half_height"] = enc(p.half_height);
                   },
                   [&](const SweptEnds& p) {
                       j["R"] = enc(p.R);
                       j["Omega"] = enc(p.Omega);
                       j["h"] = enc(p.h);
                       j["t"] = enc(p.t);
                   },
               },
               piece);
    return j;
}

Piece piece_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type")) throw std::invalid_argument("piece JSON needs a type field");
    const std::string type = j.at("type").get<std::string>();
    Piece p;
    if (type == "doubled_annulus") {
        p = DoubledAnnulus{num(j, "r_inner"), num(j, "r_outer"), num(j, "h")};
    } else if (type == "cylinder") {
        p = Cylinder{num(j, "R"), num(j, "h")};
    } else if (type == "sphere") {
        p = Sphere{num(j, "R")};
    } else if (type == "spherical_caps") {
        p = SphericalCaps{num(j, "R"), num(j, "h")};
    } else if (type == "doubled_cone") {
        p = DoubledCone{num(j, "r_inner"), num(j, "r_outer"), num(j, "h"), num(j, "phi")};
    } else if (type == "ellipsoid") {
        p = Ellipsoid{num(j, "a"), num(j, "b")};
    } else if (type == "capped_graph") {
        p = CappedGraph{num(j, "h"), num(j, "a"), num(j, "b"), j.value("sheets", 1)};
    } else if (type == "ray_tubes") {
        p = RayTubes{j.at("count").get<int>(), num(j, "eps"), num(j, "rho_in"), num(j, "rho_out")};
    } else if (type == "vertical_tubes") {
        p = VerticalTubes{j.at("count").get<int>(), num(j, "delta"), num(j, "ring_radius"), num(j, "half_height")};
    } else if (type == "swept_ends") {
        p = SweptEnds{num(j, "R"), num(j, "Omega"), num(j, "h"), num(j, "t")};
    } else {
        throw std::invalid_argument("unknown piece type " + type);
    }
    validate(p);
    return p;
}

nlohmann::json to_json(const CompositeSurface& surface) {
    nlohmann::json j;
    j["label"] = surface.label;
    j["pieces"] = nlohmann::json::array();
    for (const auto& term : surface.pieces) {
        nlohmann::json t = to_json(term.piece);
        t["multiplicity"] = term.multiplicity;
        if (!term.role.empty()) t["role"] = term.role;
        j["pieces"].push_back(t);
    }
    if (!surface.deductions.empty()) {
        j["deductions"] = nlohmann::json::array();
        for (const auto& d : surface.deductions) j["deductions"].push_back({{"label", d.label}, {"area", d.area}});
    }
    return j;
}

CompositeSurface surface_from_json(const nlohmann::json& j) {
    CompositeSurface s;
    if (j.is_object() && j.contains("type")) {
        s.pieces.push_back({piece_from_json(j), j.value("multiplicity", 1), j.value("role", std::string())});
        s.label = s.pieces.front().role.empty() ? piece_type(s.pieces.front().piece) : s.pieces.front().role;
        validate(s);
        return s;
    }
    s.label = j.value("label", std::string());
    for (const auto& p : j.at("pieces")) s.pieces.push_back({piece_from_json(p), p.value("multiplicity", 1), p.value("role", std::string())});
    if (j.contains("deductions"))
        for (const auto& d : j.at("deductions")) s.deductions.push_back({d.at("label").get<std::string>(), d.at("area").get<double>()});
    validate(s);
    return s;
}

}  // namespace shrinkcert
