#include "jdet/scan_sim.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "jdet/rng.hpp"

namespace jdet {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

Point2 unit_from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

std::optional<double> ray_segment_intersect(const Point2& origin, const Point2& direction,
                                            const Segment& seg) {
    const Point2 span = seg.b - seg.a;
    const double denom = direction.cross(span);
    if (std::abs(denom) < 1e-15) {
        return std::nullopt;  // parallel or collinear
    }
    const Point2 offset = seg.a - origin;
    const double t = offset.cross(span) / denom;   // distance along the ray
    const double u = offset.cross(direction) / denom;  // position along the segment
    if (t < 0.0 || u < 0.0 || u > 1.0) {
        return std::nullopt;
    }
    return t;
}

PointCloud cast_scan(const Environment& env, const LidarConfig& cfg, std::uint64_t rng_seed) {
    if (cfg.num_beams < 1) throw std::invalid_argument("num_beams must be at least 1");
    if (!(cfg.max_range > 0.0)) throw std::invalid_argument("max_range must be positive");
    if (cfg.noise_stddev < 0.0) throw std::invalid_argument("noise_stddev must be non-negative");
    if (env.walls.empty()) throw std::invalid_argument("environment has no walls");

    Rng rng(rng_seed);
    std::vector<Point2> points;
    points.reserve(static_cast<std::size_t>(cfg.num_beams));

    const double step = kTwoPi / cfg.num_beams;
    for (int i = 0; i < cfg.num_beams; ++i) {
        const double body_angle = cfg.angle_start + i * step;
        const Point2 world_dir = unit_from_angle(cfg.sensor_pose.heading + body_angle);

        double nearest = std::numeric_limits<double>::infinity();
        for (const Segment& wall : env.walls) {
            if (auto t = ray_segment_intersect(cfg.sensor_pose.position, world_dir, wall)) {
                nearest = std::min(nearest, *t);
            }
        }
        if (nearest > cfg.max_range) {
            continue;  // no return within range; the beam leaves a gap
        }
        double range = nearest;
        if (cfg.noise_stddev > 0.0) {
            range += cfg.noise_stddev * rng.next_gaussian();
            range = std::max(range, 0.0);
        }
        points.push_back(unit_from_angle(body_angle) * range);
    }
    return PointCloud(std::move(points));
}

namespace {

// Star junction: corridor arms radiating from the origin, each 2*half_width
// wide. The wall between two consecutive arms is the V where the facing wall
// lines meet; for diametrically opposed arms the two lines coincide and the
// wall is a single straight segment. Arms are long enough that their open
// ends lie beyond the default 15 m range, so mouths show up as gaps.
//
// half_width = 2.0 keeps the geometry in the detectable regime at the default
// sigma 1.5 / floor 1e-8 (affinity cutoff ~3.5 m): far-wall samples stay
// within ~2 m of their neighbors while facing walls stay 4 m apart.
constexpr double kHalfWidth = 2.0;
constexpr double kArmLength = 25.0;

Environment star_environment(const std::string& name, std::vector<double> arm_angles) {
    std::sort(arm_angles.begin(), arm_angles.end());
    Environment env;
    env.name = name;
    const std::size_t m = arm_angles.size();
    for (std::size_t j = 0; j < m; ++j) {
        const double phi_a = arm_angles[j];
        const double phi_b = arm_angles[(j + 1) % m] + (j + 1 == m ? kTwoPi : 0.0);
        const Point2 u_a = unit_from_angle(phi_a);
        const Point2 u_b = unit_from_angle(phi_b);
        const Point2 n_a{-u_a.y, u_a.x};
        const Point2 n_b{-u_b.y, u_b.x};
        const Point2 far_a = u_a * kArmLength + n_a * kHalfWidth;   // ccw wall of arm a
        const Point2 far_b = u_b * kArmLength - n_b * kHalfWidth;   // cw wall of arm b

        const double gap = phi_b - phi_a;
        if (std::abs(gap - kTwoPi / 2.0) < 1e-9) {
            env.walls.push_back({far_a, far_b});  // opposed arms share one straight wall
        } else {
            const Point2 corner =
                unit_from_angle((phi_a + phi_b) / 2.0) * (kHalfWidth / std::sin(gap / 2.0));
            env.walls.push_back({far_a, corner});
            env.walls.push_back({corner, far_b});
        }
    }
    return env;
}

Environment dead_end_environment() {
    // Corridor along +x, closed 6 m behind the sensor, open past max range
    // ahead. The cap joins both side walls into one connected wall chain.
    Environment env;
    env.name = "dead-end";
    const double cap_x = -6.0;
    env.walls.push_back({{cap_x, -kHalfWidth}, {kArmLength, -kHalfWidth}});
    env.walls.push_back({{cap_x, kHalfWidth}, {kArmLength, kHalfWidth}});
    env.walls.push_back({{cap_x, -kHalfWidth}, {cap_x, kHalfWidth}});
    return env;
}

constexpr double deg(double d) { return d * kTwoPi / 360.0; }

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"straight", "L",        "T",
                                                   "X",        "five-way", "dead-end"};
    return names;
}

Scenario builtin_scenario(const std::string& name) {
    if (name == "straight") {
        return {star_environment(name, {deg(0), deg(180)}), 2};
    }
    if (name == "L") {
        return {star_environment(name, {deg(0), deg(90)}), 2};
    }
    if (name == "T") {
        return {star_environment(name, {deg(0), deg(90), deg(180)}), 3};
    }
    if (name == "X") {
        return {star_environment(name, {deg(0), deg(90), deg(180), deg(270)}), 4};
    }
    if (name == "five-way") {
        return {star_environment(name, {deg(0), deg(72), deg(144), deg(216), deg(288)}), 5};
    }
    if (name == "dead-end") {
        return {dead_end_environment(), 1};
    }
    throw std::invalid_argument("unknown scenario '" + name +
                                "' (known: straight, L, T, X, five-way, dead-end)");
}

Environment read_environment(std::istream& in, const std::string& name) {
    Environment env;
    env.name = name;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        double x1, y1, x2, y2;
        if (!(fields >> tag >> x1 >> y1 >> x2 >> y2) || tag != "wall") {
            throw std::runtime_error("environment line " + std::to_string(line_no) +
                                     ": expected 'wall x1 y1 x2 y2'");
        }
        if (x1 == x2 && y1 == y2) {
            throw std::runtime_error("environment line " + std::to_string(line_no) +
                                     ": zero-length wall");
        }
        env.walls.push_back({{x1, y1}, {x2, y2}});
    }
    if (env.walls.empty()) {
        throw std::runtime_error("environment has no walls");
    }
    return env;
}

void write_environment(const Environment& env, std::ostream& out) {
    if (!env.name.empty()) out << "# " << env.name << "\n";
    char buf[160];
    for (const Segment& wall : env.walls) {
        std::snprintf(buf, sizeof(buf), "wall %.17g %.17g %.17g %.17g\n", wall.a.x, wall.a.y,
                      wall.b.x, wall.b.y);
        out << buf;
    }
}

}  // namespace jdet
