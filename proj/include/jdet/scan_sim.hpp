#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jdet/geometry.hpp"
#include "jdet/types.hpp"

namespace jdet {

// Wall segment; endpoints must differ.
struct Segment {
    Point2 a;
    Point2 b;
};

// Polyline tunnel geometry in the world frame.
struct Environment {
    std::vector<Segment> walls;
    std::string name;
};

struct Pose2 {
    Point2 position;
    double heading = 0.0;  // radians
};

struct LidarConfig {
    int num_beams = 360;
    double max_range = 15.0;      // meters
    double angle_start = 0.0;     // body-frame angle of beam 0, radians
    double noise_stddev = 0.0;    // radial Gaussian noise, meters
    Pose2 sensor_pose;
};

struct Scenario {
    Environment env;
    int expected_junctions = 0;
};

/// Smallest t >= 0 with origin + t*direction on seg, or nullopt. Rays parallel
/// to the segment (including collinear) report no hit. direction must be unit.
std::optional<double> ray_segment_intersect(const Point2& origin, const Point2& direction,
                                            const Segment& seg);

/// One simulated lidar revolution: num_beams equally spaced rays, nearest hit
/// per ray, returns beyond max_range dropped. Points come out in the sensor
/// body frame. Radial Gaussian noise is applied per kept beam when
/// noise_stddev > 0; the scan is deterministic for a fixed seed.
PointCloud cast_scan(const Environment& env, const LidarConfig& cfg, std::uint64_t rng_seed);

/// Hand-built tunnel geometries with their ground-truth junction count.
/// Names: straight, L, T, X, five-way, dead-end. Throws on unknown names.
Scenario builtin_scenario(const std::string& name);

const std::vector<std::string>& scenario_names();

// Text format: one "wall x1 y1 x2 y2" line per segment, '#' comments.
Environment read_environment(std::istream& in, const std::string& name = "");
void write_environment(const Environment& env, std::ostream& out);

}  // namespace jdet
