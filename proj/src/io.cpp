#include "jdet/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jdet {

namespace {

constexpr double kDegToRad = 0.017453292519943295;

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_inf_literal(const std::string& field) {
    std::string lower = field;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower == "inf" || lower == "+inf" || lower == "infinity";
}

double parse_number(const std::string& field, const std::string& path, int line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": expected a number, got '" + field + "'");
    }
    return value;
}

[[noreturn]] void parse_fail(const std::string& path, int line_no, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::optional<ScanFormat> parse_scan_format(const std::string& text) {
    if (text == "xy-csv") return ScanFormat::XyCsv;
    if (text == "polar-csv") return ScanFormat::PolarCsv;
    return std::nullopt;
}

PointCloud load_cloud(const std::string& path, ScanFormat format, double max_range) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scan file: " + path);

    std::vector<Point2> points;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        const auto comma = body.find(',');
        if (comma == std::string::npos) {
            parse_fail(path, line_no, "expected two comma-separated values");
        }
        const std::string first = trimmed(body.substr(0, comma));
        const std::string second = trimmed(body.substr(comma + 1));
        if (second.find(',') != std::string::npos) {
            parse_fail(path, line_no, "expected exactly two comma-separated values");
        }

        if (format == ScanFormat::XyCsv) {
            const double x = parse_number(first, path, line_no);
            const double y = parse_number(second, path, line_no);
            if (!std::isfinite(x) || !std::isfinite(y)) {
                parse_fail(path, line_no, "non-finite coordinate");
            }
            points.push_back({x, y});
        } else {
            const double angle_deg = parse_number(first, path, line_no);
            if (!std::isfinite(angle_deg)) parse_fail(path, line_no, "non-finite angle");
            if (is_inf_literal(second)) continue;  // no-return beam
            const double range = parse_number(second, path, line_no);
            if (std::isnan(range)) parse_fail(path, line_no, "non-finite range");
            if (range < 0.0) parse_fail(path, line_no, "negative range");
            if (range >= max_range) continue;  // no-return beam
            const double angle = angle_deg * kDegToRad;
            points.push_back({range * std::cos(angle), range * std::sin(angle)});
        }
    }
    if (points.empty()) {
        throw std::runtime_error(path + ": no scan points (empty file or all no-returns)");
    }
    return PointCloud(std::move(points));
}

void save_cloud_xy(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scan file: " + path);
    char buf[96];
    for (const Point2& p : cloud.points()) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.y);
        out << buf;
    }
    if (!out.flush()) throw std::runtime_error("failed writing scan file: " + path);
}

namespace {

// %.17g: enough digits for an exact double round-trip.
std::string json_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_report(const JunctionReport& report, const DetectorParams& params,
                  const std::string& path) {
    // Hand-emitted so the key order and number formatting are pinned; the
    // test suite re-parses reports with an independent JSON parser.
    std::ostringstream doc;
    doc << "{\n";
    doc << "  \"num_junctions\": " << report.num_junctions << ",\n";
    doc << "  \"labels\": [";
    for (std::size_t i = 0; i < report.labels.size(); ++i) {
        doc << (i ? ", " : "") << report.labels[i];
    }
    doc << "],\n";
    doc << "  \"eigenvalues_head\": [";
    for (std::size_t i = 0; i < report.eigenvalues_head.size(); ++i) {
        doc << (i ? ", " : "") << json_number(report.eigenvalues_head[i]);
    }
    doc << "],\n";
    doc << "  \"objective\": " << json_number(report.objective) << ",\n";
    doc << "  \"runtime_seconds\": " << json_number(report.runtime) << ",\n";
    doc << "  \"params\": {\n";
    doc << "    \"sigma\": " << json_number(params.sigma) << ",\n";
    doc << "    \"similarity_floor\": " << json_number(params.similarity_floor) << ",\n";
    doc << "    \"zero_eig_tol\": " << json_number(params.zero_eig_tol) << ",\n";
    doc << "    \"kmeans_max_iter\": " << params.kmeans_max_iter << ",\n";
    doc << "    \"kmeans_restarts\": " << params.kmeans_restarts << ",\n";
    doc << "    \"rng_seed\": " << params.rng_seed << "\n";
    doc << "  }\n";
    doc << "}\n";

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << doc.str();
    if (!out.flush()) throw std::runtime_error("failed writing report file: " + path);
}

namespace {

const char* const kPalette[] = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#9a6324", "#800000", "#008080",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
constexpr double kPixelsPerMeter = 40.0;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

void render_svg(const PointCloud& cloud, const std::vector<int>& labels,
                const std::string& path) {
    if (labels.size() != cloud.size()) {
        throw std::invalid_argument("label count does not match cloud size");
    }
    int k = 1;
    for (int label : labels) {
        if (label < 0) throw std::invalid_argument("negative cluster label");
        k = std::max(k, label + 1);
    }

    // Fit the view around the points and the sensor origin, 1 m margin.
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    for (const Point2& p : cloud.points()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    min_x -= 1.0;
    max_x += 1.0;
    min_y -= 1.0;
    max_y += 1.0;

    const double width = (max_x - min_x) * kPixelsPerMeter;
    const double height = (max_y - min_y) * kPixelsPerMeter;
    const auto to_px_x = [&](double x) { return (x - min_x) * kPixelsPerMeter; };
    const auto to_px_y = [&](double y) { return (max_y - y) * kPixelsPerMeter; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // 1 m grid
    svg << "<g stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (double gx = std::ceil(min_x); gx <= std::floor(max_x); gx += 1.0) {
        svg << "<line x1=\"" << fmt(to_px_x(gx)) << "\" y1=\"0\" x2=\"" << fmt(to_px_x(gx))
            << "\" y2=\"" << fmt(height) << "\"/>\n";
    }
    for (double gy = std::ceil(min_y); gy <= std::floor(max_y); gy += 1.0) {
        svg << "<line x1=\"0\" y1=\"" << fmt(to_px_y(gy)) << "\" x2=\"" << fmt(width)
            << "\" y2=\"" << fmt(to_px_y(gy)) << "\"/>\n";
    }
    svg << "</g>\n";

    // sensor origin
    const double ox = to_px_x(0.0);
    const double oy = to_px_y(0.0);
    const double cross = 0.4 * kPixelsPerMeter;
    svg << "<g stroke=\"#333333\" stroke-width=\"2\">\n";
    svg << "<line x1=\"" << fmt(ox - cross) << "\" y1=\"" << fmt(oy) << "\" x2=\""
        << fmt(ox + cross) << "\" y2=\"" << fmt(oy) << "\"/>\n";
    svg << "<line x1=\"" << fmt(ox) << "\" y1=\"" << fmt(oy - cross) << "\" x2=\"" << fmt(ox)
        << "\" y2=\"" << fmt(oy + cross) << "\"/>\n";
    svg << "</g>\n";

    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Point2& p = cloud[i];
        svg << "<circle cx=\"" << fmt(to_px_x(p.x)) << "\" cy=\"" << fmt(to_px_y(p.y))
            << "\" r=\"3\" fill=\""
            << kPalette[static_cast<std::size_t>(labels[i]) % kPaletteSize] << "\"/>\n";
    }

    svg << "<text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#111111\">"
        << k << " junctions</text>\n";
    svg << "</svg>\n";

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write svg file: " + path);
    out << svg.str();
    if (!out.flush()) throw std::runtime_error("failed writing svg file: " + path);
}

}  // namespace jdet
