#include "simbench/phantoms/point_cloud.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace simbench {

double PointCloud::total_intensity() const {
  double s = 0.0;
  for (const Emitter& e : emitters) s += e.intensity;
  return s;
}

void PointCloud::validate() const {
  for (const Emitter& e : emitters) {
    if (!std::isfinite(e.x_nm) || !std::isfinite(e.y_nm) || !std::isfinite(e.z_nm))
      throw std::invalid_argument("PointCloud: non-finite emitter coordinate");
    if (!(e.intensity >= 0.0))
      throw std::invalid_argument("PointCloud: negative emitter intensity");
    if (!bounds.contains(e.x_nm, e.y_nm, e.z_nm))
      throw std::invalid_argument("PointCloud: emitter outside declared bounds");
  }
}

PointCloud PointCloud::recentered() const {
  PointCloud out = *this;
  const double cx = 0.5 * (bounds.x_lo + bounds.x_hi);
  const double cy = 0.5 * (bounds.y_lo + bounds.y_hi);
  const double cz = 0.5 * (bounds.z_lo + bounds.z_hi);
  for (Emitter& e : out.emitters) {
    e.x_nm -= cx;
    e.y_nm -= cy;
    e.z_nm -= cz;
  }
  out.bounds = {bounds.x_lo - cx, bounds.x_hi - cx, bounds.y_lo - cy,
                bounds.y_hi - cy, bounds.z_lo - cz, bounds.z_hi - cz};
  return out;
}

void write_point_csv(const PointCloud& cloud, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("write_point_csv: cannot open " + path.string());
  out << "x_nm,y_nm,z_nm,intensity\n";
  char line[160];
  for (const Emitter& e : cloud.emitters) {
    std::snprintf(line, sizeof(line), "%.9g,%.9g,%.9g,%.9g\n", e.x_nm, e.y_nm,
                  e.z_nm, e.intensity);
    out << line;
  }
}

namespace {

std::string normalize_header(std::string h) {
  std::string out;
  for (char c : h)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"')
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool header_matches(const std::string& h, const char* axis) {
  // axis is "x", "y" or "z"; accept x, x_nm, xnano, x[nm], x(nm), xnm.
  if (h == axis) return true;
  if (h == std::string(axis) + "_nm") return true;
  if (h == std::string(axis) + "nano") return true;
  if (h == std::string(axis) + "[nm]") return true;
  if (h == std::string(axis) + "(nm)") return true;
  if (h == std::string(axis) + "nm") return true;
  return false;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

PointCloud load_point_csv(const std::filesystem::path& path, double unit_scale) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_point_csv: cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("load_point_csv: empty file " + path.string());

  const std::vector<std::string> headers = split_csv_line(line);
  int xi = -1, yi = -1, zi = -1, ii = -1;
  for (std::size_t c = 0; c < headers.size(); ++c) {
    const std::string h = normalize_header(headers[c]);
    if (header_matches(h, "x")) xi = static_cast<int>(c);
    else if (header_matches(h, "y")) yi = static_cast<int>(c);
    else if (header_matches(h, "z")) zi = static_cast<int>(c);
    else if (h == "intensity" || h == "photons" || h == "intensity[photon]" ||
             h == "intensity(photon)" || h == "amplitude")
      ii = static_cast<int>(c);
  }
  if (xi < 0 || yi < 0 || zi < 0)
    throw std::runtime_error("load_point_csv: missing x/y/z columns in " + path.string());

  PointCloud cloud;
  double lo[3] = {std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity()};
  double hi[3] = {-lo[0], -lo[1], -lo[2]};
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = split_csv_line(line);
    const int needed = std::max(std::max(xi, yi), std::max(zi, ii));
    if (static_cast<int>(f.size()) <= needed)
      throw std::runtime_error("load_point_csv: row " + std::to_string(row) +
                               " has too few columns in " + path.string());
    Emitter e;
    try {
      e.x_nm = std::stod(f[xi]) * unit_scale;
      e.y_nm = std::stod(f[yi]) * unit_scale;
      e.z_nm = std::stod(f[zi]) * unit_scale;
      e.intensity = ii >= 0 ? std::stod(f[ii]) : 1.0;
    } catch (const std::exception&) {
      throw std::runtime_error("load_point_csv: malformed row " + std::to_string(row) +
                               " in " + path.string());
    }
    const double p[3] = {e.x_nm, e.y_nm, e.z_nm};
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
    cloud.emitters.push_back(e);
  }
  if (!cloud.emitters.empty())
    cloud.bounds = {lo[0], hi[0], lo[1], hi[1], lo[2], hi[2]};
  cloud.validate();
  return cloud;
}

}  // namespace simbench
