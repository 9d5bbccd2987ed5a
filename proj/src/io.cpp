#include "hoq/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hoq {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string grid_to_csv(const GridResult& grid) {
  std::string out = "beta,gamma,relative_error,success_probability\n";
  for (int row = 0; row < grid.resolution; ++row) {
    for (int col = 0; col < grid.resolution; ++col) {
      const std::size_t i = std::size_t(row) * grid.resolution + col;
      out += format_double(grid.beta_at(row)) + "," + format_double(grid.gamma_at(col)) + "," +
             format_double(grid.relative_errors[i]) + "," +
             format_double(grid.success_probabilities[i]) + "\n";
    }
  }
  return out;
}

std::string records_to_csv(const std::vector<SampleRecord>& records) {
  std::string out = "scheme,p,seed,relative_error,success_probability,evaluations,filtered\n";
  for (const auto& rec : records) {
    out += rec.scheme + "," + std::to_string(rec.p) + "," + std::to_string(rec.seed) + "," +
           format_double(rec.relative_error) + "," + format_double(rec.success_probability) +
           "," + std::to_string(rec.evaluations) + "," + (rec.filtered_out ? "1" : "0") + "\n";
  }
  return out;
}

namespace {

// Three-stop ramp (dark violet -> teal -> yellow), t in [0, 1].
std::string ramp_color(double t) {
  static constexpr int stops[3][3] = {{68, 1, 84}, {33, 145, 140}, {253, 231, 37}};
  const double s = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
  const int seg = s < 0.5 ? 0 : 1;
  const double u = (s - 0.5 * seg) * 2.0;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                int(stops[seg][0] + u * (stops[seg + 1][0] - stops[seg][0]) + 0.5),
                int(stops[seg][1] + u * (stops[seg + 1][1] - stops[seg][1]) + 0.5),
                int(stops[seg][2] + u * (stops[seg + 1][2] - stops[seg][2]) + 0.5));
  return buf;
}

}  // namespace

std::string grid_to_svg(const GridResult& grid) {
  if (grid.relative_errors.empty()) throw std::invalid_argument("empty grid surface");
  const int cell = 4;
  const int size = grid.resolution * cell;
  double lo = grid.relative_errors[0], hi = grid.relative_errors[0];
  for (double v : grid.relative_errors) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(size) + "\" height=\"" + std::to_string(size) + "\">\n";
  // Rows are beta (top to bottom), columns are gamma (left to right).
  for (int row = 0; row < grid.resolution; ++row) {
    for (int col = 0; col < grid.resolution; ++col) {
      const double v = grid.relative_errors[std::size_t(row) * grid.resolution + col];
      svg += "<rect x=\"" + std::to_string(col * cell) + "\" y=\"" + std::to_string(row * cell) +
             "\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
             "\" fill=\"" + ramp_color((v - lo) / span) + "\"/>\n";
    }
  }
  const double beta_span = grid.beta_range.second - grid.beta_range.first;
  const double gamma_span = grid.gamma_range.second - grid.gamma_range.first;
  const double row_pos = (grid.best_beta - grid.beta_range.first) / beta_span * grid.resolution;
  const double col_pos =
      (grid.best_gamma - grid.gamma_range.first) / gamma_span * grid.resolution;
  svg += "<circle cx=\"" + format_double((col_pos + 0.5) * cell) + "\" cy=\"" +
         format_double((row_pos + 0.5) * cell) + "\" r=\"" + std::to_string(cell) +
         "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  svg += "</svg>\n";
  return svg;
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("rename failed for " + target.string() + ": " + ec.message());
  }
}

}  // namespace hoq
