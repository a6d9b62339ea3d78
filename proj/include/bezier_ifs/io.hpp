#pragma once

// Flat key-value configs, CSV point clouds and tables, SVG scatter plots.

#include "bezier_ifs/point_cloud.hpp"

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bezier_ifs::io {

using Complex = std::complex<double>;
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// One `key = value` per line; `#` starts a comment; blank lines ignored.
class Config {
 public:
  static Config parse(std::string_view text);
  /// Throws IoError if the file cannot be read.
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  void set(const std::string& key, std::string value) { entries_[key] = std::move(value); }
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// A decimal number or a fraction "p/q".
double parse_real(std::string_view text);
long parse_int(std::string_view text);
bool parse_bool(std::string_view text);
/// A number or a JSON pair [re, im].
Complex parse_complex(std::string_view text);
/// JSON array of numbers/[re, im] pairs; surrounding brackets optional.
std::vector<Complex> parse_complex_list(std::string_view text);
/// JSON array (brackets optional) of numbers or fraction strings.
std::vector<double> parse_real_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

/// %.17g, with "nan"/"inf" spelled out.
std::string format_double(double x);
std::string format_complex(Complex z);

/// `# bezier-ifs v1`, one `# key = value` line per metadata entry, then
/// `re,im` rows.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud, const Metadata& meta);
PointCloud read_cloud_csv(std::istream& in);
PointCloud read_cloud_csv(const std::filesystem::path& path);

/// Same header, then a column line and the rows.
void write_table_csv(std::ostream& out, const Metadata& meta, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows);

struct SvgLayer {
  std::vector<Complex> points;
  std::string color = "#1f4e9c";
  bool as_path = false;  ///< polyline through the points instead of dots
};

/// Dots of radius 0.5 in a frame whose longer side is 1000 units; the
/// imaginary axis points up; viewBox is the bounding box plus 5% margin.
void write_svg(std::ostream& out, const std::vector<SvgLayer>& layers, const Metadata& meta = {});

/// Writes `content` to `path`; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace bezier_ifs::io
