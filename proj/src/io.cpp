#include "bezier_ifs/io.hpp"

#include "bezier_ifs/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace bezier_ifs::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double_strict(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) throw UsageError("expected a number, got an empty string");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + t + "'");
  }
  if (used != t.size()) throw UsageError("not a number: '" + t + "'");
  return v;
}

nlohmann::json parse_json_array(std::string_view text) {
  std::string t = trim(text);
  // "[-1, 1], [2, 0]" starts with a bracket but is not a single JSON value.
  if (t.empty() || t.front() != '[' || !nlohmann::json::accept(t)) t = "[" + t + "]";
  try {
    auto j = nlohmann::json::parse(t);
    if (!j.is_array()) throw UsageError("expected a list: '" + t + "'");
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse list '" + t + "': " + e.what());
  }
}

double json_real(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_real(j.get<std::string>());
  throw UsageError("expected a number, got " + j.dump());
}

Complex json_complex(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw UsageError("complex numbers are written [re, im], got " + j.dump());
    return {json_real(j[0]), json_real(j[1])};
  }
  return {json_real(j), 0.0};
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config c;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    c.entries_[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const std::string& Config::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw UsageError("missing config key '" + key + "'");
  return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double parse_real(std::string_view text) {
  const std::string t = trim(text);
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const double p = to_double_strict(std::string_view(t).substr(0, slash));
    const double q = to_double_strict(std::string_view(t).substr(slash + 1));
    if (q == 0.0) throw UsageError("zero denominator in '" + t + "'");
    return p / q;
  }
  return to_double_strict(t);
}

long parse_int(std::string_view text) {
  const std::string t = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) throw UsageError("not an integer: '" + t + "'");
  return v;
}

bool parse_bool(std::string_view text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw UsageError("not a boolean: '" + t + "'");
}

Complex parse_complex(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '[') {
    try {
      return json_complex(nlohmann::json::parse(t));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("cannot parse complex '" + t + "': " + e.what());
    }
  }
  return {parse_real(t), 0.0};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  const auto j = parse_json_array(text);
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(json_complex(e));
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  if (trim(text).empty()) return {};
  const auto j = parse_json_array(text);
  std::vector<double> out;
  for (const auto& e : j) out.push_back(json_real(e));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  if (trim(text).empty()) return {};
  const auto j = parse_json_array(text);
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw UsageError("expected an integer, got " + e.dump());
    out.push_back(e.get<int>());
  }
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) { return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]"; }

namespace {

void write_header(std::ostream& out, const Metadata& meta) {
  out << "# bezier-ifs v1\n";
  for (const auto& [k, v] : meta) out << "# " << k << " = " << v << '\n';
}

}  // namespace

void write_cloud_csv(std::ostream& out, const PointCloud& cloud, const Metadata& meta) {
  write_header(out, meta);
  out << "# columns = re,im\n";
  for (const Complex& z : cloud.points) out << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
}

PointCloud read_cloud_csv(std::istream& in) {
  PointCloud out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError("CSV line " + std::to_string(line_no) + ": expected 're,im'");
    try {
      out.points.emplace_back(to_double_strict(std::string_view(line).substr(0, comma)),
                              to_double_strict(std::string_view(line).substr(comma + 1)));
    } catch (const UsageError& e) {
      throw IoError("CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

PointCloud read_cloud_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return read_cloud_csv(in);
}

void write_table_csv(std::ostream& out, const Metadata& meta, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows) {
  write_header(out, meta);
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

namespace {

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '-': out += (!out.empty() && out.back() == '-') ? "&#45;" : "-"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, const std::vector<SvgLayer>& layers, const Metadata& meta) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& layer : layers)
    for (const Complex& z : layer.points) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  if (!(x0 <= x1)) x0 = x1 = y0 = y1 = 0.0;
  const double extent = std::max(x1 - x0, y1 - y0);
  const double scale = extent > 0.0 ? 1000.0 / extent : 1.0;
  const double w = std::max((x1 - x0) * scale, 1.0);
  const double h = std::max((y1 - y0) * scale, 1.0);
  const double mx = 0.05 * w, my = 0.05 * h;
  auto px = [&](const Complex& z) { return (z.real() - x0) * scale; };
  auto py = [&](const Complex& z) { return (y1 - z.imag()) * scale; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed(-mx) << ' ' << fixed(-my)
      << ' ' << fixed(w + 2 * mx) << ' ' << fixed(h + 2 * my) << "\">\n";
  out << "<!-- bezier-ifs v1\n";
  for (const auto& [k, v] : meta) out << "  " << escape_xml(k) << " = " << escape_xml(v) << '\n';
  out << "-->\n";
  for (const auto& layer : layers) {
    if (layer.as_path) {
      if (layer.points.empty()) continue;
      out << "<path fill=\"none\" stroke=\"" << layer.color << "\" stroke-width=\"1\" d=\"";
      for (std::size_t i = 0; i < layer.points.size(); ++i)
        out << (i ? " L" : "M") << fixed(px(layer.points[i])) << ',' << fixed(py(layer.points[i]));
      out << "\"/>\n";
    } else {
      out << "<g fill=\"" << layer.color << "\">\n";
      for (const Complex& z : layer.points)
        out << "<circle cx=\"" << fixed(px(z)) << "\" cy=\"" << fixed(py(z)) << "\" r=\"0.5\"/>\n";
      out << "</g>\n";
    }
  }
  out << "</svg>\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace bezier_ifs::io
