// bezier-ifs: render attractors, run identity checks, measure convergence
// to the Takagi graph, and sample the orbit coefficient fields.
//
// Exit codes: 0 success, 1 usage, 2 mathematical precondition or resource
// limit, 3 I/O.

#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/ifs.hpp"
#include "bezier_ifs/io.hpp"
#include "bezier_ifs/orbits.hpp"
#include "bezier_ifs/scaling.hpp"
#include "bezier_ifs/takagi.hpp"
#include "bezier_ifs/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bezier_ifs;
using io::Config;
using io::Metadata;

// Flag values override config-file values, which override defaults.
class Settings {
 public:
  Settings(const Config& file, std::map<std::string, std::string> flags)
      : file_(file), flags_(std::move(flags)) {
    for (const auto& [key, value] : file_.entries())
      if (!flags_.count(key)) throw UsageError("unknown config key '" + key + "'");
  }

  std::optional<std::string> raw(const std::string& key) const {
    if (auto it = flags_.find(key); it != flags_.end() && !it->second.empty()) return it->second;
    if (file_.has(key)) return file_.get(key);
    return std::nullopt;
  }
  std::string str(const std::string& key, const std::string& fallback) const { return raw(key).value_or(fallback); }
  long integer(const std::string& key, long fallback) const {
    const auto v = raw(key);
    return v ? io::parse_int(*v) : fallback;
  }
  double real(const std::string& key, double fallback) const {
    const auto v = raw(key);
    return v ? io::parse_real(*v) : fallback;
  }
  bool flag(const std::string& key) const {
    const auto v = raw(key);
    return v && io::parse_bool(*v);
  }

 private:
  const Config& file_;
  std::map<std::string, std::string> flags_;
};

Config load_config(const std::string& path) { return path.empty() ? Config{} : Config::load(path); }

std::string output_format(const Settings& s, const std::string& out) {
  std::string f = s.str("format", "");
  if (f.empty()) f = std::filesystem::path(out).extension() == ".svg" ? "svg" : "csv";
  if (f != "csv" && f != "svg") throw UsageError("format must be csv or svg, got '" + f + "'");
  return f;
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    io::write_file(out, content);
  }
}

std::size_t budget_of(const Settings& s) {
  const long b = s.integer("budget", static_cast<long>(kDefaultBudget));
  if (b < 1) throw UsageError("budget must be >= 1");
  return static_cast<std::size_t>(b);
}

unsigned threads_of(const Settings& s) {
  const long t = s.integer("threads", 0);
  if (t < 0) throw UsageError("threads must be >= 0");
  return static_cast<unsigned>(t);
}

std::string complex_list_string(const std::vector<Complex>& zs) {
  std::string s = "[";
  for (std::size_t i = 0; i < zs.size(); ++i) s += (i ? ", " : "") + io::format_complex(zs[i]);
  return s + "]";
}

// ---------------------------------------------------------------- render

int cmd_render(const Settings& s) {
  const std::string out = s.str("out", "");
  const std::string format = output_format(s, out);
  const std::size_t budget = budget_of(s);
  const unsigned threads = threads_of(s);
  Metadata meta{{"command", "render"}};
  std::vector<io::SvgLayer> layers;
  PointCloud cloud;

  if (const auto beta_text = s.raw("beta")) {
    const double beta = io::parse_real(*beta_text);
    const long depth = s.integer("depth", 15);
    if (depth < 0) throw UsageError("depth must be >= 0");
    const long grid = s.integer("grid", 10);
    const auto a = scaled_attractor(beta, static_cast<int>(depth), budget, threads);
    cloud = a.cloud;
    meta.insert(meta.end(), {{"system", "two-point, scaled by 1/(2 beta)"},
                             {"beta", io::format_double(beta)},
                             {"depth", std::to_string(depth)},
                             {"budget", std::to_string(budget)},
                             {"seed", "unit interval at k/64"},
                             {"points", std::to_string(cloud.size())},
                             {"subsampled", a.subsampled ? "true" : "false"}});
    layers.push_back({cloud.points, "#1f4e9c", false});
    if (s.flag("takagi")) layers.push_back({takagi_graph(static_cast<int>(grid)).points, "#e07b00", true});
  } else {
    const auto controls_text = s.raw("controls");
    const auto t_text = s.raw("t");
    if (!controls_text || !t_text) throw UsageError("render needs --controls and --t (or --beta)");
    const auto controls = io::parse_complex_list(*controls_text);
    const Complex t = io::parse_complex(*t_text);
    if (controls.size() < 2) throw UsageError("render needs at least 2 control points");
    const long depth = s.integer("depth", 20);
    if (depth < 0) throw UsageError("depth must be >= 0");
    if (const auto why = hyperbolicity_violation(t); !why.empty()) {
      throw DomainError("t = " + io::format_complex(t) + " is not hyperbolic: " + why);
    }
    IterateOptions opt;
    opt.budget = budget;
    opt.threads = threads;
    const auto r = control_attractor(std::span<const Complex>(controls), t, static_cast<int>(depth), opt);
    cloud = r.projected;
    meta.insert(meta.end(), {{"system", "de Casteljau subdivision, type II rows (x_0..x_{n-1}, 1)"},
                             {"controls", complex_list_string(controls)},
                             {"t", io::format_complex(t)},
                             {"depth", std::to_string(depth)},
                             {"budget", std::to_string(budget)},
                             {"seed", "first and last rows of P (fixed points of f0, f1)"},
                             {"points", std::to_string(cloud.size())},
                             {"subsampled", r.subsampled ? "true" : "false"}});
    layers.push_back({cloud.points, "#1f4e9c", false});
    if (s.flag("polygon")) layers.push_back({controls, "#e07b00", true});
  }

  std::ostringstream os;
  if (format == "csv") {
    io::write_cloud_csv(os, cloud, meta);
  } else {
    io::write_svg(os, layers, meta);
  }
  emit(out, os.str());
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Settings& s) {
  VerifyOptions o;
  o.n = static_cast<int>(s.integer("n", o.n));
  o.word_length = static_cast<int>(s.integer("words", o.word_length));
  o.samples = static_cast<int>(s.integer("samples", o.samples));
  o.seed = static_cast<std::uint64_t>(s.integer("seed", static_cast<long>(o.seed)));
  o.tol = s.real("tol", o.tol);
  o.exact = !s.flag("double");
  o.perturb = parse_perturb(s.str("perturb", "none"));
  if (o.samples < 1) throw UsageError("samples must be >= 1");

  const auto results = run_verify(o);
  std::ostringstream os;
  os << "# bezier-ifs v1\n# command = verify\n# n = " << o.n << "\n# words = " << o.word_length
     << "\n# path = " << (o.exact ? "exact" : "double") << "\n# samples = " << o.samples << "\n# seed = " << o.seed
     << "\n# perturb = " << to_string(o.perturb) << '\n';
  bool all = true;
  for (const auto& r : results) {
    os << format_check(r) << '\n';
    all = all && r.pass;
  }
  os << (all ? "ALL PASS" : "SOME FAILED") << '\n';
  emit(s.str("out", ""), os.str());
  return all ? 0 : 2;
}

// ---------------------------------------------------------------- converge

int cmd_converge(const Settings& s) {
  const std::string betas_text = s.str("betas", "[0.25, 0.125, 0.0625, 0.03125]");
  const auto betas = io::parse_real_list(betas_text);
  if (betas.empty()) throw UsageError("converge: the beta list is empty");
  SweepOptions o;
  o.depth = static_cast<int>(s.integer("depth", o.depth));
  o.grid = static_cast<int>(s.integer("grid", o.grid));
  o.budget = budget_of(s);
  o.threads = threads_of(s);
  const long m = s.integer("m", 1);
  if (m < 1) throw UsageError("m must be >= 1");
  if (o.depth < 0 || o.grid < 1 || o.grid > 24) throw UsageError("need depth >= 0 and 1 <= grid <= 24");

  const auto rows = degree_m_sweep(static_cast<int>(m), betas, o);
  const Metadata meta{{"command", "converge"},
                      {"m", std::to_string(m)},
                      {"depth", std::to_string(o.depth)},
                      {"grid", std::to_string(o.grid)},
                      {"budget", std::to_string(o.budget)},
                      {"envelope", "4 beta / (1 - 4 beta^2)"},
                      {"allowance", "diam * |1/2 + i beta|^depth + 2 * 2^-grid"}};
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    table.push_back({io::format_double(r.beta), std::to_string(r.depth), std::to_string(r.grid),
                     io::format_double(r.d_H), io::format_double(r.envelope), io::format_double(r.allowance),
                     r.envelope_defined ? (r.pass ? "true" : "false") : "undefined"});
  }
  std::ostringstream os;
  io::write_table_csv(os, meta, {"beta", "depth", "grid", "d_H", "envelope", "allowance", "pass"}, table);
  emit(s.str("out", ""), os.str());
  return 0;
}

// ---------------------------------------------------------------- field

int cmd_field(const Settings& s) {
  const auto ks_text = s.str("k", "[0, 1, 2, 3]");
  const auto ks = io::parse_int_list(ks_text);
  const long grid = s.integer("grid", 8);
  const long order = s.integer("n", 16);
  const long length = s.integer("length", 6);
  const double beta_max = s.real("beta-max", 0.25);
  const long steps = s.integer("beta-steps", 64);
  const std::string samples_out = s.str("samples-out", "");
  const std::string bundle_out = s.str("bundle-out", "");
  if (grid < 1 || grid > 20) throw UsageError("grid must be in [1, 20]");
  if (order < 0) throw UsageError("n must be >= 0");
  if (steps < 1) throw UsageError("beta-steps must be >= 1");
  for (int k : ks)
    if (k < 0) throw UsageError("k must be >= 0");

  Metadata base{{"command", "field"}};
  // Coefficient samples a_k,n(alpha).
  if (!samples_out.empty() || bundle_out.empty()) {
    std::vector<std::vector<std::pair<Dyadic, Dyadic>>> cols;
    for (int k : ks) cols.push_back(a_k_samples(static_cast<std::size_t>(k), static_cast<int>(grid),
                                                static_cast<std::size_t>(order)));
    Metadata meta = base;
    meta.insert(meta.end(), {{"table", "a_k,n(alpha) at alpha = j / 2^grid"},
                             {"k", ks_text},
                             {"grid", std::to_string(grid)},
                             {"n", std::to_string(order)}});
    const std::string format = samples_out.empty() ? "csv" : output_format(s, samples_out);
    std::ostringstream os;
    if (format == "csv") {
      std::vector<std::string> header{"alpha"};
      for (int k : ks) header.push_back("a_" + std::to_string(k));
      std::vector<std::vector<std::string>> rows;
      const std::size_t count = cols.empty() ? 0 : cols[0].size();
      for (std::size_t j = 0; j < count; ++j) {
        std::vector<std::string> row{io::format_double(cols[0][j].first.to_double())};
        for (const auto& c : cols) row.push_back(io::format_double(c[j].second.to_double()));
        rows.push_back(std::move(row));
      }
      io::write_table_csv(os, meta, header, rows);
    } else {
      static const char* colors[] = {"#000000", "#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad"};
      std::vector<io::SvgLayer> layers;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        io::SvgLayer layer{{}, colors[c % 5], true};
        for (const auto& [alpha, a] : cols[c]) layer.points.emplace_back(alpha.to_double(), a.to_double());
        layers.push_back(std::move(layer));
      }
      io::write_svg(os, layers, meta);
    }
    emit(samples_out, os.str());
  }

  // Parametric bundle Z_n^(d)(beta) over all words of the given length.
  if (!bundle_out.empty()) {
    if (length < 1) throw UsageError("length must be >= 1");
    if (length > 20) {
      throw ResourceError("bundle over all words of length " + std::to_string(length) + " needs 2^" +
                          std::to_string(length) + " curves; the limit is length 20 (2^20 curves)");
    }
    const std::uint64_t words = std::uint64_t{1} << length;
    Metadata meta = base;
    meta.insert(meta.end(), {{"table", "Z_n^(d)(beta) for all words d of length n"},
                             {"length", std::to_string(length)},
                             {"beta-max", io::format_double(beta_max)},
                             {"beta-steps", std::to_string(steps)}});
    const std::string format = output_format(s, bundle_out);
    std::vector<std::vector<std::string>> rows;
    std::vector<io::SvgLayer> layers;
    for (std::uint64_t w = 0; w < words; ++w) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
      std::string name;
      for (long k = 0; k < length; ++k) {
        bits[k] = static_cast<std::uint8_t>((w >> (length - 1 - k)) & 1U);
        name += static_cast<char>('0' + bits[k]);
      }
      const IBetaPoly z = z_poly(DigitSeq(bits), static_cast<std::size_t>(length));
      io::SvgLayer layer{{}, "#1f4e9c", true};
      for (long j = 0; j <= steps; ++j) {
        const double beta = beta_max * static_cast<double>(j) / static_cast<double>(steps);
        const Complex p = z.eval(beta);
        if (format == "csv") {
          rows.push_back({name, io::format_double(beta), io::format_double(p.real()), io::format_double(p.imag())});
        } else {
          layer.points.push_back(p);
        }
      }
      if (format == "svg") layers.push_back(std::move(layer));
    }
    std::ostringstream os;
    if (format == "csv") {
      io::write_table_csv(os, meta, {"word", "beta", "re", "im"}, rows);
    } else {
      io::write_svg(os, layers, meta);
    }
    emit(bundle_out, os.str());
  }
  return 0;
}

int run_guarded(const std::function<int()>& f) {
  try {
    return f();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 3;
  } catch (const CanonicalizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bezier-ifs: attractors of complex de Casteljau subdivision and the Takagi limit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bezier-ifs 1.0");

  std::map<std::string, std::map<std::string, std::string>> flags;
  std::map<std::string, std::string> config_paths;
  auto add = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option("--" + name, flags[sub->get_name()][name], help);
  };
  auto add_flag = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_flag_function("--" + name, [&, sub, name](std::int64_t) { flags[sub->get_name()][name] = "true"; }, help);
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_paths[sub->get_name()], "flat key = value config file");
    add(sub, "out", "output path ('-' or omitted: stdout)");
  };

  auto* render = app.add_subcommand("render", "iterate an attractor and write its projection");
  common(render);
  add(render, "controls", "control points as JSON, e.g. [[-1,1],[0,1],[2,1]]");
  add(render, "t", "subdivision parameter as [re, im]");
  add(render, "beta", "render the scaled two-point attractor for t = 1/2 + i beta instead");
  add(render, "depth", "iterations (default 20, or 15 with --beta)");
  add(render, "budget", "point budget per generation (default 4194304)");
  add(render, "threads", "worker threads (0: all cores)");
  add(render, "format", "csv or svg (default from the extension of --out)");
  add(render, "grid", "Takagi overlay resolution 2^-grid (default 10)");
  add_flag(render, "polygon", "overlay the control polygon (svg)");
  add_flag(render, "takagi", "overlay the Takagi graph (svg, with --beta)");

  auto* verify = app.add_subcommand("verify", "check the matrix and orbit identities");
  common(verify);
  add(verify, "n", "largest matrix degree (default 6)");
  add(verify, "words", "orbit word length (default 10)");
  add(verify, "samples", "random parameters per matrix identity (default 20)");
  add(verify, "seed", "random seed (default 1)");
  add(verify, "tol", "tolerance on the double path (default 1e-11)");
  add(verify, "perturb", "corrupt one entry before checking: none, L, R, M0, M1, Z");
  add_flag(verify, "exact", "exact Z[1/2][i] arithmetic (default)");
  add_flag(verify, "double", "double precision with tolerance");

  auto* converge = app.add_subcommand("converge", "distance of scaled attractors to the Takagi graph");
  common(converge);
  add(converge, "betas", "beta values as a JSON list (default [1/4, 1/8, 1/16, 1/32])");
  add(converge, "depth", "iterations (default 15)");
  add(converge, "grid", "Takagi graph resolution 2^-grid (default 12)");
  add(converge, "budget", "point budget per generation (default 4194304)");
  add(converge, "threads", "worker threads (0: all cores)");
  add(converge, "m", "degree of the type IV system (default 1)");

  auto* field = app.add_subcommand("field", "coefficient samples a_k and the orbit curve bundle");
  common(field);
  add(field, "k", "coefficient indices as a JSON list (default [0, 1, 2, 3])");
  add(field, "grid", "sample spacing 2^-grid (default 8)");
  add(field, "n", "orbit order (default 16)");
  add(field, "samples-out", "path for the a_k table (default stdout)");
  add(field, "bundle-out", "path for the curve bundle");
  add(field, "length", "word length of the bundle (default 6)");
  add(field, "beta-max", "bundle beta range [0, beta-max] (default 1/4)");
  add(field, "beta-steps", "beta samples per curve (default 64)");
  add(field, "format", "csv or svg (default from the extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (auto* sub : app.get_subcommands()) {
    const std::string name = sub->get_name();
    return run_guarded([&] {
      const Config file = load_config(config_paths[name]);
      const Settings settings(file, flags[name]);
      if (name == "render") return cmd_render(settings);
      if (name == "verify") return cmd_verify(settings);
      if (name == "converge") return cmd_converge(settings);
      return cmd_field(settings);
    });
  }
  return 1;
}
