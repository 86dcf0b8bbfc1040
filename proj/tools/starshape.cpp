// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
//
// starshape: command-line front end to the library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starshape/starshape.hpp"

namespace {

using namespace starshape;
using io::Json;

constexpr int kExitFailedCriteria = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string dist;
  std::optional<std::size_t> n;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::string strategy = "rejection";
  bool decompose = false;
  std::string report;
  double alpha = 0.001;

  // command-specific
  std::vector<std::string> at;
  std::string in;
  std::optional<double> theta;
  std::vector<std::string> cols;
  std::size_t bins = 8;
  std::string group = "lt";
  int p = 2;
  double n1 = 5.0;
  double n2 = 7.0;
};

/// Output sink: the --out file when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      require(file_->good(), ErrorCode::ParseError, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::size_t draws(const RunConfig& cfg, std::size_t fallback) { return cfg.n.value_or(fallback); }

DirectionStrategy parse_strategy(const std::string& s) {
  return s == "body" ? DirectionStrategy::UniformInBody : DirectionStrategy::Rejection;
}

StarDistribution load(const RunConfig& cfg) {
  require(!cfg.dist.empty(), ErrorCode::ParseError, "--dist is required");
  auto dc = io::load_distribution(cfg.dist);
  StarBuildOptions opts;
  opts.strategy = parse_strategy(cfg.strategy);
  return StarDistribution::build(std::move(dc.gauge), std::move(dc.profile), opts);
}

Vector parse_point(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      require(used == item.size(), ErrorCode::ParseError, "bad number '" + item + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad number '" + item + "' in point '" + text + "'");
    }
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

/// Points from --at (repeatable "x1,x2,...") and --in (CSV, header skipped
/// when its first field is not numeric).
std::vector<Vector> read_points(const RunConfig& cfg) {
  std::vector<Vector> pts;
  for (const auto& a : cfg.at) pts.push_back(parse_point(a));
  if (!cfg.in.empty()) {
    std::ifstream in(cfg.in);
    require(in.good(), ErrorCode::ParseError, "cannot open '" + cfg.in + "'");
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (first) {
        first = false;
        const char c = line.front();
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.'))
          continue;
      }
      pts.push_back(parse_point(line));
    }
  }
  require(!pts.empty(), ErrorCode::ParseError, "no points given (use --at or --in)");
  return pts;
}

void write_report_lines(const std::string& path, const std::vector<Json>& lines) {
  if (path.empty()) return;
  std::ofstream out(path);
  require(out.good(), ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  for (const auto& j : lines) out << j.dump() << '\n';
}

void emit_table(const RunConfig& cfg, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows, Json meta) {
  Sink sink(cfg.out);
  auto& os = sink.stream();
  if (cfg.format == "json") {
    meta["columns"] = header;
    Json data = Json::array();
    for (const auto& r : rows) data.push_back(r);
    meta["rows"] = std::move(data);
    os << meta.dump() << '\n';
    return;
  }
  io::CsvWriter w(os, header);
  for (const auto& r : rows) w.row(r);
}

//---------------------------------------------------------------------------//

int cmd_sample(const RunConfig& cfg) {
  const auto dist = load(cfg);
  const int p = dist.dim();
  const auto xs = sample(dist, cfg.seed, draws(cfg, 1000));
  std::vector<std::string> header;
  for (int i = 1; i <= p; ++i) header.push_back("x" + std::to_string(i));
  if (cfg.decompose) {
    header.push_back("g");
    if (p == 2) {
      header.push_back("theta");
    } else {
      for (int i = 1; i <= p; ++i) header.push_back("zprime" + std::to_string(i));
    }
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) {
    std::vector<double> r(x.data(), x.data() + x.size());
    if (cfg.decompose) {
      const auto rec = orbital_decompose(dist, x);
      r.push_back(rec.g);
      if (p == 2) {
        r.push_back(polar_angle(x[0], x[1]));
      } else {
        for (int i = 0; i < p; ++i) r.push_back(rec.zprime[i]);
      }
    }
    rows.push_back(std::move(r));
  }
  emit_table(cfg, header, rows,
             Json{{"dim", p}, {"n", xs.size()}, {"seed", cfg.seed}, {"strategy", cfg.strategy}});
  return 0;
}

int cmd_density(const RunConfig& cfg) {
  const auto dist = load(cfg);
  const auto pts = read_points(cfg);
  Json out = Json::array();
  for (const auto& x : pts) {
    require(x.size() == dist.dim(), ErrorCode::DimensionMismatch,
            "point has " + std::to_string(x.size()) + " coordinates, expected " +
                std::to_string(dist.dim()));
    out.push_back({{"x", std::vector<double>(x.data(), x.data() + x.size())},
                   {"density", density(dist, x)}});
  }
  Sink sink(cfg.out);
  sink.stream() << Json{{"c0", dist.c0()}, {"points", out}}.dump() << '\n';
  return 0;
}

int cmd_constant(const RunConfig& cfg) {
  const auto dist = load(cfg);
  Json j{{"c0_radial", dist.c0_radial()},
         {"c0_spherical", dist.c0_spherical()},
         {"stderr_spherical", dist.c0_spherical_stderr()},
         {"rel_discrepancy", dist.relative_discrepancy()},
         {"method", std::string(to_string(dist.direction_constant_estimate().integral.method))},
         {"provenance", std::string(to_string(dist.provenance()))}};
  Sink sink(cfg.out);
  sink.stream() << j.dump() << '\n';
  return 0;
}

int cmd_direction_density(const RunConfig& cfg) {
  require(!cfg.dist.empty(), ErrorCode::ParseError, "--dist is required");
  const auto dc = io::load_distribution(cfg.dist);
  const auto constant = direction_constant(dc.gauge);
  std::vector<Vector> dirs;
  if (cfg.theta) dirs.push_back(unit_vector_at(*cfg.theta));
  if (!cfg.at.empty() || !cfg.in.empty())
    for (auto& v : read_points(cfg)) dirs.push_back(v);
  require(!dirs.empty(), ErrorCode::ParseError, "no directions given (use --theta, --at or --in)");
  Json out = Json::array();
  for (const auto& u : dirs)
    out.push_back({{"zprime", std::vector<double>(u.data(), u.data() + u.size())},
                   {"density", direction_density(dc.gauge, constant.c0, u)}});
  Sink sink(cfg.out);
  sink.stream() << Json{{"c0", constant.c0}, {"stderr", constant.std_error}, {"points", out}}.dump()
                << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  require(!cfg.dist.empty(), ErrorCode::ParseError, "--dist is required");
  const Json doc = cfg.dist.front() == '{' ? io::parse_text(cfg.dist, "inline config")
                                           : io::read_json_file(cfg.dist);
  std::vector<verify::Criterion> results;
  if (doc.is_object() && doc.contains("matrix")) {
    io::detail::reject_unknown(doc, "config", {"matrix"});
    const Json& m = doc.at("matrix");
    io::detail::reject_unknown(m, "config.matrix", {"p", "n1", "n2"});
    verify::MatrixVerifyOptions o;
    o.p = m.value("p", 2);
    o.n1 = m.value("n1", 5.0);
    o.n2 = m.value("n2", 7.0);
    o.n = draws(cfg, 100000);
    o.seed = cfg.seed;
    o.alpha = cfg.alpha;
    require(o.p >= 1 && o.p <= 3, ErrorCode::ParseError, "field 'config.matrix.p' must be 1..3");
    results = verify::verify_matrix(o);
  } else {
    auto dc = io::distribution_from_json(doc);
    const auto dist = StarDistribution::build(std::move(dc.gauge), std::move(dc.profile));
    verify::DistributionVerifyOptions o;
    o.n = draws(cfg, 100000);
    o.seed = cfg.seed;
    o.alpha = cfg.alpha;
    results = verify::verify_distribution(dist, o);
  }
  bool all = true;
  std::vector<Json> lines;
  for (const auto& c : results) {
    std::cout << c.line() << '\n';
    all = all && c.pass();
    lines.push_back(verify::to_json(c));
  }
  write_report_lines(cfg.report, lines);
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : kExitFailedCriteria;
}

/// Reads two named numeric columns from a CSV with a header row.
std::pair<std::vector<double>, std::vector<double>> read_columns(const std::string& path,
                                                                 const std::string& a,
                                                                 const std::string& b) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorCode::ParseError,
          "'" + path + "' is empty");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) header.push_back(f);
  }
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    fail(ErrorCode::ParseError, "column '" + name + "' not found in '" + path + "'");
  };
  const std::size_t ia = find(a), ib = find(b);
  std::vector<double> va, vb;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Vector row = parse_point(line);
    require(static_cast<std::size_t>(row.size()) == header.size(), ErrorCode::ParseError,
            "ragged row in '" + path + "'");
    va.push_back(row[static_cast<Eigen::Index>(ia)]);
    vb.push_back(row[static_cast<Eigen::Index>(ib)]);
  }
  return {va, vb};
}

int cmd_independence(const RunConfig& cfg) {
  stats::TestReport r;
  if (!cfg.in.empty()) {
    require(cfg.cols.size() == 2, ErrorCode::ParseError, "--cols needs exactly two column names");
    auto [a, b] = read_columns(cfg.in, cfg.cols[0], cfg.cols[1]);
    r = stats::independence_chisq(a, b, cfg.bins, cfg.bins, cfg.alpha);
  } else {
    const auto dist = load(cfg);
    const auto xs = sample(dist, cfg.seed, draws(cfg, 100000));
    r = verify::length_direction_independence(dist.gauge(), xs, cfg.bins, cfg.alpha);
  }
  const Json j = io::to_json(r);
  std::cout << j.dump() << '\n';
  write_report_lines(cfg.report, {j});
  return 0;
}

int cmd_matrix(const RunConfig& cfg) {
  require(cfg.group == "lt" || cfg.group == "gl", ErrorCode::ParseError,
          "--group must be lt or gl");
  const int p = cfg.p;
  const auto pairs = verify::wishart_pairs(p, cfg.n1, cfg.n2, draws(cfg, 1000), cfg.seed);
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  rows.reserve(pairs.size());
  std::size_t dropped = 0;
  if (cfg.group == "lt") {
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= i; ++j) header.push_back("t" + std::to_string(i) + std::to_string(j));
    for (const auto& name : io::vech_upper_names("u", p)) header.push_back(name);
    for (const auto& pr : pairs) {
      const auto d = matrix::lt_orbital_decompose(pr);
      std::vector<double> r;
      for (int i = 0; i < p; ++i)
        for (int j = 0; j <= i; ++j) r.push_back(d.T(i, j));
      for (double v : io::vech_upper(d.U)) r.push_back(v);
      rows.push_back(std::move(r));
    }
  } else {
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= p; ++j) header.push_back("b" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= p; ++i) header.push_back("l" + std::to_string(i));
    for (const auto& pr : pairs) {
      try {
        const auto d = matrix::gl_orbital_decompose(pr);
        std::vector<double> r;
        for (int i = 0; i < p; ++i)
          for (int j = 0; j < p; ++j) r.push_back(d.B(i, j));
        for (int i = 0; i < p; ++i) r.push_back(d.l[i]);
        rows.push_back(std::move(r));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateRoots) throw;
        ++dropped;
      }
    }
  }
  emit_table(cfg, header, rows,
             Json{{"group", cfg.group}, {"p", p}, {"n1", cfg.n1}, {"n2", cfg.n2},
                  {"n", pairs.size()}, {"seed", cfg.seed}, {"dropped", dropped}});
  std::cerr << "rows written: " << rows.size() << ", degenerate rows dropped: " << dropped
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starshape: star-shaped distributions and matrix-pair models"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dist", cfg.dist, "Distribution JSON file, or inline JSON");
    sub->add_option("--n", cfg.n, "Number of draws")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "64-bit RNG seed");
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--strategy", cfg.strategy, "Direction sampler")
        ->check(CLI::IsMember({"rejection", "body"}));
    sub->add_option("--report", cfg.report, "JSON-lines report file");
    sub->add_option("--alpha", cfg.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  };

  auto* s_sample = app.add_subcommand("sample", "Draw samples");
  add_common(s_sample);
  s_sample->add_flag("--decompose", cfg.decompose, "Append orbital columns (g, theta)");

  auto* s_density = app.add_subcommand("density", "Evaluate the Lebesgue density");
  add_common(s_density);
  s_density->add_option("--at", cfg.at, "Point as x1,x2,... (repeatable)");
  s_density->add_option("--in", cfg.in, "CSV file of points");

  auto* s_constant = app.add_subcommand("constant", "Normalizing constant by both routes");
  add_common(s_constant);

  auto* s_dir = app.add_subcommand("direction-density", "Density of the direction x/|x|");
  add_common(s_dir);
  s_dir->add_option("--theta", cfg.theta, "Polar angle (p = 2)");
  s_dir->add_option("--at", cfg.at, "Unit vector as z1,z2,... (repeatable)");
  s_dir->add_option("--in", cfg.in, "CSV file of unit vectors");

  auto* s_verify = app.add_subcommand("verify", "Run the applicable acceptance checks");
  add_common(s_verify);

  auto* s_indep = app.add_subcommand("independence-test", "Contingency independence test");
  add_common(s_indep);
  s_indep->add_option("--in", cfg.in, "CSV file with a header row");
  s_indep->add_option("--cols", cfg.cols, "Two column names")->delimiter(',')->expected(2);
  s_indep->add_option("--bins", cfg.bins, "Quantile bins per margin")->check(CLI::Range(2, 1000));

  auto* s_matrix = app.add_subcommand("matrix", "Decompose Wishart matrix pairs");
  add_common(s_matrix);
  s_matrix->add_option("--group", cfg.group, "lt or gl")->check(CLI::IsMember({"lt", "gl"}));
  s_matrix->add_option("--p", cfg.p, "Matrix dimension")->check(CLI::Range(1, 3));
  s_matrix->add_option("--n1", cfg.n1, "Degrees of freedom of W1");
  s_matrix->add_option("--n2", cfg.n2, "Degrees of freedom of W2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*s_sample) return cmd_sample(cfg);
    if (*s_density) return cmd_density(cfg);
    if (*s_constant) return cmd_constant(cfg);
    if (*s_dir) return cmd_direction_density(cfg);
    if (*s_verify) return cmd_verify(cfg);
    if (*s_indep) return cmd_independence(cfg);
    if (*s_matrix) return cmd_matrix(cfg);
  } catch (const Error& e) {
    std::cerr << "starshape: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "starshape: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
