#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lipq/config.hpp"
#include "lipq/core.hpp"
#include "lipq/quotient.hpp"
#include "lipq/report.hpp"
#include "lipq/sampling.hpp"
#include "lipq/suite.hpp"

namespace {

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw lipq::io_error("cannot open output file: " + path);
  f << body;
  f.flush();
  if (!f) throw lipq::io_error("write failed: " + path);
}

lipq::RootOptions root_options(const lipq::JobConfig& cfg) {
  lipq::RootOptions o;
  o.seed = lipq::derive_seed(cfg.seed, "roots");
  o.multiplicity_tol = cfg.multiplicity_tol;
  return o;
}

lipq::SuiteConfig suite_config(const lipq::JobConfig& cfg) {
  lipq::SuiteConfig s;
  s.seed = cfg.seed;
  s.samples = cfg.samples;
  s.force_c = cfg.force_c;
  s.multiplicity_tol = cfg.multiplicity_tol;
  return s;
}

int cmd_analyze(const lipq::JobConfig& cfg) {
  if (!cfg.polynomial)
    throw lipq::config_error("analyze requires a polynomial (--poly <file>)");
  auto q = lipq::QuotientMap::build(*cfg.polynomial, root_options(cfg));
  const auto& c = q.constants();
  std::string body;
  body += "analysis\n";
  body += "polynomial: " + lipq::polynomial_label(*cfg.polynomial) + "\n";
  body += "degree: " + std::to_string(cfg.polynomial->degree()) + "\n";
  body += "lead: " + lipq::fmt_complex(q.lead()) + "\n";
  body += "seed: " + std::to_string(cfg.seed) + "\n";
  if (q.linear_shortcircuit()) {
    body += "linear short-circuit: h is the identity and F(z) = P(z)\n";
  } else {
    body += "critical points: " + std::to_string(q.cps().size()) + "\n";
    for (std::size_t j = 0; j < q.cps().size(); ++j) {
      const auto& cp = q.cps()[j];
      body += "  cp[" + std::to_string(j) + "]: z=" + lipq::fmt_complex(cp.z) +
              " mult=" + std::to_string(cp.mult) +
              " margin=" + lipq::fmt_double(c.ball_margins[j]) +
              " colip=" + lipq::fmt_double(c.ball_colips[j]) + " q=[";
      for (std::size_t l = 0; l < cp.q.size(); ++l) {
        if (l) body += ", ";
        body += lipq::fmt_complex(cp.q[l]);
      }
      body += "]\n";
    }
    body += "flatness:";
    for (std::size_t k = 0; k < c.flatness.size(); ++k)
      body += " D[" + std::to_string(k) + "]=" + lipq::fmt_double(c.flatness[k]);
    body += "\n";
  }
  body += "identity radius: " + lipq::fmt_double(c.identity_radius) + "\n";
  body += "ball radius: " + lipq::fmt_double(c.ball_radius) + "\n";
  body += "outer radius: " + lipq::fmt_double(c.outer_radius) + "\n";
  body += "overlap radii: u1=" + lipq::fmt_double(c.overlap_radius_1) +
          " u2=" + lipq::fmt_double(c.overlap_radius_2) + "\n";
  body += "min ball colip: " +
          (c.min_ball_colip ? lipq::fmt_double(*c.min_ball_colip) : std::string("none")) +
          "\n";
  write_output(cfg.out, body);
  return 0;
}

int cmd_verify(const lipq::JobConfig& cfg) {
  std::vector<lipq::Polynomial> polys;
  if (cfg.polynomial)
    polys.push_back(*cfg.polynomial);
  else
    polys = lipq::default_corpus();
  auto scfg = suite_config(cfg);
  lipq::Report rep;
  rep.header.push_back("verify");
  rep.header.push_back("suite: " + cfg.suite);
  rep.header.push_back("seed: " + std::to_string(cfg.seed));
  rep.header.push_back("samples: " + std::to_string(cfg.samples));
  rep.header.push_back("force_c: " + lipq::fmt_double(cfg.force_c));
  const bool want_con = cfg.suite == "all" || cfg.suite == "construction";
  const bool want_met = cfg.suite == "all" || cfg.suite == "metric";
  const bool want_dem = cfg.suite == "all" || cfg.suite == "demos";
  for (const auto& p : polys) {
    if (want_con) lipq::run_construction_suite(p, scfg, rep);
    if (want_met) lipq::run_metric_suite(p, scfg, rep);
  }
  if (want_dem) lipq::run_demo_suite(scfg, rep);
  write_output(cfg.out, rep.render());
  return rep.all_pass() ? 0 : 1;
}

double parse_grid_field(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw lipq::config_error("bad grid field: " + s);
  }
  if (pos != s.size() || !std::isfinite(v))
    throw lipq::config_error("bad grid field: " + s);
  return v;
}

long parse_grid_count(const std::string& s) {
  double v = parse_grid_field(s);
  if (v < 1.0 || v != std::floor(v) || v > 1e7)
    throw lipq::config_error("bad grid resolution: " + s);
  return static_cast<long>(v);
}

int cmd_grid(const lipq::JobConfig& cfg, const std::string& spec) {
  if (!cfg.polynomial) throw lipq::config_error("grid requires a polynomial (--poly <file>)");
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 6)
    throw lipq::config_error("grid spec needs xmin,xmax,ymin,ymax,nx,ny");
  const double xmin = parse_grid_field(parts[0]);
  const double xmax = parse_grid_field(parts[1]);
  const double ymin = parse_grid_field(parts[2]);
  const double ymax = parse_grid_field(parts[3]);
  const long nx = parse_grid_count(parts[4]);
  const long ny = parse_grid_count(parts[5]);
  if (!(xmin < xmax) || !(ymin < ymax))
    throw lipq::config_error("empty grid rectangle");
  if (nx * ny > 100000000L) throw lipq::config_error("grid too large");

  auto q = lipq::QuotientMap::build(*cfg.polynomial, root_options(cfg));
  std::string body =
      cfg.grid_include_h2 ? "z_re,z_im,f2_re,f2_im,h2_re,h2_im\n" : "z_re,z_im,f2_re,f2_im\n";
  for (long iy = 0; iy < ny; ++iy) {
    const double y = ny == 1 ? ymin : ymin + (ymax - ymin) * static_cast<double>(iy) /
                                          static_cast<double>(ny - 1);
    for (long ix = 0; ix < nx; ++ix) {
      const double x = nx == 1 ? xmin : xmin + (xmax - xmin) * static_cast<double>(ix) /
                                            static_cast<double>(nx - 1);
      const lipq::Complex z{x, y};
      const lipq::Complex f = q.value(z);
      body += lipq::fmt_double(x) + "," + lipq::fmt_double(y) + "," +
              lipq::fmt_double(f.real()) + "," + lipq::fmt_double(f.imag());
      if (cfg.grid_include_h2) {
        const lipq::Complex h = q.homeo().map(z);
        body += "," + lipq::fmt_double(h.real()) + "," + lipq::fmt_double(h.imag());
      }
      body += "\n";
    }
  }
  write_output(cfg.out, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar Lipschitz quotient construction toolkit"};
  app.require_subcommand(1);

  std::string poly_path, suite, out, grid_spec;
  std::uint64_t seed = 0;
  int samples = 0;
  double force_c = 0.0;
  bool with_h2 = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--poly", poly_path, "JSON config or coefficient file");
    sub->add_option("--seed", seed, "base RNG seed");
    sub->add_option("--samples", samples, "sample budget per check");
    sub->add_option("--force-c", force_c,
                    "override co-Lipschitz constants (falsifiability control)");
    sub->add_option("--suite", suite, "all|construction|metric|demos")
        ->check(CLI::IsMember({"all", "construction", "metric", "demos"}));
    sub->add_option("--out", out, "output path (default stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "print the construction constants");
  auto* verify = app.add_subcommand("verify", "run verification suites over the corpus");
  auto* grid = app.add_subcommand("grid", "export a CSV evaluation grid");
  add_common(analyze);
  add_common(verify);
  add_common(grid);
  grid->add_option("--grid", grid_spec, "xmin,xmax,ymin,ymax,nx,ny")->required();
  grid->add_flag("--with-h2", with_h2, "include the homeomorphism image columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    lipq::JobConfig cfg;
    if (sub->count("--poly")) cfg = lipq::load_config(poly_path);
    if (sub->count("--seed")) cfg.seed = seed;
    if (sub->count("--samples")) {
      if (samples <= 0) throw lipq::config_error("--samples must be positive");
      cfg.samples = samples;
    }
    if (sub->count("--force-c")) {
      if (force_c < 0.0) throw lipq::config_error("--force-c must be nonnegative");
      cfg.force_c = force_c;
    }
    if (sub->count("--suite")) cfg.suite = suite;
    if (sub->count("--out")) cfg.out = out;
    if (grid->parsed() && with_h2) cfg.grid_include_h2 = true;

    if (analyze->parsed()) return cmd_analyze(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_grid(cfg, grid_spec);
  } catch (const lipq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case lipq::Error::Kind::Domain:
      case lipq::Error::Kind::Config:
        return 2;
      case lipq::Error::Kind::Numerical:
        return 3;
      case lipq::Error::Kind::Io:
        return 4;
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
