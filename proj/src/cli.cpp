#include "slicereg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slicereg/cauchy_integral.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/reg_calculus.hpp"
#include "slicereg/spherical_series.hpp"
#include "slicereg/zeros_mult.hpp"

namespace slicereg::cli {

namespace {

using io::format_double;
using io::ParseError;
using io::to_json;

void check_setting(bool ok, const char *field, const char *what) {
  if (!ok) {
    throw ParseError(field, what);
  }
}

} // namespace

void Config::validate() const {
  check_setting(coeff_tol > 0.0, "--coeff-tol", "must be > 0");
  check_setting(boundary_tol > 0.0, "--bdry-tol", "must be > 0");
  check_setting(zero_tol > 0.0, "--zero-tol", "must be > 0");
  check_setting(fd_step > 0.0, "--fd-step", "must be > 0");
  check_setting(nodes >= 16, "--M", "must be >= 16");
}

namespace {

double parse_number(const std::string &text, const std::string &field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    throw ParseError(field, "expected a number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ParseError(field, "expected a finite number, got '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string &text,
                               const std::string &field, std::size_t count) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_number(item, field));
  }
  if (out.size() != count) {
    throw ParseError(field, "expected " + std::to_string(count) +
                                " comma-separated numbers");
  }
  return out;
}

std::string read_source(const std::string &path, std::istream &in,
                        const std::string &field) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) {
      throw ParseError(field, "cannot open '" + path + "'");
    }
    buf << file.rdbuf();
  }
  return buf.str();
}

ImaginaryUnit parse_unit(const std::string &text, const std::string &field) {
  const Quaternion q = io::parse_quaternion(text, field);
  try {
    return ImaginaryUnit(q);
  } catch (const DomainError &) {
    throw ParseError(field, "expected a unit imaginary quaternion");
  }
}

std::string complex_json(std::complex<double> c) {
  return "[" + format_double(c.real()) + "," + format_double(c.imag()) + "]";
}

std::string matrix_json(const Matrix2c &m) {
  return "[[" + complex_json(m[0][0]) + "," + complex_json(m[0][1]) + "],[" +
         complex_json(m[1][0]) + "," + complex_json(m[1][1]) + "]]";
}

std::string list_json(const std::vector<Quaternion> &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + to_json(v[i]);
  }
  return out + "]";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

OutputFormat parse_format(const std::string &text) {
  if (text.empty()) {
    return OutputFormat::automatic;
  }
  if (text == "json") {
    return OutputFormat::json;
  }
  if (text == "csv") {
    return OutputFormat::csv;
  }
  throw ParseError("--format", "expected json or csv, got '" + text + "'");
}

void require_json(const Config &cfg, const std::string &command) {
  if (cfg.format == OutputFormat::csv) {
    throw ParseError("--format", "csv output is not available for " + command);
  }
}

struct Options {
  std::string file;
  std::string file2;
  std::string q;
  std::string q0;
  std::string v;
  std::string sphere;
  std::string U;
  std::string I = "[0,1,0,0]";
  std::size_t N = 4;
  bool truncated = false;
};

SlicePoly load_poly(const std::string &path,
                    const Config &cfg, std::istream &in,
                    const std::string &field) {
  return io::parse_poly(read_source(path, in, field), field, cfg.coeff_tol);
}

USet parse_uset(const std::string &text, const Config &cfg) {
  const auto v = parse_list(text, "--U", 3);
  try {
    return USet(v[0], v[1], v[2], cfg.boundary_tol);
  } catch (const DomainError &e) {
    throw ParseError("--U", e.what());
  }
}

std::string cmd_eval(const Options &o, const Config &cfg, std::istream &in) {
  require_json(cfg, "eval");
  const SlicePoly f = load_poly(o.file, cfg, in, "file");
  const Quaternion q = io::parse_quaternion(o.q, "--q");
  std::string out = "{\"q\":" + to_json(q) + ",\"value\":" + to_json(f(q));
  if (o.truncated) {
    const double R = radius_of_convergence(f.coeffs(), SeriesKind::truncated);
    out += ",\"radius\":" + format_double(R) +
           ",\"inside\":" + bool_json(q.norm() < R);
  }
  return out + "}\n";
}

std::string cmd_star(const Options &o, const Config &cfg, std::istream &in) {
  require_json(cfg, "star");
  if (o.file == "-" && o.file2 == "-") {
    throw ParseError("g", "only one operand may be read from stdin");
  }
  const SlicePoly f = load_poly(o.file, cfg, in, "f");
  const SlicePoly g = load_poly(o.file2, cfg, in, "g");
  return to_json(star_mul(f, g)) + "\n";
}

std::string cmd_expand(const Options &o, const Config &cfg, std::istream &in) {
  require_json(cfg, "expand");
  const SlicePoly f = load_poly(o.file, cfg, in, "file");
  const Quaternion q0 = io::parse_quaternion(o.q0, "--q0");
  const SphericalExpansion e = expand_A(f, q0, o.N);
  std::vector<Quaternion> C;
  if (e.sphere.degenerate()) {
    C = c_coefficients_by_division(f, e.sphere, o.N);
  } else {
    C = *expand_C(f, e.sphere, q0, q0.conj(), o.N).C;
  }
  std::string out = "{\"x0\":" + format_double(e.sphere.x0()) +
                    ",\"y0\":" + format_double(e.sphere.y0()) +
                    ",\"q0\":" + to_json(q0) + ",\"A\":" + list_json(e.A) +
                    ",\"C\":" + list_json(C);
  if (o.truncated) {
    out += ",\"radius\":" +
           format_double(radius_of_convergence(f.coeffs(), SeriesKind::truncated));
  }
  return out + "}\n";
}

std::string cmd_deriv(const Options &o, const Config &cfg, std::istream &in) {
  require_json(cfg, "deriv");
  const SlicePoly f = load_poly(o.file, cfg, in, "file");
  const Quaternion q0 = io::parse_quaternion(o.q0, "--q0");
  const auto bundle = DerivativeBundle::of(f, q0);
  const auto e = adapted_basis(q0);
  std::vector<Quaternion> partials;
  for (int i = 0; i < 4; ++i) {
    partials.push_back(partial_derivative(f, q0, i));
  }
  std::string spherical = "null";
  if (q0.im_norm() > kZeroTol * (1.0 + q0.norm())) {
    spherical = to_json(spherical_derivative(f, q0));
  }
  std::string out = "{\"q0\":" + to_json(q0) + ",\"I\":" + to_json(e[1]) +
                    ",\"J\":" + to_json(e[2]) + ",\"A1\":" +
                    to_json(bundle.A1) + ",\"A2\":" + to_json(bundle.A2) +
                    ",\"cullen\":" + to_json(cullen_derivative(f, q0)) +
                    ",\"spherical\":" + spherical +
                    ",\"partials\":" + list_json(partials);
  if (!o.v.empty()) {
    const Quaternion v = io::parse_quaternion(o.v, "--v");
    out += ",\"v\":" + to_json(v) +
           ",\"directional\":" + to_json(directional_derivative(f, q0, v));
  }
  return out + "}\n";
}

std::string cmd_jacobian(const Options &o, const Config &cfg,
                         std::istream &in) {
  require_json(cfg, "jacobian");
  const SlicePoly f = load_poly(o.file, cfg, in, "file");
  const Quaternion q0 = io::parse_quaternion(o.q0, "--q0");
  const ComplexJacobian jac = complex_jacobian(f, q0, cfg.fd_step);
  return "{\"q0\":" + to_json(q0) + ",\"I\":" + to_json(jac.I.value()) +
         ",\"J\":" + to_json(jac.J.value()) +
         ",\"holo\":" + matrix_json(jac.holo) +
         ",\"holo_fd\":" + matrix_json(jac.holo_fd) +
         ",\"antiholo\":" + matrix_json(jac.antiholo) + "}\n";
}

std::string cmd_mult(const Options &o, const Config &cfg, std::istream &in) {
  require_json(cfg, "mult");
  const SlicePoly f = load_poly(o.file, cfg, in, "file");
  const auto sv = parse_list(o.sphere, "--sphere", 2);
  Sphere s;
  try {
    s = Sphere(sv[0], sv[1]);
  } catch (const DomainError &e) {
    throw ParseError("--sphere", e.what());
  }
  const ZeroTolerance tol{cfg.zero_tol};
  const MultiplicityReport r = multiplicity_report(f, s, tol);
  const ExpansionMultiplicity em = expansion_multiplicity(f, s, tol);
  return "{\"sphere\":[" + format_double(s.x0()) + "," + format_double(s.y0()) +
         "],\"spherical_mult\":" + std::to_string(r.spherical_mult) +
         ",\"isolated_point\":" +
         (r.isolated_point ? to_json(*r.isolated_point) : "null") +
         ",\"isolated_mult\":" + std::to_string(r.isolated_mult) +
         ",\"factors\":" + list_json(r.factors) +
         ",\"residual\":" + to_json(r.residual) +
         ",\"expansion\":{\"spherical\":" + std::to_string(em.spherical) +
         ",\"has_isolated\":" + bool_json(em.has_isolated) +
         ",\"criterion\":" + bool_json(em.criterion) +
         ",\"discrepancy\":" + bool_json(em.discrepancy()) + "}}\n";
}

struct VerifyResult {
  std::string text;
  bool ok;
};

VerifyResult cmd_verify_cauchy(const Options &o, const Config &cfg,
                               std::istream &in) {
  const SlicePoly f = load_poly(o.file, cfg, in, "file");
  const USet U = parse_uset(o.U, cfg);
  const ImaginaryUnit I = parse_unit(o.I, "--I");
  const std::size_t nodes = cfg.nodes + cfg.nodes % 2;
  const EstimateReport rep = cauchy_estimate_check(f, U, I, o.N, nodes);
  const bool ok = rep.min_margin() >= -1e-6;
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    out << "{\"C\":" << format_double(rep.constant)
        << ",\"max_abs_f\":" << format_double(rep.max_abs_f)
        << ",\"length\":" << format_double(rep.boundary_length)
        << ",\"rows\":[";
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      const auto &r = rep.rows[k];
      out << (k ? "," : "") << "{\"n\":" << r.n
          << ",\"algebraic\":" << format_double(r.algebraic)
          << ",\"integral\":" << format_double(r.integral)
          << ",\"bound\":" << format_double(r.bound)
          << ",\"margin\":" << format_double(r.margin) << "}";
    }
    out << "],\"ok\":" << bool_json(ok) << "}\n";
  } else {
    if (cfg.format == OutputFormat::csv) {
      out << "n,algebraic,integral,bound,margin\n";
      for (const auto &r : rep.rows) {
        out << r.n << "," << format_double(r.algebraic) << ","
            << format_double(r.integral) << "," << format_double(r.bound)
            << "," << format_double(r.margin) << "\n";
      }
    } else {
      out << "# C = " << format_double(rep.constant)
          << "  max|f| = " << format_double(rep.max_abs_f)
          << "  length = " << format_double(rep.boundary_length) << "\n";
      out << "n\t|A_n| algebraic\t|A_n| integral\tbound\tmargin\n";
      for (const auto &r : rep.rows) {
        out << r.n << "\t" << format_double(r.algebraic) << "\t"
            << format_double(r.integral) << "\t" << format_double(r.bound)
            << "\t" << format_double(r.margin) << "\n";
      }
      out << (ok ? "# all bounds hold\n" : "# bound violated\n");
    }
  }
  return {out.str(), ok};
}

std::string cmd_lemniscate(const Options &o, const Config &cfg) {
  const USet U = parse_uset(o.U, cfg);
  const ImaginaryUnit I = parse_unit(o.I, "--I");
  if (cfg.nodes % 2 != 0) {
    throw ParseError("--M", "lemniscate needs an even node count");
  }
  const auto points = lemniscate_boundary(U, I, cfg.nodes);
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    out << "[";
    for (std::size_t k = 0; k < points.size(); ++k) {
      const auto &p = points[k];
      const auto z = I.project(p.z);
      out << (k ? "," : "") << "{\"theta\":" << format_double(p.theta)
          << ",\"re\":" << format_double(z.real())
          << ",\"im\":" << format_double(z.imag()) << ",\"loop\":" << p.loop
          << "}";
    }
    out << "]\n";
  } else {
    out << "theta,re,im,loop\n";
    for (const auto &p : points) {
      const auto z = I.project(p.z);
      out << format_double(p.theta) << "," << format_double(z.real()) << ","
          << format_double(z.imag()) << "," << p.loop << "\n";
    }
  }
  return out.str();
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  Config cfg;
  Options o;
  std::string format;

  CLI::App app{"Slice regular quaternionic polynomials: expansions, "
               "multiplicities, derivatives"};
  app.name("slicereg");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--coeff-tol", cfg.coeff_tol, "trimming tolerance");
  app.add_option("--bdry-tol", cfg.boundary_tol, "boundary tolerance factor");
  app.add_option("--zero-tol", cfg.zero_tol,
                 "zero threshold (default 1e-10 or $SLICEREG_TOL)");
  app.add_option("--fd-step", cfg.fd_step, "finite-difference step");
  app.add_option("--M", cfg.nodes, "quadrature / sampling nodes");
  app.add_option("--format", format, "json or csv");

  auto *eval = app.add_subcommand("eval", "evaluate f(q)");
  eval->add_option("file", o.file, "polynomial JSON or -")->required();
  eval->add_option("--q", o.q, "[w,x,y,z]")->required();
  eval->add_flag("--truncated", o.truncated, "coefficients are a truncated series");

  auto *star = app.add_subcommand("star", "star product f*g");
  star->add_option("f", o.file, "polynomial JSON or -")->required();
  star->add_option("g", o.file2, "polynomial JSON or -")->required();

  auto *expand = app.add_subcommand("expand", "spherical expansion at q0");
  expand->add_option("file", o.file)->required();
  expand->add_option("--q0", o.q0, "[w,x,y,z]")->required();
  expand->add_option("--N", o.N, "highest coefficient index");
  expand->add_flag("--truncated", o.truncated);

  auto *deriv = app.add_subcommand("deriv", "first derivatives at q0");
  deriv->add_option("file", o.file)->required();
  deriv->add_option("--q0", o.q0)->required();
  deriv->add_option("--v", o.v, "unit direction");

  auto *jacobian = app.add_subcommand("jacobian", "complex Jacobian at q0");
  jacobian->add_option("file", o.file)->required();
  jacobian->add_option("--q0", o.q0)->required();

  auto *mult = app.add_subcommand("mult", "zero multiplicities on a sphere");
  mult->add_option("file", o.file)->required();
  mult->add_option("--sphere", o.sphere, "x0,y0")->required();

  auto *verify = app.add_subcommand("verify-cauchy", "Cauchy estimates on U");
  verify->add_option("file", o.file)->required();
  verify->add_option("--U", o.U, "x0,y0,R")->required();
  verify->add_option("--I", o.I, "imaginary unit [0,a,b,c]");
  verify->add_option("--N", o.N, "highest coefficient index");

  auto *lemniscate = app.add_subcommand("lemniscate", "sample the boundary of U");
  lemniscate->add_option("--U", o.U, "x0,y0,R")->required();
  lemniscate->add_option("--I", o.I, "imaginary unit [0,a,b,c]");

  if (const char *env = std::getenv("SLICEREG_TOL")) {
    try {
      cfg.zero_tol = parse_number(env, "SLICEREG_TOL");
    } catch (const ParseError &e) {
      err << "error: " << e.what() << "\n";
      return kExitParseError;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    cfg.format = parse_format(format);
    cfg.validate();
    std::string result;
    int code = kExitOk;
    if (eval->parsed()) {
      result = cmd_eval(o, cfg, in);
    } else if (star->parsed()) {
      result = cmd_star(o, cfg, in);
    } else if (expand->parsed()) {
      result = cmd_expand(o, cfg, in);
    } else if (deriv->parsed()) {
      result = cmd_deriv(o, cfg, in);
    } else if (jacobian->parsed()) {
      result = cmd_jacobian(o, cfg, in);
    } else if (mult->parsed()) {
      result = cmd_mult(o, cfg, in);
    } else if (verify->parsed()) {
      auto v = cmd_verify_cauchy(o, cfg, in);
      result = std::move(v.text);
      code = v.ok ? kExitOk : kExitVerificationFailed;
    } else if (lemniscate->parsed()) {
      result = cmd_lemniscate(o, cfg);
    }
    out << result;
    return code;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const DomainError &e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitDomainError;
  }
}

} // namespace slicereg::cli
