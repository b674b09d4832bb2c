#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotpoly/document.hpp"

namespace {

using namespace rotpoly;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

ComplexPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("point must be given as a,b");
  std::size_t used_a = 0, used_b = 0;
  double a = 0.0, b = 0.0;
  try {
    a = std::stod(text.substr(0, comma), &used_a);
    b = std::stod(text.substr(comma + 1), &used_b);
  } catch (const std::exception&) {
    throw ParseError("point components must be numbers");
  }
  if (used_a != comma || used_b != text.size() - comma - 1) {
    throw ParseError("point components must be numbers");
  }
  try {
    return {a, b};
  } catch (const SpecError& e) {
    throw ParseError(e.what());
  }
}

void print_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) std::fputc(',', stdout);
    std::fputs(cells[i].c_str(), stdout);
  }
  std::fputc('\n', stdout);
}

void warn_all(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_eval(const std::string& input, const std::string& point_str, bool with_reciprocal) {
  const SystemDocument doc = parse_document(read_input(input));
  if (doc.kind != DocKind::polynomial) {
    throw ParseError("eval requires a polynomial document");
  }
  const ComplexPoint pt = parse_point(point_str);
  const PolySpec& poly = *doc.polynomial;
  const EvalResult ev = eval_complex(poly, pt);
  std::vector<std::string> header{"u", "v", "abs_squared", "conj_sum"};
  std::vector<std::string> row{format_double(ev.u), format_double(ev.v),
                               format_double(abs_squared(poly, pt)),
                               format_double(conj_sum(poly, pt))};
  if (with_reciprocal) {
    const ComplexPoint rec = reciprocal(poly, pt);
    header.insert(header.end(), {"recip_re", "recip_im"});
    row.insert(row.end(), {format_double(rec.a), format_double(rec.b)});
  }
  print_row(header);
  print_row(row);
  return 0;
}

int cmd_freqresp(const std::string& input, double wmin, double wmax, std::size_t points,
                 const std::string& scale, const std::string& format) {
  const SystemDocument doc = parse_document(read_input(input));
  std::vector<std::string> warnings;
  const TransferFunctionSpec tf = [&] {
    try {
      return to_transfer_function(doc, &warnings);
    } catch (const DomainError& e) {
      throw ParseError(e.what());  // wrong document kind is a usage error
    }
  }();
  warn_all(warnings);
  const FrequencyGrid grid(wmin, wmax, points,
                           scale == "linear" ? GridScale::linear : GridScale::log);
  const SweepResult result = sweep(tf, grid);
  const bool bode = format == "bode";
  print_row(bode ? std::vector<std::string>{"omega", "mag_db", "phase_deg"}
                 : std::vector<std::string>{"omega", "re", "im", "mag", "phase_rad"});
  for (const FrequencySample& s : result.samples) {
    if (s.pole) {
      print_row(bode ? std::vector<std::string>{format_double(s.omega), "", ""}
                     : std::vector<std::string>{format_double(s.omega), "", "", "", ""});
      continue;
    }
    if (bode) {
      print_row({format_double(s.omega), format_double(20.0 * std::log10(s.magnitude)),
                 format_double(s.phase * 180.0 / std::numbers::pi)});
    } else {
      print_row({format_double(s.omega), format_double(s.re_h), format_double(s.im_h),
                 format_double(s.magnitude), format_double(s.phase)});
    }
  }
  return 0;
}

int cmd_opcount(std::size_t nmin, std::size_t nmax, const std::string& kind_name,
                std::uint32_t seed) {
  if (nmax < nmin) throw ParseError("--nmax must be at least --nmin");
  const CoeffKind kind = kind_name == "real" ? CoeffKind::real : CoeffKind::complex;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> freq(0.1, 10.0);
  print_row({"n", "measured_mults", "measured_adds", "predicted_mults", "predicted_adds",
             "baseline_mults", "baseline_adds"});
  for (std::size_t n = nmin; n <= nmax; ++n) {
    std::vector<double> alpha(n + 1), beta(n + 1, 0.0);
    for (double& x : alpha) x = coeff(rng);
    if (kind == CoeffKind::complex) {
      for (double& x : beta) x = coeff(rng);
      if (beta[0] == 0.0) beta[0] = 1.0;  // keep the drawn kind
    }
    const PolySpec poly(std::move(alpha), std::move(beta));
    const double omega = freq(rng);
    const OpCounter measured = eval_jomega(poly, omega).ops;
    const OpCounter predicted = predicted_ops(n, kind);
    const OpCounter baseline = baseline_ops(n);
    print_row({std::to_string(n), std::to_string(measured.mults), std::to_string(measured.adds),
               std::to_string(predicted.mults), std::to_string(predicted.adds),
               std::to_string(baseline.mults), std::to_string(baseline.adds)});
  }
  return 0;
}

int cmd_eval2d(const std::string& input, const std::string& point_str,
               const std::string& point2_str, double tol) {
  const SystemDocument doc = parse_document(read_input(input));
  if (doc.kind != DocKind::poly2d) throw ParseError("eval2d requires a poly2d document");
  const ComplexPoint s1 = parse_point(point_str);
  const ComplexPoint s2 = parse_point(point2_str);

  const auto evaluate = [tol](const Poly2DSpec& p, ComplexPoint a, ComplexPoint b) {
    const auto factors = check_separable(p, tol);
    return factors ? eval_separable(*factors, a, b) : eval2d(p, a, b);
  };

  const Eval2DResult p_val = evaluate(*doc.p2d, s1, s2);
  const std::vector<std::string> point_cells{format_double(s1.a), format_double(s1.b),
                                             format_double(s2.a), format_double(s2.b)};
  if (!doc.q2d) {
    print_row({"a1", "b1", "a2", "b2", "re", "im"});
    std::vector<std::string> row = point_cells;
    row.insert(row.end(), {format_double(p_val.re), format_double(p_val.im)});
    print_row(row);
    return 0;
  }
  const Eval2DResult q_val = evaluate(*doc.q2d, s1, s2);
  const Response2D resp = response2d(*doc.q2d, *doc.p2d, s1, s2);
  print_row({"a1", "b1", "a2", "b2", "re_q", "im_q", "re_p", "im_p", "mag", "phase_rad"});
  std::vector<std::string> row = point_cells;
  row.insert(row.end(),
             {format_double(q_val.re), format_double(q_val.im), format_double(p_val.re),
              format_double(p_val.im), format_double(resp.magnitude), format_double(resp.phase)});
  print_row(row);
  return 0;
}

int cmd_matpow(const std::string& input, std::uint64_t rho) {
  const SquareMatrix a = parse_matrix_document(read_input(input));
  const MatPowResult result = mat_pow(a, rho);
  std::vector<std::string> header(a.n);
  for (std::size_t j = 0; j < a.n; ++j) header[j] = "c" + std::to_string(j);
  print_row(header);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::vector<std::string> row(a.n);
    for (std::size_t j = 0; j < a.n; ++j) row[j] = format_double(result.value.at(i, j));
    print_row(row);
  }
  return 0;
}

int cmd_ss2tf(const std::string& input) {
  const SystemDocument doc = parse_document(read_input(input));
  if (doc.kind != DocKind::state_space) throw ParseError("ss2tf requires a state_space document");
  std::cout << serialize_transfer_function(tf_from_state_space(*doc.state_space)) << "\n";
  return 0;
}

int cmd_tc2tf(const std::string& input) {
  const SystemDocument doc = parse_document(read_input(input));
  if (doc.kind != DocKind::time_constants) {
    throw ParseError("tc2tf requires a time_constants document");
  }
  std::vector<std::string> warnings;
  const TransferFunctionSpec tf = to_transfer_function(doc, &warnings);
  warn_all(warnings);
  std::cout << serialize_transfer_function(tf) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex polynomial evaluation and frequency response via rotation-form Horner"};
  app.require_subcommand(1);

  std::string input, point_str, point2_str;
  std::string scale = "log", format = "nyquist", kind = "complex";
  double wmin = 0.01, wmax = 100.0, tol = 1e-9;
  std::size_t points = 50, nmin = 0, nmax = 16;
  std::uint64_t rho = 1;
  std::uint32_t seed = 42;
  bool with_reciprocal = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a complex point");
  eval->add_option("--input", input, "Input document (default: standard input)");
  eval->add_option("--point", point_str, "Evaluation point a,b")->required();
  eval->add_flag("--reciprocal", with_reciprocal, "Also emit 1/p(s)");

  auto* fr = app.add_subcommand("freqresp", "Frequency response samples over a grid");
  fr->add_option("--input", input, "Input document (default: standard input)");
  fr->add_option("--wmin", wmin, "Lowest frequency, rad/s");
  fr->add_option("--wmax", wmax, "Highest frequency, rad/s");
  fr->add_option("--points", points, "Number of grid points");
  fr->add_option("--scale", scale, "Grid spacing")->check(CLI::IsMember({"log", "linear"}));
  fr->add_option("--format", format, "Output columns")->check(CLI::IsMember({"nyquist", "bode"}));

  auto* oc = app.add_subcommand("opcount", "Measured vs predicted operation counts per degree");
  oc->add_option("--nmin", nmin, "Lowest degree");
  oc->add_option("--nmax", nmax, "Highest degree");
  oc->add_option("--kind", kind, "Coefficient kind")->check(CLI::IsMember({"real", "complex"}));
  oc->add_option("--seed", seed, "Random seed for measurement coefficients");

  auto* e2 = app.add_subcommand("eval2d", "Evaluate a two-variable polynomial document");
  e2->add_option("--input", input, "Input document (default: standard input)");
  e2->add_option("--point", point_str, "s1 as a,b")->required();
  e2->add_option("--point2", point2_str, "s2 as a,b")->required();
  e2->add_option("--tol", tol, "Separability tolerance");

  auto* mp = app.add_subcommand("matpow", "Integer power of a square matrix");
  mp->add_option("--input", input, "Matrix document (default: standard input)");
  mp->add_option("--rho", rho, "Exponent, a positive integer")->required();

  auto* ss = app.add_subcommand("ss2tf", "State space to transfer function document");
  ss->add_option("--input", input, "Input document (default: standard input)");

  auto* tc = app.add_subcommand("tc2tf", "Time constants to transfer function document");
  tc->add_option("--input", input, "Input document (default: standard input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval) return cmd_eval(input, point_str, with_reciprocal);
    if (*fr) return cmd_freqresp(input, wmin, wmax, points, scale, format);
    if (*oc) return cmd_opcount(nmin, nmax, kind, seed);
    if (*e2) return cmd_eval2d(input, point_str, point2_str, tol);
    if (*mp) return cmd_matpow(input, rho);
    if (*ss) return cmd_ss2tf(input);
    if (*tc) return cmd_tc2tf(input);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
