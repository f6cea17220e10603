#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "slg/biharmonic.hpp"
#include "slg/galerkin.hpp"
#include "slg/localop.hpp"
#include "slg/stability.hpp"

namespace slg::cli {

namespace {

constexpr double pi = std::numbers::pi;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Thrown for input that parses but is not acceptable; maps to exit 2.
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(p, &used);
    if (used != p.size() || v <= 0) throw BadInput("expected positive integers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw BadInput("empty integer list");
  return out;
}

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_angle(p));
  if (out.empty()) throw BadInput("empty angle list");
  return out;
}

std::string write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  return git_blob_sha1(content);
}

std::string default_manifest_path(const std::string& out) {
  std::filesystem::path p(out);
  p.replace_extension(".manifest.json");
  return p.string();
}

OperatorKind parse_operator(const std::string& name) {
  if (name == "corrected") return OperatorKind::corrected;
  if (name == "plain") return OperatorKind::plain;
  throw BadInput("unknown operator '" + name + "' (corrected, plain)");
}

KernelOrientation parse_orientation(const std::string& name) {
  if (name == "printed") return KernelOrientation::printed;
  if (name == "local_model") return KernelOrientation::local_model;
  throw BadInput("unknown orientation '" + name + "' (printed, local_model)");
}

BoundaryFunction parse_rhs(const std::string& name) {
  if (name == "f1") return [](double, cplx z) { return rhs_f1(z); };
  if (name == "f2") return [](double, cplx z) { return rhs_f2(z); };
  throw BadInput("unknown right-hand side '" + name + "' (f1, f2)");
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

/// Options shared by the commands that solve the integral equation.
struct SolveArgs {
  std::string contour = "square";
  std::string angle;
  int n = 128;
  int d = 0;
  std::string rhs = "f1";
  std::string op = "corrected";
  std::string orientation = "printed";
  int m = 40;
  int r = 24;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--contour", contour, "square | rhombus | lobe | lens, or a JSON object")->capture_default_str();
    cmd->add_option("--angle,--alpha,--theta", angle, "opening angle, e.g. 0.25pi or pi/4");
    cmd->add_option("--n", n, "mesh size")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--d", d, "spline degree")->capture_default_str()->check(CLI::Range(0, 8));
    cmd->add_option("--rhs", rhs, "f1 | f2")->capture_default_str();
    cmd->add_option("--operator", op, "corrected | plain")->capture_default_str();
    cmd->add_option("--orientation", orientation, "printed | local_model")->capture_default_str();
    cmd->add_option("--m", m, "inner quadrature panels")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--r", r, "Gauss points per panel")->capture_default_str()->check(CLI::Range(1, 64));
  }

  GalerkinOptions options(unsigned threads) const {
    GalerkinOptions o;
    o.inner = composite_rule(m, r);
    o.kind = parse_operator(op);
    o.orientation = parse_orientation(orientation);
    o.threads = threads;
    return o;
  }

  json echo(const ContourSpec& spec) const {
    return {{"contour", describe(spec)}, {"contour_arg", contour}, {"angle", angle}, {"n", n}, {"d", d},
            {"rhs", rhs}, {"operator", op}, {"orientation", orientation}, {"m", m}, {"r", r}};
  }
};

struct Manifest {
  json doc;
  Clock::time_point start = Clock::now();

  Manifest(const std::string& command, const std::vector<std::string>& args) {
    doc["command"] = command;
    doc["args"] = std::vector<std::string>(args.begin() + 1, args.end());
    doc["config"] = json::object();
    doc["timings"] = json::object();
    doc["outputs"] = json::array();
  }
  void output(const std::string& path, const std::string& hash) {
    doc["outputs"].push_back({{"path", path}, {"git_blob_sha1", hash}});
  }
  void write(const std::string& path) {
    doc["timings"]["total_s"] = seconds_since(start);
    write_text_file(path, doc.dump(2) + "\n");
  }
};

int cmd_solve(const SolveArgs& a, const std::string& out, const std::string& manifest_path, unsigned threads,
              const std::vector<std::string>& args) {
  Manifest manifest("solve", args);
  const ContourSpec spec = parse_contour(a.contour, a.angle);
  manifest.doc["config"] = a.echo(spec);
  const SplineSpace space(Contour(spec), a.n, a.d);
  auto t0 = Clock::now();
  const RealBlockSystem sys = assemble(space, parse_rhs(a.rhs), a.options(threads));
  manifest.doc["timings"]["assemble_s"] = seconds_since(t0);
  t0 = Clock::now();
  const GalerkinSolution sol = solve(space, sys);
  manifest.doc["timings"]["solve_s"] = seconds_since(t0);
  manifest.doc["result"] = {{"unknowns", space.size()}, {"cond", sol.cond}, {"residual", sol.residual}};

  std::ostringstream csv;
  write_density_csv(csv, sol, composite_rule(a.m, a.r));
  manifest.output(out, write_text_file(out, csv.str()));
  manifest.write(manifest_path);
  std::cout << "solve: " << describe(spec) << " n=" << a.n << " d=" << a.d << " cond=" << fixed(sol.cond)
            << " -> " << out << "\n";
  return kOk;
}

int cmd_table1(const std::string& columns, const std::string& alphas, const std::string& ns, const std::string& op,
               const std::string& out, const std::string& manifest_path, unsigned threads,
               const std::vector<std::string>& args) {
  Manifest manifest("table1", args);
  const auto cols = split(columns, ',');
  const auto angles = parse_angle_list(alphas);
  const auto meshes = parse_int_list(ns);
  for (const auto& c : cols) parse_rhs(c);
  manifest.doc["config"] = {{"columns", cols}, {"alphas", alphas}, {"n", meshes}, {"operator", op}, {"d", 0}};

  GalerkinOptions options;
  options.kind = parse_operator(op);
  options.threads = threads;
  std::ostringstream csv;
  csv << "column,alpha_over_pi,n,rel_error\n";
  json cells = json::array();
  for (const auto& col : cols) {
    const BoundaryFunction f = parse_rhs(col);
    for (double alpha : angles) {
      const Contour contour(Rhombus{alpha});
      for (int n : meshes) {
        const auto t0 = Clock::now();
        const SplineSpace coarse(contour, n, 0), fine(contour, 2 * n, 0);
        const SolveOptions so{.compute_cond = false};
        const GalerkinSolution sc = solve(coarse, assemble(coarse, f, options), so);
        const GalerkinSolution sf = solve(fine, assemble(fine, f, options), so);
        const double err = relative_error(sc, sf);
        csv << col << ',' << fixed(alpha / pi) << ',' << n << ',' << std::setprecision(10) << err << '\n';
        cells.push_back({{"column", col}, {"alpha_over_pi", alpha / pi}, {"n", n}, {"rel_error", err},
                         {"time_s", seconds_since(t0)}});
        std::cout << "table1: " << col << " alpha=" << fixed(alpha / pi) << "pi n=" << n << " E=" << fixed(err, 4)
                  << "\n";
      }
    }
  }
  manifest.doc["timings"]["cells"] = cells;
  manifest.output(out, write_text_file(out, csv.str()));
  manifest.write(manifest_path);
  return kOk;
}

struct ScanArgs {
  std::string geometry = "one_corner";
  int d = 0;
  int n = 128;
  std::string theta_min = "0.1pi", theta_max = "1.9pi", step = "0.01pi";
  bool refine = false;
  std::string refine_step = "0.001pi";
  int refine_n_factor = 2;
  double peak_factor = 10.0;
  std::string op = "corrected";
  bool timing = false;
};

int cmd_scan(const ScanArgs& a, const std::string& out, const std::string& manifest_path, unsigned threads,
             const std::vector<std::string>& args) {
  Manifest manifest("scan", args);
  SweepConfig config;
  config.geometry = parse_geometry(a.geometry);
  config.d = a.d;
  config.n = a.n;
  config.theta_min = parse_angle(a.theta_min);
  config.theta_max = parse_angle(a.theta_max);
  config.theta_step = parse_angle(a.step);
  config.refine = a.refine;
  config.refine_step = parse_angle(a.refine_step);
  config.refine_n_factor = a.refine_n_factor;
  config.peak_factor = a.peak_factor;
  config.kind = parse_operator(a.op);
  config.threads = threads;
  manifest.doc["config"] = {{"geometry", a.geometry}, {"d", a.d}, {"n", a.n}, {"theta_min", a.theta_min},
                            {"theta_max", a.theta_max}, {"step", a.step}, {"refine", a.refine},
                            {"refine_step", a.refine_step}, {"refine_n_factor", a.refine_n_factor},
                            {"peak_factor", a.peak_factor}, {"operator", a.op}};

  const auto records = angle_sweep(config);
  json point_times = json::array();
  int failures = 0;
  for (const auto& r : records) {
    point_times.push_back({{"theta_over_pi", r.theta / pi}, {"wall_time_s", r.wall_time}});
    if (!r.error.empty()) {
      ++failures;
      std::cerr << "scan: theta=" << fixed(r.theta / pi) << "pi failed: " << r.error << "\n";
    }
  }
  manifest.doc["timings"]["points"] = point_times;
  std::ostringstream csv;
  write_sweep_csv(csv, records, a.timing);
  manifest.output(out, write_text_file(out, csv.str()));

  const auto peaks = find_peaks(records, config.peak_factor);
  json peak_doc = json::array();
  std::vector<SweepRecord> refined;
  for (double t : peaks) {
    json entry = {{"theta_over_pi", t / pi}};
    if (config.refine) {
      const RefineResult rr = refine(t, config);
      entry["verdict"] = rr.cleared ? "cleared" : "persistent";
      refined.insert(refined.end(), rr.records.begin(), rr.records.end());
      std::cout << "scan: peak at " << fixed(t / pi) << "pi " << (rr.cleared ? "cleared" : "persists")
                << " after refinement\n";
    } else {
      std::cout << "scan: peak at " << fixed(t / pi) << "pi\n";
    }
    peak_doc.push_back(entry);
  }
  manifest.doc["peaks"] = peak_doc;
  if (!refined.empty()) {
    std::filesystem::path rp(out);
    rp.replace_filename(rp.stem().string() + "_refine" + rp.extension().string());
    std::ostringstream rcsv;
    write_sweep_csv(rcsv, refined, a.timing);
    manifest.output(rp.string(), write_text_file(rp.string(), rcsv.str()));
  }
  manifest.write(manifest_path);
  std::cout << "scan: " << records.size() << " angles, " << peaks.size() << " peaks -> " << out << "\n";
  return failures == static_cast<int>(records.size()) ? kNumericalFailure : kOk;
}

int cmd_localop(const std::string& thetas, const std::string& betas, int d, int N, const std::string& phases,
                const std::string& out, const std::string& manifest_path, const std::vector<std::string>& args) {
  Manifest manifest("localop", args);
  PhaseConvention pc;
  if (phases == "double_angle") pc = PhaseConvention::double_angle;
  else if (phases == "single_angle") pc = PhaseConvention::single_angle;
  else throw BadInput("unknown phase convention '" + phases + "' (double_angle, single_angle)");
  if (N < 8) throw BadInput("--N must be at least 8");
  const auto ts = parse_angle_list(thetas);
  const auto bs = parse_angle_list(betas);
  manifest.doc["config"] = {{"theta", thetas}, {"beta", betas}, {"d", d}, {"N_trunc", N}, {"phases", phases}};

  std::ostringstream csv;
  csv << "theta,beta,d,N_trunc,cond\n";
  for (double t : ts) {
    if (!(t > 0.0 && t < 2.0 * pi)) throw BadInput("theta must lie in (0, 2pi)");
    for (double b : bs) {
      const double c = local_cond(t, b, d, N, pc);
      csv << std::setprecision(17) << t << ',' << b << ',' << d << ',' << N << ',' << c << '\n';
      std::cout << "localop: theta=" << fixed(t / pi) << "pi beta=" << fixed(b / pi) << "pi cond=" << fixed(c)
                << "\n";
    }
  }
  manifest.output(out, write_text_file(out, csv.str()));
  manifest.write(manifest_path);
  return kOk;
}

int cmd_reconstruct(const SolveArgs& a, const std::string& box, double step, const std::string& out,
                    const std::string& manifest_path, unsigned threads, const std::vector<std::string>& args) {
  Manifest manifest("reconstruct", args);
  const ContourSpec spec = parse_contour(a.contour, a.angle);
  const Contour contour(spec);
  manifest.doc["config"] = a.echo(spec);
  manifest.doc["config"]["step"] = step;

  double x0, x1, y0, y1;
  if (box.empty()) {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -x0;
    for (double s : composite_rule(64, 8).nodes) {
      const cplx z = contour.point(s);
      x0 = std::min(x0, z.real()), x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag()), y1 = std::max(y1, z.imag());
    }
  } else {
    std::vector<double> v;
    for (const auto& p : split(box, ',')) v.push_back(std::stod(p));
    if (v.size() != 4) throw BadInput("--box expects x0,x1,y0,y1");
    x0 = v[0], x1 = v[1], y0 = v[2], y1 = v[3];
  }
  manifest.doc["config"]["box"] = {x0, x1, y0, y1};

  const SplineSpace space(contour, a.n, a.d);
  auto t0 = Clock::now();
  const GalerkinSolution sol = solve(space, assemble(space, parse_rhs(a.rhs), a.options(threads)));
  manifest.doc["timings"]["solve_s"] = seconds_since(t0);
  t0 = Clock::now();
  const Goursat goursat(space, sol.coeffs);
  const FieldGrid field = reconstruct_u(grid_points(x0, x1, y0, y1, step), goursat, threads);
  manifest.doc["timings"]["reconstruct_s"] = seconds_since(t0);

  std::ostringstream csv;
  write_field_csv(csv, field);
  manifest.output(out, write_text_file(out, csv.str()));
  manifest.write(manifest_path);
  std::cout << "reconstruct: " << describe(spec) << " n=" << a.n << " -> " << out << "\n";
  return kOk;
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([0-9]*\.?[0-9]*(?:[eE][-+]?[0-9]+)?)\s*\*?\s*pi(?:\s*/\s*([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double factor = m[1].length() ? std::stod(m[1].str()) : 1.0;
    const double divisor = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (divisor == 0.0) throw BadInput("angle '" + text + "' divides by zero");
    return factor * pi / divisor;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw BadInput("cannot parse angle '" + text + "' (use e.g. 0.5pi, pi/3 or radians)");
}

ContourSpec parse_contour(const std::string& text, const std::string& angle) {
  std::string kind = text;
  std::string angle_text = angle;
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw BadInput(std::string("contour JSON: ") + e.what());
    }
    if (!j.contains("kind") || !j["kind"].is_string()) throw BadInput("contour JSON needs a string 'kind'");
    kind = j["kind"].get<std::string>();
    for (const char* key : {"alpha", "theta", "angle"}) {
      if (!j.contains(key)) continue;
      angle_text = j[key].is_string() ? j[key].get<std::string>() : fixed(j[key].get<double>(), 17);
    }
  }
  auto need_angle = [&]() {
    if (angle_text.empty()) throw BadInput("contour '" + kind + "' needs an angle");
    return parse_angle(angle_text);
  };
  ContourSpec spec;
  if (kind == "square") spec = UnitSquare{};
  else if (kind == "rhombus") spec = Rhombus{need_angle()};
  else if (kind == "lobe" || kind == "one_corner") spec = OneCornerLobe{need_angle()};
  else if (kind == "lens" || kind == "two_corner") spec = TwoCornerLens{need_angle()};
  else throw BadInput("unknown contour '" + kind + "' (square, rhombus, lobe, lens)");
  // reject angles outside the family's range here rather than as a numerical failure
  try {
    Contour{spec};
  } catch (const std::domain_error& e) {
    throw BadInput(e.what());
  }
  return spec;
}

std::string git_blob_sha1(const std::string& content) {
  std::string payload = "blob " + std::to_string(content.size());
  payload.push_back('\0');
  payload += content;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha1(), nullptr) != 1) {
    throw std::runtime_error("SHA-1 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Spline Galerkin solver for the Sherman-Lauricella equation"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: LG_THREADS or all cores)");

  std::string out, manifest;

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve the equation and write the density");
  solve_args.add_to(solve_cmd);
  solve_cmd->add_option("--out,-o", out, "output CSV");

  std::string columns = "f1,f2", alphas = "pi/2", ns = "128,256,512", table_op = "plain";
  auto* table_cmd = app.add_subcommand("table1", "relative errors on rhombi, d = 0");
  table_cmd->add_option("--column", columns, "f1, f2 or both")->capture_default_str();
  table_cmd->add_option("--alphas", alphas, "comma-separated opening angles")->capture_default_str();
  table_cmd->add_option("--n", ns, "comma-separated meshes")->capture_default_str();
  table_cmd->add_option("--operator", table_op, "plain | corrected")->capture_default_str();
  table_cmd->add_option("--out,-o", out, "output CSV");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "condition numbers over opening angles");
  scan_cmd->add_option("--geometry", scan_args.geometry, "one_corner | two_corner")->capture_default_str();
  scan_cmd->add_option("--d", scan_args.d, "spline degree")->capture_default_str()->check(CLI::Range(0, 8));
  scan_cmd->add_option("--n", scan_args.n, "mesh size")->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--min", scan_args.theta_min, "first angle")->capture_default_str();
  scan_cmd->add_option("--max", scan_args.theta_max, "last angle")->capture_default_str();
  scan_cmd->add_option("--step", scan_args.step, "angle step")->capture_default_str();
  scan_cmd->add_flag("--refine", scan_args.refine, "re-sweep around peaks");
  scan_cmd->add_option("--refine-step", scan_args.refine_step, "refined angle step")->capture_default_str();
  scan_cmd->add_option("--refine-n-factor", scan_args.refine_n_factor, "mesh multiplier when refining")
      ->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--peak-factor", scan_args.peak_factor, "peak threshold")->capture_default_str();
  scan_cmd->add_option("--operator", scan_args.op, "corrected | plain")->capture_default_str();
  scan_cmd->add_flag("--timing", scan_args.timing, "write wall times into the CSV");
  scan_cmd->add_option("--out,-o", out, "output CSV");

  std::string lo_theta = "0.5pi", lo_beta = "0", lo_phases = "double_angle";
  int lo_d = 0, lo_N = 128;
  auto* local_cmd = app.add_subcommand("localop", "condition numbers of the corner operator");
  local_cmd->add_option("--theta", lo_theta, "comma-separated opening angles")->capture_default_str();
  local_cmd->add_option("--beta", lo_beta, "comma-separated tangent angles")->capture_default_str();
  local_cmd->add_option("--d", lo_d, "spline degree")->capture_default_str()->check(CLI::Range(0, 8));
  local_cmd->add_option("--N", lo_N, "truncation size")->capture_default_str();
  local_cmd->add_option("--phases", lo_phases, "double_angle | single_angle")->capture_default_str();
  local_cmd->add_option("--out,-o", out, "output CSV");

  SolveArgs rec_args;
  std::string box;
  double step = 0.02;
  auto* rec_cmd = app.add_subcommand("reconstruct", "biharmonic field on a grid");
  rec_args.add_to(rec_cmd);
  rec_cmd->add_option("--box", box, "x0,x1,y0,y1 (default: bounding box of the contour)");
  rec_cmd->add_option("--step", step, "grid spacing")->capture_default_str()->check(CLI::PositiveNumber);
  rec_cmd->add_option("--out,-o", out, "output CSV");

  for (auto* cmd : {solve_cmd, table_cmd, scan_cmd, local_cmd, rec_cmd}) {
    cmd->add_option("--manifest", manifest, "run manifest (default: <out>.manifest.json)");
    cmd->add_option("--threads", threads, "worker threads (default: LG_THREADS or all cores)");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArguments;
  }

  auto output_or = [&](const std::string& def) { return out.empty() ? def : out; };
  try {
    if (*solve_cmd) {
      const std::string o = output_or("density.csv");
      return cmd_solve(solve_args, o, manifest.empty() ? default_manifest_path(o) : manifest, threads, args);
    }
    if (*table_cmd) {
      const std::string o = output_or("table1.csv");
      return cmd_table1(columns, alphas, ns, table_op, o, manifest.empty() ? default_manifest_path(o) : manifest,
                        threads, args);
    }
    if (*scan_cmd) {
      const std::string o = output_or("scan.csv");
      return cmd_scan(scan_args, o, manifest.empty() ? default_manifest_path(o) : manifest, threads, args);
    }
    if (*local_cmd) {
      const std::string o = output_or("localop.csv");
      return cmd_localop(lo_theta, lo_beta, lo_d, lo_N, lo_phases, o,
                         manifest.empty() ? default_manifest_path(o) : manifest, args);
    }
    const std::string o = output_or("field.csv");
    return cmd_reconstruct(rec_args, box, step, o, manifest.empty() ? default_manifest_path(o) : manifest, threads,
                           args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kBadArguments;
  } catch (const SingularSystem& e) {
    std::cerr << "numerical failure: " << e.what() << " (cond " << e.cond() << ")\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace slg::cli
