#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chermnykh/config.hpp"
#include "chermnykh/dynamics.hpp"
#include "chermnykh/errors.hpp"
#include "chermnykh/series.hpp"
#include "chermnykh/stability.hpp"
#include "chermnykh/zvc.hpp"

using namespace chermnykh;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum Exit {
  kOk = 0,
  kInvalid = 2,
  kNumeric = 3,
  kZvc = 4,
  kCritmass = 5,
  kBands = 6,
  kIntegrate = 7
};

/// Raised for command failures that map to a specific exit code.
struct CommandError : std::runtime_error {
  CommandError(const std::string& what, int code) : std::runtime_error(what), code(code) {}
  int code;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::string(buf) == "-0" ? "0" : buf;
}

/// Value rounded to 9 significant digits so JSON output matches CSV.
json j9(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(fmt(v).c_str(), nullptr);
}

/// Columnar output shared by all commands.
class Table {
 public:
  using Cell = std::variant<double, std::string, long>;

  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.empty(); }

  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                out << fmt(v);
              } else {
                out << v;
              }
            },
            row[i]);
      }
      out << '\n';
    }
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& row : rows_) {
      json obj = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                obj[columns_[i]] = j9(v);
              } else {
                obj[columns_[i]] = v;
              }
            },
            row[i]);
      }
      arr.push_back(obj);
    }
    return arr;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct ParamFlags {
  std::string preset = "paper";
  bool classical = false;
  std::string config;
  std::optional<double> mu, q1, a2, disk_a, disk_b, disk_h, disk_c, disk_mb, r_ref;
  std::string pi;
  std::string potential;
};

struct OutputFlags {
  std::string out;
  std::string format = "csv";
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--preset", f.preset, "Parameter preset")
      ->check(CLI::IsMember({"paper", "classical"}));
  cmd->add_flag("--classical", f.classical, "Classical problem: q1 = 1, A2 = 0, no disk");
  cmd->add_option("--config", f.config, "Parameter file (key = value)");
  cmd->add_option("--mu", f.mu, "Mass ratio");
  cmd->add_option("--q1", f.q1, "Mass reduction factor");
  cmd->add_option("--a2", f.a2, "Oblateness coefficient");
  cmd->add_option("--disk-a", f.disk_a, "Disk inner radius");
  cmd->add_option("--disk-b", f.disk_b, "Disk outer radius");
  cmd->add_option("--disk-h", f.disk_h, "Disk thickness");
  auto* c = cmd->add_option("--disk-c", f.disk_c, "Disk density constant");
  auto* mb = cmd->add_option("--disk-mb", f.disk_mb, "Disk mass");
  c->excludes(mb);
  cmd->add_option("--rref", f.r_ref, "Reference radius for the mean motion");
  cmd->add_option("--pi", f.pi, "pi value: exact or paper (3.14)")
      ->check(CLI::IsMember({"exact", "paper"}));
  cmd->add_option("--potential", f.potential, "Disk potential in Omega: consistent or printed")
      ->check(CLI::IsMember({"consistent", "printed"}));
}

void add_output_flags(CLI::App* cmd, OutputFlags& f, const std::string& out_help) {
  cmd->add_option("--out", f.out, out_help);
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

SystemParams build_params(const ParamFlags& f) {
  SystemParams p;
  if (!f.config.empty()) {
    p = load_params(f.config);
  } else if (f.classical || f.preset == "classical") {
    p = classical_preset(paper_preset().mu);
  } else {
    p = paper_preset();
  }
  if (f.mu) p.mu = *f.mu;
  if (f.q1) p.q1 = *f.q1;
  if (f.a2) p.a2 = *f.a2;
  if (f.r_ref) p.r_ref = *f.r_ref;
  if (!f.pi.empty()) p.pi_mode = parse_pi_mode(f.pi);
  if (!f.potential.empty()) p.potential = parse_potential(f.potential);

  const bool geometry = f.disk_a || f.disk_b || f.disk_h;
  if (geometry || f.disk_c || f.disk_mb) {
    const double a = f.disk_a.value_or(p.disk.a);
    const double b = f.disk_b.value_or(geometry && !f.disk_b ? std::max(a, p.disk.b) : p.disk.b);
    const double h = f.disk_h.value_or(p.disk.h);
    if (f.disk_c) {
      p.disk = DiskProfile{a, b, h, *f.disk_c};
    } else if (f.disk_mb) {
      p.disk = DiskProfile::from_mass(a, b, h, *f.disk_mb, p.pi_mode);
    } else if (b != a && p.disk.vanishes()) {
      throw ModelError("disk with b != a needs --disk-c or --disk-mb");
    } else {
      p.disk = DiskProfile::from_mass(a, b, h, p.disk.mass(p.pi_mode), p.pi_mode);
    }
  }
  p.validate();
  return p;
}

/// Write to --out (or stdout when empty) in the selected format.
void emit(const Table& table, const OutputFlags& o) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw ModelError("cannot write '" + o.out + "'");
    out = &file;
  }
  if (o.format == "json") {
    *out << table.to_json().dump(2) << '\n';
  } else {
    table.write_csv(*out);
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw ModelError("cannot write '" + path.string() + "'");
  f << text;
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    s << t.to_json().dump(2) << '\n';
  } else {
    t.write_csv(s);
  }
  return s.str();
}

std::string ext(const std::string& format) { return format == "json" ? ".json" : ".csv"; }

// ---------------------------------------------------------------- equilibria

struct EquilibriaFlags {
  bool no_series = false;
  bool no_triangular = false;
};

int cmd_equilibria(const SystemParams& params, const EquilibriaFlags& e, const OutputFlags& o) {
  const Model model(params);
  Table t({"label", "x", "y", "method", "interval", "residual", "relative_residual",
           "interval_violation", "warning"});
  auto row = [&](const EquilibriumPoint& p) {
    t.add({to_string(p.label), p.x, p.y, to_string(p.method), to_string(p.interval), p.residual,
           p.relative_residual, static_cast<long>(p.interval_violation),
           static_cast<long>(p.warning)});
  };
  try {
    for (const auto& p : collinear_points(model)) row(p);
  } catch (const NumericError& err) {
    throw CommandError(err.what(), kNumeric);
  }
  if (!e.no_series) {
    for (CaseId id : {CaseId::Case1, CaseId::Case2i, CaseId::Case2ii, CaseId::Case3}) {
      try {
        const auto s = series_rho(id, model);
        row(series_to_point(id, s.rho, model));
      } catch (const std::domain_error& err) {
        std::cerr << "note: series " << to_string(id) << " skipped: " << err.what() << '\n';
      }
    }
  }
  if (!e.no_triangular) {
    for (auto m : {TriangularMethod::NewtonRefined, TriangularMethod::Series}) {
      try {
        const auto pair = triangular_points(model, m);
        row(pair.l4);
        row(pair.l5);
      } catch (const DomainError& err) {
        std::cerr << "note: " << err.what() << '\n';
      }
    }
  }
  emit(t, o);
  return kOk;
}

// -------------------------------------------------------------------- kcurve

struct KCurveFlags {
  std::vector<double> b_values{1.0, 1.2, 1.5, 2.0};
  bool classical_overlay = false;
  int samples = 2000;
  double x_max = 2.0;
  double exclusion = 1e-6;
  std::string hold = "mass";
  std::optional<double> held;
};

DiskHold parse_hold(const std::string& s) { return s == "density" ? DiskHold::Density : DiskHold::Mass; }

double held_value(const SystemParams& p, DiskHold hold, const std::optional<double>& given) {
  if (given) return *given;
  return hold == DiskHold::Mass ? p.disk.mass(p.pi_mode) : p.disk.c;
}

int cmd_kcurve(const SystemParams& params, const KCurveFlags& k, const OutputFlags& o) {
  const fs::path dir = o.out.empty() ? fs::path("kcurve") : fs::path(o.out);
  const DiskHold hold = parse_hold(k.hold);
  const double held = held_value(params, hold, k.held);
  const Interval branches[] = {Interval::Right, Interval::MidRight, Interval::MidLeft,
                               Interval::Left};

  auto run = [&](const Model& model, const std::string& tag) {
    int total = 0;
    std::string counts;
    for (Interval iv : branches) {
      const auto curve = k_curve(model, iv, k.x_max, k.samples, k.exclusion);
      Table t({"x", "K"});
      for (const auto& s : curve) t.add({s.x, s.k});
      write_file(dir / ("kcurve_" + tag + "_" + to_string(iv) + ext(o.format)), render(t, o.format));
      const int n = sign_changes(curve);
      total += n;
      counts += " " + to_string(iv) + "=" + std::to_string(n);
    }
    std::cout << tag << ": sign_changes" << counts << " total=" << total << '\n';
  };

  for (double b : k.b_values) {
    SystemParams p = with_outer_radius(params, b, hold, held);
    run(Model(p), "b" + fmt(b));
  }
  if (k.classical_overlay) {
    run(Model(classical_preset(params.mu)), "classical");
  }
  return kOk;
}

// ----------------------------------------------------------------------- zvc

struct ZvcFlags {
  std::vector<double> levels;
  std::vector<std::string> at;
  std::vector<double> window{-2.0, 2.0, -2.0, 2.0};
  std::vector<int> grid{800, 800};
  bool export_grid = false;
  bool limits = false;
};

double level_at(const Model& model, const std::string& label_text) {
  const auto label = parse_label(label_text);
  if (!label) throw ModelError("unknown point label '" + label_text + "'");
  if (*label == PointLabel::L4 || *label == PointLabel::L5) {
    return 2.0 * model.omega(triangular_points(model).l4.position());
  }
  for (const auto& p : collinear_points(model)) {
    if (p.label == *label) return 2.0 * model.omega(p.position());
  }
  throw CommandError("point " + label_text + " does not exist for these parameters", kZvc);
}

std::string contour_text(const ContourSet& cs, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    json lines = json::array();
    for (const auto& line : cs.polylines) {
      json pts = json::array();
      for (const auto& p : line) pts.push_back({j9(p.x), j9(p.y)});
      lines.push_back(pts);
    }
    s << json{{"level", j9(cs.level)}, {"polylines", lines}}.dump() << '\n';
    return s.str();
  }
  s << "# level " << fmt(cs.level) << '\n';
  for (std::size_t i = 0; i < cs.polylines.size(); ++i) {
    if (i) s << '\n';
    for (const auto& p : cs.polylines[i]) s << fmt(p.x) << ',' << fmt(p.y) << '\n';
  }
  return s.str();
}

int cmd_zvc(const SystemParams& params, const ZvcFlags& z, const OutputFlags& o) {
  const Model model(params);
  if (z.window.size() != 4) throw ModelError("--window needs x_min x_max y_min y_max");
  const Window w{z.window[0], z.window[1], z.window[2], z.window[3]};
  const int nx = z.grid.at(0);
  const int ny = z.grid.size() > 1 ? z.grid[1] : nx;
  const std::string prefix = o.out.empty() ? "zvc" : o.out;

  std::vector<std::pair<std::string, double>> levels;
  for (double c : z.levels) levels.emplace_back("C" + fmt(c), c);
  for (const auto& label : z.at) levels.emplace_back(label, level_at(model, label));

  const ZvGrid grid = sample_grid(model, w, nx, ny);
  if (z.export_grid) {
    Table t({"x", "y", "two_omega", "masked"});
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        t.add({grid.x(i), grid.y(j), grid.at(i, j), static_cast<long>(grid.masked(i, j))});
      }
    }
    write_file(prefix + "_grid" + ext(o.format), render(t, o.format));
  }
  for (const auto& [tag, c] : levels) {
    const ContourSet cs = extract_contours(grid, c, &model);
    write_file(prefix + "_" + tag + (o.format == "json" ? ".json" : ".csv"),
               contour_text(cs, o.format));
    std::cout << tag << ": level=" << fmt(c) << " polylines=" << cs.polylines.size()
              << " vertices=" << cs.vertex_count()
              << " allowed_components=" << count_components(grid, c, Region::Allowed)
              << " forbidden_components=" << count_components(grid, c, Region::Forbidden) << '\n';
  }
  if (z.limits) {
    const auto rep = limit_diagnostics(model, {2, 3, 5, 10, 20, 50}, {0.2, 0.1, 0.05, 0.02, 0.01});
    Table t({"regime", "radius", "level", "defect"});
    for (const auto& s : rep.far_field) t.add({std::string("far"), s.radius, s.level, s.defect});
    for (const auto& s : rep.near_field) t.add({std::string("near"), s.radius, s.level, s.defect});
    write_file(prefix + "_limits" + ext(o.format), render(t, o.format));
  }
  return kOk;
}

// ------------------------------------------------------------------ critmass

struct CritmassFlags {
  bool scan = false;
  std::vector<double> q1s{1.0, 0.75};
  std::vector<double> a2s{0.0, 0.0025, 0.005};
  double b_lo = 1.0;
  double b_hi = 2.0;
  double b_step = 0.01;
  std::string hold = "mass";
  std::optional<double> held;
};

int cmd_critmass(const SystemParams& params, const CritmassFlags& c, const OutputFlags& o) {
  if (!c.scan) {
    const auto r = critical_mass(params);
    std::cout << "mu_c=" << fmt(r.mu_c) << (r.saturated ? " saturated" : "") << '\n';
    if (!o.out.empty()) {
      Table t({"mu_c", "saturated", "discriminant"});
      t.add({r.mu_c, static_cast<long>(r.saturated), r.discriminant});
      emit(t, o);
    }
    return kOk;
  }
  const fs::path dir = o.out.empty() ? fs::path("critmass") : fs::path(o.out);
  const DiskHold hold = parse_hold(c.hold);
  const double held = held_value(params, hold, c.held);
  for (double q1 : c.q1s) {
    for (double a2 : c.a2s) {
      SystemParams p = params;
      p.q1 = q1;
      p.a2 = a2;
      const auto curve = critical_mass_curve(p, c.b_lo, c.b_hi, c.b_step, hold, held);
      Table t({"b", "mu_c", "saturated"});
      for (const auto& s : curve.samples) t.add({s.b, s.mu_c, static_cast<long>(s.saturated)});
      write_file(dir / ("critmass_q1_" + fmt(q1) + "_a2_" + fmt(a2) + ext(o.format)),
                 render(t, o.format));
      std::cout << "q1=" << fmt(q1) << " a2=" << fmt(a2)
                << " mu_c(b_lo)=" << fmt(curve.samples.front().mu_c)
                << " mu_c(b_hi)=" << fmt(curve.samples.back().mu_c) << '\n';
    }
  }
  return kOk;
}

// --------------------------------------------------------------------- bands

struct BandsFlags {
  std::string point = "L2";
  std::optional<double> b_lo;
  double b_hi = 2.0;
  double step = 1e-3;
  std::string hold = "mass";
  std::optional<double> held;
};

int cmd_bands(const SystemParams& params, const BandsFlags& b, const OutputFlags& o) {
  const auto label = parse_label(b.point);
  if (!label || interval_for(*label) == Interval::OffAxis) {
    throw ModelError("--point must be a collinear label (L1, L2, L3, l1)");
  }
  BandOptions opts;
  opts.b_lo = b.b_lo.value_or(params.disk.a);
  opts.b_hi = b.b_hi;
  opts.step = b.step;
  opts.hold = parse_hold(b.hold);
  opts.held_value = held_value(params, opts.hold, b.held);
  const BandScan scan = stability_band_scan(*label, params, opts);
  std::cout << b.point << " stable_b:";
  if (scan.stable.empty()) std::cout << " none";
  for (const auto& band : scan.stable) std::cout << " [" << fmt(band.lo) << ", " << fmt(band.hi) << "]";
  std::cout << " gaps=" << scan.gaps.size() << '\n';
  if (!o.out.empty()) {
    Table t({"b", "x", "verdict"});
    for (const auto& s : scan.samples) {
      t.add({s.b, s.verdict ? s.x : NAN,
             s.verdict ? to_string(*s.verdict) : std::string("absent")});
    }
    emit(t, o);
  }
  return kOk;
}

// ----------------------------------------------------------------- integrate

struct IntegrateFlags {
  std::vector<double> state;
  std::string from;
  std::vector<double> perturb{0.0, 0.0, 0.0, 0.0};
  double t_end = 20.0;
  double tol = 1e-12;
  double cadence = 1e-2;
};

int cmd_integrate(const SystemParams& params, const IntegrateFlags& f, const OutputFlags& o) {
  const Model model(params);
  State s0;
  if (!f.from.empty()) {
    const auto label = parse_label(f.from);
    if (!label) throw ModelError("unknown point label '" + f.from + "'");
    std::optional<Point2> at;
    if (*label == PointLabel::L4 || *label == PointLabel::L5) {
      const auto pair = triangular_points(model);
      at = (*label == PointLabel::L4 ? pair.l4 : pair.l5).position();
    } else {
      for (const auto& p : collinear_points(model)) {
        if (p.label == *label) at = p.position();
      }
    }
    if (!at) throw CommandError("point " + f.from + " does not exist", kIntegrate);
    s0 = {at->x, at->y, 0.0, 0.0};
  } else if (f.state.size() == 4) {
    s0 = {f.state[0], f.state[1], f.state[2], f.state[3]};
  } else {
    throw ModelError("give --state x y vx vy or --from LABEL");
  }
  if (f.perturb.size() != 4) throw ModelError("--perturb needs dx dy dvx dvy");
  s0.x += f.perturb[0];
  s0.y += f.perturb[1];
  s0.vx += f.perturb[2];
  s0.vy += f.perturb[3];

  IntegrateOptions opts;
  opts.tol = f.tol;
  opts.cadence = f.cadence;
  const Trajectory tr = integrate(s0, f.t_end, model, opts);
  Table t({"t", "x", "y", "vx", "vy", "C"});
  for (const auto& s : tr.samples) {
    t.add({s.t, s.state.x, s.state.y, s.state.vx, s.state.vy, s.jacobi});
  }
  emit(t, o);
  std::cerr << "samples=" << tr.samples.size() << " c_drift=" << fmt(tr.c_drift)
            << " termination=" << to_string(tr.termination) << '\n';
  return tr.termination == Termination::Completed ? kOk : kIntegrate;
}

// ----------------------------------------------------------------- stability

int cmd_stability(const SystemParams& params, const OutputFlags& o) {
  const Model model(params);
  std::vector<EquilibriumPoint> points = collinear_points(model);
  std::optional<EquilibriumPoint> l4;
  try {
    const auto pair = triangular_points(model);
    if (!pair.l4.warning) {
      points.push_back(pair.l4);
      points.push_back(pair.l5);
      l4 = pair.l4;
    }
  } catch (const DomainError&) {
  }
  Table t({"label", "x", "y", "p", "q", "discriminant", "omega_xx", "omega_yy", "omega_xy",
           "lambda1_re", "lambda1_im", "lambda2_re", "lambda2_im", "lambda3_re", "lambda3_im",
           "lambda4_re", "lambda4_im", "max_re", "verdict"});
  for (const auto& p : points) {
    const auto r = classify(p, model);
    std::vector<Table::Cell> row{to_string(p.label), p.x, p.y, r.quartic.p, r.quartic.q,
                                 r.discriminant, r.hessian.xx, r.hessian.yy, r.hessian.xy};
    for (const auto& l : r.lambdas) {
      row.emplace_back(l.real());
      row.emplace_back(l.imag());
    }
    row.emplace_back(r.max_real);
    row.emplace_back(to_string(r.verdict));
    t.add(std::move(row));
  }
  emit(t, o);
  if (l4) {
    const auto terms = l4_condition_terms(model, *l4);
    const auto pq = characteristic_coefficients(*l4, model);
    std::cerr << "L4 closed form: p=" << fmt(terms.p_l4) << " q=" << fmt(terms.q_l4)
              << " gamma0=" << fmt(terms.gamma0) << " | hessian: p=" << fmt(pq.p)
              << " q=" << fmt(pq.q) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, stability and zero-velocity curves of the photogravitational "
               "restricted three-body problem with a power-law disk"};
  app.require_subcommand(1);

  ParamFlags pf;
  OutputFlags of;

  EquilibriaFlags ef;
  auto* eq = app.add_subcommand("equilibria", "All equilibrium points with residuals");
  add_param_flags(eq, pf);
  add_output_flags(eq, of, "Output file (default stdout)");
  eq->add_flag("--no-series", ef.no_series, "Skip the series estimates");
  eq->add_flag("--no-triangular", ef.no_triangular, "Skip L4/L5");

  KCurveFlags kf;
  auto* kc = app.add_subcommand("kcurve", "K(x) samples per interval branch");
  add_param_flags(kc, pf);
  add_output_flags(kc, of, "Output directory (default ./kcurve)");
  kc->add_option("--b", kf.b_values, "Outer radii to sample");
  kc->add_flag("--classical-overlay", kf.classical_overlay, "Also emit the classical curves");
  kc->add_option("--samples", kf.samples, "Samples per branch");
  kc->add_option("--x-max", kf.x_max, "Half-width of the sampled x range");
  kc->add_option("--exclusion", kf.exclusion, "Distance kept from each pole");
  kc->add_option("--hold", kf.hold, "Keep disk mass or density fixed when b changes")
      ->check(CLI::IsMember({"mass", "density"}));
  kc->add_option("--held", kf.held, "Held value (default: from the parameters)");

  ZvcFlags zf;
  auto* zv = app.add_subcommand("zvc", "Zero-velocity curves");
  add_param_flags(zv, pf);
  add_output_flags(zv, of, "Output file prefix (default ./zvc)");
  zv->add_option("--C", zf.levels, "Jacobi constant(s)");
  zv->add_option("--at", zf.at, "Use 2 Omega at a labelled point as level");
  zv->add_option("--window", zf.window, "x_min x_max y_min y_max")->expected(4);
  zv->add_option("--grid", zf.grid, "nx [ny]")->expected(1, 2);
  zv->add_flag("--export-grid", zf.export_grid, "Also write the sampled 2 Omega grid");
  zv->add_flag("--limits", zf.limits, "Write far-field and near-field limit diagnostics");

  CritmassFlags cf;
  auto* cm = app.add_subcommand("critmass", "Critical mass ratio for L4 stability");
  add_param_flags(cm, pf);
  add_output_flags(cm, of, "Output file, or directory with --scan (default ./critmass)");
  cm->add_flag("--scan", cf.scan, "Scan mu_c over b for every (q1, A2) pair");
  cm->add_option("--scan-q1", cf.q1s, "q1 values for --scan");
  cm->add_option("--scan-a2", cf.a2s, "A2 values for --scan");
  cm->add_option("--b-lo", cf.b_lo, "First outer radius");
  cm->add_option("--b-hi", cf.b_hi, "Last outer radius");
  cm->add_option("--b-step", cf.b_step, "Outer radius step");
  cm->add_option("--hold", cf.hold, "Keep disk mass or density fixed when b changes")
      ->check(CLI::IsMember({"mass", "density"}));
  cm->add_option("--held", cf.held, "Held value (default: from the parameters)");

  BandsFlags bf;
  auto* bd = app.add_subcommand("bands", "Disk widths over which a collinear point is stable");
  add_param_flags(bd, pf);
  add_output_flags(bd, of, "Per-sample output file (default: summary only)");
  bd->add_option("--point", bf.point, "L1, L2, L3 or l1");
  bd->add_option("--b-lo", bf.b_lo, "First outer radius (default a)");
  bd->add_option("--b-hi", bf.b_hi, "Last outer radius");
  bd->add_option("--step", bf.step, "Outer radius step");
  bd->add_option("--hold", bf.hold, "Keep disk mass or density fixed when b changes")
      ->check(CLI::IsMember({"mass", "density"}));
  bd->add_option("--held", bf.held, "Held value (default: from the parameters)");

  IntegrateFlags inf;
  auto* in = app.add_subcommand("integrate", "Integrate the planar equations of motion");
  add_param_flags(in, pf);
  add_output_flags(in, of, "Output file (default stdout)");
  in->add_option("--state", inf.state, "x y vx vy")->expected(4);
  in->add_option("--from", inf.from, "Start at a labelled equilibrium");
  in->add_option("--perturb", inf.perturb, "dx dy dvx dvy")->expected(4);
  in->add_option("--t-end", inf.t_end, "Final time (negative integrates backward)");
  in->add_option("--tol", inf.tol, "Local error tolerance");
  in->add_option("--cadence", inf.cadence, "Output spacing");

  auto* st = app.add_subcommand("stability", "Linear stability of every equilibrium");
  add_param_flags(st, pf);
  add_output_flags(st, of, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  int failure = kNumeric;
  try {
    const SystemParams params = build_params(pf);
    if (*eq) return cmd_equilibria(params, ef, of);
    if (*kc) return cmd_kcurve(params, kf, of);
    if (*zv) {
      failure = kZvc;
      return cmd_zvc(params, zf, of);
    }
    if (*cm) {
      failure = kCritmass;
      return cmd_critmass(params, cf, of);
    }
    if (*bd) {
      failure = kBands;
      return cmd_bands(params, bf, of);
    }
    if (*in) {
      failure = kIntegrate;
      return cmd_integrate(params, inf, of);
    }
    if (*st) return cmd_stability(params, of);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
  return kOk;
}
