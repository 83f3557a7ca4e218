#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmink/verify.hpp"
#include "svg.hpp"

using json = nlohmann::ordered_json;
using namespace qmink;

namespace {

struct RunConfig {
  double q = 1.1;
  std::string sector;
  double scale = 1.0;
  int j_max = -1;
  int n_max = -1;
  std::string nrange;
  std::string Mrange;
  int margin = 0;
  double tol = 1e-10;
  std::string format;
  std::string out;
  std::string phases;
  unsigned threads = 0;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("range '" + s + "' must look like a:b");
  const int a = std::stoi(s.substr(0, colon));
  const int b = std::stoi(s.substr(colon + 1));
  if (a > b) throw std::invalid_argument("range '" + s + "' is empty");
  return {a, b};
}

LightPhases parse_phases(const std::string& s) {
  LightPhases out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto [n, a] = std::pair{item.substr(0, item.find(':')), item.substr(item.find(':') + 1)};
    if (item.find(':') == std::string::npos) throw std::invalid_argument("phase '" + item + "' must look like n:alpha");
    out[std::stoi(n)] = std::stod(a);
  }
  return out;
}

TruncationWindow window_for(const RunConfig& c, SectorKind kind) {
  TruncationWindow w = TruncationWindow::defaults(kind);
  if (c.j_max >= 0) w.j_max = c.j_max;
  if (!c.nrange.empty()) std::tie(w.n_lo, w.n_hi) = parse_range(c.nrange);
  if (!c.Mrange.empty() && kind != SectorKind::LightLike) std::tie(w.M_lo, w.M_hi) = parse_range(c.Mrange);
  w.margin = c.margin;
  return w;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string num(double v) {
  std::ostringstream o;
  o << std::setprecision(17) << v;
  return o.str();
}

json window_json(const TruncationWindow& w) {
  return {{"j_max", w.j_max}, {"n", {w.n_lo, w.n_hi}}, {"M", {w.M_lo, w.M_hi}}, {"margin", w.margin}};
}

int cmd_spectrum(const RunConfig& c) {
  const DeformationParams p(c.q);
  std::vector<SectorKind> kinds;
  if (c.sector.empty())
    kinds = {SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward, SectorKind::SpaceLike};
  else
    kinds = {parse_sector(c.sector)};
  std::vector<SpectrumPoint> pts;
  for (SectorKind k : kinds) {
    const Sector s(k, c.scale);
    s.validate(p);
    TruncationWindow w = window_for(c, k);
    if (c.n_max >= 0) {
      w.n_hi = c.n_max;
      if (!s.time_like()) w.n_lo = -c.n_max;
    }
    const auto v = spectrum_points(s, w.n_lo, w.n_hi, w.M_lo, w.M_hi, p);
    pts.insert(pts.end(), v.begin(), v.end());
  }
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  Output out(c.out);
  if (fmt == "csv") {
    out.os() << "sector,M,n,t,r\n";
    for (const auto& pt : pts)
      out.os() << sector_name(pt.sector) << ',' << pt.M << ',' << pt.n << ',' << num(pt.t) << ',' << num(pt.r) << '\n';
  } else if (fmt == "json") {
    json j{{"schema", 1}, {"q", c.q}, {"scale", c.scale}, {"points", json::array()}};
    for (const auto& pt : pts)
      j["points"].push_back({{"sector", sector_name(pt.sector)}, {"n", pt.n}, {"M", pt.M}, {"r", pt.r}, {"t", pt.t}});
    out.os() << std::setw(2) << j << '\n';
  } else if (fmt == "svg") {
    out.os() << cli::spectrum_svg(pts, c.q);
  } else {
    throw std::invalid_argument("spectrum format must be csv, json or svg");
  }
  return 0;
}

OperatorSet build_ops(const RunConfig& c, SectorKind kind) {
  const DeformationParams p(c.q);
  const Sector s(kind, c.scale);
  s.validate(p);
  OperatorOptions opt;
  opt.phases = parse_phases(c.phases);
  return OperatorSet(s, window_for(c, kind), p, opt);
}

int cmd_verify(const RunConfig& c) {
  const SectorKind kind = c.sector.empty() ? SectorKind::SpaceLike : parse_sector(c.sector);
  const DeformationParams p(c.q);
  const OperatorSet ops = build_ops(c, kind);
  const auto reports = evaluate_all(relation_catalog(p), ops, c.tol, c.threads);
  std::size_t pass = 0, fail = 0, inconclusive = 0, skipped = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass:
        ++pass;
        break;
      case Status::Fail:
        ++fail;
        break;
      case Status::Inconclusive:
        ++inconclusive;
        break;
      case Status::NotRepresentable:
        ++skipped;
        break;
    }
  }
  const std::string fmt = c.format.empty() ? "table" : c.format;
  Output out(c.out);
  if (fmt == "table") {
    auto& os = out.os();
    os << "sector " << sector_name(kind) << "  q=" << c.q << "  scale=" << c.scale << "  dim=" << ops.basis().size()
       << "  tol=" << c.tol << "\n";
    os << std::left << std::setw(4) << "grp" << std::setw(16) << "relation" << std::right << std::setw(9) << "interior"
       << std::setw(13) << "max" << std::setw(13) << "normalized" << std::setw(13) << "frobenius" << "  status\n";
    os << std::scientific << std::setprecision(3);
    for (const auto& r : reports) {
      os << std::left << std::setw(4) << r.group << std::setw(16) << r.name << std::right << std::setw(9)
         << r.interior_dim;
      if (r.status == Status::NotRepresentable) {
        os << std::setw(39) << "" << "  not representable (no momenta on the light cone)\n";
        continue;
      }
      os << std::setw(13) << r.max_residual << std::setw(13) << r.normalized << std::setw(13) << r.frobenius << "  "
         << status_name(r.status) << '\n';
    }
    os << std::defaultfloat;
    os << pass << " pass, " << fail << " fail, " << inconclusive << " inconclusive, " << skipped
       << " not representable\n";
  } else if (fmt == "json") {
    json j{{"schema", 1},
           {"q", c.q},
           {"sector", sector_name(kind)},
           {"scale", c.scale},
           {"window", window_json(ops.basis().window())},
           {"dimension", ops.basis().size()},
           {"tol", c.tol},
           {"relations", json::array()}};
    for (const auto& r : reports)
      j["relations"].push_back({{"name", r.name},
                                {"group", r.group},
                                {"group_title", r.group_title},
                                {"budget", {r.budget.dj, r.budget.dm, r.budget.dn, r.budget.dM}},
                                {"interior_dim", r.interior_dim},
                                {"max_residual", r.max_residual},
                                {"frobenius", r.frobenius},
                                {"normalization", r.normalization},
                                {"normalized", r.normalized},
                                {"status", status_name(r.status)}});
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}, {"not_representable", skipped}};
    out.os() << std::setw(2) << j << '\n';
  } else {
    throw std::invalid_argument("verify format must be table or json");
  }
  return fail == 0 && inconclusive == 0 ? 0 : 1;
}

int cmd_obstruction(const RunConfig& c, double tau0) {
  if (!c.sector.empty() && parse_sector(c.sector) != SectorKind::LightLike)
    throw std::invalid_argument("the obstruction probe only applies to the light-like sector");
  RunConfig lc = c;
  lc.scale = tau0;
  const OperatorSet ops = build_ops(lc, SectorKind::LightLike);
  const ObstructionReport rep = lightcone_obstruction(ops);
  const std::string fmt = c.format.empty() ? "table" : c.format;
  Output out(c.out);
  if (fmt == "table") {
    auto& os = out.os();
    os << "light cone, q=" << rep.q << " tau0=" << rep.tau0 << "\n";
    os << std::setw(4) << "n" << std::setw(4) << "j" << std::setw(13) << "t" << std::setw(13) << "sigma_min"
       << std::setw(13) << "sigma_max" << std::setw(13) << "|det|" << std::setw(13) << "inhomog." << std::setw(13)
       << "<U>" << '\n';
    os << std::scientific << std::setprecision(4);
    for (const auto& r : rep.rows)
      os << std::setw(4) << r.n << std::setw(4) << r.j << std::setw(13) << r.t << std::setw(13) << r.sigma_min
         << std::setw(13) << r.sigma_max << std::setw(13) << r.determinant << std::setw(13) << r.inhomogeneity
         << std::setw(13) << r.u_element << '\n';
    os << std::defaultfloat;
    os << "rank deficient: " << (rep.rank_deficient ? "yes" : "no") << "\n";
    os << "min inhomogeneity: " << rep.min_inhomogeneity << "\n";
    os << "verdict: " << rep.verdict << "\n";
  } else if (fmt == "json") {
    json j{{"schema", 1},
           {"q", rep.q},
           {"tau0", rep.tau0},
           {"rank_deficient", rep.rank_deficient},
           {"min_inhomogeneity", rep.min_inhomogeneity},
           {"verdict", rep.verdict},
           {"rows", json::array()}};
    for (const auto& r : rep.rows)
      j["rows"].push_back({{"n", r.n},
                           {"j", r.j},
                           {"t", r.t},
                           {"sigma_min", r.sigma_min},
                           {"sigma_max", r.sigma_max},
                           {"determinant", r.determinant},
                           {"compatibility", r.compatibility},
                           {"unit_coefficient", r.unit_coefficient},
                           {"inhomogeneity", r.inhomogeneity},
                           {"u_element", r.u_element},
                           {"substitution_error", r.substitution_error}});
    out.os() << std::setw(2) << j << '\n';
  } else {
    throw std::invalid_argument("obstruction format must be table or json");
  }
  return 0;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json rank3_json(const Rank3Tensor& t) {
  json out = json::array();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (t(a, b, c) != 0.0)
          out.push_back({{"index", std::string(component_name(a)) + component_name(b) + component_name(c)},
                         {"value", t(a, b, c)}});
  return out;
}

json clusters_json(const FourIndexTensor& t) {
  json out = json::array();
  for (const auto& c : eigenvalue_clusters(t))
    out.push_back({{"re", c.value.real()}, {"im", c.value.imag()}, {"multiplicity", c.multiplicity}});
  return out;
}

int cmd_tensors(const RunConfig& c) {
  const DeformationParams p(c.q);
  const Metric3 g = metric3(p);
  const Metric4 eta = metric4(p);
  const Epsilon3 e = epsilon3(p);
  const Projectors4 pr = build_projectors4(p);
  const FourIndexTensor rhat = build_rhat3(p);
  const FourIndexTensor r1 = build_rmatrix4(RVariant::I, p);
  const FourIndexTensor r2 = build_rmatrix4(RVariant::II, p);
  json j{{"schema", 1},
         {"q", c.q},
         {"component_order", {"+", "-", "3", "0"}},
         {"metric3", {{"lower", matrix_json(g.lower)}, {"upper", matrix_json(g.upper)}}},
         {"metric4", {{"lower", matrix_json(eta.lower)}, {"upper", matrix_json(eta.upper)}}},
         {"epsilon3",
          {{"mixed", rank3_json(e.mixed)},
           {"lower", rank3_json(e.lower)},
           {"upper", rank3_json(e.upper)},
           {"lower_upper_upper", rank3_json(e.lower_upper_upper)}}},
         {"rhat3", {{"matrix", matrix_json(rhat.matrix())}, {"eigenvalues", clusters_json(rhat)}}},
         {"projectors4",
          {{"plus", matrix_json(pr.plus.matrix())},
           {"minus", matrix_json(pr.minus.matrix())},
           {"trace", matrix_json(pr.trace.matrix())},
           {"symmetric", matrix_json(pr.symmetric.matrix())}}},
         {"ranks",
          {{"trace", pr.trace.matrix().trace()},
           {"plus", pr.plus.matrix().trace()},
           {"minus", pr.minus.matrix().trace()},
           {"symmetric", pr.symmetric.matrix().trace()}}},
         {"R_I", {{"eigenvalues", clusters_json(r1)}, {"braid_residual", braid_residual(r1)}}},
         {"R_II", {{"eigenvalues", clusters_json(r2)}, {"braid_residual", braid_residual(r2)}}},
         {"rhat3_braid_residual", braid_residual(rhat)}};
  Output out(c.out);
  out.os() << std::setw(2) << j << '\n';
  return 0;
}

int cmd_dump_op(const RunConfig& c, const std::string& name) {
  const SectorKind kind = c.sector.empty() ? SectorKind::SpaceLike : parse_sector(c.sector);
  const OperatorSet ops = build_ops(c, kind);
  if (!ops.has(name)) {
    std::string all;
    for (const auto& n : ops.names()) all += " " + n;
    throw std::invalid_argument("unknown operator '" + name + "'; available:" + all);
  }
  const SparseOperator& op = ops.get(name);
  const BasisMap& b = ops.basis();
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  Output out(c.out);
  if (fmt == "csv") {
    out.os() << "row,col,re,im\n";
    for (const auto& e : op.entries())
      out.os() << b.label(e.row).str() << ',' << b.label(e.col).str() << ',' << num(e.value.real()) << ','
               << num(e.value.imag()) << '\n';
  } else if (fmt == "json") {
    json j{{"schema", 1},
           {"q", c.q},
           {"sector", sector_name(kind)},
           {"operator", name},
           {"dimension", b.size()},
           {"entries", json::array()}};
    for (const auto& e : op.entries()) {
      const BasisLabel& r = b.label(e.row);
      const BasisLabel& cl = b.label(e.col);
      j["entries"].push_back({{"row", {r.j, r.m, r.n, r.M}},
                              {"col", {cl.j, cl.m, cl.n, cl.M}},
                              {"re", e.value.real()},
                              {"im", e.value.imag()}});
    }
    out.os() << std::setw(2) << j << '\n';
  } else {
    throw std::invalid_argument("dump-op format must be csv or json");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated representations of the q-deformed Minkowski algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--q", c.q, "Deformation parameter, q > 1")->capture_default_str();
  app.add_option("--sector", c.sector, "space | time+ | time- | light");
  app.add_option("--scale", c.scale, "l0, |t0| or tau0")->capture_default_str();
  app.add_option("--jmax", c.j_max, "Largest j in the window");
  app.add_option("--nrange", c.nrange, "n window as a:b");
  app.add_option("--Mrange", c.Mrange, "M window as a:b");
  app.add_option("--margin", c.margin, "Extra interior margin")->capture_default_str();
  app.add_option("--tol", c.tol, "Normalized residual tolerance")->capture_default_str();
  app.add_option("--format", c.format, "csv | json | svg | table");
  app.add_option("--out", c.out, "Output path (default stdout)");
  app.add_option("--phases", c.phases, "Light-like Lambda phases as n:alpha,...");
  app.add_option("--threads", c.threads, "Worker threads for verify (0 = all cores)");

  auto* spectrum = app.add_subcommand("spectrum", "Admissible (r, t) lattice points");
  spectrum->add_option("--nmax", c.n_max, "Largest |n| (space, light) or n (time)");
  auto* verify = app.add_subcommand("verify", "Check every relation of the algebra");
  verify->add_option("--report", c.format, "table | json");
  auto* obstruction = app.add_subcommand("obstruction", "Light-cone momentum obstruction");
  double tau0 = 1.0;
  obstruction->add_option("--tau0", tau0, "Light-like scale")->capture_default_str();
  auto* tensors = app.add_subcommand("tensors", "Metric, epsilon, projectors and R-matrices as JSON");
  auto* dump = app.add_subcommand("dump-op", "Nonzero entries of one operator");
  std::string op_name;
  auto* op_pos = dump->add_option("name", op_name, "Operator name, e.g. X+ or U");
  auto* op_flag = dump->add_option("--op", op_name, "Operator name, e.g. X+ or U");
  op_pos->excludes(op_flag);
  dump->callback([&] {
    if (op_name.empty()) throw CLI::RequiredError("--op");
  });

  CLI11_PARSE(app, argc, argv);
  try {
    if (*spectrum) return cmd_spectrum(c);
    if (*verify) return cmd_verify(c);
    if (*obstruction) return cmd_obstruction(c, tau0);
    if (*tensors) return cmd_tensors(c);
    if (*dump) return cmd_dump_op(c, op_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
