// Command-line front end: channel entropies, verification suites and
// figure-data generation with deterministic CSV output.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qchan/additivity.hpp"
#include "qchan/channels.hpp"
#include "qchan/io.hpp"
#include "qchan/min_output.hpp"
#include "qchan/qubit_geometry.hpp"
#include "qchan/rng.hpp"

namespace fs = std::filesystem;
using namespace qchan;

namespace {

struct RunConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  int starts = 32;
  LogBase base = LogBase::natural;
  std::string out = ".";
  double tol_ineq = 1e-7;
  double tol_opt = 1e-12;
  double tol_slack = 1e-9;
  int grid = 201;
  int samples = 0;  // 0 = per-figure default
};

void apply_tol_overrides(RunConfig& cfg,
                         const std::vector<std::string>& entries) {
  for (const std::string& e : entries) {
    const auto pos = e.find('=');
    if (pos == std::string::npos)
      throw CLI::ValidationError("--tol expects name=value");
    const std::string name = e.substr(0, pos);
    const double val = std::stod(e.substr(pos + 1));
    if (val <= 0) throw CLI::ValidationError("--tol values must be positive");
    if (name == "tol_ineq")
      cfg.tol_ineq = val;
    else if (name == "tol_opt")
      cfg.tol_opt = val;
    else if (name == "tol_slack")
      cfg.tol_slack = val;
    else
      throw CLI::ValidationError("unknown tolerance: " + name);
  }
}

std::ofstream open_out(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  fs::path p = fs::path(cfg.out) / name;
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + p.string());
  return f;
}

const char* base_name(LogBase b) {
  return b == LogBase::natural ? "natural" : "two";
}

// ---------------------------------------------------------------- entropy --

int cmd_entropy(const std::string& file, double q, const RunConfig& cfg) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open channel file: " << file << "\n";
    return 2;
  }
  std::ostringstream os;
  os << in.rdbuf();
  const std::string text = os.str();
  KrausChannel phi = parse_channel_json(text);
  const std::string kind = channel_kind(text);

  const EntropyOrder order{q, cfg.base};
  const double s_map = map_entropy(phi, order);
  MinOutOptions opts;
  opts.starts = cfg.starts;
  opts.seed = cfg.seed;
  opts.tol_opt = cfg.tol_opt;
  MinOutResult mo = min_output_entropy(phi, order, opts);

  std::cout << "kind = " << kind << ", dim = " << phi.dim() << ", q = " << q
            << ", base = " << base_name(cfg.base) << "\n";
  std::cout << "s_map = " << format_double(s_map) << "\n";
  std::cout << "s_min = " << format_double(mo.value)
            << " (upper bound; starts = " << mo.starts_used
            << ", converged = " << (mo.converged ? "yes" : "no")
            << ", best output purity = " << format_double(mo.best_purity)
            << ")\n";

  if (q == 2.0) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (kind == "depolarizing") {
      const int n = j.at("dim").get<int>();
      const double lam = j.at("lambda").get<double>();
      const double am = to_base(depolarizing_map_q2(n, lam), cfg.base);
      const double as = to_base(depolarizing_min_output_q2(n, lam), cfg.base);
      std::cout << "analytic s_map = " << format_double(am)
                << " (delta = " << format_double(s_map - am) << ")\n";
      std::cout << "analytic s_min = " << format_double(as)
                << " (delta = " << format_double(mo.value - as) << ")\n";
    } else if (kind == "pauli") {
      std::array<double, 4> b{};
      for (int i = 0; i < 4; ++i) b[i] = j.at("weights").at(i).get<double>();
      double purity = 0;
      for (double x : b) purity += x * x;
      const double am = to_base(-std::log(purity), cfg.base);
      auto l = canonicalize_lambda(lambda_from_spectrum(ChoiSpectrumQubit{b}));
      const double as =
          to_base(qubit_pauli_min_output_q2(l[0], l[1], l[2]), cfg.base);
      std::cout << "analytic s_map = " << format_double(am)
                << " (delta = " << format_double(s_map - am) << ")\n";
      std::cout << "analytic s_min = " << format_double(as)
                << " (delta = " << format_double(mo.value - as) << ")\n";
    } else if (kind == "coarse_graining") {
      const double am = to_base(std::log(double(phi.dim())), cfg.base);
      std::cout << "analytic s_map = " << format_double(am)
                << " (delta = " << format_double(s_map - am) << ")\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- verify --

struct VerifyRow {
  int pair_id = 0;
  double q = 0.0;
  double residual = 0.0;
  double spec_distance = 0.0;
  double lind_low_slack = 0.0;
  double lind_high_slack = 0.0;
  double tsallis_slack = 0.0;
};

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  std::vector<VerifyRow> rows;
  int failures = 0;
  double max_violation = 0.0;
  auto violated = [&](double slack, double tolerance) {
    if (slack < -tolerance) ++failures;
    max_violation = std::max(max_violation, std::max(0.0, -slack));
  };

  if (suite == "prop2") {
    const double qs[] = {0.5, 1.0, 2.0, 3.0};
    for (int t = 0; t < cfg.trials; ++t) {
      Rng pick(derive_seed(cfg.seed, t));
      const int n = 2 + static_cast<int>(pick.next_u64() % 2);
      const int m = 2 + static_cast<int>(pick.next_u64() % 2);
      const int r1 = 1 + static_cast<int>(pick.next_u64() % 4);
      const int r2 = 1 + static_cast<int>(pick.next_u64() % 4);
      KrausChannel p1 = random_channel(n, std::min(r1, n * n), pick.next_u64());
      KrausChannel p2 = random_channel(m, std::min(r2, m * m), pick.next_u64());
      SpectralEquivalence eq = permutation_equivalence(p1, p2);
      for (double q : qs) {
        VerifyRow row;
        row.pair_id = t;
        row.q = q;
        row.residual = verify_map_additivity(p1, p2, q);
        row.spec_distance = eq.spectral_distance;
        rows.push_back(row);
        violated(1e-8 - row.residual, 0.0);
        violated(1e-10 - row.spec_distance, 0.0);
      }
    }
  } else if (suite == "prop1") {
    for (int t = 0; t < cfg.trials; ++t) {
      Rng pick(derive_seed(cfg.seed, t));
      const int n = 2 + static_cast<int>(pick.next_u64() % 3);
      const int rank = 1 + static_cast<int>(pick.next_u64() % (n * n));
      KrausChannel phi = random_channel(n, rank, pick.next_u64());
      MinOutOptions opts;
      opts.starts = cfg.starts;
      opts.seed = derive_seed(cfg.seed, 0x70000000ULL + t);
      opts.tol_opt = cfg.tol_opt;
      MinOutResult mo =
          min_output_entropy(phi, EntropyOrder{2.0, LogBase::natural}, opts);
      Prop1Report rep = check_prop1(phi, mo, cfg.tol_ineq);
      VerifyRow row;
      row.pair_id = t;
      row.q = 2.0;
      row.residual = rep.slack;
      rows.push_back(row);
      violated(rep.slack, cfg.tol_ineq);
    }
  } else if (suite == "prop3" || suite == "tsallis") {
    for (int t = 0; t < cfg.trials; ++t) {
      Rng pick(derive_seed(cfg.seed, t));
      KrausChannel p1 = random_channel(
          2, 1 + static_cast<int>(pick.next_u64() % 4), pick.next_u64());
      KrausChannel p2 = random_channel(
          2, 1 + static_cast<int>(pick.next_u64() % 4), pick.next_u64());
      VerifyRow row;
      row.pair_id = t;
      row.lind_low_slack = row.lind_high_slack = row.tsallis_slack = 1e300;
      for (int k = 0; k < 8; ++k) {
        Rng urng(derive_seed(cfg.seed, 0x3e000000ULL + 8 * t + k));
        PureState psi = maximally_entangled(2, haar_unitary(2, urng));
        if (suite == "prop3") {
          row.q = 1.0;
          BoundReport rep = lindblad_bounds(p1, p2, psi);
          row.lind_low_slack = std::min(row.lind_low_slack, rep.slack_low);
          row.lind_high_slack = std::min(row.lind_high_slack, rep.slack_high);
        } else {
          row.q = 2.0;
          BoundReport rep = tsallis_lower_bound(p1, p2, psi);
          row.tsallis_slack = std::min(row.tsallis_slack, rep.slack_low);
        }
      }
      if (suite == "prop3") {
        violated(row.lind_low_slack, cfg.tol_slack);
        violated(row.lind_high_slack, cfg.tol_slack);
        row.tsallis_slack = 0.0;
      } else {
        violated(row.tsallis_slack, cfg.tol_slack);
        row.lind_low_slack = row.lind_high_slack = 0.0;
      }
      rows.push_back(row);
    }
  } else if (suite == "concat") {
    for (int t = 0; t < cfg.trials; ++t) {
      Rng pick(derive_seed(cfg.seed, t));
      Eigen::VectorXd b1 = dirichlet_flat(4, pick);
      Eigen::VectorXd b2 = dirichlet_flat(4, pick);
      KrausChannel p1 = pauli_channel({b1(0), b1(1), b1(2), b1(3)});
      KrausChannel p2 = pauli_channel({b2(0), b2(1), b2(2), b2(3)});
      const EntropyOrder vn{1.0, LogBase::natural};
      const double slack = map_entropy(p1, vn) + map_entropy(p2, vn) -
                           map_entropy(compose(p2, p1), vn);
      VerifyRow row;
      row.pair_id = t;
      row.q = 1.0;
      row.residual = slack;
      rows.push_back(row);
      violated(slack, cfg.tol_slack);
    }
  } else if (suite == "classical_bound") {
    for (int t = 0; t < cfg.trials; ++t) {
      Rng pick(derive_seed(cfg.seed, t));
      Eigen::VectorXd b = dirichlet_flat(4, pick);
      SlackReport rep =
          classical_bound_check(pauli_channel({b(0), b(1), b(2), b(3)}), 2.0);
      VerifyRow row;
      row.pair_id = t;
      row.q = 2.0;
      row.residual = rep.slack;
      rows.push_back(row);
      violated(rep.slack, 1e-12);
    }
  } else {
    std::cerr << "error: unknown suite: " << suite << "\n";
    return 2;
  }

  std::ofstream csv = open_out(cfg, "verify_" + suite + ".csv");
  csv << "pair_id,q,residual,spec_distance,lind_low_slack,lind_high_slack,"
         "tsallis_slack\n";
  for (const VerifyRow& r : rows)
    csv << r.pair_id << ',' << format_double(r.q) << ','
        << format_double(r.residual) << ',' << format_double(r.spec_distance)
        << ',' << format_double(r.lind_low_slack) << ','
        << format_double(r.lind_high_slack) << ','
        << format_double(r.tsallis_slack) << '\n';

  std::cout << suite << ',' << cfg.trials << ',' << failures << ','
            << format_double(max_violation) << "\n";
  return failures > 0 ? 1 : 0;
}

// ----------------------------------------------------------------- figure --

void write_scatter_csv(std::ofstream& csv,
                       const std::vector<BoundaryPoint>& edges,
                       const std::vector<TetraSample>& samples,
                       const std::string& kind, LogBase base) {
  csv << "edge_or_sample,b0,b1,b2,b3,s_map,s_min,entropy_kind,base\n";
  auto row = [&](const std::string& label, const std::array<double, 4>& b,
                 double s_map, double s_min) {
    csv << label;
    for (double x : b) csv << ',' << format_double(x);
    csv << ',' << format_double(to_base(s_map, base)) << ','
        << format_double(to_base(s_min, base)) << ',' << kind << ','
        << base_name(base) << '\n';
  };
  for (const BoundaryPoint& p : edges) row(p.edge, p.b, p.s_map, p.s_min);
  for (const TetraSample& s : samples) row("sample", s.b, s.s_map, s.s_min);
}

int cmd_figure(const std::string& which, const RunConfig& cfg) {
  if (which == "fig1") {
    std::ofstream csv = open_out(cfg, "fig1_region.csv");
    csv << "s1,s2,n,m,in_region\n";
    for (int n : {2, 3, 4})
      for (const RegionPoint& p : region_scan(n, n, cfg.grid))
        csv << format_double(p.s1) << ',' << format_double(p.s2) << ',' << p.n
            << ',' << p.m << ',' << (p.in_region ? 1 : 0) << '\n';
    std::ofstream gp = open_out(cfg, "fig1.gp");
    gp << "# additivity-region scan; diagonal = conjugate-channel pairs\n"
          "set xlabel 's_map(Phi_1)'\nset ylabel 's_map(Phi_2)'\n";
    for (int n : {2, 3, 4})
      gp << "# alpha_" << n << " = " << format_double(alpha(n)) << "\n";
    gp << "plot 'fig1_region.csv' using 1:($5==1?$2:1/0) every ::1 with dots "
          "title 'R', x dashtype 2 title 'diagonal', "
       << format_double(alpha(2)) << "*x title 'slope alpha_2'\n";
    return 0;
  }
  if (which == "fig2_3") {
    const int samples = cfg.samples > 0 ? cfg.samples : 2000;
    std::ofstream csv = open_out(cfg, "fig2_3.csv");
    write_scatter_csv(csv, boundary_curves(256),
                      sample_tetrahedron(samples, cfg.seed, EntropyKind::renyi2),
                      "renyi2", cfg.base);
    std::ofstream gp = open_out(cfg, "fig2_3.gp");
    gp << "set datafile separator ','\nset xlabel 's_map'\nset ylabel "
          "'s_min'\n"
          "plot 'fig2_3.csv' using 6:7 every ::1 with dots title 'Pauli "
          "channels'\n";
    return 0;
  }
  if (which == "fig4") {
    const int samples = cfg.samples > 0 ? cfg.samples : 400;
    // edges sampled with von Neumann entropies (numeric minimizer)
    std::vector<BoundaryPoint> edges;
    for (BoundaryPoint p : boundary_curves(33)) {
      std::vector<double> spec(p.b.begin(), p.b.end());
      p.s_map = von_neumann_from_spectrum(spec);
      MinOutOptions opts;
      opts.starts = 8;
      opts.seed = cfg.seed;
      p.s_min = min_output_entropy(pauli_channel(p.b),
                                   EntropyOrder{1.0, LogBase::natural}, opts)
                    .value;
      edges.push_back(std::move(p));
    }
    std::ofstream csv = open_out(cfg, "fig4.csv");
    write_scatter_csv(
        csv, edges,
        sample_tetrahedron(samples, cfg.seed, EntropyKind::von_neumann),
        "von_neumann", cfg.base);
    std::ofstream gp = open_out(cfg, "fig4.gp");
    gp << "set datafile separator ','\nset xlabel 'S_map'\nset ylabel "
          "'S_min'\n"
          "plot 'fig4.csv' using 6:7 every ::1 with dots title 'bistochastic "
          "qubit channels'\n";
    return 0;
  }
  std::cerr << "error: unknown figure: " << which << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic characterization of quantum channels"};
  app.require_subcommand(1);

  RunConfig cfg;
  double q = 2.0;
  std::string base_flag = "e";
  std::string channel_file, suite, figure;
  std::vector<std::string> tol_entries;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "number of trials")
        ->check(CLI::PositiveNumber);
    sub->add_option("--starts", cfg.starts, "optimizer starts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--base", base_flag, "log base: e or 2")
        ->check(CLI::IsMember({"e", "2"}));
    sub->add_option("--tol", tol_entries, "tolerance override name=value");
    sub->add_option("--out", cfg.out, "output directory");
  };

  CLI::App* entropy = app.add_subcommand("entropy", "map and minimal output "
                                                    "entropy of a channel file");
  entropy->add_option("file", channel_file, "channel JSON file")->required();
  entropy->add_option("--q", q, "Renyi order");
  add_common(entropy);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", suite,
                   "prop1|prop2|prop3|tsallis|concat|classical_bound")
      ->required();
  add_common(verify);

  CLI::App* figure_cmd = app.add_subcommand("figure", "emit figure data");
  figure_cmd->add_option("which", figure, "fig1|fig2_3|fig4")->required();
  figure_cmd->add_option("--grid", cfg.grid, "grid resolution for fig1")
      ->check(CLI::PositiveNumber);
  figure_cmd->add_option("--samples", cfg.samples, "scatter sample count");
  add_common(figure_cmd);

  try {
    app.parse(argc, argv);
    apply_tol_overrides(cfg, tol_entries);
    cfg.base = base_flag == "2" ? LogBase::two : LogBase::natural;
    if (entropy->parsed()) return cmd_entropy(channel_file, q, cfg);
    if (verify->parsed()) return cmd_verify(suite, cfg);
    return cmd_figure(figure, cfg);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
