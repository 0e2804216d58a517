#pragma once

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwl/measures.hpp"
#include "gwl/oracle.hpp"
#include "gwl/states.hpp"

namespace gwl::cli {

/// All numeric output goes through this: 12 significant digits, so printed
/// values survive a parse/print round trip unchanged.
inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

inline PureState resolve_state(const std::string& text, double phi1, double phi2, double phi3,
                               double phi4) {
  if (text == "named:psi6") return psi6_state(phi1, phi2, phi3, phi4);
  return parse_state(text);
}

inline void emit_report_json(std::ostream& out, const CorrelationReport& r) {
  out << "{\"p\":" << fmt12(r.p) << ",\"entropy_total\":" << fmt12(r.entropy_total)
      << ",\"entropy_marginal\":" << fmt12(r.entropy_marginal)
      << ",\"concurrence_pure\":" << fmt12(r.concurrence_pure)
      << ",\"concurrence_gwl\":" << fmt12(r.concurrence_gwl) << ",\"eof\":" << fmt12(r.eof)
      << ",\"discord_analytic\":" << fmt12(r.discord_analytic);
  if (r.discord_numeric) out << ",\"discord_numeric\":" << fmt12(*r.discord_numeric);
  out << ",\"p_critical\":" << fmt12(r.p_critical) << "}\n";
}

inline void emit_report_csv(std::ostream& out, const CorrelationReport& r) {
  out << "p,entropy_total,entropy_marginal,concurrence_pure,concurrence_gwl,eof,"
         "discord_analytic,";
  if (r.discord_numeric) out << "discord_numeric,";
  out << "p_critical\n";
  out << fmt12(r.p) << ',' << fmt12(r.entropy_total) << ',' << fmt12(r.entropy_marginal) << ','
      << fmt12(r.concurrence_pure) << ',' << fmt12(r.concurrence_gwl) << ',' << fmt12(r.eof)
      << ',' << fmt12(r.discord_analytic) << ',';
  if (r.discord_numeric) out << fmt12(*r.discord_numeric) << ',';
  out << fmt12(r.p_critical) << '\n';
}

struct SweepRow {
  double p, eof_v, qd, s_ab, s_a;
  std::optional<double> qd_num;
};

inline std::vector<SweepRow> compute_sweep(const PureState& psi, double p_min, double p_max,
                                           int steps, bool with_oracle,
                                           const OptimizerConfig& cfg) {
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double p = p_min + (p_max - p_min) * k / double(steps - 1);
    SweepRow row{p, eof(gwl_concurrence(psi, p)), discord_analytic(psi, p), gwl_entropy(p),
                 reduced_entropy(psi, p), std::nullopt};
    if (with_oracle)
      row.qd_num = discord_numeric(gwl_state(psi, p), TransferDirection::a_to_b, cfg);
    rows.push_back(row);
  }
  return rows;
}

inline void emit_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                           bool with_oracle) {
  out << (with_oracle ? "p,eof,qd_analytic,qd_numeric,s_ab,s_a\n"
                      : "p,eof,qd_analytic,s_ab,s_a\n");
  for (const SweepRow& r : rows) {
    out << fmt12(r.p) << ',' << fmt12(r.eof_v) << ',' << fmt12(r.qd);
    if (with_oracle) out << ',' << fmt12(*r.qd_num);
    out << ',' << fmt12(r.s_ab) << ',' << fmt12(r.s_a) << '\n';
  }
}

inline void emit_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows,
                            bool with_oracle) {
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    out << (i ? ",\n " : "\n ") << "{\"p\":" << fmt12(r.p) << ",\"eof\":" << fmt12(r.eof_v)
        << ",\"qd_analytic\":" << fmt12(r.qd);
    if (with_oracle) out << ",\"qd_numeric\":" << fmt12(*r.qd_num);
    out << ",\"s_ab\":" << fmt12(r.s_ab) << ",\"s_a\":" << fmt12(r.s_a) << "}";
  }
  out << "\n]\n";
}

// ---------------------------------------------------------------------------
// verify: the cross-module invariant suite.

struct CheckOutcome {
  std::string name;
  double max_err = 0.0;
  double tol = 0.0;
  bool pass = true;
  std::string failure_context;  // "(state, p)" of the first violation
};

inline CheckOutcome make_check(std::string name, double tol) {
  CheckOutcome c;
  c.name = std::move(name);
  c.tol = tol;
  return c;
}

class VerifySuite {
 public:
  VerifySuite(int n_states, unsigned seed, int grid)
      : n_states_(n_states), rng_(seed), cfg_{grid, 200, 1e-10} {}

  std::vector<CheckOutcome> run() {
    std::vector<CheckOutcome> all;
    all.push_back(check_spectrum());
    all.push_back(check_kron());
    all.push_back(check_psd_sqrt());
    all.push_back(check_werner_bridge());
    all.push_back(check_reduced());
    all.push_back(check_restriction());
    all.push_back(check_concurrence_routes());
    all.push_back(check_endpoints());
    all.push_back(check_equivalence_classes());
    all.push_back(check_monotonicity());
    all.push_back(check_phase_symmetry());
    all.push_back(check_amplitude());
    all.push_back(check_oracle_equivalence());
    all.push_back(check_discord_symmetry());
    all.push_back(check_optimal_probability());
    all.push_back(check_crossing_structure());
    return all;
  }

 private:
  static std::string describe(const PureState& psi, double p) {
    std::ostringstream os;
    const auto& z = psi.amps();
    os << "state=(";
    for (int i = 0; i < 4; ++i)
      os << (i ? "," : "") << fmt12(z[i].real()) << (z[i].imag() < 0 ? "" : "+")
         << fmt12(z[i].imag()) << "i";
    os << ") p=" << fmt12(p);
    return os.str();
  }

  void record(CheckOutcome& c, double err, const PureState& psi, double p) {
    if (err > c.max_err) c.max_err = err;
    if (err > c.tol && c.pass) {
      c.pass = false;
      c.failure_context = describe(psi, p);
    }
  }

  std::vector<double> p_grid() const {
    return {-0.3, -0.2, -0.1, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.9, 0.99};
  }

  CheckOutcome check_spectrum() {
    CheckOutcome c = make_check("gwl-spectrum", 1e-12);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      for (double p : p_grid()) {
        const auto ev = herm_eigvals(gwl_state(psi, p).mat());
        const double top = 0.25 * (1.0 + 3.0 * p), deg = 0.25 * (1.0 - p);
        double err = 0.0;
        if (p >= 0.0) {
          err = std::abs(ev[0] - top);
          for (int i = 1; i < 4; ++i) err = std::max(err, std::abs(ev[i] - deg));
        } else {  // (1+3p)/4 is the smallest eigenvalue for p < 0
          err = std::abs(ev[3] - top);
          for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(ev[i] - deg));
        }
        double vn = 0.0;
        for (double lam : ev) vn -= lam > 0 ? lam * std::log2(lam) : 0.0;
        err = std::max(err, std::abs(vn - gwl_entropy(p)));
        record(c, err, psi, p);
      }
    }
    return c;
  }

  Mat2 random_mat2() {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat2 m;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = cplx(g(rng_), g(rng_));
    return m;
  }

  CheckOutcome check_kron() {
    CheckOutcome c = make_check("kron-mixed-product", 1e-12);
    const PureState dummy = named_state("psi1");
    for (int s = 0; s < 32; ++s) {
      const Mat2 a = random_mat2(), b = random_mat2(), d = random_mat2(), e = random_mat2();
      const double err = (kron(a, b) * kron(d, e) - kron(a * d, b * e)).max_abs();
      record(c, err, dummy, 0.0);
    }
    return c;
  }

  CheckOutcome check_psd_sqrt() {
    CheckOutcome c = make_check("psd-sqrt-reconstruct", 1e-10);
    const PureState dummy = named_state("psi1");
    for (int s = 0; s < 32; ++s) {
      Mat4 a;
      std::normal_distribution<double> g(0.0, 1.0);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = cplx(g(rng_), g(rng_));
      Mat4 h = a * a.adjoint();
      h = h * (1.0 / h.trace().real());
      const Mat4 r = psd_sqrt(h);
      record(c, (r * r - h).max_abs(), dummy, 0.0);
    }
    return c;
  }

  CheckOutcome check_werner_bridge() {
    CheckOutcome c = make_check("werner-bridge", 1e-15);
    const PureState phim = named_state("bell:phi-");
    for (double p : {-1.0, -0.6, -0.25, 0.0, 0.2, 1.0 / 3.0}) {
      const double err = (gwl_state(phim, -p).mat() - werner_state(p).mat()).max_abs();
      record(c, err, phim, p);
    }
    return c;
  }

  CheckOutcome check_reduced() {
    CheckOutcome c = make_check("reduced-closed-form", 1e-12);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      const WMatrix w(psi);
      for (double p : {-0.3, 0.4, 0.9}) {
        const DensityMatrix4 rho = gwl_state(psi, p);
        Mat2 expect_a = w.mat() * w.mat().adjoint() * p;
        Mat2 expect_b = w.transposed() * w.transposed().adjoint() * p;
        for (std::size_t i = 0; i < 2; ++i) {
          expect_a(i, i) += 0.5 * (1.0 - p);
          expect_b(i, i) += 0.5 * (1.0 - p);
        }
        double err = (reduced(rho, Partition::A) - expect_a).max_abs();
        err = std::max(err, (reduced(rho, Partition::B) - expect_b).max_abs());
        record(c, err, psi, p);
      }
    }
    return c;
  }

  CheckOutcome check_restriction() {
    CheckOutcome c = make_check("luders-restriction", 1e-12);
    std::uniform_real_distribution<double> half_pi(0.0, 0.5 * std::numbers::pi);
    std::uniform_real_distribution<double> full(0.0, 2.0 * std::numbers::pi);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      for (double p : {-0.3, 0.3, 0.7}) {
        const MeasurementDirection dir{half_pi(rng_), full(rng_)};
        for (Partition part : {Partition::A, Partition::B}) {
          const auto ens = luders_update(gwl_state(psi, p), dir, part);
          double sum = 0.0;
          for (const auto& br : ens.outcomes) {
            if (!br.state) continue;
            // x_m from the unmeasured marginal: top eigenvalue is (1+|x|)/2
            // and x carries the sign of p.
            const Partition other = part == Partition::A ? Partition::B : Partition::A;
            const double top = herm_eigvals(reduced(*br.state, other))[0];
            const double x = std::copysign(2.0 * top - 1.0, p);
            sum += x / (1.0 - x);
          }
          record(c, std::abs(sum - 2.0 * p / (1.0 - p)), psi, p);
        }
      }
    }
    return c;
  }

  CheckOutcome check_concurrence_routes() {
    CheckOutcome c = make_check("concurrence-dual-route", 1e-10);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      for (double p : p_grid()) {
        const double closed = gwl_concurrence(psi, p);
        const double brute = wootters_concurrence(gwl_state(psi, p));
        record(c, std::abs(closed - brute), psi, p);
      }
    }
    return c;
  }

  CheckOutcome check_endpoints() {
    CheckOutcome c = make_check("endpoint-identities", 1e-12);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      record(c, std::abs(discord_analytic(psi, 0.0)), psi, 0.0);
      record(c, std::abs(discord_analytic(psi, 1.0) - eof(pure_concurrence(psi))), psi, 1.0);
    }
    return c;
  }

  CheckOutcome check_equivalence_classes() {
    CheckOutcome c = make_check("equivalence-classes", 1e-12);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      const double conc = pure_concurrence(psi);
      // A diagonal-W state with the same concurrence.
      const double a = std::sqrt(0.5 * (1.0 + delta_from_concurrence(conc)));
      const PureState mate(a, 0.0, 0.0, 0.5 * conc / a, true);
      for (double p : {0.2, 0.6, 0.95})
        record(c, std::abs(discord_analytic(psi, p) - discord_analytic(mate, p)), psi, p);
    }
    return c;
  }

  CheckOutcome check_monotonicity() {
    CheckOutcome c = make_check("discord-monotone-in-concurrence", 1e-12);
    for (double p : {0.2, 0.5, 0.8, 0.99}) {
      double prev = -1.0;
      for (int k = 0; k <= 10; ++k) {
        const double conc = 0.1 * k;
        const double a = std::sqrt(0.5 * (1.0 + delta_from_concurrence(conc)));
        const PureState psi(a, 0.0, 0.0, conc / (2.0 * a), true);
        const double d = discord_analytic(psi, p);
        if (k) record(c, std::max(0.0, prev - d), psi, p);
        prev = d;
      }
    }
    return c;
  }

  CheckOutcome check_phase_symmetry() {
    CheckOutcome c = make_check("psi6-phase-symmetry", 1e-12);
    const double pi = std::numbers::pi;
    for (int k = 0; k <= 16; ++k) {
      const double phi = 2.0 * pi * k / 16.0;
      const PureState plus = psi6_state(phi, 0, 0, 0);
      const PureState minus = psi6_state(-phi, 0, 0, 0);
      record(c, std::abs(discord_analytic(plus, 0.8) - discord_analytic(minus, 0.8)), plus, 0.8);
    }
    return c;
  }

  CheckOutcome check_amplitude() {
    CheckOutcome c = make_check("amplitude-identities", 1e-12);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      const double a = amplitude_check(psi);  // throws if the identities fail
      const double err =
          std::abs(a - 0.5 * delta_from_concurrence(pure_concurrence(psi)));
      record(c, err, psi, 0.0);
    }
    return c;
  }

  CheckOutcome check_oracle_equivalence() {
    CheckOutcome c = make_check("oracle-equivalence", 1e-6);
    for (int s = 0; s < n_states_; ++s) {
      const PureState psi = random_pure_state(rng_);
      for (double p : p_grid()) {
        const double num = discord_numeric(gwl_state(psi, p), TransferDirection::a_to_b, cfg_);
        record(c, std::abs(num - discord_analytic(psi, p)), psi, p);
      }
    }
    return c;
  }

  CheckOutcome check_discord_symmetry() {
    CheckOutcome c = make_check("discord-symmetry-and-balance", 1e-8);
    std::uniform_real_distribution<double> pdist(-0.3, 0.99);
    const int pairs = std::min(n_states_, 10);
    for (int s = 0; s < pairs; ++s) {
      const PureState psi = random_pure_state(rng_);
      const double p = pdist(rng_);
      const DensityMatrix4 rho = gwl_state(psi, p);
      const double fwd = discord_numeric(rho, TransferDirection::a_to_b, cfg_);
      const double bwd = discord_numeric(rho, TransferDirection::b_to_a, cfg_);
      record(c, std::abs(fwd - bwd), psi, p);  // balance of LII is |fwd-bwd|/2
    }
    return c;
  }

  CheckOutcome check_optimal_probability() {
    CheckOutcome c = make_check("optimal-measurement-probability", 1e-8);
    for (int s = 0; s < std::min(n_states_, 8); ++s) {
      const PureState psi = random_pure_state(rng_);
      const double p = 0.7;
      const auto res = conditional_entropy_numeric(gwl_state(psi, p), Partition::A, cfg_);
      const double pr =
          (WMatrix(psi).mat().adjoint() * bloch_projector(res.direction, 0) * WMatrix(psi).mat())
              .trace()
              .real();
      const double d = delta_from_concurrence(pure_concurrence(psi));
      const double err = std::min(std::abs(pr - 0.5 * (1.0 - d)), std::abs(pr - 0.5 * (1.0 + d)));
      record(c, err, psi, p);
    }
    return c;
  }

  CheckOutcome check_crossing_structure() {
    CheckOutcome c = make_check("eof-discord-crossing", 0.5);  // structural check; err is #violations
    for (const char* id : {"psi1", "psi2", "psi3", "bell:psi+"}) {
      const PureState psi = named_state(id);
      const double pc = p_critical(psi);
      const auto pi_opt = intersection_point(psi);
      if (!pi_opt) {
        record(c, 1.0, psi, 1.0);
        continue;
      }
      int changes = 0;
      double prev = 0.0;
      for (int k = 0; k < 200; ++k) {
        const double p = pc + 1e-4 + (1.0 - 1e-6 - pc - 1e-4) * k / 199.0;
        const double diff = eof(gwl_concurrence(psi, p)) - discord_analytic(psi, p);
        const double want = p < *pi_opt ? -1.0 : 1.0;
        if (diff * want < 0.0 && std::abs(p - *pi_opt) > 1e-3) record(c, 1.0, psi, p);
        if (k && (diff < 0.0) != (prev < 0.0)) ++changes;
        prev = diff;
      }
      if (changes > 1) record(c, double(changes), psi, *pi_opt);
    }
    return c;
  }

  int n_states_;
  std::mt19937_64 rng_;
  OptimizerConfig cfg_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation measures (EoF, quantum discord) for Werner-like two-qubit mixtures"};
  app.require_subcommand(1);

  std::string state_text;
  double p = 0.0, p_min = kGwlPMin, p_max = kGwlPMax;
  int steps = 100, grid = 64, n_states = 50;
  unsigned seed = 12345;
  bool with_oracle = false;
  std::string format;
  double phi1 = 0, phi2 = 0, phi3 = 0, phi4 = 0;

  const auto add_state_opts = [&](CLI::App* cmd, bool need_p) {
    cmd->add_option("--state", state_text,
                    "state: named:<id> or 8 comma-separated reals z1re,z1im,...,z4im")
        ->required();
    if (need_p) cmd->add_option("--p", p, "mixing parameter in [-1/3, 1]")->required();
    cmd->add_option("--phi1", phi1, "psi6 phase 1 (radians)");
    cmd->add_option("--phi2", phi2, "psi6 phase 2 (radians)");
    cmd->add_option("--phi3", phi3, "psi6 phase 3 (radians)");
    cmd->add_option("--phi4", phi4, "psi6 phase 4 (radians)");
  };

  CLI::App* rep = app.add_subcommand("report", "single (state, p) correlation report");
  add_state_opts(rep, true);
  rep->add_flag("--oracle", with_oracle, "also run the numerical discord oracle");
  rep->add_option("--grid", grid, "oracle grid points per angle (>= 8)");
  rep->add_option("--seed", seed, "rng seed (accepted for interface uniformity)");
  rep->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* swp = app.add_subcommand("sweep", "sweep the mixing parameter, emit one row per p");
  add_state_opts(swp, false);
  swp->add_option("--p-min", p_min, "sweep start (>= -1/3)");
  swp->add_option("--p-max", p_max, "sweep end (<= 1)");
  swp->add_option("--steps", steps, "number of rows (>= 2)");
  swp->add_flag("--oracle", with_oracle, "add a qd_numeric column");
  swp->add_option("--grid", grid, "oracle grid points per angle");
  swp->add_option("--seed", seed, "rng seed (rows are deterministic)");
  swp->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* tab = app.add_subcommand(
      "table1", "p_c, p_i and the CHSH threshold p_b for the four worked example states");
  tab->add_option("--seed", seed, "rng seed for the CHSH restarts");

  CLI::App* ver = app.add_subcommand("verify", "run the cross-module invariant suite");
  ver->add_option("--states", n_states, "number of random states")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "rng seed");
  ver->add_option("--grid", grid, "oracle grid points per angle");

  std::vector<const char*> argv;
  argv.push_back("gwl");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(rep)) {
      const PureState psi = detail::resolve_state(state_text, phi1, phi2, phi3, phi4);
      CorrelationReport r = correlation_report(psi, p);
      if (with_oracle)
        r.discord_numeric =
            discord_numeric(gwl_state(psi, p), TransferDirection::a_to_b, {grid, 200, 1e-10});
      if (format == "csv")
        detail::emit_report_csv(out, r);
      else
        detail::emit_report_json(out, r);
      return 0;
    }

    if (app.got_subcommand(swp)) {
      if (steps < 2) throw CLI::ValidationError("--steps must be >= 2");
      if (!(p_min >= kGwlPMin && p_min <= p_max && p_max <= kGwlPMax))
        throw CLI::ValidationError("need -1/3 <= p-min <= p-max <= 1");
      const PureState psi = detail::resolve_state(state_text, phi1, phi2, phi3, phi4);
      const auto rows =
          detail::compute_sweep(psi, p_min, p_max, steps, with_oracle, {grid, 200, 1e-10});
      if (format == "json")
        detail::emit_sweep_json(out, rows, with_oracle);
      else
        detail::emit_sweep_csv(out, rows, with_oracle);
      return 0;
    }

    if (app.got_subcommand(tab)) {
      out << "state      p_c       p_i       p_b (derived)\n";
      for (const char* id : {"psi1", "psi2", "psi3", "bell:psi+"}) {
        const PureState psi = named_state(id);
        const auto pi_opt = intersection_point(psi);
        const auto pb_opt = bell_threshold(psi);
        char line[128];
        std::snprintf(line, sizeof line, "%-10s %-9.4f %-9.4f %-9.4f\n", id, p_critical(psi),
                      pi_opt ? *pi_opt : std::nan(""), pb_opt ? *pb_opt : std::nan(""));
        out << line;
      }
      return 0;
    }

    // verify
    detail::VerifySuite suite(n_states, seed, grid);
    const auto results = suite.run();
    bool all_pass = true;
    const detail::CheckOutcome* first_fail = nullptr;
    out << "verify: states=" << n_states << " seed=" << seed << " grid=" << grid << "\n";
    for (const auto& c : results) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-34s max_err=%-12.3g tol=%-8.0e [%s]\n",
                    c.name.c_str(), c.max_err, c.tol, c.pass ? "ok" : "FAIL");
      out << line;
      if (!c.pass && !first_fail) first_fail = &c;
      all_pass = all_pass && c.pass;
    }
    if (!all_pass) {
      out << "verify: FAIL, first failing check=" << first_fail->name << " at "
          << first_fail->failure_context << "\n";
      return 1;
    }
    out << "verify: PASS (" << results.size() << " checks)\n";
    return 0;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace gwl::cli
