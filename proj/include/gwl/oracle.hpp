#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

#include "gwl/mat.hpp"
#include "gwl/measures.hpp"
#include "gwl/states.hpp"

namespace gwl {

/// Bloch-sphere direction of a rank-one projective measurement,
/// n = (sin 2theta cos phi, sin 2theta sin phi, cos 2theta). theta in
/// [0, pi/2] already covers the whole sphere; the antipode is the same
/// measurement with outcomes relabeled.
struct MeasurementDirection {
  double theta = 0.0;
  double phi = 0.0;

  std::array<double, 3> bloch() const {
    return {std::sin(2.0 * theta) * std::cos(phi), std::sin(2.0 * theta) * std::sin(phi),
            std::cos(2.0 * theta)};
  }

  /// Canonical representative with theta in [0, pi/2], phi in [0, 2pi).
  static MeasurementDirection from_bloch(const std::array<double, 3>& n) {
    MeasurementDirection d;
    d.theta = 0.5 * std::acos(std::clamp(n[2], -1.0, 1.0));
    d.phi = std::atan2(n[1], n[0]);
    if (d.phi < 0.0) d.phi += 2.0 * std::numbers::pi;
    return d;
  }
};

/// Single-qubit projector (1/2)[I + (-1)^m n.sigma].
inline Mat2 bloch_projector(const MeasurementDirection& dir, int outcome) {
  const auto n = dir.bloch();
  const double sgn = (outcome == 0) ? 1.0 : -1.0;
  Mat2 m = Mat2::identity();
  m = m + pauli_x() * (sgn * n[0]) + pauli_y() * (sgn * n[1]) + pauli_z() * (sgn * n[2]);
  return m * 0.5;
}

/// The two projectors Pi_m (x) I2 (partition A) or I2 (x) Pi_m (partition B).
/// They sum to the identity and are mutually orthogonal by construction.
inline std::pair<Mat4, Mat4> projector_pair(const MeasurementDirection& dir, Partition part) {
  const Mat2 p0 = bloch_projector(dir, 0);
  const Mat2 p1 = Mat2::identity() - p0;
  if (part == Partition::A) return {kron(p0, Mat2::identity()), kron(p1, Mat2::identity())};
  return {kron(Mat2::identity(), p0), kron(Mat2::identity(), p1)};
}

/// trace(Pi rho), the probability of landing in the projector's subspace.
inline double outcome_probability(const DensityMatrix4& rho, const Mat4& projector) {
  return (projector * rho.mat()).trace().real();
}

/// One branch of a measured ensemble. A branch whose probability falls below
/// 1e-14 carries no post-state (the Lueders quotient would divide by ~0); it
/// is flagged instead of divided.
struct OutcomeBranch {
  double probability = 0.0;
  std::optional<DensityMatrix4> state;
};

struct MeasuredEnsemble {
  std::array<OutcomeBranch, 2> outcomes;
};

/// Lueders rule: rho -> Pi_m rho Pi_m / p_m for both outcomes of a local
/// projective measurement.
inline MeasuredEnsemble luders_update(const DensityMatrix4& rho, const MeasurementDirection& dir,
                                      Partition part) {
  const auto [pi0, pi1] = projector_pair(dir, part);
  MeasuredEnsemble ens;
  const Mat4* projs[2] = {&pi0, &pi1};
  for (int m = 0; m < 2; ++m) {
    const Mat4& pi = *projs[m];
    const double pm = outcome_probability(rho, pi);
    ens.outcomes[m].probability = pm;
    if (pm > 1e-14)
      ens.outcomes[m].state = DensityMatrix4::unchecked((pi * rho.mat() * pi) * (1.0 / pm));
  }
  return ens;
}

/// Grid-plus-refinement settings for the measurement optimizer.
struct OptimizerConfig {
  int grid_n = 64;        // coarse grid points per angle
  int refine_iters = 200; // simplex refinement iterations
  double tol = 1e-10;     // stop when the simplex value spread falls below this
};

namespace detail {

inline void check_optimizer_config(const OptimizerConfig& cfg) {
  if (cfg.grid_n < 8) throw std::invalid_argument("OptimizerConfig: grid_n must be >= 8");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("OptimizerConfig: tol must be > 0");
}

/// Plain Nelder-Mead on R^D. Callers pass smooth periodic objectives; restarts
/// and bounds are handled a level up where needed.
template <std::size_t D, typename F>
std::pair<std::array<double, D>, double> nelder_mead(F&& f, std::array<double, D> start,
                                                     const std::array<double, D>& step,
                                                     int max_iters, double tol) {
  constexpr double kAlpha = 1.0, kGamma = 2.0, kRho = 0.5, kSigma = 0.5;
  struct Vertex {
    std::array<double, D> x;
    double fx;
  };
  std::array<Vertex, D + 1> simplex;
  simplex[0] = {start, f(start)};
  for (std::size_t i = 0; i < D; ++i) {
    auto x = start;
    x[i] += step[i];
    simplex[i + 1] = {x, f(x)};
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

  for (int it = 0; it < max_iters; ++it) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex[D].fx - simplex[0].fx < tol) break;

    std::array<double, D> centroid{};
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t k = 0; k < D; ++k) centroid[k] += simplex[i].x[k] / double(D);

    auto blend = [&](double coeff) {
      std::array<double, D> x;
      for (std::size_t k = 0; k < D; ++k)
        x[k] = centroid[k] + coeff * (centroid[k] - simplex[D].x[k]);
      return x;
    };

    const auto xr = blend(kAlpha);
    const double fr = f(xr);
    if (fr < simplex[0].fx) {
      const auto xe = blend(kGamma);
      const double fe = f(xe);
      simplex[D] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < simplex[D - 1].fx) {
      simplex[D] = {xr, fr};
    } else {
      const auto xc = blend(-kRho);
      const double fc = f(xc);
      if (fc < simplex[D].fx) {
        simplex[D] = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= D; ++i) {
          for (std::size_t k = 0; k < D; ++k)
            simplex[i].x[k] = simplex[0].x[k] + kSigma * (simplex[i].x[k] - simplex[0].x[k]);
          simplex[i].fx = f(simplex[i].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return {simplex[0].x, simplex[0].fx};
}

/// sum_m p_m S[marginal of the unmeasured partition] for one direction; the
/// inner loop of the optimizer, kept on raw matrices.
inline double conditional_entropy_at(const Mat4& rho, const MeasurementDirection& dir,
                                     Partition measured) {
  const Mat2 p0 = bloch_projector(dir, 0);
  const Mat2 id = Mat2::identity();
  const Partition other = (measured == Partition::A) ? Partition::B : Partition::A;
  double total = 0.0;
  for (int m = 0; m < 2; ++m) {
    const Mat2 pm2 = (m == 0) ? p0 : id - p0;
    const Mat4 pi = (measured == Partition::A) ? kron(pm2, id) : kron(id, pm2);
    const Mat4 cut = pi * rho * pi;
    const double pm = cut.trace().real();
    if (pm < 1e-14) continue;  // measure-zero branch
    const Mat2 marg = reduced(DensityMatrix4::unchecked(cut * (1.0 / pm)), other);
    total += pm * von_neumann_entropy(marg);
  }
  return total;
}

}  // namespace detail

struct ConditionalEntropyResult {
  double value = 0.0;
  MeasurementDirection direction;  // argmin
};

/// Brute-force minimization of the conditional entropy over all rank-one
/// projective measurements on one partition: a grid over (theta, phi) in
/// [0, pi/2] x [0, 2pi) followed by simplex refinement around the best cell.
inline ConditionalEntropyResult conditional_entropy_numeric(const DensityMatrix4& rho,
                                                            Partition measured,
                                                            const OptimizerConfig& cfg = {}) {
  detail::check_optimizer_config(cfg);
  const Mat4& m = rho.mat();
  const double pi = std::numbers::pi;

  const auto objective = [&m, measured](const std::array<double, 2>& x) {
    return detail::conditional_entropy_at(m, {x[0], x[1]}, measured);
  };

  std::array<double, 2> best{0.0, 0.0};
  double best_val = objective(best);
  for (int i = 0; i < cfg.grid_n; ++i) {
    const double theta = 0.5 * pi * i / (cfg.grid_n - 1);
    for (int j = 0; j < cfg.grid_n; ++j) {
      const std::array<double, 2> x{theta, 2.0 * pi * j / cfg.grid_n};
      const double v = objective(x);
      if (v < best_val) {
        best_val = v;
        best = x;
      }
    }
  }

  const std::array<double, 2> step{0.5 * pi / cfg.grid_n, 2.0 * pi / cfg.grid_n};
  const auto [xmin, fmin] =
      detail::nelder_mead<2>(objective, best, step, cfg.refine_iters, cfg.tol);

  ConditionalEntropyResult out;
  out.value = std::min(best_val, fmin);
  out.direction = MeasurementDirection::from_bloch(MeasurementDirection{xmin[0], xmin[1]}.bloch());
  return out;
}

/// Which partition is measured: a_to_b measures A and asks what that reveals
/// about B, b_to_a the reverse.
enum class TransferDirection { a_to_b, b_to_a };

/// Numerical quantum discord S[measured marginal] - S[rho] + min conditional
/// entropy. Fully independent of the closed-form route.
inline double discord_numeric(const DensityMatrix4& rho, TransferDirection dir,
                              const OptimizerConfig& cfg = {}) {
  const Partition measured = (dir == TransferDirection::a_to_b) ? Partition::A : Partition::B;
  const double marginal = von_neumann_entropy(reduced(rho, measured));
  const double total = von_neumann_entropy(rho.mat());
  return marginal - total + conditional_entropy_numeric(rho, measured, cfg).value;
}

/// Mixing parameter p_i where EoF and discord intersect, found by bisection
/// of f(p) = EoF - delta on [p_c + 1e-6, 1 - 1e-9]. Both curves vanish
/// together at p_c's neighborhood and meet again at p = 1, so the bracket is
/// kept strictly inside. Returns nullopt when there is no sign change.
inline std::optional<double> intersection_point(const PureState& psi, double ftol = 1e-10) {
  if (pure_concurrence(psi) <= 0.0)
    throw std::invalid_argument("intersection_point: state must have nonzero concurrence");
  const auto f = [&psi](double p) {
    return eof(gwl_concurrence(psi, p)) - discord_analytic(psi, p);
  };
  double lo = p_critical(psi) + 1e-6;
  double hi = 1.0 - 1e-9;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) < ftol || hi - lo < 1e-15) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace detail {

/// Correlation matrix T_ij = tr(rho sigma_i (x) sigma_j).
inline std::array<std::array<double, 3>, 3> correlation_matrix(const Mat4& rho) {
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[i][j] = (kron(pauli(i + 1), pauli(j + 1)) * rho).trace().real();
  return t;
}

inline std::array<double, 3> apply3(const std::array<std::array<double, 3>, 3>& t,
                                    const std::array<double, 3>& x) {
  std::array<double, 3> y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += t[i][j] * x[j];
  return y;
}

inline double norm3(const std::array<double, 3>& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

}  // namespace detail

/// Maximal CHSH value of a two-qubit state, maximized over the four
/// measurement directions. With the optimal Alice settings eliminated the
/// objective reduces to |T(b+b')| + |T(b-b')| over Bob's two directions,
/// which a simplex search with random restarts maximizes reliably.
inline double max_chsh(const DensityMatrix4& rho, int restarts = 16, unsigned seed = 20240901u) {
  const auto t = detail::correlation_matrix(rho.mat());
  const auto value = [&t](const std::array<double, 4>& x) {
    const auto b = MeasurementDirection{x[0], x[1]}.bloch();
    const auto bp = MeasurementDirection{x[2], x[3]}.bloch();
    const std::array<double, 3> sum{b[0] + bp[0], b[1] + bp[1], b[2] + bp[2]};
    const std::array<double, 3> dif{b[0] - bp[0], b[1] - bp[1], b[2] - bp[2]};
    return -(detail::norm3(detail::apply3(t, sum)) + detail::norm3(detail::apply3(t, dif)));
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> half_pi(0.0, 0.5 * std::numbers::pi);
  std::uniform_real_distribution<double> full(0.0, 2.0 * std::numbers::pi);
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    const std::array<double, 4> start{half_pi(rng), full(rng), half_pi(rng), full(rng)};
    const std::array<double, 4> step{0.3, 0.3, 0.3, 0.3};
    const auto [x, fx] = detail::nelder_mead<4>(value, start, step, 400, 1e-12);
    best = std::max(best, -fx);
  }
  return best;
}

/// Smallest mixing parameter at which gwl(psi, p) violates the CHSH bound 2,
/// by bisection on the maximal CHSH value. Returns nullopt when even p = 1
/// does not violate (in particular for product states).
inline std::optional<double> bell_threshold(const PureState& psi, int restarts = 16) {
  if (max_chsh(gwl_state(psi, 1.0), restarts) <= 2.0) return std::nullopt;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (max_chsh(gwl_state(psi, mid), restarts) > 2.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

/// Oscillation amplitude A_psi = (1/2) sqrt(sum_i tr(W^dag sigma_i W)^2) of
/// the outcome probability over the Bloch sphere. Checks the two identities
/// A_psi = Delta/2 and A_psi = B_psi (transposed-W value) before returning.
inline double amplitude_check(const PureState& psi) {
  const WMatrix w(psi);
  const auto amp = [](const Mat2& wm) {
    double s = 0.0;
    for (int i = 1; i <= 3; ++i) {
      const double e = (wm.adjoint() * pauli(i) * wm).trace().real();
      s += e * e;
    }
    return 0.5 * std::sqrt(s);
  };
  const double a = amp(w.mat());
  const double b = amp(w.transposed());
  const double half_delta = 0.5 * delta_from_concurrence(pure_concurrence(psi));
  if (std::abs(a - half_delta) > 1e-12)
    throw std::logic_error("amplitude_check: A_psi deviates from Delta/2 by " +
                           std::to_string(std::abs(a - half_delta)));
  if (std::abs(a - b) > 1e-12)
    throw std::logic_error("amplitude_check: A-side and B-side amplitudes differ by " +
                           std::to_string(std::abs(a - b)));
  return a;
}

/// Haar-like random pure state: four complex standard normals, normalized.
inline PureState random_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<cplx, 4> z;
  for (cplx& c : z) c = cplx(gauss(rng), gauss(rng));
  return PureState(z[0], z[1], z[2], z[3], /*normalize=*/true);
}

}  // namespace gwl
