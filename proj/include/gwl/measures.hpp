#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "gwl/mat.hpp"
#include "gwl/states.hpp"

namespace gwl {

namespace detail {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace detail

/// Shannon binary entropy in bits, with 0*log(0) = 0. Arguments within 1e-12
/// of [0,1] are clamped; anything further out is rejected.
inline double binary_entropy(double z) {
  if (z < -1e-12 || z > 1.0 + 1e-12)
    throw std::domain_error("binary_entropy: argument " + std::to_string(z) +
                            " outside [0,1]");
  z = std::clamp(z, 0.0, 1.0);
  const double h = -detail::xlog2x(z) - detail::xlog2x(1.0 - z);
  return h == 0.0 ? 0.0 : h;  // avoid an IEEE -0 leaking into printed output
}

/// von Neumann entropy in bits, -sum lambda log2 lambda.
template <std::size_t N>
double von_neumann_entropy(const Mat<N>& rho) {
  double s = 0.0;
  for (double lam : herm_eigvals(rho)) s -= detail::xlog2x(std::max(lam, 0.0));
  return s;
}

/// Total entropy S_AB of a GWL state. The spectrum is {(1+3p)/4, (1-p)/4 x3}
/// regardless of the pure state, so this depends on p alone.
inline double gwl_entropy(double p) {
  return 2.0 - 0.25 * detail::xlog2x(1.0 + 3.0 * p) - 0.75 * detail::xlog2x(1.0 - p);
}

/// Concurrence of a pure state, 2|z1 z4 - z2 z3| = 2|det W|.
inline double pure_concurrence(const PureState& psi) {
  return 2.0 * std::abs(psi.z1() * psi.z4() - psi.z2() * psi.z3());
}

/// sqrt(1 - C^2).
inline double delta_from_concurrence(double c) {
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

/// Concurrence of a GWL state in closed form:
///
///   lambda_1,2 = ((1-p)/4)^2 + [p(1-p+2pC^2) +/- |p| C sqrt((1+p)^2-4p^2 D^2)]/4
///   C_GWL      = max{0, sqrt(lambda_1) - sqrt(lambda_2) - (1-p)/2}
///
/// sqrt(lambda_2) is evaluated through the product lambda_1 lambda_2, which
/// expands to a sum of nonnegative terms; the direct difference cancels
/// catastrophically as p -> 1.
inline double gwl_concurrence(const PureState& psi, double p) {
  detail::check_gwl_mixing(p);
  const double c = pure_concurrence(psi);
  const double d = delta_from_concurrence(c);
  const double l34 = (1.0 - p) * (1.0 - p) / 16.0;
  const double base = p * (1.0 - p + 2.0 * p * c * c);
  const double disc = (1.0 + p) * (1.0 + p) - 4.0 * p * p * d * d;
  const double gap = std::abs(p) * c * std::sqrt(std::max(0.0, disc));
  const double l1 = l34 + 0.25 * (base + gap);
  if (l1 <= 1e-300) return 0.0;
  const double pd = p * (1.0 - p) * d;
  const double prod = l34 * l34 + 0.5 * l34 * base + pd * pd / 16.0;  // = lambda_1 lambda_2
  const double s1 = std::sqrt(l1);
  const double s2 = std::sqrt(std::max(0.0, prod)) / s1;
  return std::max(0.0, s1 - s2 - 0.5 * (1.0 - p));
}

/// Wootters concurrence of an arbitrary two-qubit density matrix. The
/// lambda_i of rho * spin_flip(rho) are obtained as the eigenvalues of the
/// Hermitian PSD matrix sqrt(rho) * spin_flip(rho) * sqrt(rho); this is the
/// independent route against which the closed form above is checked.
inline double wootters_concurrence(const DensityMatrix4& rho) {
  const Mat4 root = psd_sqrt(rho.mat());
  const Mat4 m = root * spin_flip(rho).mat() * root;
  const auto lam = herm_eigvals(m);
  double s[4];
  for (int i = 0; i < 4; ++i) s[i] = std::sqrt(std::max(0.0, lam[i]));
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

/// Entanglement of formation in bits, H2((1 + sqrt(1-C^2))/2).
inline double eof(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + delta_from_concurrence(c)));
}

inline double eof(const DensityMatrix4& rho) { return eof(wootters_concurrence(rho)); }

/// Separability border of the GWL family: p_c = 1/(1 + 2 C[psi]). The state
/// is separable for p <= p_c and entangled above.
inline double p_critical(const PureState& psi) {
  return 1.0 / (1.0 + 2.0 * pure_concurrence(psi));
}

/// Marginal entropy S_A = S_B = H2((1 + p Delta)/2) of a GWL state.
inline double reduced_entropy(const PureState& psi, double p) {
  detail::check_gwl_mixing(p);
  const double d = delta_from_concurrence(pure_concurrence(psi));
  return binary_entropy(0.5 * (1.0 + p * d));
}

/// Minimized conditional entropy after a projective measurement on either
/// partition, in closed form:
///
///   S_cond = F_p(x0) + F_p(x1),  F_p(x) = (1-p)/(2(1-x)) H2((1+x)/2)
///   x0 = p(1-2A)/(1-2pA), x1 = p(1+2A)/(1+2pA), A = Delta/2.
///
/// At p = 1 both arguments reach 1 and F is 0/0; the post-measurement
/// ensemble is pure there, so the value is 0 by continuity.
inline double conditional_entropy_analytic(const PureState& psi, double p) {
  detail::check_gwl_mixing(p);
  if (p == 1.0) return 0.0;
  const double a = 0.5 * delta_from_concurrence(pure_concurrence(psi));
  const auto fp = [p](double x) {
    return (1.0 - p) / (2.0 * (1.0 - x)) *
           binary_entropy(std::clamp(0.5 * (1.0 + x), 0.0, 1.0));
  };
  const double x0 = p * (1.0 - 2.0 * a) / (1.0 - 2.0 * p * a);
  const double x1 = p * (1.0 + 2.0 * a) / (1.0 + 2.0 * p * a);
  return fp(x0) + fp(x1);
}

/// Exact quantum discord of a GWL state (symmetric in the measured
/// partition):
///
///   delta = -2 + (1/4) log2[(1+3p)^(3p+1) / (1-p)^(3p-3)]
///           + H2((1+pD)/2)
///           + (1-pD)/2 H2((1+p(1-2D)) / (2(1-pD)))
///           + (1+pD)/2 H2((1+p(1+2D)) / (2(1+pD)))
///
/// with D = Delta_psi. Depends on psi only through its concurrence.
inline double discord_analytic(const PureState& psi, double p) {
  detail::check_gwl_mixing(p);
  const double d = delta_from_concurrence(pure_concurrence(psi));
  double t = -2.0 + 0.25 * detail::xlog2x(1.0 + 3.0 * p) + 0.75 * detail::xlog2x(1.0 - p);
  t += binary_entropy(0.5 * (1.0 + p * d));
  const double wm = 0.5 * (1.0 - p * d);
  const double wp = 0.5 * (1.0 + p * d);
  // The H2 arguments lie in [0,1] exactly; clamp the round-off of the ratio.
  if (wm > 1e-15)
    t += wm * binary_entropy(std::clamp(0.25 * (1.0 + p * (1.0 - 2.0 * d)) / wm, 0.0, 1.0));
  if (wp > 1e-15)
    t += wp * binary_entropy(std::clamp(0.25 * (1.0 + p * (1.0 + 2.0 * d)) / wp, 0.0, 1.0));
  return t;
}

/// Bundle of every closed-form quantity for one (psi, p). discord_numeric is
/// filled by callers that also run the measurement optimizer.
struct CorrelationReport {
  double p = 0.0;
  double entropy_total = 0.0;     // S_AB
  double entropy_marginal = 0.0;  // S_A = S_B
  double concurrence_pure = 0.0;
  double concurrence_gwl = 0.0;
  double eof = 0.0;  // of the GWL state
  double discord_analytic = 0.0;
  std::optional<double> discord_numeric;
  double p_critical = 0.0;
};

inline CorrelationReport correlation_report(const PureState& psi, double p) {
  CorrelationReport r;
  r.p = p;
  r.entropy_total = gwl_entropy(p);
  r.entropy_marginal = reduced_entropy(psi, p);
  r.concurrence_pure = pure_concurrence(psi);
  r.concurrence_gwl = gwl_concurrence(psi, p);
  r.eof = eof(r.concurrence_gwl);
  r.discord_analytic = discord_analytic(psi, p);
  r.p_critical = p_critical(psi);
  return r;
}

}  // namespace gwl
