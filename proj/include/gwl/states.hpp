#pragma once

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwl/mat.hpp"

namespace gwl {

enum class Partition { A, B };

/// Valid mixing-parameter ranges of the two state families. Both guarantee
/// positivity of the resulting density matrix.
inline constexpr double kGwlPMin = -1.0 / 3.0;
inline constexpr double kGwlPMax = 1.0;
inline constexpr double kWernerPMin = -1.0;
inline constexpr double kWernerPMax = 1.0 / 3.0;

namespace detail {

inline void check_gwl_mixing(double p) {
  if (!(p >= kGwlPMin))
    throw std::invalid_argument("mixing parameter p=" + std::to_string(p) +
                                " below the GWL lower bound -1/3");
  if (!(p <= kGwlPMax))
    throw std::invalid_argument("mixing parameter p=" + std::to_string(p) +
                                " above the GWL upper bound 1");
}

inline void check_werner_mixing(double p) {
  if (!(p >= kWernerPMin))
    throw std::invalid_argument("mixing parameter p=" + std::to_string(p) +
                                " below the Werner lower bound -1");
  if (!(p <= kWernerPMax))
    throw std::invalid_argument("mixing parameter p=" + std::to_string(p) +
                                " above the Werner upper bound 1/3");
}

}  // namespace detail

/// Normalized two-qubit pure state z1|00> + z2|01> + z3|10> + z4|11>.
///
/// The constructor rejects amplitudes whose norm deviates from 1 by more than
/// 1e-12 unless `normalize` is set, in which case the input is rescaled.
/// Silent normalization is opt-in so that typos in reproduction runs surface
/// as errors. The global phase is kept as given.
class PureState {
 public:
  PureState(cplx z1, cplx z2, cplx z3, cplx z4, bool normalize = false)
      : z_{z1, z2, z3, z4} {
    double n2 = 0.0;
    for (const cplx& z : z_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("pure state amplitude is not finite");
      n2 += std::norm(z);
    }
    if (normalize) {
      if (n2 < 1e-300) throw std::invalid_argument("cannot normalize the zero vector");
      const double inv = 1.0 / std::sqrt(n2);
      for (cplx& z : z_) z *= inv;
    } else if (std::abs(n2 - 1.0) > 1e-12) {
      throw std::invalid_argument("pure state is not normalized: sum |z_i|^2 = " +
                                  std::to_string(n2));
    }
  }

  const std::array<cplx, 4>& amps() const { return z_; }
  cplx z1() const { return z_[0]; }
  cplx z2() const { return z_[1]; }
  cplx z3() const { return z_[2]; }
  cplx z4() const { return z_[3]; }

  /// Rank-one projector |psi><psi|.
  Mat4 projector() const {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = z_[i] * std::conj(z_[j]);
    return m;
  }

  /// Spin-flipped state (sigma_y (x) sigma_y) |conj(psi)>.
  PureState spin_flipped() const {
    return PureState(-std::conj(z_[3]), std::conj(z_[2]), std::conj(z_[1]),
                     -std::conj(z_[0]));
  }

  /// U|psi> for a 4x4 unitary U.
  PureState transformed(const Mat4& u) const {
    std::array<cplx, 4> w{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) w[i] += u(i, j) * z_[j];
    // A unitary image of a unit vector is a unit vector; normalize round-off.
    return PureState(w[0], w[1], w[2], w[3], true);
  }

 private:
  std::array<cplx, 4> z_;
};

/// 2x2 amplitude matrix with rows (z1 z2 / z3 z4). Reduced states and
/// measurement probabilities are matrix expressions in it: the A marginal of
/// |psi><psi| is W W^dag and the B marginal is W^T (W^T)^dag.
class WMatrix {
 public:
  explicit WMatrix(const PureState& psi) {
    m_(0, 0) = psi.z1();
    m_(0, 1) = psi.z2();
    m_(1, 0) = psi.z3();
    m_(1, 1) = psi.z4();
    const double t = (m_ * m_.adjoint()).trace().real();
    if (std::abs(t - 1.0) > 1e-12)
      throw std::invalid_argument("W matrix violates trace(W W^dag) = 1");
  }

  const Mat2& mat() const { return m_; }
  Mat2 transposed() const { return m_.transpose(); }

 private:
  Mat2 m_;
};

/// 4x4 density operator: Hermitian (1e-12), unit trace (1e-12), eigenvalues
/// >= -1e-10. Validation runs at construction; `unchecked` skips it for hot
/// loops that build states already known to be valid.
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Mat4& m) : m_(m) {
    if (!m_.all_finite()) throw std::invalid_argument("density matrix has non-finite entry");
    const double herr = m_.hermiticity_error();
    if (herr > 1e-12)
      throw std::invalid_argument("density matrix is not Hermitian: deviation " +
                                  std::to_string(herr));
    const double terr = std::abs(m_.trace().real() - 1.0) + std::abs(m_.trace().imag());
    if (terr > 1e-12)
      throw std::invalid_argument("density matrix trace differs from 1 by " +
                                  std::to_string(terr));
    const auto ev = herm_eigvals(m_);
    if (ev.back() < -1e-10)
      throw std::invalid_argument("density matrix has negative eigenvalue " +
                                  std::to_string(ev.back()));
  }

  static DensityMatrix4 unchecked(const Mat4& m) { return DensityMatrix4(m, UncheckedTag{}); }

  const Mat4& mat() const { return m_; }

 private:
  struct UncheckedTag {};
  DensityMatrix4(const Mat4& m, UncheckedTag) : m_(m) {}
  Mat4 m_;
};

/// Generalized Werner-like state (1-p)/4 * I4 + p |psi><psi|, p in [-1/3, 1].
inline DensityMatrix4 gwl_state(const PureState& psi, double p) {
  detail::check_gwl_mixing(p);
  Mat4 m = psi.projector() * p;
  const double diag = 0.25 * (1.0 - p);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) += diag;
  return DensityMatrix4::unchecked(m);
}

/// Werner state (1-p)/4 * I4 + p/2 * F4, p in [-1, 1/3].
inline DensityMatrix4 werner_state(double p) {
  detail::check_werner_mixing(p);
  Mat4 m;
  m(0, 0) = m(3, 3) = 0.25 * (1.0 + p);
  m(1, 1) = m(2, 2) = 0.25 * (1.0 - p);
  m(1, 2) = m(2, 1) = 0.5 * p;
  return DensityMatrix4::unchecked(m);
}

/// Partial trace over the complementary subsystem.
inline Mat2 reduced(const DensityMatrix4& rho, Partition part) {
  const Mat4& m = rho.mat();
  Mat2 r;
  if (part == Partition::A) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k)
        r(i, k) = m(2 * i + 0, 2 * k + 0) + m(2 * i + 1, 2 * k + 1);
  } else {
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) r(j, l) = m(0 + j, 0 + l) + m(2 + j, 2 + l);
  }
  return r;
}

/// Pure-state marginals, W W^dag on A and W^T (W^T)^dag on B.
inline Mat2 reduced(const PureState& psi, Partition part) {
  const WMatrix w(psi);
  if (part == Partition::A) return w.mat() * w.mat().adjoint();
  const Mat2 wt = w.transposed();
  return wt * wt.adjoint();
}

/// Spin flip of the complex conjugate: (sy (x) sy) conj(rho) (sy (x) sy).
inline DensityMatrix4 spin_flip(const DensityMatrix4& rho) {
  const Mat4 syy = kron(pauli_y(), pauli_y());
  return DensityMatrix4::unchecked(syy * rho.mat().conjugate() * syy);
}

/// U rho U^dag. Rejects U with ||U^dag U - I||_max beyond 1e-12.
inline DensityMatrix4 apply_unitary(const DensityMatrix4& rho, const Mat4& u) {
  const double dev = (u.adjoint() * u - Mat4::identity()).max_abs();
  if (dev > 1e-12)
    throw std::invalid_argument("apply_unitary: ||U^dag U - I||_max = " + std::to_string(dev));
  return DensityMatrix4::unchecked(u * rho.mat() * u.adjoint());
}

/// |psi6(phi1..phi4)>: fixed magnitudes (sqrt2/6, sqrt2/3, sqrt2/2, sqrt2/3)
/// with a local phase on each component and a minus sign on the first.
inline PureState psi6_state(double phi1, double phi2, double phi3, double phi4) {
  const double s2 = std::numbers::sqrt2;
  const cplx i1(0.0, phi1), i2(0.0, phi2), i3(0.0, phi3), i4(0.0, phi4);
  return PureState(-s2 / 6.0 * std::exp(i1), s2 / 3.0 * std::exp(i2),
                   s2 / 2.0 * std::exp(i3), s2 / 3.0 * std::exp(i4));
}

inline std::vector<std::string> named_state_ids() {
  return {"psi1", "psi2", "psi3", "psi5", "psi6",
          "bell:psi+", "bell:psi-", "bell:phi+", "bell:phi-"};
}

/// The worked example states, amplitudes exactly as printed (including signs).
inline PureState named_state(const std::string& id) {
  const double s2 = std::numbers::sqrt2;
  if (id == "psi1")
    return PureState(std::sqrt(7.0) / 8.0, 3.0 * std::sqrt(5.0) / 8.0, std::sqrt(5.0) / 8.0,
                     std::sqrt(7.0) / 8.0);
  if (id == "psi2") return PureState(-0.5, -s2 / 2.0, s2 / 3.0, 1.0 / 6.0);
  if (id == "psi3")
    return PureState(std::sqrt(9.0 / 40.0), std::sqrt(3.0 / 20.0), std::sqrt(3.0 / 5.0),
                     -std::sqrt(1.0 / 40.0));
  if (id == "psi5")
    return PureState(0.0, -std::sqrt(2.0 + std::sqrt(3.0)) / 2.0,
                     std::sqrt(2.0 - std::sqrt(3.0)) / 2.0, 0.0);
  if (id == "psi6") return psi6_state(0.0, 0.0, 0.0, 0.0);
  if (id == "bell:psi+") return PureState(s2 / 2.0, 0.0, 0.0, s2 / 2.0);
  if (id == "bell:psi-") return PureState(s2 / 2.0, 0.0, 0.0, -s2 / 2.0);
  if (id == "bell:phi+") return PureState(0.0, s2 / 2.0, s2 / 2.0, 0.0);
  if (id == "bell:phi-") return PureState(0.0, s2 / 2.0, -s2 / 2.0, 0.0);

  std::string valid;
  for (const std::string& v : named_state_ids()) valid += (valid.empty() ? "" : ", ") + v;
  throw std::invalid_argument("unknown state id '" + id + "'; valid ids: " + valid);
}

/// CLI state text format: "named:<id>" or eight comma-separated reals
/// z1re,z1im,...,z4im. Raw amplitudes are normalized (text input has limited
/// precision).
inline PureState parse_state(const std::string& text) {
  if (text.rfind("named:", 0) == 0) return named_state(text.substr(6));

  std::array<double, 8> v{};
  std::size_t pos = 0;
  for (int k = 0; k < 8; ++k) {
    const std::size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    try {
      std::size_t used = 0;
      v[k] = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse state component '" + tok +
                                  "' (expected named:<id> or 8 comma-separated reals)");
    }
    if (next == std::string::npos) {
      if (k != 7)
        throw std::invalid_argument("state needs 8 comma-separated reals, got " +
                                    std::to_string(k + 1));
      break;
    }
    if (k == 7) throw std::invalid_argument("state has more than 8 components");
    pos = next + 1;
  }
  return PureState(cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]), cplx(v[6], v[7]),
                   /*normalize=*/true);
}

}  // namespace gwl
