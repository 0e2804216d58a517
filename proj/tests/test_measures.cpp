#include <cmath>

#include "doctest.h"
#include "gwl/gwl.hpp"
#include "test_util.hpp"

using namespace gwl;

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(0.933013) == doctest::Approx(0.354577769873383).epsilon(1e-12));
  CHECK(binary_entropy(0.75) == doctest::Approx(0.811278124459133).epsilon(1e-12));
  CHECK_NOTHROW(binary_entropy(1.0 + 1e-13));  // clamped round-off
  CHECK_THROWS_AS(binary_entropy(1.0 + 1e-9), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(-1e-9), std::domain_error);
}

TEST_CASE("gwl entropy endpoints and spectrum consistency") {
  CHECK(gwl_entropy(0.0) == 2.0);
  CHECK(gwl_entropy(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(gwl_entropy(1.0 / 3.0) == doctest::Approx(1.792481250360578).epsilon(1e-13));

  std::mt19937_64 rng(3);
  for (double p : {-1.0 / 3.0, -0.2, 0.1, 0.5, 0.77, 0.99, 1.0}) {
    const PureState psi = random_pure_state(rng);
    double vn = 0.0;
    for (double lam : herm_eigvals(gwl_state(psi, p).mat()))
      vn -= lam > 0 ? lam * std::log2(lam) : 0.0;
    CHECK(std::abs(vn - gwl_entropy(p)) <= 1e-12);
  }
}

TEST_CASE("pure concurrence of the worked examples") {
  CHECK(pure_concurrence(named_state("psi1")) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(pure_concurrence(named_state("psi2")) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pure_concurrence(named_state("psi3")) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(pure_concurrence(named_state("bell:psi+")) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pure_concurrence(named_state("psi5")) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pure_concurrence(PureState(1, 0, 0, 0)) == 0.0);
}

TEST_CASE("gwl concurrence") {
  const PureState psi2 = named_state("psi2");

  SUBCASE("zero at and below the critical point") {
    for (const char* id : {"psi1", "psi2", "psi3", "bell:psi+"}) {
      const PureState psi = named_state(id);
      const double pc = p_critical(psi);
      CHECK(gwl_concurrence(psi, pc) <= 1e-12);
      CHECK(gwl_concurrence(psi, 0.9 * pc) == 0.0);
      CHECK(gwl_concurrence(psi, -0.3) == 0.0);
      CHECK(gwl_concurrence(psi, pc + 1e-6) > 0.0);
    }
  }

  SUBCASE("pure Bell state at p=1") {
    CHECK(gwl_concurrence(named_state("bell:psi+"), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("frozen value C(psi2, 0.8) = 0.3 and the Wootters route agrees") {
    CHECK(gwl_concurrence(psi2, 0.8) == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(wootters_concurrence(gwl_state(psi2, 0.8)) == doctest::Approx(0.3).epsilon(1e-11));
  }

  SUBCASE("closed form tracks the Wootters spectrum route everywhere") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 25; ++rep) {
      const PureState psi = random_pure_state(rng);
      for (double p : {-0.3, -0.1, 0.2, 0.5, 0.8, 0.95, 0.99}) {
        const double closed = gwl_concurrence(psi, p);
        const double brute = wootters_concurrence(gwl_state(psi, p));
        CHECK(std::abs(closed - brute) <= 1e-10);
      }
    }
  }
}

TEST_CASE("wootters concurrence basics") {
  CHECK(wootters_concurrence(DensityMatrix4::unchecked(Mat4::identity() * 0.25)) == 0.0);
  CHECK(wootters_concurrence(werner_state(-1.0)) == doctest::Approx(1.0).epsilon(1e-11));
  // separable at p_c = 2/5 for psi3
  CHECK(wootters_concurrence(gwl_state(named_state("psi3"), 0.4)) <= 1e-7);
}

TEST_CASE("entanglement of formation") {
  CHECK(eof(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eof(0.0) == 0.0);
  CHECK(eof(0.5) == doctest::Approx(0.354578902665270).epsilon(1e-12));
  CHECK(eof(werner_state(-1.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(eof(gwl_state(named_state("psi3"), 0.5)) ==
        doctest::Approx(0.036997409026646).epsilon(1e-9));
}

TEST_CASE("critical mixing parameter") {
  CHECK(p_critical(named_state("psi1")) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(p_critical(named_state("psi2")) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p_critical(named_state("psi3")) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(p_critical(named_state("bell:psi+")) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(p_critical(PureState(1, 0, 0, 0)) == 1.0);

  // strictly decreasing in the concurrence
  double prev = 1.1;
  for (int k = 0; k <= 20; ++k) {
    const double conc = k / 20.0;
    const double amp = std::sqrt(0.5 * (1 + delta_from_concurrence(conc)));
    const double pc = p_critical(PureState(amp, 0, 0, conc / (2 * amp), true));
    CHECK(pc < prev);
    prev = pc;
  }
}

TEST_CASE("reduced entropy") {
  std::mt19937_64 rng(29);
  const PureState psi = random_pure_state(rng);
  CHECK(reduced_entropy(psi, 0.0) == 1.0);
  CHECK(reduced_entropy(named_state("bell:psi+"), 0.37) == 1.0);
  CHECK(reduced_entropy(named_state("psi2"), 1.0) ==
        doctest::Approx(0.354578902665270).epsilon(1e-12));
  for (double p : {-0.3, 0.3, 0.8}) {
    const double vn = von_neumann_entropy(reduced(gwl_state(psi, p), Partition::A));
    CHECK(std::abs(reduced_entropy(psi, p) - vn) <= 1e-12);
  }
  // p=1 reduces to the pure-state EoF
  CHECK(std::abs(reduced_entropy(psi, 1.0) - eof(pure_concurrence(psi))) <= 1e-13);
}

TEST_CASE("analytic conditional entropy") {
  std::mt19937_64 rng(31);
  CHECK(conditional_entropy_analytic(random_pure_state(rng), 0.0) == 1.0);
  CHECK(conditional_entropy_analytic(random_pure_state(rng), 1.0) == 0.0);
  CHECK(conditional_entropy_analytic(named_state("psi3"), 0.7) ==
        doctest::Approx(0.578339238000815).epsilon(1e-12));

  // Delta = 0 reduces to H2((1+p)/2)
  const PureState bell = named_state("bell:psi+");
  for (double p : {0.1, 0.5, 0.9}) {
    CHECK(conditional_entropy_analytic(bell, p) ==
          doctest::Approx(binary_entropy(0.5 * (1 + p))).epsilon(1e-13));
  }
}

TEST_CASE("optimal post-measurement mixing parameters obey the restriction") {
  // the ratio x/(1-x) amplifies round-off as 1/(1-p)^2, so direct evaluation
  // is checked up to p = 0.95 and the algebraically reduced ratio beyond
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    const PureState psi = random_pure_state(rng);
    const double a = 0.5 * delta_from_concurrence(pure_concurrence(psi));
    for (double p : {-1.0 / 3.0, -0.1, 0.3, 0.7, 0.95}) {
      const double x0 = p * (1 - 2 * a) / (1 - 2 * p * a);
      const double x1 = p * (1 + 2 * a) / (1 + 2 * p * a);
      const double sum = x0 / (1 - x0) + x1 / (1 - x1);
      CHECK(std::abs(sum - 2 * p / (1 - p)) <= 1e-12);
    }
    for (double p : {0.99, 0.999999}) {
      const double reduced_sum = (p * (1 - 2 * a) + p * (1 + 2 * a)) / (1 - p);
      CHECK(std::abs(reduced_sum - 2 * p / (1 - p)) <= 1e-12 * std::abs(2 * p / (1 - p)));
    }
  }
}

TEST_CASE("analytic discord") {
  std::mt19937_64 rng(43);

  SUBCASE("endpoints") {
    for (int rep = 0; rep < 10; ++rep) {
      const PureState psi = random_pure_state(rng);
      CHECK(std::abs(discord_analytic(psi, 0.0)) <= 1e-15);
      CHECK(std::abs(discord_analytic(psi, 1.0) - eof(pure_concurrence(psi))) <= 1e-12);
    }
    CHECK(discord_analytic(named_state("psi2"), 1.0) ==
          doctest::Approx(0.354578902665270).epsilon(1e-12));
  }

  SUBCASE("frozen mid-range values") {
    CHECK(discord_analytic(named_state("psi1"), 0.5) ==
          doctest::Approx(0.018003461980066).epsilon(1e-10));
    CHECK(discord_analytic(named_state("psi3"), 0.5) ==
          doctest::Approx(0.153580889761417).epsilon(1e-10));
    CHECK(discord_analytic(named_state("bell:psi+"), 0.5) ==
          doctest::Approx(0.262483183763734).epsilon(1e-10));
  }

  SUBCASE("printed expression equals the S_A - S_AB + S_cond assembly") {
    for (int rep = 0; rep < 20; ++rep) {
      const PureState psi = random_pure_state(rng);
      for (double p : {-0.3, -0.1, 0.2, 0.5, 0.8, 0.99, 1.0}) {
        const double assembly =
            reduced_entropy(psi, p) - gwl_entropy(p) + conditional_entropy_analytic(psi, p);
        CHECK(std::abs(discord_analytic(psi, p) - assembly) <= 1e-12);
      }
    }
  }

  SUBCASE("psi5 and psi2 share every discord value") {
    const PureState a = named_state("psi5"), b = named_state("psi2");
    for (int k = 0; k < 50; ++k) {
      const double p = -1.0 / 3.0 + (4.0 / 3.0) * k / 49.0;
      CHECK(std::abs(discord_analytic(a, p) - discord_analytic(b, p)) <= 1e-12);
    }
  }

  SUBCASE("equal concurrence implies equal discord") {
    for (int rep = 0; rep < 10; ++rep) {
      const PureState psi = random_pure_state(rng);
      const double conc = pure_concurrence(psi);
      const double amp = std::sqrt(0.5 * (1 + delta_from_concurrence(conc)));
      const PureState mate(amp, 0, 0, conc / (2 * amp), true);
      for (double p : {0.25, 0.7, 0.95})
        CHECK(std::abs(discord_analytic(psi, p) - discord_analytic(mate, p)) <= 1e-12);
    }
  }

  SUBCASE("nondecreasing in the concurrence at fixed p") {
    for (double p : {0.2, 0.5, 0.8}) {
      double prev = -1.0;
      for (int k = 0; k <= 10; ++k) {
        const double conc = 0.1 * k;
        const double amp = std::sqrt(0.5 * (1 + delta_from_concurrence(conc)));
        const PureState psi(amp, 0, 0, conc / (2 * amp), true);
        const double d = discord_analytic(psi, p);
        CHECK(d >= prev - 1e-12);
        prev = d;
      }
    }
  }

  SUBCASE("phase reversal leaves the psi6 discord unchanged") {
    for (int k = 0; k <= 8; ++k) {
      const double phi = 2 * std::numbers::pi * k / 8.0;
      CHECK(std::abs(discord_analytic(psi6_state(phi, 0, 0, 0), 0.8) -
                     discord_analytic(psi6_state(-phi, 0, 0, 0), 0.8)) <= 1e-12);
    }
  }
}

TEST_CASE("correlation report bundles the closed forms") {
  const PureState psi = named_state("psi3");
  const CorrelationReport r = correlation_report(psi, 0.5);
  CHECK(r.p == 0.5);
  CHECK(r.entropy_total == doctest::Approx(gwl_entropy(0.5)));
  CHECK(r.entropy_marginal == doctest::Approx(reduced_entropy(psi, 0.5)));
  CHECK(r.concurrence_pure == doctest::Approx(0.75));
  CHECK(r.eof == doctest::Approx(0.036997409026646).epsilon(1e-9));
  CHECK(r.discord_analytic == doctest::Approx(0.153580889761417).epsilon(1e-10));
  CHECK(r.p_critical == doctest::Approx(0.4));
  CHECK_FALSE(r.discord_numeric.has_value());
}
