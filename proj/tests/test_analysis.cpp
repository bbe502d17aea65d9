#include <doctest.h>

#include "spinchain/analysis.hpp"
#include "test_helpers.hpp"

using namespace spinchain;

TEST_CASE("scan_time: single-point grid reproduces the input report") {
  const XState input = mdms_werner(0.6);
  const ScanSeries series = scan_time({5, 1.0, 0.0}, input, 1, {0.0});
  REQUIRE(series.points.size() == 1);
  CHECK(series.axis_label == "time in 1/J");
  const CorrelationReport direct = full_report(input);
  CHECK(series.points[0].report.discord_two_way ==
        doctest::Approx(direct.discord_two_way).epsilon(1e-12));
  CHECK(series.points[0].report.eof == doctest::Approx(direct.eof).epsilon(1e-12));
}

TEST_CASE("scan_time grid validation") {
  CHECK_THROWS_AS(scan_time({3, 1.0, 0.0}, pure_state(0.3), 3, {}), std::domain_error);
  CHECK_THROWS_AS(scan_time({3, 1.0, 0.0}, pure_state(0.3), 3, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("three-site transport peaks recover the input correlations") {
  const XState input = pure_state(0.4);
  const double e0 = eof(input);
  const double t_star = kPi / std::sqrt(2.0);
  auto grid = linspace(0.05, 4.5, 120);
  grid.push_back(4.6);
  grid[60] = t_star;  // make sure the exact peak is sampled
  std::sort(grid.begin(), grid.end());
  const ScanSeries series = scan_time({3, 1.0, 0.0}, input, 3, grid);

  double max_e = 0, max_d = 0;
  bool favored = false;
  for (const auto& p : series.points) {
    max_e = std::max(max_e, p.report.eof);
    max_d = std::max(max_d, p.report.discord_two_way);
    if (p.report.discord_two_way > p.report.eof + 1e-3) favored = true;
  }
  CHECK(max_e == doctest::Approx(e0).epsilon(1e-6));
  CHECK(max_d == doctest::Approx(e0).epsilon(1e-6));
  CHECK(favored);  // between peaks the transported discord exceeds the EoF
}

TEST_CASE("fifty-site transport: windows with practically dead EoF but alive discord") {
  const ScanSeries series = scan_time({50, 1.0, 0.0}, pure_state(0.1), 50,
                                      linspace(20.0, 75.0, 56));
  bool window_found = false;
  for (const auto& p : series.points)
    if (p.report.eof < 2e-4 && p.report.discord_two_way > 2e-3) window_found = true;
  CHECK(window_found);
}

TEST_CASE("amplitude scan: rescaled measures and the identity endpoint") {
  const AmplitudeScan scan = scan_amplitude(mdms_werner(1.0), linspace(0.05, 1.0, 20));
  REQUIRE(scan.rescaled);
  const size_t last = scan.series.points.size() - 1;
  CHECK(scan.discord_tilde(last) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(scan.eof_tilde(last) == doctest::Approx(1.0).epsilon(1e-8));

  // discord transports better below the crossover, EoF above it
  const AmplitudeScan fine = scan_amplitude(mdms_werner(1.0), {0.65, 0.75});
  CHECK(fine.discord_tilde(0) > fine.eof_tilde(0));
  CHECK(fine.discord_tilde(1) < fine.eof_tilde(1));
}

TEST_CASE("amplitude scan on a barely entangled Werner state") {
  const XState input = mdms_werner(0.4);
  const AmplitudeScan scan = scan_amplitude(input, linspace(0.05, 1.0, 39));
  REQUIRE(scan.rescaled);
  const double esd_cut = std::sqrt(2.0 / 3.0);  // from the threshold formula at a = 0.4
  for (size_t i = 0; i < scan.series.points.size(); ++i) {
    const double f = scan.series.points[i].axis_value;
    CHECK(scan.series.points[i].report.discord_two_way > 1e-6);
    if (f < esd_cut - 1e-9)
      CHECK(scan.series.points[i].report.eof == 0.0);
    if (f > esd_cut + 0.02)
      CHECK(scan.series.points[i].report.eof > 0.0);
  }
}

TEST_CASE("amplitude scan falls back to raw values for uncorrelated inputs") {
  testutil::Rng rng(61);
  const AmplitudeScan scan =
      scan_amplitude(testutil::random_diagonal_state(rng), linspace(0.1, 1.0, 5));
  CHECK_FALSE(scan.rescaled);
  CHECK(scan.discord_reference == 1.0);
  CHECK(scan.eof_reference == 1.0);
}

TEST_CASE("ESD thresholds: formula against direct evaluation") {
  // separable input: dead at every |f|
  const EsdThresholds sep = esd_threshold(mdms_werner(0.2));
  CHECK(std::min(sep.threshold_14.value(), sep.threshold_23.value()) >= 1.0);

  // Werner a = 0.5: the threshold sits exactly at |f|^2 = 0
  const XState w = mdms_werner(0.5);
  const EsdThresholds th = esd_threshold(w);
  CHECK(th.threshold_14.value() == doctest::Approx(0.0).epsilon(1e-12));
  const double cut = std::min(th.threshold_14.value(), th.threshold_23.value());
  for (int i = 0; i <= 1000; ++i) {
    const double fsq = static_cast<double>(i) / 1000;
    if (std::abs(fsq - cut) <= 1e-9) continue;
    const bool dead = concurrence_x(evolve_pair(w, std::sqrt(fsq))) == 0.0;
    CHECK(dead == (fsq <= cut || fsq == 0.0));  // f = 0 kills the coherences outright
  }

  // random entangled states with p3 p4 > 0
  testutil::Rng rng(62);
  for (int s = 0; s < 60; ++s) {
    XState x = testutil::random_xstate(rng);
    if (x.p3 * x.p4 <= 1e-6 || concurrence_x(x) <= 1e-3) {
      --s;
      continue;
    }
    const EsdThresholds t = esd_threshold(x);
    const double c = std::min(t.threshold_14.value(), t.threshold_23.value());
    for (int i = 0; i <= 40; ++i) {
      const double fsq = static_cast<double>(i) / 40;
      if (std::abs(fsq - c) <= 1e-9) continue;
      const bool dead = concurrence_x(evolve_pair(x, std::sqrt(fsq))) == 0.0;
      CHECK(dead == (fsq <= c || fsq == 0.0));
    }
  }
}

TEST_CASE("rank-deficient inputs follow the concurrence scaling law") {
  const XState x = mdms_r(0.0150, 0.9747);
  const EsdThresholds th = esd_threshold(x);
  CHECK(th.scaling_law);
  CHECK_FALSE(th.threshold_14.has_value());
  const double c0 = concurrence_x(x);
  for (int i = 0; i <= 50; ++i) {
    const double mag = static_cast<double>(i) / 50;
    CHECK(std::abs(concurrence_x(evolve_pair(x, mag)) - mag * c0) < 1e-12);
  }
}

TEST_CASE("zero-discord classification") {
  testutil::Rng rng(63);
  CHECK(classify_zero_discord(testutil::random_diagonal_state(rng)) ==
        ZeroDiscordClass::diagonal_cc);
  CHECK(classify_zero_discord(mmm_state(1, 0, 0)) == ZeroDiscordClass::symmetric_zero);
  CHECK(classify_zero_discord(evolve_pair(mmm_state(1, 0, 0), 0.8)) ==
        ZeroDiscordClass::quantum_classical);

  const XState cq{0.15, 0.35, 0.15, 0.35, std::polar(0.12, 0.7), std::polar(0.12, 2.9)};
  CHECK(classify_zero_discord(cq) == ZeroDiscordClass::classical_quantum);

  CHECK(classify_zero_discord(pure_state(0.7)) == ZeroDiscordClass::nonzero);
  CHECK(classify_zero_discord(mdms_werner(0.8)) == ZeroDiscordClass::nonzero);
  CHECK(std::string(to_string(ZeroDiscordClass::symmetric_zero)) == "symmetric_zero");
}

TEST_CASE("crossover location") {
  const auto werner = crossover_amplitude(mdms_werner(1.0));
  REQUIRE(werner.has_value());
  CHECK(*werner == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));

  // the rescaled measures actually meet at the returned point
  const XState input = mdms_werner(1.0);
  const CorrelationReport at_cross = full_report(evolve_pair(input, *werner));
  const CorrelationReport initial = full_report(input);
  CHECK(std::abs(at_cross.discord_two_way / initial.discord_two_way -
                 at_cross.eof / initial.eof) <= 1e-6);

  CHECK_FALSE(crossover_amplitude(mdms_p(0.55, 0.0)).has_value());

  const auto r_family = crossover_amplitude(mdms_r(0.0150, 0.9747));
  REQUIRE(r_family.has_value());
  CHECK(*r_family > 0.5);
  CHECK(*r_family < 1.0);
}

TEST_CASE("field lower bound on transported discord") {
  const XState input = mmm_state(0.53, 0.340, 0.035);
  const auto grid = linspace(1.0, 15.0, 8);

  const FieldBoundResult r = field_lower_bound_check({10, 1.0, 1.0}, input, grid);
  CHECK(r.holds);
  CHECK(r.max_violation <= 1e-7);

  // field = 0 against itself: identical by construction
  const FieldBoundResult zero = field_lower_bound_check({10, 1.0, 0.0}, input, grid);
  CHECK(zero.max_violation == 0.0);

  // |cx| = |cy|: the phase is removable, the two columns coincide
  const FieldBoundResult sym = field_lower_bound_check({10, 1.0, 2.0}, mmm_state(0.4, 0.4, 0.1),
                                                       grid);
  CHECK(sym.holds);
  CHECK(std::abs(sym.max_violation) < 1e-8);

  CHECK_THROWS_AS(field_lower_bound_check({10, 1.0, 1.0}, pure_state(0.5), grid),
                  std::domain_error);
}

TEST_CASE("Pauli observables") {
  const PauliObservables zero = observables(mdms_werner(0.0));
  CHECK(zero.sx_sx == 0.0);
  CHECK(zero.sy_sx == 0.0);
  CHECK(zero.sz_a == 0.0);
  CHECK(zero.sz_b == 0.0);

  const PauliObservables up_up = observables(pure_state(0.0));  // |up up>
  CHECK(up_up.sz_a == doctest::Approx(1.0));
  CHECK(up_up.sz_b == doctest::Approx(1.0));

  // classically correlated input through the channel, real amplitude
  const PauliObservables real_f = observables(evolve_pair(mmm_state(1, 0, 0), 0.6));
  CHECK(real_f.sx_sx == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(real_f.sy_sx == doctest::Approx(0.0));
  // chain-side magnetization relaxes toward the drained value; with
  // sigma_z |up> = +|up> it reads |f|^2 - 1
  CHECK(real_f.sz_a == doctest::Approx(0.36 - 1.0).epsilon(1e-12));
  CHECK(real_f.sz_b == doctest::Approx(0.0));

  const PauliObservables imag_f = observables(evolve_pair(mmm_state(1, 0, 0), cxd(0, 0.6)));
  CHECK(imag_f.sy_sx == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(imag_f.sx_sx == doctest::Approx(0.0));
}

TEST_CASE("classical-classical death point") {
  // p1 = 0: all populations land on 1/4 at |f|^2 = 1/2
  const XState half{0.0, 0.0, 0.5, 0.5, 0.0, 0.0};
  const ClassicalDeathPrediction p0 = classical_classical_death_time(half);
  CHECK(p0.f_squared == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p0.audit_discord_ab <= 1e-6);
  CHECK(p0.audit_discord_ba <= 1e-6);

  // p1 = 1/8 gives |f|^2 = 2/3; the evolved state is classical-classical
  const XState x{0.125, 0.125, 0.375, 0.375, std::polar(0.1, 0.4), std::polar(0.1, 1.8)};
  const ClassicalDeathPrediction p = classical_classical_death_time(x);
  CHECK(p.f_squared == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(p.audit_discord_ab <= 1e-6);
  CHECK(p.audit_discord_ba <= 1e-6);

  const XState evolved = evolve_pair(x, std::sqrt(p.f_squared));
  CHECK(evolved.p1 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(evolved.p4 == doctest::Approx(0.25).epsilon(1e-12));

  const XState too_heavy{0.3, 0.3, 0.2, 0.2, 0.0, 0.0};
  CHECK_THROWS_AS(classical_classical_death_time(too_heavy), std::domain_error);
  CHECK_THROWS_AS(classical_classical_death_time(pure_state(0.5)), std::domain_error);
}

TEST_CASE("EoF columns are field-independent; diagonal states stay discord-free") {
  const XState input = pure_state(0.6);
  const auto grid = linspace(0.5, 12.0, 25);
  for (double t : grid) {
    const double e0 = eof(evolve_at_time({8, 1.0, 0.0}, input, 8, t));
    const double e5 = eof(evolve_at_time({8, 1.0, 5.0}, input, 8, t));
    CHECK(std::abs(e0 - e5) < 1e-10);
  }

  testutil::Rng rng(64);
  for (int i = 0; i < 20; ++i) {
    const XState diag = testutil::random_diagonal_state(rng);
    const cxd f = std::polar(rng.uniform(), rng.uniform(0.0, 2 * kPi));
    CHECK(discord_two_way(x_to_dense(evolve_pair(diag, f))) < 1e-7);
  }
}

TEST_CASE("default time grid covers [0, 3N/(2J)]") {
  const auto grid = default_time_grid({20, 2.0, 0.0}, 11);
  CHECK(grid.size() == 11);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(15.0));
}

TEST_CASE("threaded scans are bit-identical to serial ones") {
  const ChainSpec spec{8, 1.0, 0.4};
  const XState input = mdms_werner(0.7);
  const auto grid = linspace(0.5, 10.0, 12);

  const ScanSeries serial = scan_time(spec, input, 8, grid);
  setenv("SPINCHAIN_THREADS", "3", 1);
  const ScanSeries threaded = scan_time(spec, input, 8, grid);
  unsetenv("SPINCHAIN_THREADS");

  REQUIRE(threaded.points.size() == serial.points.size());
  for (size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(threaded.points[i].axis_value == serial.points[i].axis_value);
    CHECK(threaded.points[i].report.discord_two_way ==
          serial.points[i].report.discord_two_way);
    CHECK(threaded.points[i].report.eof == serial.points[i].report.eof);
    CHECK(threaded.points[i].report.classical_ab == serial.points[i].report.classical_ab);
  }
}
