#include <doctest.h>

#include <cmath>
#include <vector>

#include "owa/baselines.hpp"
#include "owa/core.hpp"
#include "owa/error.hpp"
#include "owa/linear.hpp"

using owa::ExponentialKind;
using owa::WeightVector;

TEST_CASE("exponential_raw") {
  CHECK(owa::exponential_raw(1.0, 4, ExponentialKind::or_like) == WeightVector({1, 0, 0, 0}));
  CHECK(owa::exponential_raw(0.0, 4, ExponentialKind::or_like) == WeightVector({0, 0, 0, 1}));
  CHECK(owa::exponential_raw(0.5, 3, ExponentialKind::or_like) == WeightVector({0.5, 0.25, 0.25}));
  CHECK(owa::exponential_raw(0.5, 3, ExponentialKind::and_like) == WeightVector({0.25, 0.25, 0.5}));
  CHECK_THROWS_AS(owa::exponential_raw(1.1, 4, ExponentialKind::or_like), owa::DomainError);
  CHECK_THROWS_AS(owa::exponential_raw(-0.1, 4, ExponentialKind::or_like), owa::DomainError);
  CHECK_THROWS_AS(owa::exponential_raw(0.5, 1, ExponentialKind::or_like), owa::DomainError);
}

TEST_CASE("exponential orness is monotone in the parameter") {
  for (std::size_t n : {2, 3, 5, 10, 50, 100}) {
    double prev_or = -1.0;
    double prev_and = 2.0;
    for (int k = 0; k <= 1000; ++k) {
      const double a = k / 1000.0;
      const double o = owa::orness(owa::exponential_raw(a, n, ExponentialKind::or_like)).value;
      const double u = owa::orness(owa::exponential_raw(a, n, ExponentialKind::and_like)).value;
      REQUIRE(o >= prev_or);
      REQUIRE(u <= prev_and);
      prev_or = o;
      prev_and = u;
    }
  }
}

TEST_CASE("exponential_weights preset") {
  SUBCASE("extremes") {
    const auto r = owa::exponential_weights(1.0, 5);
    CHECK(r.weights == WeightVector::maximum(5));
    CHECK(r.calibration.converged);
    CHECK(r.calibration.parameter == 1.0);
    CHECK(owa::exponential_weights(0.0, 5).weights == WeightVector::minimum(5));
  }
  SUBCASE("n = 2 reduces to [orness, 1 - orness]") {
    const auto r = owa::exponential_weights(0.5, 2);
    CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("orness 0.6, n = 5") {
    const auto r = owa::exponential_weights(0.6, 5);
    CHECK(std::abs(owa::orness(r.weights).value - 0.6) <= 1e-9);
    CHECK(r.calibration.converged);
    CHECK(r.calibration.parameter == doctest::Approx(0.33435235703736827).epsilon(1e-9));
    // the tail rises again: the last weight exceeds its neighbour
    CHECK(r.weights[4] > r.weights[3]);
  }
  SUBCASE("every grid point calibrates") {
    for (std::size_t n : {2, 3, 10, 100}) {
      for (int k = 0; k <= 100; ++k) {
        const double o = k / 100.0;
        const auto r = owa::exponential_weights(o, n);
        REQUIRE(std::abs(r.calibration.achieved_orness - o) <= 1e-9);
        REQUIRE(r.calibration.iterations <= owa::kCalibrationMaxIterations);
      }
    }
  }
  CHECK_THROWS_AS(owa::exponential_weights(1.5, 5), owa::DomainError);
}

TEST_CASE("maxent_weights examples") {
  CHECK(owa::maxent_weights(0.5, 5) == WeightVector::uniform(5));
  const auto w2 = owa::maxent_weights(0.75, 2);
  CHECK(w2[0] == 0.75);
  CHECK(w2[1] == 0.25);

  SUBCASE("orness 0.6, n = 5 against an extended-precision dual solve") {
    const double expected[] = {0.288408725966, 0.235288209257, 0.191951686726, 0.156597094912,
                               0.127754283139};
    const auto w = owa::maxent_weights(0.6, 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(w[i] - expected[i]) < 1e-11);
    CHECK(owa::dispersion(w) == doctest::Approx(1.56908457972).epsilon(1e-10));
    CHECK(owa::dispersion(w) >= owa::dispersion(owa::linear_weights(owa::OrnessTarget(0.6), 5)));
  }

  SUBCASE("extreme orness is unsupported") {
    CHECK_THROWS_WITH_AS(owa::maxent_weights(0.0, 5), doctest::Contains("orness 0"),
                         owa::UnsupportedError);
    CHECK_THROWS_AS(owa::maxent_weights(1.0, 5), owa::UnsupportedError);
    CHECK_THROWS_AS(owa::maxent_weights(1.0, 2), owa::UnsupportedError);
  }
  CHECK_THROWS_AS(owa::maxent_weights(0.5, 1), owa::DomainError);
}

TEST_CASE("maxent breaks down near orness 0.98 for n = 100 and says so") {
  bool flagged = false;
  for (int k = 900; k < 1000; ++k) {
    const double o = k / 1000.0;
    try {
      const auto w = owa::maxent_weights(o, 100);
      REQUIRE(std::abs(owa::orness(w).value - o) <= owa::kMaxentOrnessTolerance);
    } catch (const owa::NumericalInstabilityError& e) {
      flagged = true;
      CHECK(e.orness() == o);
      CHECK(std::string(e.what()).find("unstable") != std::string::npos);
    }
  }
  CHECK(flagged);
  CHECK_THROWS_AS(owa::maxent_weights(0.98, 100), owa::NumericalInstabilityError);
  CHECK_THROWS_AS(owa::maxent_weights(0.02, 100), owa::NumericalInstabilityError);
  CHECK_NOTHROW(owa::maxent_weights(0.9, 100));
}

TEST_CASE("maxent structure") {
  for (std::size_t n : {3, 4, 5, 10, 30}) {
    for (int k = 1; k < 20; ++k) {
      const double o = k / 20.0;
      const auto w = owa::maxent_weights(o, n);
      const auto mirror = owa::maxent_weights(1.0 - o, n).reversed();
      const double ratio = w[1] / w[0];
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(w[j] - mirror[j]) < 1e-9);
        if (j + 1 < n) CHECK(std::abs(w[j + 1] / w[j] - ratio) < 1e-8);
      }
    }
  }
}

TEST_CASE("maxent dominates the other methods in dispersion") {
  for (std::size_t n : {3, 5, 10, 50, 100}) {
    for (int k = 1; k < 100; ++k) {
      const double o = k / 100.0;
      WeightVector best = WeightVector::uniform(n);
      try {
        best = owa::maxent_weights(o, n);
      } catch (const owa::NumericalInstabilityError&) {
        continue;
      }
      const double h = owa::dispersion(best);
      for (double beta : {1.0, 1.25, 1.5})
        REQUIRE(h >= owa::dispersion(owa::linear_weights(owa::OrnessTarget(o, beta), n)) - 1e-9);
      REQUIRE(h >= owa::dispersion(owa::exponential_weights(o, n).weights) - 1e-9);
    }
  }
}
