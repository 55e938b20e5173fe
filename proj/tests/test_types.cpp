#include <cmath>
#include <vector>

#include "doctest.h"
#include "renorm/base_norms.hpp"
#include "renorm/final_norm.hpp"
#include "renorm/hull_gauge.hpp"
#include "renorm/types.hpp"

using namespace renorm;

TEST_CASE("coordinate access is 1-based and checked") {
  Vector x(4);
  x.set_coeff(1, 3.0);
  x.set_coeff(4, -2.0);
  CHECK(x[0] == 3.0);
  CHECK(x[3] == -2.0);
  CHECK(x.coeff(1) == 3.0);
  CHECK_THROWS_AS(x.coeff(0), DimensionError);
  CHECK_THROWS_AS(x.coeff(5), DimensionError);
  CHECK_THROWS_AS(x.set_coeff(5, 1.0), DimensionError);
}

TEST_CASE("vector arithmetic demands equal lengths") {
  Vector a(3), b(4);
  CHECK_THROWS_AS(a += b, DimensionError);
  Vector c(3);
  c.set_coeff(2, 1.0);
  Vector d = a + c;
  CHECK(d.coeff(2) == 1.0);
  Vector e = 2.0 * c;
  CHECK(e.coeff(2) == 2.0);
}

TEST_CASE("pairing is bilinear") {
  GaussianSource rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = rng.next_vector(6);
    Vector y = rng.next_vector(6);
    Functional f{rng.next_vector(6).coords()};
    Functional g{rng.next_vector(6).coords()};
    double s = rng.next();
    double lhs = pair(f, x + s * y);
    double rhs = pair(f, x) + s * pair(f, y);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    Functional h = f + 2.0 * g;
    CHECK(pair(h, x) ==
          doctest::Approx(pair(f, x) + 2.0 * pair(g, x)).epsilon(1e-12));
  }
}

TEST_CASE("unit vectors and functionals") {
  Vector e2 = unit_vector(2, 5);
  CHECK(e2.dim() == 5);
  CHECK(e2.coeff(2) == 1.0);
  CHECK(e2.coeff(1) == 0.0);
  Functional g3 = unit_functional(3, 5);
  CHECK(pair(g3, e2) == 0.0);
  CHECK(pair(g3, unit_vector(3, 5)) == 1.0);
  CHECK_THROWS_AS(unit_vector(6, 5), DimensionError);
  CHECK_THROWS_AS(unit_vector(0, 5), DimensionError);
}

TEST_CASE("model config validation") {
  ModelConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.dim = 3;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.dim = 64;
  cfg.p = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.p = 2.0;
  cfg.gauge_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("model weights") {
  ModelConfig cfg;
  cfg.dim = 5;
  std::vector<double> w = cfg.t_weights();
  REQUIRE(w.size() == 5);
  CHECK(w[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(w[4] == doctest::Approx(1.0 / 25.0).epsilon(1e-15));
  std::vector<double> s = cfg.series_weights();
  REQUIRE(s.size() == 5);
  CHECK(s[0] == 0.0);
  CHECK(s[1] == 0.25);
  CHECK(s[4] == doctest::Approx(std::ldexp(1.0, -5)).epsilon(1e-15));
}

TEST_CASE("gaussian source is deterministic and platform-pinned") {
  GaussianSource a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  GaussianSource c(42), d(43);
  bool differ = false;
  for (int i = 0; i < 10; ++i) differ = differ || (c.next() != d.next());
  CHECK(differ);
}

TEST_CASE("sphere samples land on the requested sphere") {
  ModelConfig cfg;
  cfg.dim = 8;
  FinalModel model(cfg);
  NormHandle h = model.handle(NormTag::Final);
  std::vector<Vector> pts = sphere_sample(h, cfg.dim, 25, 11);
  REQUIRE(pts.size() == 25);
  for (const Vector& x : pts)
    CHECK(h(x) == doctest::Approx(1.0).epsilon(1e-9));
  std::vector<Vector> again = sphere_sample(h, cfg.dim, 25, 11);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < cfg.dim; ++j)
      CHECK(pts[i][j] == again[i][j]);
}

TEST_CASE("every handle is a norm: homogeneity and triangle inequality") {
  ModelConfig cfg;
  cfg.dim = 8;
  FinalModel model(cfg);
  const NormTag tags[] = {NormTag::BaseP, NormTag::Split, NormTag::Theta,
                          NormTag::HullGauge, NormTag::Final};
  GaussianSource rng(3);
  for (NormTag tag : tags) {
    CAPTURE(norm_tag_name(tag));
    NormHandle h = model.handle(tag);
    for (int trial = 0; trial < 8; ++trial) {
      Vector x = rng.next_vector(cfg.dim);
      Vector y = rng.next_vector(cfg.dim);
      double s = -1.5 + rng.next();
      double hx = h(x), hy = h(y);
      CHECK(h(s * x) == doctest::Approx(std::fabs(s) * hx).epsilon(1e-9));
      CHECK(h(x + y) <= hx + hy + 1e-9 * (hx + hy));
    }
  }
}
