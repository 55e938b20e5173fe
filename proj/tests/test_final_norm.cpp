#include <cmath>
#include <vector>

#include "doctest.h"
#include "renorm/final_norm.hpp"
#include "renorm/hull_gauge.hpp"
#include "renorm/types.hpp"

using namespace renorm;

namespace {

const double kSqrt2 = std::sqrt(2.0);

ModelConfig small_config(std::size_t dim = 8, double p = 2.0) {
  ModelConfig cfg;
  cfg.dim = dim;
  cfg.p = p;
  return cfg;
}

}  // namespace

TEST_CASE("model construction validates and exposes unit normalizers") {
  CHECK_THROWS_AS(FinalModel(small_config(3)), ConfigError);
  for (double p : {2.0, 3.0}) {
    FinalModel model(small_config(8, p));
    const std::vector<double>& c = model.functional_normalizers();
    REQUIRE(c.size() == 8);
    for (std::size_t n = 2; n <= 8; ++n)
      CHECK(c[n - 1] == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("tail series term at frozen points") {
  FinalModel model(small_config());
  CHECK(model.tail_term(unit_vector(1, 8)) == 0.0);
  CHECK(model.tail_term(unit_vector(2, 8)) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(model.tail_term(unit_vector(3, 8)) ==
        doctest::Approx(0.125).epsilon(1e-14));
  Vector x(8);
  x.set_coeff(2, 2.0);
  x.set_coeff(4, -1.0);
  CHECK(model.tail_term(x) ==
        doctest::Approx(4.0 * 0.25 + 0.0625).epsilon(1e-14));
}

TEST_CASE("renormed norm at frozen points") {
  FinalModel model(small_config());
  Vector apex(8);
  apex.set_coeff(1, kSqrt2);
  CHECK(model.norm(apex) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(model.norm(Vector(8)) == 0.0);
  CHECK(model.norm(unit_vector(3, 8)) ==
        doctest::Approx(std::sqrt(1.125)).epsilon(1e-9));
  CHECK(model.gauge(apex) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("renormed norm is equivalent to the gauge") {
  FinalModel model(small_config());
  GaussianSource rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = rng.next_vector(8);
    double g = model.gauge(x);
    double n = model.norm(x);
    CHECK(n >= g - 1e-12);
    // Tail weights sum below 1/2 and each coordinate is gauge-dominated.
    CHECK(n <= std::sqrt(3.0) * g + 1e-12);
  }
}

TEST_CASE("handles cover every tag except the lift") {
  FinalModel model(small_config());
  for (NormTag tag : {NormTag::BaseP, NormTag::Split, NormTag::Theta,
                      NormTag::HullGauge, NormTag::Final, NormTag::TroyanskiL1}) {
    NormHandle h = model.handle(tag);
    CHECK(h.tag == tag);
    CHECK(h(unit_vector(2, 8)) > 0.0);
  }
  CHECK_THROWS_AS(model.handle(NormTag::Lifted), ConfigError);
}

TEST_CASE("support functional at the apex") {
  FinalModel model(small_config());
  Vector apex(8);
  apex.set_coeff(1, kSqrt2);
  Functional f = support_functional(model, apex);
  CHECK(pair(f, apex) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(f.coeff(1) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-3));
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(std::fabs(f.coeff(n)) <= 1e-3);
}

TEST_CASE("support functional is even where the norm is") {
  FinalModel model(small_config());
  Vector e2 = unit_vector(2, 8);
  Vector x = (1.0 / model.norm(e2)) * e2;
  Functional f = support_functional(model, x);
  CHECK(pair(f, x) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::fabs(pair(f, unit_vector(1, 8))) <= 1e-4);
}

TEST_CASE("support functional rejects points off the sphere") {
  FinalModel model(small_config());
  CHECK_THROWS_AS(support_functional(model, unit_vector(1, 8)), DomainError);
}

TEST_CASE("support functional is a subgradient on random sphere points") {
  FinalModel model(small_config());
  NormHandle h = model.handle(NormTag::Final);
  std::vector<Vector> pts = sphere_sample(h, 8, 5, 53);
  GaussianSource rng(59);
  for (const Vector& x : pts) {
    Functional f = support_functional(model, x);
    CHECK(pair(f, x) == doctest::Approx(1.0).epsilon(1e-4));
    for (int k = 0; k < 10; ++k) {
      Vector y = rng.next_vector(8);
      CHECK(pair(f, y) <= model.norm(y) * (1.0 + 1e-3) + 1e-9);
    }
  }
}

TEST_CASE("dual norm estimate at the first coordinate functional") {
  FinalModel model(small_config());
  DualEstimate d = dual_norm_final(model, unit_functional(1, 8));
  CHECK(d.upper == doctest::Approx(kSqrt2).epsilon(1e-12));
  CHECK(d.lower == doctest::Approx(kSqrt2).epsilon(1e-9));
  CHECK_FALSE(d.flagged);
  CHECK(model.norm(d.argmax) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pair(unit_functional(1, 8), d.argmax) ==
        doctest::Approx(d.lower).epsilon(1e-12));
}

TEST_CASE("dual norm estimate is a certified enclosure") {
  FinalModel model(small_config());
  NormHandle h = model.handle(NormTag::Final);
  GaussianSource rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    Functional f{rng.next_vector(8).coords()};
    DualEstimate d = dual_norm_final(model, f);
    CHECK(d.lower <= d.upper + 1e-12);
    std::vector<Vector> pts = sphere_sample(h, 8, 20, 67 + trial);
    for (const Vector& y : pts) CHECK(pair(f, y) <= d.upper + 1e-9);
  }
  DualEstimate zero = dual_norm_final(model, Functional(8));
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == 0.0);
  CHECK_THROWS_AS(dual_norm_final(model, Functional(8), 0), ConfigError);
}

TEST_CASE("direct-sum lift restricts to the block and to the complement") {
  FinalModel block(small_config(8));
  GaussianSource rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    Vector head = rng.next_vector(8);
    Vector lifted(16);
    for (std::size_t i = 0; i < 8; ++i) lifted[i] = head[i];
    CHECK(lift_direct_sum(block, lifted) ==
          doctest::Approx(block.norm(head)).epsilon(1e-12));

    Vector tail(16);
    for (std::size_t i = 8; i < 16; ++i) tail[i] = rng.next();
    Vector rest(8);
    for (std::size_t i = 0; i < 8; ++i) rest[i] = tail[8 + i];
    CHECK(lift_direct_sum(block, tail) ==
          doctest::Approx(base_lur_norm(rest, 2.0)).epsilon(1e-12));

    Vector both = lifted + tail;
    double expect = std::hypot(block.norm(head), base_lur_norm(rest, 2.0));
    CHECK(lift_direct_sum(block, both) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lift_direct_sum(block, Vector(8)), DimensionError);
  NormHandle h = make_lifted_handle(block, 16);
  CHECK(h.tag == NormTag::Lifted);
  CHECK_THROWS_AS(h(Vector(8)), DimensionError);
}
