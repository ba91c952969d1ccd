#include <doctest.h>

#include <cmath>

#include "core/evolution.hpp"

using namespace nft;

namespace {

ScatteringData sample_data() {
  ScatteringData sd;
  sd.rho = {-2.0, -0.5, 0.3, 1.7};
  sd.a = {cplx(0.9, 0.1), cplx(0.8, -0.2), cplx(0.95, 0.05), cplx(1.0, 0.0)};
  sd.b = {cplx(0.1, 0.2), cplx(-0.3, 0.4), cplx(0.2, -0.1), cplx(0.0, 0.05)};
  sd.eigenvalues = {cplx(0.0, 0.498749217771909), cplx(0.5, 1.2)};
  sd.norming_constants = {cplx(-0.02, -0.99), cplx(1.1, 0.2)};
  sd.meta.time = 0.0;
  return sd;
}

}  // namespace

TEST_CASE("evolving by zero is the identity") {
  const ScatteringData sd = sample_data();
  const ScatteringData out = evolve(sd, 0.0);
  for (std::size_t k = 0; k < sd.rho.size(); ++k) {
    CHECK(out.a[k] == sd.a[k]);
    CHECK(out.b[k] == sd.b[k]);
  }
  for (std::size_t m = 0; m < sd.eigenvalues.size(); ++m) {
    CHECK(out.eigenvalues[m] == sd.eigenvalues[m]);
    CHECK(out.norming_constants[m] == sd.norming_constants[m]);
  }
  CHECK(out.meta.time == 0.0);
}

TEST_CASE("real samples pick up a pure phase") {
  const ScatteringData sd = sample_data();
  const ScatteringData out = evolve(sd, 2.7);
  for (std::size_t k = 0; k < sd.rho.size(); ++k) {
    CHECK(std::abs(out.a[k] - sd.a[k]) == 0.0);
    CHECK(std::abs(std::abs(out.b[k]) - std::abs(sd.b[k])) < 1e-16);
  }
  CHECK(out.meta.time == doctest::Approx(2.7));
}

TEST_CASE("purely imaginary eigenvalues keep unimodular multipliers") {
  const ScatteringData sd = sample_data();
  const ScatteringData out = evolve(sd, 1.0);
  // rho^2 is real negative for rho = i y, so exp(4 i rho^2 t) has modulus 1
  CHECK(std::abs(std::abs(out.norming_constants[0]) -
                 std::abs(sd.norming_constants[0])) < 1e-15);
  // the multiplier matches direct exponentiation
  const cplx rho = sd.eigenvalues[0];
  const cplx mult = std::exp(cplx(0.0, 4.0) * rho * rho);
  CHECK(std::abs(std::abs(mult) - 1.0) < 1e-15);
  CHECK(std::abs(out.norming_constants[0] - sd.norming_constants[0] * mult) < 1e-15);
}

TEST_CASE("evolution composes additively in time") {
  const ScatteringData sd = sample_data();
  const ScatteringData two_steps = evolve(evolve(sd, 0.7), 1.8);
  const ScatteringData one_step = evolve(sd, 2.5);
  CHECK(two_steps.meta.time == doctest::Approx(2.5));
  for (std::size_t k = 0; k < sd.rho.size(); ++k)
    CHECK(std::abs(two_steps.b[k] - one_step.b[k]) < 1e-15);
  for (std::size_t m = 0; m < sd.eigenvalues.size(); ++m)
    CHECK(std::abs(two_steps.norming_constants[m] - one_step.norming_constants[m]) <
          1e-13);
}

TEST_CASE("unitarity defect is invariant under evolution") {
  const ScatteringData sd = sample_data();
  const ScatteringData out = evolve(sd, 5.0);
  CHECK(std::abs(out.unitarity_defect() - sd.unitarity_defect()) < 1e-14);
}
