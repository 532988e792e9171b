#include <doctest.h>

#include <numeric>

#include "lenstight/lens_core.hpp"
#include "support.hpp"

using namespace lenstight;


TEST_CASE("lens spaces are canonicalized") {
  CHECK(make_lens(3, 1) == make_lens(3, 4));
  CHECK(make_lens(3, 5).q() == 2);
  CHECK(make_lens(3, -1).q() == 2);
  CHECK(make_lens(1, 0).q() == 1);
  CHECK(to_string(make_lens(7, 10)) == "L(7,3)");
  CHECK(code_of([] { make_lens(4, 2); }) == ErrorCode::NonCoprime);
  CHECK(code_of([] { make_lens(0, 1); }) == ErrorCode::UnsupportedP);
  CHECK(code_of([] { make_lens(-3, 1); }) == ErrorCode::UnsupportedP);
  CHECK(is_input_error(ErrorCode::NonCoprime));
  CHECK_FALSE(is_input_error(ErrorCode::Overflow));
}

TEST_CASE("gluing matrix") {
  auto g = gluing_matrix(make_lens(3, 1));
  CHECK(g.a11 == -1);
  CHECK(g.a12 == 0);
  CHECK(g.a21 == 3);
  CHECK(g.a22 == 1);
  g = gluing_matrix(make_lens(5, 2));
  CHECK(g.a11 == -2);
  CHECK(g.a12 == -1);
  CHECK(g.a21 == 5);
  CHECK(g.a22 == 3);
  g = gluing_matrix(make_lens(2, 1));
  CHECK(g.a12 == 0);
  CHECK(g.a22 == 1);

  for (Int p = 2; p <= 60; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      g = gluing_matrix(make_lens(p, q));
      CHECK(g.determinant() == -1);
      CHECK(g.a22 >= 0);
      CHECK(g.a22 < p);
      CHECK(mod_floor(g.a22 * q, p) == 1);
    }
  }
}

TEST_CASE("spin structures and delta") {
  CHECK(spin_structures(make_lens(3, 1)) == std::vector{SpinStructure::Unique});
  CHECK(spin_structures(make_lens(2, 1)) ==
        std::vector{SpinStructure::Distinguished, SpinStructure::Other});
  CHECK(spin_structures(make_lens(4, 1)).size() == 2);
  CHECK(delta(make_lens(4, 1), SpinStructure::Distinguished) == 0);
  CHECK(delta(make_lens(4, 1), SpinStructure::Other) == 1);
  CHECK(delta(make_lens(3, 2), SpinStructure::Unique) == 1);
  CHECK(delta(make_lens(3, 1), SpinStructure::Unique) == 0);
  CHECK(code_of([] { delta(make_lens(4, 1), SpinStructure::Unique); }) == ErrorCode::SpinMismatch);
  CHECK(code_of([] { delta(make_lens(3, 1), SpinStructure::Other); }) == ErrorCode::SpinMismatch);
  CHECK(to_string(SpinStructure::Other) == "s_prime");
}

TEST_CASE("residues and half lifts") {
  CHECK(half_class(-1, 5).value == 4);
  CHECK(code_of([] { euler_class(1, 4); }) == ErrorCode::InvalidResidue);
  CHECK(euler_class(3, 5).value == 3);

  auto lifts = half_lifts(5, 4);
  REQUIRE(lifts.size() == 1);
  CHECK(lifts[0].value == 2);
  lifts = half_lifts(4, 2);
  REQUIRE(lifts.size() == 2);
  CHECK(lifts[0].value == 1);
  CHECK(lifts[1].value == 3);
  CHECK(code_of([] { half_lifts(4, 1); }) == ErrorCode::NoLift);

  // scan oracle
  for (Int p = 1; p <= 40; ++p) {
    for (Int e = 0; e < p; ++e) {
      std::vector<Int> scan;
      for (Int x = 0; x < p; ++x) {
        if (mod_floor(2 * x - e, p) == 0) scan.push_back(x);
      }
      if (scan.empty()) {
        CHECK(code_of([&] { half_lifts(p, e); }) == ErrorCode::NoLift);
        continue;
      }
      std::vector<Int> got;
      for (const auto& r : half_lifts(p, e)) got.push_back(r.value);
      CHECK(got == scan);
    }
  }
}
