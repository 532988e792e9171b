#include <doctest.h>

#include <numeric>

#include "lenstight/linking_calculus.hpp"
#include "oracles.hpp"

using namespace lenstight;

namespace {
std::vector<Int> values(const std::vector<Residue>& rs) {
  std::vector<Int> out;
  for (const auto& r : rs) out.push_back(r.value);
  return out;
}
}  // namespace

TEST_CASE("self-linking from counts") {
  CHECK(self_link_from_counts({1, 0, 0, 0}) == -1);
  CHECK(self_link_from_counts({2, 0, 0, 1}) == -3);
  CHECK(self_link_from_counts({1, 1, 0, 0}) == 0);
  static_assert(self_link_from_counts({3, 0, 0, 2}) == -5);
}

TEST_CASE("allowed self-linking numbers") {
  const auto l31 = make_lens(3, 1);
  CHECK(allowed_self_linkings(l31, half_class(1, 3), SpinStructure::Unique, 12) == std::vector<Int>{-1, -7});
  CHECK(allowed_self_linkings(l31, half_class(0, 3), SpinStructure::Unique, 12) == std::vector<Int>{-5, -11});
  CHECK(allowed_self_linkings(make_lens(3, 2), half_class(0, 3), SpinStructure::Unique, 12) ==
        std::vector<Int>{-1, -7});
}

TEST_CASE("singularity profiles") {
  const auto l31 = make_lens(3, 1);
  auto prof = singularity_profile(l31, half_class(1, 3), SpinStructure::Unique);
  CHECK(prof.e_plus == 1);
  CHECK(prof.h_minus == 0);
  CHECK(prof.self_linking == -1);
  prof = singularity_profile(l31, half_class(0, 3), SpinStructure::Unique);
  CHECK(prof.e_plus == 3);
  CHECK(prof.h_minus == 2);
  CHECK(prof.self_linking == -5);
  prof = singularity_profile(make_lens(3, 2), half_class(0, 3), SpinStructure::Unique);
  CHECK(prof.e_plus == 1);
  CHECK(prof.self_linking == -1);
  prof = singularity_profile(make_lens(2, 1), half_class(1, 2), SpinStructure::Distinguished);
  CHECK(prof.e_plus == 1);
  CHECK(prof.h_minus == 0);
  CHECK(prof.self_linking == -1);
  CHECK(self_link_from_counts(prof.counts()) == prof.self_linking);

  CHECK_THROWS_AS(singularity_profile(make_lens(1, 1), half_class(0, 1), SpinStructure::Unique), Error);
}

TEST_CASE("e_plus agrees with a search oracle") {
  for (Int p = 2; p <= 40; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto lens = make_lens(p, q);
      for (SpinStructure s : spin_structures(lens)) {
        const Int d = delta(lens, s);
        for (Int m = 0; m < p; ++m) {
          CHECK(forced_e_plus(lens, m, s) == oracle::e_plus(p, q, d, m));
        }
      }
    }
  }
}

TEST_CASE("uniqueness and emptiness sets") {
  const auto l31 = make_lens(3, 1);
  const auto l32 = make_lens(3, 2);
  const auto l21 = make_lens(2, 1);
  CHECK(values(uniqueness_set(l31, SpinStructure::Unique)) == std::vector<Int>{1, 2});
  CHECK(values(uniqueness_set(l32, SpinStructure::Unique)) == std::vector<Int>{0});
  CHECK(values(uniqueness_set(l21, SpinStructure::Distinguished)) == std::vector<Int>{1});
  CHECK(values(emptiness_set(l31, SpinStructure::Unique)) == std::vector<Int>{0});
  CHECK(values(emptiness_set(l32, SpinStructure::Unique)) == std::vector<Int>{1, 2});
  CHECK(values(emptiness_set(l21, SpinStructure::Distinguished)) == std::vector<Int>{0});
  CHECK(values(uniqueness_set(make_lens(1, 1), SpinStructure::Unique)) == std::vector<Int>{0});
  CHECK_THROWS_AS(emptiness_set(make_lens(1, 1), SpinStructure::Unique), Error);
}

TEST_CASE("Euler class from self-linking") {
  for (Int p = 2; p <= 30; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto lens = make_lens(p, q);
      for (SpinStructure s : spin_structures(lens)) {
        for (Int m = 0; m < p; ++m) {
          const auto prof = singularity_profile(lens, half_class(m, p), s);
          CHECK(euler_from_self_linking(lens, prof.self_linking).value == oracle::mod(2 * m, p));
        }
      }
    }
  }
}
