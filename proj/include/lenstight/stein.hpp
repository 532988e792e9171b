#pragma once

#include <vector>

#include "lenstight/integer_matrix.hpp"
#include "lenstight/lens_core.hpp"

namespace lenstight {

// -p/q = r_0 - 1/(r_1 - 1/(... - 1/r_n)), every r_i <= -2.
struct ContinuedFraction {
  std::vector<Int> coefficients;

  std::size_t size() const { return coefficients.size(); }
  bool operator==(const ContinuedFraction&) const = default;
};

struct Fraction {
  Int numerator;
  Int denominator;  // > 0, gcd(numerator, denominator) == 1

  bool operator==(const Fraction&) const = default;
};

// Error{Unsupported} for p == 1 (S^3 is filled by B^4 with no 2-handles).
ContinuedFraction neg_continued_fraction(const LensSpace& lens);

// Exact evaluation of the expansion as a reduced fraction.
Fraction evaluate(const ContinuedFraction& cf);

using LinkingMatrix = IntMatrix<Int>;
using RotationVector = IntVector<Int>;

// Tridiagonal linking matrix of the Legendrian chain: diagonal r_i (the
// surgery framings tb_i - 1), off-diagonal 1.
template <typename Scalar = Int>
IntMatrix<Scalar> chain_linking_matrix(const ContinuedFraction& cf) {
  const auto n = static_cast<Eigen::Index>(cf.size());
  IntMatrix<Scalar> a = IntMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = static_cast<Scalar>(cf.coefficients[static_cast<std::size_t>(i)]);
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = Scalar{1};
  }
  return a;
}

// Checks |det A| == expected_order; Error{DeterminantMismatch} otherwise.
LinkingMatrix linking_matrix(const ContinuedFraction& cf, Int expected_order);
// Same, with the order recovered from the expansion itself.
LinkingMatrix linking_matrix(const ContinuedFraction& cf);

// Legendrian unknot realizing framing r: tb = r + 1, rotation numbers
// r+2, r+4, ..., -r-2.
struct LegendrianComponent {
  Int framing;
  Int tb;
  Int rotation;
};

std::vector<Int> rotation_range(Int framing);

// Cartesian product of rotation_range over the chain components, in
// lexicographic order.
std::vector<RotationVector> rotation_choices(const ContinuedFraction& cf);

// prod(-r_i - 1), without enumerating.
Int rotation_choice_count(const ContinuedFraction& cf);

// coker(A) -> Z/p, normalized so the meridian of the last chain component maps
// to 1. This identification is the one under which the Stein Euler classes
// match e(xi)(D).
CyclicCokernel<Int> boundary_euler_map(const ContinuedFraction& cf);

Residue euler_class_of_filling(const ContinuedFraction& cf, const RotationVector& rotation,
                               const LensSpace& lens);

struct SteinPresentation {
  ContinuedFraction cf;
  RotationVector rotation;
  Residue euler;
};

struct SteinSummary {
  ContinuedFraction cf;
  std::vector<SteinPresentation> presentations;
  std::vector<Residue> euler_classes;  // ascending, unique
  Int rotation_vector_count = 0;
};

// p >= 2.
SteinSummary realizable_euler_set(const LensSpace& lens);

// h with h.D = (q+1)/2 mod p, read as a class of Gamma(xi)(s) (even p) or as
// the half of e(xi) = q+1 (odd p). Well defined for every p >= 1.
Residue guaranteed_class(const LensSpace& lens);

}  // namespace lenstight
