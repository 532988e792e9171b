#include "lenstight/stein.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace lenstight {

ContinuedFraction neg_continued_fraction(const LensSpace& lens) {
  if (lens.p() == 1) {
    throw Error(ErrorCode::Unsupported, "S^3 has the empty surgery chain");
  }
  ContinuedFraction cf;
  Int num = lens.p();
  Int den = lens.q();
  while (den != 0) {
    const Int a = (num + den - 1) / den;  // ceil(num/den) >= 2 after the first step
    cf.coefficients.push_back(-a);
    num = std::exchange(den, a * den - num);
  }
  return cf;
}

Fraction evaluate(const ContinuedFraction& cf) {
  if (cf.coefficients.empty()) {
    throw Error(ErrorCode::Unsupported, "empty continued fraction has no value");
  }
  // innermost first: value = r_n, then value = r_i - 1/value
  Int num = cf.coefficients.back();
  Int den = 1;
  for (auto it = std::next(cf.coefficients.rbegin()); it != cf.coefficients.rend(); ++it) {
    // r - den/num = (r*num - den)/num
    const Int next_num = checked::sub(checked::mul(*it, num), den);
    den = num;
    num = next_num;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

LinkingMatrix linking_matrix(const ContinuedFraction& cf, Int expected_order) {
  LinkingMatrix a = chain_linking_matrix<Int>(cf);
  const Int det = bareiss_determinant(a);
  if (std::abs(det) != expected_order) {
    throw Error(ErrorCode::DeterminantMismatch,
                "|det| = " + std::to_string(std::abs(det)) + ", expected " +
                    std::to_string(expected_order));
  }
  return a;
}

LinkingMatrix linking_matrix(const ContinuedFraction& cf) {
  return linking_matrix(cf, std::abs(evaluate(cf).numerator));
}

std::vector<Int> rotation_range(Int framing) {
  std::vector<Int> out;
  for (Int r = framing + 2; r <= -framing - 2; r += 2) out.push_back(r);
  return out;
}

std::vector<RotationVector> rotation_choices(const ContinuedFraction& cf) {
  const auto n = static_cast<Eigen::Index>(cf.size());
  std::vector<std::vector<Int>> ranges;
  ranges.reserve(cf.size());
  for (Int r : cf.coefficients) ranges.push_back(rotation_range(r));

  std::vector<RotationVector> out;
  if (std::any_of(ranges.begin(), ranges.end(), [](const auto& v) { return v.empty(); })) {
    return out;
  }
  std::vector<std::size_t> index(cf.size(), 0);
  while (true) {
    RotationVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = ranges[static_cast<std::size_t>(i)][index[static_cast<std::size_t>(i)]];
    }
    out.push_back(std::move(v));
    // odometer, last component fastest
    std::size_t k = cf.size();
    while (k > 0) {
      --k;
      if (++index[k] < ranges[k].size()) break;
      index[k] = 0;
      if (k == 0) return out;
    }
    if (cf.size() == 0) return out;
  }
}

Int rotation_choice_count(const ContinuedFraction& cf) {
  Int count = 1;
  for (Int r : cf.coefficients) count = checked::mul(count, std::max<Int>(0, -r - 1));
  return count;
}

CyclicCokernel<Int> boundary_euler_map(const ContinuedFraction& cf) {
  const LinkingMatrix a = linking_matrix(cf);
  return cyclic_cokernel(a).normalized_at(a.rows() - 1);
}

Residue euler_class_of_filling(const ContinuedFraction& cf, const RotationVector& rotation,
                               const LensSpace& lens) {
  if (rotation.size() != static_cast<Eigen::Index>(cf.size())) {
    throw Error(ErrorCode::OutOfRange, "rotation vector length does not match the chain");
  }
  for (Eigen::Index i = 0; i < rotation.size(); ++i) {
    const Int r = cf.coefficients[static_cast<std::size_t>(i)];
    const Int rot = rotation(i);
    if (std::abs(rot) > -r - 2 || (rot - r) % 2 != 0) {
      throw Error(ErrorCode::OutOfRange, "rotation number " + std::to_string(rot) +
                                             " not realizable with framing " + std::to_string(r));
    }
  }
  const auto map = boundary_euler_map(cf);
  if (map.order != lens.p()) {
    throw Error(ErrorCode::DeterminantMismatch, "chain does not present " + to_string(lens));
  }
  return euler_class(map(rotation), lens.p());
}

SteinSummary realizable_euler_set(const LensSpace& lens) {
  SteinSummary out;
  out.cf = neg_continued_fraction(lens);
  const auto map = boundary_euler_map(out.cf);
  for (auto& rot : rotation_choices(out.cf)) {
    Residue e = euler_class(map(rot), lens.p());
    out.euler_classes.push_back(e);
    out.presentations.push_back(SteinPresentation{out.cf, std::move(rot), e});
  }
  out.rotation_vector_count = static_cast<Int>(out.presentations.size());
  std::sort(out.euler_classes.begin(), out.euler_classes.end());
  out.euler_classes.erase(std::unique(out.euler_classes.begin(), out.euler_classes.end()),
                          out.euler_classes.end());
  return out;
}

Residue guaranteed_class(const LensSpace& lens) {
  const Int p = lens.p();
  if (p % 2 == 0) return half_class((lens.q() + 1) / 2, p);
  return half_lifts(p, lens.q() + 1).front();
}

}  // namespace lenstight
