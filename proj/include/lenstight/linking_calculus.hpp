#pragma once

#include <vector>

#include "lenstight/lens_core.hpp"

namespace lenstight {

// Signed singularity counts of a characteristic foliation on a disk.
struct SingularityCounts {
  Int e_plus = 0;
  Int e_minus = 0;
  Int h_plus = 0;
  Int h_minus = 0;
};

// l = d_- - d_+ with d_± = e_± - h_±.
constexpr Int self_link_from_counts(const SingularityCounts& c) {
  return (c.e_minus - c.h_minus) - (c.e_plus - c.h_plus);
}

// Reduced singularity data forced on the generalized projective plane D by a
// class m = Gamma(xi)(s') . D. After elimination e_- = h_+ = 0, and the counts
// satisfy e_plus - h_minus = 1 with 0 < e_plus + h_minus < 2p.
struct SingularityProfile {
  Residue class_label;
  SpinStructure spin;
  Int self_linking;
  Int e_plus;
  Int h_minus;

  SingularityCounts counts() const { return {e_plus, 0, 0, h_minus}; }
};

// Residue of the self-linking number of the boundary of D, mod 2p:
// l = q + p*delta - 2m (mod 2p).
Int self_linking_residue(const LensSpace& lens, Int m, SpinStructure spin);

// Negative l with |l| <= bound satisfying the congruence, in decreasing order
// (closest to zero first).
std::vector<Int> allowed_self_linkings(const LensSpace& lens, const Residue& m,
                                       SpinStructure spin, Int bound);

// Error{DegenerateP1} for p == 1: S^3 has the single profile e_plus = 1, l = -1.
SingularityProfile singularity_profile(const LensSpace& lens, const Residue& m,
                                       SpinStructure spin);

// Convenience: e_plus for the class m (p >= 2).
Int forced_e_plus(const LensSpace& lens, Int m, SpinStructure spin);

// {±(q+1+p*delta)/2 mod p}: classes carrying at most one tight structure.
std::vector<Residue> uniqueness_set(const LensSpace& lens, SpinStructure spin);

// {±(q-1+p*delta)/2 mod p}: classes with no tight structure. Error{NotApplicable}
// for p == 1.
std::vector<Residue> emptiness_set(const LensSpace& lens, SpinStructure spin);

// e(xi)(D) = -l + q (mod p); holds for every profile regardless of spin.
Residue euler_from_self_linking(const LensSpace& lens, Int self_linking);

}  // namespace lenstight
