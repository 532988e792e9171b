#include "lenstight/linking_calculus.hpp"

#include <algorithm>

namespace lenstight {
namespace {

void require_half_class(const LensSpace& lens, const Residue& m) {
  if (m.role != ResidueRole::HalfEulerDotD || m.modulus != lens.p()) {
    throw Error(ErrorCode::InvalidResidue, "expected a half-Euler residue mod " +
                                               std::to_string(lens.p()));
  }
}

// ±half mod p, deduplicated and ascending.
std::vector<Residue> symmetric_pair(Int twice, Int p) {
  // twice is even by the choice of delta
  const Int half = twice / 2;
  std::vector<Residue> out{half_class(half, p), half_class(-half, p)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Int self_linking_residue(const LensSpace& lens, Int m, SpinStructure spin) {
  const Int p = lens.p();
  return mod_floor(lens.q() + p * delta(lens, spin) - 2 * m, 2 * p);
}

std::vector<Int> allowed_self_linkings(const LensSpace& lens, const Residue& m,
                                       SpinStructure spin, Int bound) {
  require_half_class(lens, m);
  const Int period = 2 * lens.p();
  const Int r = self_linking_residue(lens, m.value, spin);
  std::vector<Int> out;
  // largest negative representative of r mod 2p
  Int l = r == 0 ? -period : r - period;
  for (; -l <= bound; l -= period) out.push_back(l);
  return out;
}

SingularityProfile singularity_profile(const LensSpace& lens, const Residue& m,
                                       SpinStructure spin) {
  if (lens.p() == 1) {
    throw Error(ErrorCode::DegenerateP1, "S^3: profile fixed to e_plus = 1, l = -1");
  }
  require_half_class(lens, m);
  const Int p = lens.p();
  // e_plus + h_minus = -l, the representative of -q + 2m + p*delta in (0, 2p)
  const Int total = mod_floor(-lens.q() + 2 * m.value + p * delta(lens, spin), 2 * p);
  const Int e_plus = (total + 1) / 2;
  return SingularityProfile{m, spin, -total, e_plus, e_plus - 1};
}

Int forced_e_plus(const LensSpace& lens, Int m, SpinStructure spin) {
  return singularity_profile(lens, half_class(m, lens.p()), spin).e_plus;
}

std::vector<Residue> uniqueness_set(const LensSpace& lens, SpinStructure spin) {
  return symmetric_pair(lens.q() + 1 + lens.p() * delta(lens, spin), lens.p());
}

std::vector<Residue> emptiness_set(const LensSpace& lens, SpinStructure spin) {
  if (lens.p() == 1) {
    throw Error(ErrorCode::NotApplicable, "non-existence criterion requires p > 1");
  }
  return symmetric_pair(lens.q() - 1 + lens.p() * delta(lens, spin), lens.p());
}

Residue euler_from_self_linking(const LensSpace& lens, Int self_linking) {
  return make_residue(-self_linking + lens.q(), lens.p(), ResidueRole::EulerDotD);
}

}  // namespace lenstight
