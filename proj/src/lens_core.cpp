#include "lenstight/lens_core.hpp"

#include <numeric>

namespace lenstight {

LensSpace make_lens(Int p, Int q) {
  if (p <= 0) {
    throw Error(ErrorCode::UnsupportedP, "p must be >= 1, got " + std::to_string(p));
  }
  Int reduced = mod_floor(q, p);
  if (std::gcd(p, reduced) != 1) {
    throw Error(ErrorCode::NonCoprime,
                "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  }
  if (reduced == 0) reduced = p;  // only reachable for p == 1
  return LensSpace(p, reduced);
}

std::string to_string(const LensSpace& lens) {
  return "L(" + std::to_string(lens.p()) + "," + std::to_string(lens.q()) + ")";
}

GluingMatrix gluing_matrix(const LensSpace& lens) {
  const Int p = lens.p();
  const Int q = lens.q();
  // r*q = 1 (mod p); p' then follows from r*q + p*p' = 1.
  Int r = 0;
  if (p > 1) {
    // extended Euclid on (q mod p, p)
    Int old_r = mod_floor(q, p), cur_r = p;
    Int old_s = 1, cur_s = 0;
    while (cur_r != 0) {
      Int quot = old_r / cur_r;
      Int tmp = old_r - quot * cur_r;
      old_r = cur_r;
      cur_r = tmp;
      tmp = old_s - quot * cur_s;
      old_s = cur_s;
      cur_s = tmp;
    }
    r = mod_floor(old_s, p);
  }
  const Int p_prime = (1 - r * q) / p;
  return GluingMatrix{-q, p_prime, p, r};
}

std::string_view to_string(SpinStructure spin) {
  switch (spin) {
    case SpinStructure::Distinguished: return "s";
    case SpinStructure::Other: return "s_prime";
    case SpinStructure::Unique: return "unique";
  }
  return "unknown";
}

std::vector<SpinStructure> spin_structures(const LensSpace& lens) {
  if (lens.p() % 2 == 0) return {SpinStructure::Distinguished, SpinStructure::Other};
  return {SpinStructure::Unique};
}

Int delta(const LensSpace& lens, SpinStructure spin) {
  const bool even_p = lens.p() % 2 == 0;
  if (even_p) {
    if (spin == SpinStructure::Unique) {
      throw Error(ErrorCode::SpinMismatch, "even p has two spin structures; got 'unique'");
    }
    return spin == SpinStructure::Distinguished ? 0 : 1;
  }
  if (spin != SpinStructure::Unique) {
    throw Error(ErrorCode::SpinMismatch, "odd p has a unique spin structure");
  }
  return lens.q() % 2 == 0 ? 1 : 0;
}

Residue make_residue(Int value, Int modulus, ResidueRole role) {
  if (modulus < 1) throw Error(ErrorCode::InvalidResidue, "modulus must be >= 1");
  const Int v = mod_floor(value, modulus);
  if (role == ResidueRole::EulerDotD && modulus % 2 == 0 && v % 2 != 0) {
    throw Error(ErrorCode::InvalidResidue,
                "Euler class must be even for even modulus, got " + std::to_string(v));
  }
  return Residue{v, modulus, role};
}

std::vector<Residue> half_lifts(Int modulus, Int euler_value) {
  if (modulus < 1) throw Error(ErrorCode::InvalidResidue, "modulus must be >= 1");
  const Int e = mod_floor(euler_value, modulus);
  if (modulus % 2 == 0 && e % 2 != 0) {
    throw Error(ErrorCode::NoLift, "odd element " + std::to_string(e) + " has no half mod " +
                                       std::to_string(modulus));
  }
  std::vector<Residue> lifts;
  if (modulus % 2 == 1) {
    // 2^{-1} = (p+1)/2
    lifts.push_back(half_class(e * ((modulus + 1) / 2), modulus));
  } else {
    const Int half = e / 2;
    lifts.push_back(half_class(half, modulus));
    lifts.push_back(half_class(half + modulus / 2, modulus));
    if (lifts[1] < lifts[0]) std::swap(lifts[0], lifts[1]);
  }
  return lifts;
}

std::vector<Residue> half_lifts(const Residue& euler) {
  return half_lifts(euler.modulus, euler.value);
}

}  // namespace lenstight
