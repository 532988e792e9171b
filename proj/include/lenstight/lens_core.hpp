#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lenstight/error.hpp"

namespace lenstight {

using Int = std::int64_t;

// Non-negative representative of value mod modulus (modulus >= 1).
constexpr Int mod_floor(Int value, Int modulus) {
  Int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// L(p,q) with q canonicalized into [1,p]; q == p only for S^3 = L(1,1).
class LensSpace {
 public:
  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }

  bool operator==(const LensSpace&) const = default;

 private:
  friend LensSpace make_lens(Int p, Int q);
  LensSpace(Int p, Int q) : p_(p), q_(q) {}

  Int p_;
  Int q_;
};

// Throws Error{UnsupportedP} for p <= 0 and Error{NonCoprime} when gcd(p,q) != 1.
LensSpace make_lens(Int p, Int q);

std::string to_string(const LensSpace& lens);

// Torus gluing map (-q  p'; p  r) with -r*q - p*p' = -1.
struct GluingMatrix {
  Int a11;  // -q
  Int a12;  // p'
  Int a21;  // p
  Int a22;  // r

  Int determinant() const { return a11 * a22 - a12 * a21; }
};

// Deterministic choice: r is the smallest non-negative solution.
GluingMatrix gluing_matrix(const LensSpace& lens);

enum class SpinStructure {
  Distinguished,  // even p: does not extend over a 0-framed 2-handle on C
  Other,          // even p: the remaining spin structure
  Unique,         // odd p
};

std::string_view to_string(SpinStructure spin);

std::vector<SpinStructure> spin_structures(const LensSpace& lens);

// Correction term entering the half-Euler congruence; see linking_calculus.hpp.
Int delta(const LensSpace& lens, SpinStructure spin);

enum class ResidueRole {
  HalfEulerDotD,  // Gamma(xi)(s') . D
  EulerDotD,      // e(xi)(D)
};

struct Residue {
  Int value;
  Int modulus;
  ResidueRole role;

  bool operator==(const Residue&) const = default;
  auto operator<=>(const Residue&) const = default;
};

// Reduces value into [0, modulus). Euler residues on an even modulus must be
// even (Error{InvalidResidue} otherwise).
Residue make_residue(Int value, Int modulus, ResidueRole role);

inline Residue half_class(Int value, Int modulus) {
  return make_residue(value, modulus, ResidueRole::HalfEulerDotD);
}
inline Residue euler_class(Int value, Int modulus) {
  return make_residue(value, modulus, ResidueRole::EulerDotD);
}

// All x in [0,p) with 2x = e (mod p), ascending. Error{NoLift} if p is even and e odd.
std::vector<Residue> half_lifts(Int modulus, Int euler_value);
std::vector<Residue> half_lifts(const Residue& euler);

}  // namespace lenstight
