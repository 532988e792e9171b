#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lenstight/lens_core.hpp"

namespace lenstight {

// Boundary endpoints of the unstable separatrices, in their fixed anticlockwise
// order h_1^c, h_1^a, h_2^c, ..., h_n^a. Endpoint index 2(i-1) is h_i^c and
// 2(i-1)+1 is h_i^a.
constexpr Int endpoint_hyperbolic(Int endpoint) { return endpoint / 2 + 1; }
constexpr bool endpoint_is_anticlockwise(Int endpoint) { return endpoint % 2 == 1; }
std::string endpoint_name(Int endpoint);

// Arc index (1..p) of every endpoint. Reading the endpoints anticlockwise
// from the basepoint the arcs never decrease, so the cyclic sequence has
// exactly one descent (or is constant).
struct BoundaryWord {
  std::vector<Int> arcs;

  Int size() const { return static_cast<Int>(arcs.size()); }
  bool operator==(const BoundaryWord&) const = default;
  auto operator<=>(const BoundaryWord&) const = default;
};

bool is_cyclically_monotone(std::span<const Int> arcs);

// Index of the first endpoint met anticlockwise from the basepoint.
Int seam_index(const BoundaryWord& word);

// A star-shaped graph of singularities (centre e_0, leaves e_1..e_n, one
// hyperbolic point per edge) plus its boundary word; n = e_plus - 1.
struct StarConfiguration {
  Int p;
  Int e_plus;
  BoundaryWord word;

  Int hyperbolic_count() const { return e_plus - 1; }
  bool operator==(const StarConfiguration&) const = default;
};

// Validates arc range and cyclic monotonicity; e_plus = arcs.size()/2 + 1.
// Error{InvalidWord} on failure.
StarConfiguration make_configuration(Int p, std::vector<Int> arcs);

// No hyperbolic point sends both unstable separatrices through the same arc.
bool is_admissible(const StarConfiguration& config);

// Relabel arcs by +arc_shift and hyperbolic points by +hyperbolic_shift.
BoundaryWord relabel(const BoundaryWord& word, Int p, Int arc_shift, Int hyperbolic_shift);

// Lexicographically smallest word in the orbit of the relabeling group.
BoundaryWord canonical_form(const BoundaryWord& word, Int p);

enum class ConfigurationFilter { All, AdmissibleOnly };

// Every valid word for n pairs into p arcs, ascending lexicographic order.
std::vector<BoundaryWord> raw_words(Int p, Int hyperbolic_count,
                                    ConfigurationFilter filter = ConfigurationFilter::All);

// Orbit representatives (canonical forms) for 1 <= e_plus <= p, ascending.
// Error{OutOfRange} otherwise.
std::vector<StarConfiguration> enumerate_configurations(
    Int p, Int e_plus, ConfigurationFilter filter = ConfigurationFilter::All);

// Closed forms for the sizes of the enumerations above.
Int raw_word_count(Int p, Int hyperbolic_count);
Int admissible_orbit_count(Int p, Int hyperbolic_count);

// Reduces e_plus by p (the word is re-derived: the smallest admissible word
// when the result is minimal, otherwise the word with every endpoint in B_1).
// Error{NotReducible} for an admissible configuration with e_plus <= p;
// Error{OvertwistedConfiguration} for an inadmissible one with e_plus <= p.
StarConfiguration simplify(const StarConfiguration& config);

struct Reduction {
  StarConfiguration minimal;
  Int steps;
};

// Applies simplify until e_plus <= p.
Reduction reduce_to_minimal(const StarConfiguration& config);

}  // namespace lenstight
