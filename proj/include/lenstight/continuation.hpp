#pragma once

#include <string>
#include <vector>

#include "lenstight/lens_core.hpp"
#include "lenstight/star_configuration.hpp"

namespace lenstight {

// Elliptic points are numbered 0 (the centre) to n (the leaves).
struct ReentryArc {
  Int endpoint;                       // boundary endpoint the separatrix left through
  Int step;                           // k = 1..p-1: k-th re-entry, in arc B_{w+k}
  Int arc;                            // arc index of the re-entry point
  std::vector<Int> candidate_terminals;  // ascending; all placements consistent with tightness
  Int realized_terminal;              // terminal in the certified realization

  bool forced() const { return candidate_terminals.size() == 1; }
  // The forced terminal, or -1 when several placements remain.
  Int terminal() const { return forced() ? candidate_terminals.front() : -1; }
};

struct ContinuationDiagram {
  Int p = 0;
  Int hyperbolic_count = 0;
  std::vector<ReentryArc> arcs;       // ordered by (endpoint, step)
  std::vector<std::string> boundary;  // anticlockwise boundary order of the realization
  bool crossing_free = false;

  const ReentryArc& at(Int endpoint, Int step) const;
  bool fully_forced() const;
  bool empty() const { return arcs.empty(); }
};

// Follows every unstable separatrix through its p-1 re-entries into D and
// determines which elliptic point each re-entry arc can end at without two
// leaves crossing. Error{InvalidWord} if the configuration's p differs from
// the lens space, Error{OutOfRange} for e_plus > p, Error{NotAdmissible} for
// inadmissible words, Error{NoValidDiagram} when no placement is consistent.
ContinuationDiagram forced_continuations(const LensSpace& lens, const StarConfiguration& config);

// True when every continuation is forced and each separatrix's re-entries end
// once at every leaf e_1..e_n (never at e_0). The leaves' stable separatrices
// then close the continuations into a cycle through all hyperbolic points.
bool detect_overtwisted_pattern(const ContinuationDiagram& diagram);

// Upper bound for the number of tight structures in class m. p >= 2.
Int count_bound(const LensSpace& lens, const Residue& m, SpinStructure spin);

}  // namespace lenstight
