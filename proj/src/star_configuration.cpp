#include "lenstight/star_configuration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lenstight {
namespace {

__extension__ typedef __int128 Wide;

Int narrow(Wide value) {
  if (value > std::numeric_limits<Int>::max() || value < std::numeric_limits<Int>::min()) {
    throw Error(ErrorCode::Overflow, "count exceeds 64-bit range");
  }
  return static_cast<Int>(value);
}

Wide binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (Int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > (Wide{1} << 100)) throw Error(ErrorCode::Overflow, "binomial too large");
  }
  return result;
}

// Calls visit(gaps) for every composition of `total` into gaps.size() parts,
// with parts at even indices >= even_floor.
template <typename Visit>
void for_each_composition(std::vector<Int>& gaps, std::size_t index, Int remaining,
                          Int even_floor, Visit&& visit) {
  const std::size_t last = gaps.size() - 1;
  const Int floor = index % 2 == 0 ? even_floor : 0;
  if (index == last) {
    if (remaining < floor) return;
    gaps[index] = remaining;
    visit(gaps);
    return;
  }
  // keep enough for the even-indexed gaps still to come
  Int reserve = 0;
  for (std::size_t j = index + 1; j <= last; ++j) reserve += j % 2 == 0 ? even_floor : 0;
  for (Int v = floor; v + reserve <= remaining; ++v) {
    gaps[index] = v;
    for_each_composition(gaps, index + 1, remaining - v, even_floor, visit);
  }
}

// Arcs of the endpoints when gap j (between endpoints j and j+1) holds gaps[j]
// preimages of the basepoint and the basepoint itself is preimage `first`
// counted from endpoint 0.
BoundaryWord word_from_gaps(const std::vector<Int>& gaps, Int p, Int first) {
  BoundaryWord word;
  word.arcs.reserve(gaps.size());
  Int before = 0;
  for (std::size_t e = 0; e < gaps.size(); ++e) {
    word.arcs.push_back(mod_floor(before - first - 1, p) + 1);
    before += gaps[e];
  }
  return word;
}

void require_p(Int p) {
  if (p < 1) throw Error(ErrorCode::UnsupportedP, "p must be >= 1");
}

}  // namespace

std::string endpoint_name(Int endpoint) {
  return "h" + std::to_string(endpoint_hyperbolic(endpoint)) +
         (endpoint_is_anticlockwise(endpoint) ? "a" : "c");
}

bool is_cyclically_monotone(std::span<const Int> arcs) {
  const std::size_t m = arcs.size();
  std::size_t descents = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (arcs[(i + 1) % m] < arcs[i]) ++descents;
  }
  if (descents == 1) return true;
  return descents == 0;  // zero descents around a cycle means constant
}

Int seam_index(const BoundaryWord& word) {
  const Int m = word.size();
  for (Int i = 0; i < m; ++i) {
    if (word.arcs[static_cast<std::size_t>((i + 1) % m)] < word.arcs[static_cast<std::size_t>(i)]) {
      return (i + 1) % m;
    }
  }
  return 0;
}

StarConfiguration make_configuration(Int p, std::vector<Int> arcs) {
  require_p(p);
  if (arcs.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidWord, "word needs two endpoints per hyperbolic point");
  }
  for (Int a : arcs) {
    if (a < 1 || a > p) {
      throw Error(ErrorCode::InvalidWord, "arc index " + std::to_string(a) + " outside 1.." +
                                              std::to_string(p));
    }
  }
  if (!is_cyclically_monotone(arcs)) {
    throw Error(ErrorCode::InvalidWord, "endpoints do not meet the arcs in anticlockwise order");
  }
  const Int e_plus = static_cast<Int>(arcs.size()) / 2 + 1;
  return StarConfiguration{p, e_plus, BoundaryWord{std::move(arcs)}};
}

bool is_admissible(const StarConfiguration& config) {
  const auto& arcs = config.word.arcs;
  for (std::size_t i = 0; i + 1 < arcs.size(); i += 2) {
    if (arcs[i] == arcs[i + 1]) return false;
  }
  return true;
}

BoundaryWord relabel(const BoundaryWord& word, Int p, Int arc_shift, Int hyperbolic_shift) {
  const Int m = word.size();
  BoundaryWord out;
  out.arcs.resize(word.arcs.size());
  for (Int i = 0; i < m; ++i) {
    const Int source = mod_floor(i + 2 * hyperbolic_shift, m);
    out.arcs[static_cast<std::size_t>(i)] =
        mod_floor(word.arcs[static_cast<std::size_t>(source)] - 1 + arc_shift, p) + 1;
  }
  return out;
}

BoundaryWord canonical_form(const BoundaryWord& word, Int p) {
  BoundaryWord best = word;
  const Int n = word.size() / 2;
  for (Int b = 0; b < std::max<Int>(n, 1); ++b) {
    for (Int a = 0; a < p; ++a) {
      BoundaryWord candidate = relabel(word, p, a, b);
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

std::vector<BoundaryWord> raw_words(Int p, Int hyperbolic_count, ConfigurationFilter filter) {
  require_p(p);
  if (hyperbolic_count < 0) throw Error(ErrorCode::OutOfRange, "negative hyperbolic count");
  if (hyperbolic_count == 0) return {BoundaryWord{}};

  const auto gap_count = static_cast<std::size_t>(2 * hyperbolic_count);
  const Int even_floor = filter == ConfigurationFilter::AdmissibleOnly ? 1 : 0;
  std::vector<BoundaryWord> out;
  std::vector<Int> gaps(gap_count, 0);
  for_each_composition(gaps, 0, p, even_floor, [&](const std::vector<Int>& c) {
    // A single occupied gap yields a constant word whatever gap it is; keep
    // one copy (the wrap gap).
    const auto occupied = std::count_if(c.begin(), c.end(), [](Int v) { return v > 0; });
    if (occupied == 1 && c.back() == 0) return;
    for (Int first = 0; first < p; ++first) out.push_back(word_from_gaps(c, p, first));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StarConfiguration> enumerate_configurations(Int p, Int e_plus,
                                                        ConfigurationFilter filter) {
  require_p(p);
  if (e_plus < 1 || e_plus > p) {
    throw Error(ErrorCode::OutOfRange, "e_plus must lie in 1.." + std::to_string(p));
  }
  std::vector<StarConfiguration> out;
  for (auto& word : raw_words(p, e_plus - 1, filter)) {
    if (canonical_form(word, p) == word) {
      out.push_back(StarConfiguration{p, e_plus, std::move(word)});
    }
  }
  return out;
}

Int raw_word_count(Int p, Int hyperbolic_count) {
  require_p(p);
  if (hyperbolic_count == 0) return 1;
  const Int gaps = 2 * hyperbolic_count;
  // p basepoint choices per composition, minus the duplicated constant words
  return narrow(Wide{p} * binomial(p + gaps - 1, gaps - 1) - Wide{gaps - 1} * p);
}

Int admissible_orbit_count(Int p, Int hyperbolic_count) {
  require_p(p);
  const Int n = hyperbolic_count;
  if (n == 0) return 1;
  // Burnside over rotations of the gap composition by whole pairs.
  Wide fixed = 0;
  for (Int j = 0; j < n; ++j) {
    const Int d = std::gcd(j, n);
    const Int repeats = n / d;
    if (p % repeats != 0) continue;
    const Int block_total = p / repeats;
    fixed += binomial(block_total + d - 1, 2 * d - 1);
  }
  Wide orbits = fixed / n;
  if (n == 1) orbits -= 1;  // every preimage inside the pair's own gap reads as a constant word
  return narrow(orbits);
}

StarConfiguration simplify(const StarConfiguration& config) {
  const Int p = config.p;
  if (config.e_plus <= p) {
    if (is_admissible(config)) {
      throw Error(ErrorCode::NotReducible, "e_plus <= p and no hyperbolic point has both "
                                           "separatrices in one arc");
    }
    throw Error(ErrorCode::OvertwistedConfiguration,
                "reducing would leave e_plus <= 0; the configuration cannot be tight");
  }
  const Int reduced = config.e_plus - p;
  const Int n = reduced - 1;
  if (reduced <= p) {
    auto words = raw_words(p, n, ConfigurationFilter::AdmissibleOnly);
    return StarConfiguration{p, reduced, std::move(words.front())};
  }
  return StarConfiguration{p, reduced, BoundaryWord{std::vector<Int>(static_cast<std::size_t>(2 * n), 1)}};
}

Reduction reduce_to_minimal(const StarConfiguration& config) {
  Reduction out{config, 0};
  while (out.minimal.e_plus > out.minimal.p) {
    out.minimal = simplify(out.minimal);
    ++out.steps;
  }
  return out;
}

}  // namespace lenstight
