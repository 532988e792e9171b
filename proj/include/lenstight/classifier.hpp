#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lenstight/lens_core.hpp"
#include "lenstight/stein.hpp"

namespace lenstight {

inline constexpr std::string_view kVersion = "1.0.0";

enum class ClassStatus { Empty, UniqueExists, UniqueIfExists, Bounded };

std::string_view to_string(ClassStatus status);

struct ClassRow {
  Int m;
  Int e_plus;
  ClassStatus status;
  std::optional<Int> bound;  // only for Bounded rows, and only when bounds were requested
  bool stein_realized;
};

struct SpinTable {
  SpinStructure spin;
  std::vector<ClassRow> rows;  // m = 0..p-1
};

struct SteinSection {
  ContinuedFraction cf;
  std::vector<std::vector<Int>> rotation_vectors;
  std::vector<Int> euler_classes;
};

struct ClassificationReport {
  LensSpace lens;
  std::vector<SpinTable> tables;
  SteinSection stein;
  std::vector<std::vector<Int>> contactomorphism_orbits;  // m ~ -m
  std::vector<std::string> warnings;
  bool bounds_computed = false;
};

ClassificationReport classify(const LensSpace& lens, bool compute_bounds = false);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Cross-module consistency checks for one lens space. Failures are reported,
// never thrown.
std::vector<CheckResult> self_check(const LensSpace& lens);

enum class Format { Text, Json };

std::string render(const ClassificationReport& report, Format format);

}  // namespace lenstight
