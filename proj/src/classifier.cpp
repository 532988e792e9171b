#include "lenstight/classifier.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lenstight/continuation.hpp"
#include "lenstight/linking_calculus.hpp"

namespace lenstight {
namespace {

bool contains(const std::vector<Residue>& set, Int value) {
  return std::any_of(set.begin(), set.end(), [&](const Residue& r) { return r.value == value; });
}

// Classes carrying the structure built from the Stein filling with all
// rotation numbers extremal, together with their mirror images.
std::vector<Int> existence_orbit(const LensSpace& lens, SpinStructure spin) {
  const Int p = lens.p();
  Int h = guaranteed_class(lens).value;
  if (spin == SpinStructure::Other) h = mod_floor(h + p / 2, p);
  return {h, mod_floor(-h, p)};
}

std::vector<std::vector<Int>> mirror_orbits(Int p) {
  std::vector<std::vector<Int>> out;
  for (Int m = 0; m < p; ++m) {
    const Int mirror = mod_floor(-m, p);
    if (mirror < m) continue;
    out.push_back(mirror == m ? std::vector<Int>{m} : std::vector<Int>{m, mirror});
  }
  return out;
}

ClassificationReport classify_sphere(const LensSpace& lens) {
  ClassificationReport report{lens, {}, {}, {{0}}, {}, false};
  report.tables.push_back({SpinStructure::Unique, {{0, 1, ClassStatus::UniqueExists, std::nullopt, true}}});
  report.stein = {ContinuedFraction{}, {{}}, {0}};
  return report;
}

std::string join(const std::vector<Int>& values, std::string_view sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, passed ? std::string{} : std::move(detail)};
}

}  // namespace

std::string_view to_string(ClassStatus status) {
  switch (status) {
    case ClassStatus::Empty: return "EMPTY";
    case ClassStatus::UniqueExists: return "UNIQUE_EXISTS";
    case ClassStatus::UniqueIfExists: return "UNIQUE_IF_EXISTS";
    case ClassStatus::Bounded: return "BOUNDED";
  }
  return "?";
}

ClassificationReport classify(const LensSpace& lens, bool compute_bounds) {
  if (lens.p() == 1) return classify_sphere(lens);
  const Int p = lens.p();

  ClassificationReport report{lens, {}, {}, mirror_orbits(p), {}, compute_bounds};
  Int unbounded = 0;

  const SteinSummary stein = realizable_euler_set(lens);
  report.stein.cf = stein.cf;
  for (const auto& pres : stein.presentations) {
    report.stein.rotation_vectors.emplace_back(pres.rotation.begin(), pres.rotation.end());
  }
  for (const auto& e : stein.euler_classes) report.stein.euler_classes.push_back(e.value);

  for (SpinStructure spin : spin_structures(lens)) {
    const auto unique = uniqueness_set(lens, spin);
    const auto empty = emptiness_set(lens, spin);
    const auto exists = existence_orbit(lens, spin);
    SpinTable table{spin, {}};
    for (Int m = 0; m < p; ++m) {
      ClassRow row{m, forced_e_plus(lens, m, spin), ClassStatus::Bounded, std::nullopt, false};
      // The doubled class is the Euler class; it only pins m down when p is odd.
      if (p % 2 == 1) {
        row.stein_realized = contains(stein.euler_classes, mod_floor(2 * m, p));
      }
      if (contains(empty, m)) {
        row.status = ClassStatus::Empty;
      } else if (contains(unique, m)) {
        const bool corroborated =
            std::find(exists.begin(), exists.end(), m) != exists.end() || row.stein_realized;
        row.status = corroborated ? ClassStatus::UniqueExists : ClassStatus::UniqueIfExists;
      } else if (compute_bounds) {
        try {
          row.bound = count_bound(lens, half_class(m, p), spin);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::Overflow) throw;
          ++unbounded;
        }
      }
      table.rows.push_back(row);
    }
    report.tables.push_back(std::move(table));
  }

  if (p % 2 == 0) {
    report.warnings.push_back(
        "even p: the map m -> -m may also swap the two spin structures, so the "
        "contactomorphism orbits hold within one table and need not match rows across tables");
  }
  if (unbounded > 0) {
    report.warnings.push_back(std::to_string(unbounded) +
                              " BOUNDED rows have a bound beyond the 64-bit range; it is omitted");
  }
  report.warnings.push_back("BOUNDED values are upper bounds, not counts of distinct structures");
  return report;
}

std::vector<CheckResult> self_check(const LensSpace& lens) {
  std::vector<CheckResult> out;
  const Int p = lens.p();
  const Int q = lens.q();
  const std::string tag = to_string(lens) + " ";

  const auto g = gluing_matrix(lens);
  out.push_back(check(tag + "gluing determinant", g.determinant() == -1 && g.a21 == p && g.a11 == -q,
                      "det = " + std::to_string(g.determinant())));

  if (p == 1) {
    const auto report = classify(lens);
    out.push_back(check(tag + "sphere has one tight class",
                        report.tables.size() == 1 && report.tables[0].rows.size() == 1 &&
                            report.tables[0].rows[0].status == ClassStatus::UniqueExists));
    return out;
  }

  for (SpinStructure spin : spin_structures(lens)) {
    const std::string stag = tag + std::string(to_string(spin)) + " ";
    const auto unique = uniqueness_set(lens, spin);
    const auto empty = emptiness_set(lens, spin);
    std::vector<Residue> both;
    std::set_intersection(unique.begin(), unique.end(), empty.begin(), empty.end(),
                          std::back_inserter(both));
    out.push_back(check(stag + "uniqueness and emptiness disjoint", both.empty(),
                        "shared class " + (both.empty() ? "" : std::to_string(both[0].value))));
    out.push_back(check(stag + "both criteria apply", !unique.empty() && !empty.empty()));

    bool equivalence = true;
    bool parity = true;
    std::string bad;
    for (Int m = 0; m < p; ++m) {
      const auto profile = singularity_profile(lens, half_class(m, p), spin);
      // the criteria are stated for e_plus of m or of its mirror -m
      const Int mirror_e_plus = forced_e_plus(lens, mod_floor(-m, p), spin);
      const bool is_unique = contains(unique, m);
      const bool is_empty = contains(empty, m);
      if (is_unique != (profile.e_plus == 1 || mirror_e_plus == 1) ||
          is_empty != (profile.e_plus == p || mirror_e_plus == p)) {
        equivalence = false;
        bad = "m = " + std::to_string(m);
      }
      const Int total = profile.e_plus + profile.h_minus;
      const Int l = profile.self_linking;
      const bool ok = total % 2 == 1 && total > 0 && total < 2 * p && l < 0 &&
                      self_link_from_counts(profile.counts()) == l &&
                      mod_floor(l - self_linking_residue(lens, m, spin), 2 * p) == 0 &&
                      euler_from_self_linking(lens, l).value == mod_floor(2 * m, p);
      if (!ok) {
        parity = false;
        bad = "m = " + std::to_string(m);
      }
    }
    out.push_back(check(stag + "e_plus equivalence", equivalence, bad));
    out.push_back(check(stag + "self-linking parity", parity, bad));
  }

  if (p % 2 == 0) {
    bool shifted = true;
    for (Int m = 0; m < p; ++m) {
      if (forced_e_plus(lens, m, SpinStructure::Distinguished) !=
          forced_e_plus(lens, mod_floor(m + p / 2, p), SpinStructure::Other)) {
        shifted = false;
      }
    }
    out.push_back(check(tag + "spin tables shift by p/2", shifted));
  }

  const auto cf = neg_continued_fraction(lens);
  const auto value = evaluate(cf);
  out.push_back(check(tag + "continued fraction round trip",
                      value.numerator == -p && value.denominator == q,
                      std::to_string(value.numerator) + "/" + std::to_string(value.denominator)));
  bool det_ok = true;
  try {
    (void)linking_matrix(cf, p);
  } catch (const Error&) {
    det_ok = false;
  }
  out.push_back(check(tag + "linking matrix order", det_ok));

  if (p % 2 == 1) {
    const auto stein = realizable_euler_set(lens);
    const std::set<Int> forbidden{mod_floor(q - 1, p), mod_floor(1 - q, p)};
    bool disjoint = true;
    for (const auto& e : stein.euler_classes) disjoint = disjoint && !forbidden.contains(e.value);
    out.push_back(check(tag + "Stein classes avoid emptiness", disjoint));
    out.push_back(check(tag + "Stein realizes guaranteed class",
                        contains(stein.euler_classes, mod_floor(2 * guaranteed_class(lens).value, p))));
  }

  const auto report = classify(lens);
  bool shape = true;
  for (const auto& table : report.tables) {
    const bool has_empty = std::any_of(table.rows.begin(), table.rows.end(),
                                       [](const ClassRow& r) { return r.status == ClassStatus::Empty; });
    const bool has_unique = std::any_of(table.rows.begin(), table.rows.end(), [](const ClassRow& r) {
      return r.status == ClassStatus::UniqueExists || r.status == ClassStatus::UniqueIfExists;
    });
    shape = shape && static_cast<Int>(table.rows.size()) == p && has_empty && has_unique;
    for (const auto& row : table.rows) {
      if (row.stein_realized && row.status == ClassStatus::Empty) shape = false;
    }
  }
  out.push_back(check(tag + "report shape", shape));
  return out;
}

std::string render(const ClassificationReport& report, Format format) {
  const Int p = report.lens.p();
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["q"] = report.lens.q();
    j["spin_tables"] = nlohmann::ordered_json::array();
    for (const auto& table : report.tables) {
      nlohmann::ordered_json t;
      t["spin"] = std::string(to_string(table.spin));
      t["classes"] = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        r["m"] = row.m;
        r["e_plus"] = row.e_plus;
        r["status"] = std::string(to_string(row.status));
        if (row.bound) r["bound"] = *row.bound;
        r["stein_realized"] = row.stein_realized;
        t["classes"].push_back(std::move(r));
      }
      j["spin_tables"].push_back(std::move(t));
    }
    j["stein"]["cf"] = report.stein.cf.coefficients;
    j["stein"]["rotation_vectors"] = report.stein.rotation_vectors;
    j["stein"]["euler_classes"] = report.stein.euler_classes;
    j["contactomorphism_orbits"] = report.contactomorphism_orbits;
    j["version"] = std::string(kVersion);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << to_string(report.lens) << "\n";
  for (const auto& table : report.tables) {
    out << "\nspin " << to_string(table.spin) << "\n";
    out << std::setw(6) << "m" << std::setw(8) << "e_plus" << "  " << std::left << std::setw(18)
        << "status" << std::setw(7) << "bound" << "stein" << std::right << "\n";
    for (const auto& row : table.rows) {
      out << std::setw(6) << row.m << std::setw(8) << row.e_plus << "  " << std::left
          << std::setw(18) << to_string(row.status) << std::setw(7)
          << (row.bound ? std::to_string(*row.bound) : "-") << (row.stein_realized ? "yes" : "no")
          << std::right << "\n";
    }
  }
  out << "\nStein filling\n";
  out << "  continued fraction: [" << join(report.stein.cf.coefficients, ", ") << "]\n";
  out << "  rotation vectors:   " << report.stein.rotation_vectors.size() << "\n";
  out << "  Euler classes:      {" << join(report.stein.euler_classes, ", ") << "}\n";
  out << "\nContactomorphism orbits (m ~ -m):";
  for (const auto& orbit : report.contactomorphism_orbits) out << " {" << join(orbit, ", ") << "}";
  out << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  out << "\nlens-tight " << kVersion << "\n";
  return out.str();
}

}  // namespace lenstight
