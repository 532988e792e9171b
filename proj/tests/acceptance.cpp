// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "lenstight/classifier.hpp"
#include "lenstight/continuation.hpp"
#include "lenstight/linking_calculus.hpp"
#include "lenstight/star_configuration.hpp"
#include "lenstight/stein.hpp"
#include "oracles.hpp"

using namespace lenstight;

namespace {

// Wall-clock budgets, in seconds. Zero means untimed.
constexpr double kGoldenBudget = 1.0;
constexpr double kSweepBudget = 10.0;
constexpr double kFractionBudget = 5.0;
constexpr double kForcingBudget = 10.0;

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
};

int failures = 0;

void run(int id, const char* title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.passed = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && seconds >= budget) {
    out.require(false, "took " + std::to_string(seconds) + " s, budget " + std::to_string(budget) + " s");
  }
  std::printf("AC%d %s  %s (%.3f s)%s%s\n", id, out.passed ? "PASS" : "FAIL", title, seconds,
              out.note.empty() ? "" : "  ", out.note.c_str());
  if (!out.passed) ++failures;
}

std::vector<Int> rows_with(const SpinTable& t, std::initializer_list<ClassStatus> statuses) {
  std::vector<Int> out;
  for (const auto& r : t.rows) {
    if (std::find(statuses.begin(), statuses.end(), r.status) != statuses.end()) out.push_back(r.m);
  }
  return out;
}

bool coprime(Int p, Int q) { return std::gcd(p, q) == 1; }

}  // namespace

int main() {
  run(1, "L(3,1): classes 1,2 UNIQUE_EXISTS, class 0 EMPTY", kGoldenBudget, [] {
    Outcome o;
    const auto r = classify(make_lens(3, 1));
    o.require(r.tables.size() == 1, "table count");
    o.require(rows_with(r.tables[0], {ClassStatus::UniqueExists}) == std::vector<Int>{1, 2}, "unique rows");
    o.require(rows_with(r.tables[0], {ClassStatus::Empty}) == std::vector<Int>{0}, "empty rows");
    o.require(rows_with(r.tables[0], {ClassStatus::Bounded, ClassStatus::UniqueIfExists}).empty(), "extra rows");
    return o;
  });

  run(2, "L(3,2): class 0 UNIQUE_EXISTS, classes 1,2 EMPTY", kGoldenBudget, [] {
    Outcome o;
    const auto r = classify(make_lens(3, 2));
    o.require(rows_with(r.tables[0], {ClassStatus::UniqueExists}) == std::vector<Int>{0}, "unique rows");
    o.require(rows_with(r.tables[0], {ClassStatus::Empty}) == std::vector<Int>{1, 2}, "empty rows");
    return o;
  });

  run(3, "L(1,1) and L(2,1): exactly one tight class", 0, [] {
    Outcome o;
    const auto s3 = classify(make_lens(1, 1));
    o.require(s3.tables.size() == 1 && s3.tables[0].rows.size() == 1, "S^3 shape");
    o.require(rows_with(s3.tables[0], {ClassStatus::UniqueExists}) == std::vector<Int>{0}, "S^3 row");
    const auto rp3 = classify(make_lens(2, 1));
    o.require(rp3.tables.size() == 2 && rp3.tables[0].spin == SpinStructure::Distinguished, "RP^3 tables");
    const auto& t = rp3.tables[0];
    o.require(rows_with(t, {ClassStatus::UniqueExists, ClassStatus::UniqueIfExists, ClassStatus::Bounded}) ==
                  std::vector<Int>{1},
              "RP^3 tight classes");
    o.require(rows_with(t, {ClassStatus::Empty}) == std::vector<Int>{0}, "RP^3 empty class");
    return o;
  });

  run(4, "every L(p,q), 2 <= p <= 50: EMPTY and UNIQUE rows in each table, disjoint criteria", kSweepBudget, [] {
    Outcome o;
    for (Int p = 2; p <= 50; ++p) {
      for (Int q = 1; q < p; ++q) {
        if (!coprime(p, q)) continue;
        const auto lens = make_lens(p, q);
        const auto r = classify(lens);
        const std::string tag = to_string(lens);
        for (const auto& t : r.tables) {
          const auto empty = rows_with(t, {ClassStatus::Empty});
          const auto unique = rows_with(t, {ClassStatus::UniqueExists, ClassStatus::UniqueIfExists});
          o.require(!empty.empty(), tag + " no EMPTY row");
          o.require(!unique.empty(), tag + " no UNIQUE row");
          const auto u = uniqueness_set(lens, t.spin);
          const auto e = emptiness_set(lens, t.spin);
          std::vector<Residue> both;
          std::set_intersection(u.begin(), u.end(), e.begin(), e.end(), std::back_inserter(both));
          o.require(both.empty(), tag + " criteria overlap");
        }
      }
    }
    return o;
  });

  run(5, "L(p,1), odd p <= 15: Stein fillings realize all p-1 non-zero classes", 0, [] {
    Outcome o;
    for (Int p = 3; p <= 15; p += 2) {
      const auto s = realizable_euler_set(make_lens(p, 1));
      std::vector<Int> got;
      for (const auto& e : s.euler_classes) got.push_back(e.value);
      std::vector<Int> want(static_cast<std::size_t>(p - 1));
      std::iota(want.begin(), want.end(), 1);
      o.require(got == want, "L(" + std::to_string(p) + ",1) Euler classes");
      o.require(s.rotation_vector_count == p - 1, "L(" + std::to_string(p) + ",1) rotation count");
    }
    return o;
  });

  run(6, "p <= 200: continued fraction round trip and |det A| = p", kFractionBudget, [] {
    Outcome o;
    for (Int p = 2; p <= 200; ++p) {
      for (Int q = 1; q < p; ++q) {
        if (!coprime(p, q)) continue;
        const auto cf = neg_continued_fraction(make_lens(p, q));
        const auto value = evaluate(cf);
        const auto check = oracle::convergent(cf.coefficients);
        const std::string tag = std::to_string(p) + "/" + std::to_string(q);
        o.require(value == Fraction{-p, q} && check.num == -p && check.den == q, tag + " round trip");
        o.require(std::abs(bareiss_determinant(chain_linking_matrix(cf))) == p, tag + " determinant");
        o.require(std::abs(oracle::continuant(cf.coefficients)) == p, tag + " continuant");
      }
    }
    return o;
  });

  run(7, "odd p <= 30: Stein Euler classes avoid +-(q-1)", 0, [] {
    Outcome o;
    for (Int p = 3; p <= 30; p += 2) {
      for (Int q = 1; q < p; ++q) {
        if (!coprime(p, q)) continue;
        const auto s = realizable_euler_set(make_lens(p, q));
        for (const auto& e : s.euler_classes) {
          o.require(e.value != oracle::mod(q - 1, p) && e.value != oracle::mod(1 - q, p),
                    "L(" + std::to_string(p) + "," + std::to_string(q) + ") hits " + std::to_string(e.value));
        }
      }
    }
    return o;
  });

  run(8, "p <= 6, e_plus = p: forced diagrams are overtwisted; p = 3 targets a_i -> e_{i-1}", kForcingBudget, [] {
    Outcome o;
    for (Int p = 2; p <= 6; ++p) {
      const auto lens = make_lens(p, 1);
      const auto words = raw_words(p, p - 1, ConfigurationFilter::AdmissibleOnly);
      o.require(!words.empty(), "no admissible words at p = " + std::to_string(p));
      for (const auto& w : words) {
        std::string tag = "p=" + std::to_string(p) + " word";
        for (Int a : w.arcs) tag += " " + std::to_string(a);
        const auto d = forced_continuations(lens, StarConfiguration{p, p, w});
        o.require(d.fully_forced() && d.crossing_free, tag + " not forced");
        o.require(detect_overtwisted_pattern(d), tag + " no overtwisted pattern");
        if (p == 3) {
          // a_i is the (i-1)-th re-entry of the separatrix through h_1^c
          for (Int i = 2; i <= p; ++i) o.require(d.at(0, i - 1).terminal() == i - 1, tag + " target");
        }
      }
    }
    return o;
  });

  run(9, "raw counts match brute force for p <= 6, n <= 4; count_bound = 1 when e_plus = 1", 0, [] {
    Outcome o;
    for (Int p = 1; p <= 6; ++p) {
      for (Int n = 0; n <= 4; ++n) {
        const auto brute = oracle::brute_force_words(p, n);
        const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
        o.require(static_cast<std::size_t>(raw_word_count(p, n)) == brute.size(), tag + " closed form");
        o.require(raw_words(p, n).size() == brute.size(), tag + " enumeration");
      }
    }
    for (Int p = 2; p <= 50; ++p) {
      for (Int q = 1; q < p; ++q) {
        if (!coprime(p, q)) continue;
        const auto lens = make_lens(p, q);
        for (SpinStructure s : spin_structures(lens)) {
          for (Int m = 0; m < p; ++m) {
            if (forced_e_plus(lens, m, s) != 1) continue;
            o.require(count_bound(lens, half_class(m, p), s) == 1, to_string(lens) + " bound");
          }
        }
      }
    }
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
