// lens-tight: tight contact structures on lens spaces L(p,q).

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>

#include <CLI11.hpp>

#include "lenstight/classifier.hpp"
#include "lenstight/dot.hpp"
#include "lenstight/star_configuration.hpp"
#include "lenstight/stein.hpp"

namespace {

using lenstight::Int;

constexpr int kInvalidInput = 2;
constexpr int kCheckFailed = 3;

int run_cf(Int p, Int q) {
  const auto lens = lenstight::make_lens(p, q);
  if (lens.p() == 1) {
    std::cout << "L(1,1): no 2-handles, B^4 fills S^3\n";
    return 0;
  }
  const auto cf = lenstight::neg_continued_fraction(lens);
  const auto value = lenstight::evaluate(cf);
  const auto a = lenstight::linking_matrix(cf, lens.p());
  std::cout << "-" << lens.p() << "/" << lens.q() << " = [";
  for (std::size_t i = 0; i < cf.size(); ++i) std::cout << (i ? ", " : "") << cf.coefficients[i];
  std::cout << "]\n";
  std::cout << "evaluates to " << value.numerator << "/" << value.denominator << "\n";
  std::cout << "linking matrix\n" << a << "\n";
  std::cout << "|det| = " << std::abs(lenstight::bareiss_determinant(a)) << "\n";
  return 0;
}

int run_stein(Int p, Int q) {
  const auto lens = lenstight::make_lens(p, q);
  if (lens.p() == 1) {
    std::cout << "L(1,1): B^4, Euler class 0\n";
    return 0;
  }
  const auto summary = lenstight::realizable_euler_set(lens);
  std::cout << lenstight::to_string(lens) << ": " << summary.rotation_vector_count
            << " rotation vectors\n";
  for (const auto& pres : summary.presentations) {
    std::cout << "  r = (";
    for (Eigen::Index i = 0; i < pres.rotation.size(); ++i) std::cout << (i ? ", " : "") << pres.rotation(i);
    std::cout << ")  e = " << pres.euler.value << "\n";
  }
  std::cout << "Euler classes: {";
  for (std::size_t i = 0; i < summary.euler_classes.size(); ++i) {
    std::cout << (i ? ", " : "") << summary.euler_classes[i].value;
  }
  std::cout << "}\n";
  return 0;
}

int run_enumerate(Int p, Int e_plus, bool dot) {
  const auto configs = lenstight::enumerate_configurations(p, e_plus);
  if (dot) {
    for (const auto& c : configs) std::cout << lenstight::to_dot(c);
    return 0;
  }
  std::cout << "p=" << p << " e_plus=" << e_plus << ": " << configs.size() << " configurations, "
            << lenstight::raw_word_count(p, e_plus - 1) << " raw words\n";
  for (const auto& c : configs) {
    std::cout << "  (";
    for (std::size_t i = 0; i < c.word.arcs.size(); ++i) std::cout << (i ? " " : "") << c.word.arcs[i];
    std::cout << ")" << (lenstight::is_admissible(c) ? "" : "  inadmissible") << "\n";
  }
  return 0;
}

int run_self_check(Int max_p) {
  Int failures = 0;
  Int lenses = 0;
  for (Int p = 1; p <= max_p; ++p) {
    for (Int q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1 || (q == p && p != 1)) continue;
      ++lenses;
      for (const auto& result : lenstight::self_check(lenstight::make_lens(p, q))) {
        if (result.passed) continue;
        ++failures;
        std::cout << "FAIL " << result.name << (result.detail.empty() ? "" : ": ") << result.detail << "\n";
      }
    }
  }
  std::cout << lenses << " lens spaces, " << failures << " failed checks\n";
  return failures == 0 ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight contact structures on lens spaces"};
  app.set_version_flag("--version", "lens-tight " + std::string(lenstight::kVersion));
  app.require_subcommand(1);

  Int p = 0;
  Int q = 0;
  std::string format = "text";
  bool bounds = false;
  auto* classify = app.add_subcommand("classify", "Classification table per spin structure");
  classify->add_option("-p", p, "p")->required();
  classify->add_option("-q", q, "q")->required();
  classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify->add_flag("--bounds", bounds, "Enumerate upper bounds for undecided classes");

  auto* cf = app.add_subcommand("cf", "Negative continued fraction of -p/q");
  cf->add_option("-p", p, "p")->required();
  cf->add_option("-q", q, "q")->required();

  auto* stein = app.add_subcommand("stein", "Stein fillings and their Euler classes");
  stein->add_option("-p", p, "p")->required();
  stein->add_option("-q", q, "q")->required();

  Int e_plus = 1;
  bool dot = false;
  auto* enumerate = app.add_subcommand("enumerate", "Star configurations up to relabeling");
  enumerate->add_option("-p", p, "p")->required();
  enumerate->add_option("--e-plus", e_plus, "number of positive elliptic points")->required();
  enumerate->add_flag("--dot", dot, "Emit Graphviz");

  Int max_p = 50;
  auto* check = app.add_subcommand("self-check", "Consistency checks over all L(p,q)");
  check->add_option("--max-p", max_p, "largest p")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (*classify) {
      const auto report = lenstight::classify(lenstight::make_lens(p, q), bounds);
      std::cout << lenstight::render(report, format == "json" ? lenstight::Format::Json
                                                               : lenstight::Format::Text);
      return 0;
    }
    if (*cf) return run_cf(p, q);
    if (*stein) return run_stein(p, q);
    if (*enumerate) return run_enumerate(p, e_plus, dot);
    if (*check) return run_self_check(max_p);
  } catch (const lenstight::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lenstight::is_input_error(e.code()) ? kInvalidInput : 1;
  }
  return 0;
}
