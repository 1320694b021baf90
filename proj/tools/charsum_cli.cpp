// charsum: verify character-sum identities from the command line.
//
// Exit status: 0 when every check passes, 1 when any check fails,
// 2 on usage or domain errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charsum/characters.hpp"
#include "charsum/errors.hpp"
#include "charsum/fourier.hpp"
#include "charsum/rational.hpp"
#include "charsum/report.hpp"
#include "charsum/worked_examples.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputSpec {
  std::string format = "pretty";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputSpec& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  cmd->add_option("--output", out.path, "Write to this file instead of stdout");
}

void emit(const OutputSpec& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(out.path, std::ios::binary | std::ios::trunc);
  if (!file) throw charsum::DomainError("cannot open output file: " + out.path);
  file << text;
  file.close();
  if (!file) throw charsum::DomainError("failed writing output file: " + out.path);
}

std::string render(const charsum::ReportDocument& doc, const std::string& format) {
  if (format == "json") return charsum::to_json(doc);
  if (format == "csv") return charsum::to_csv(doc);
  return charsum::to_pretty(doc);
}

std::string command_echo(int argc, char** argv) {
  std::string s = "charsum";
  for (int i = 1; i < argc; ++i) {
    s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet character sums: direct evaluation against Fourier-series expansions"};
  app.require_subcommand(1);

  OutputSpec out;
  std::int64_t modulus = 0;
  std::int64_t discriminant = 0;
  std::string function_name;
  std::string y_text;
  double tol = 1e-8;
  std::int64_t terms_cap = 1'000'000;
  std::int64_t cesaro_terms = 10'000;
  int example_id = 0;
  std::int64_t from = 1;
  std::int64_t to = 0;

  auto* characters = app.add_subcommand("characters", "List all characters mod q");
  characters->add_option("-q,--modulus", modulus, "Modulus q")->required();
  add_output_options(characters, out);

  auto* theorem = app.add_subcommand("verify-theorem", "Direct sum against the series for every primitive chi mod q");
  theorem->add_option("-q,--modulus", modulus, "Modulus q")->required();
  theorem->add_option("--function", function_name, "t2, t, exp, log or step:<y>")->required();
  theorem->add_option("--tol", tol, "Target accuracy")->capture_default_str();
  theorem->add_option("--terms-cap", terms_cap, "Maximum series terms")->capture_default_str();
  theorem->add_option("--cesaro-terms", cesaro_terms, "Averaging window N for slowly convergent series")
      ->capture_default_str();
  add_output_options(theorem, out);

  auto* example = app.add_subcommand("example", "Check one of the four worked identities for chi_d");
  example->add_option("--id", example_id, "Identity 1-4")->required()->check(CLI::Range(1, 4));
  example->add_option("-d,--discriminant", discriminant, "Fundamental discriminant d")->required();
  example->add_option("--y", y_text, "Cut point in (0, 1) for identity 4, as p/q or a decimal");
  auto* tol_option = example->add_option("--tol", tol, "Tolerance (identity 4 defaults to 5e-4)");
  example->add_option("--terms-cap", terms_cap, "Maximum series terms")->capture_default_str();
  example->add_option("--cesaro-terms", cesaro_terms, "Averaging window N for identity 4")->capture_default_str();
  add_output_options(example, out);

  auto* sweep = app.add_subcommand("sweep", "Lemma checks and applicable identities for all fundamental d");
  sweep->add_option("--from", from, "Smallest |d|")->capture_default_str();
  sweep->add_option("--to", to, "Largest |d|")->required();
  sweep->add_option("--tol", tol, "Tolerance for identities 1-3")->capture_default_str();
  sweep->add_option("--terms-cap", terms_cap, "Maximum series terms")->capture_default_str();
  auto* sweep_out = sweep->add_option("--output", out.path, "CSV destination (stdout when omitted)");
  sweep->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  (void)sweep_out;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = command_echo(argc, argv);
  try {
    if (*characters) {
      const charsum::CharacterGroup group = charsum::build_character_group(modulus);
      if (out.format == "json") {
        emit(out, charsum::characters_json(group, command));
      } else if (out.format == "csv") {
        emit(out, charsum::characters_csv(group));
      } else {
        emit(out, charsum::characters_pretty(group));
      }
      return 0;
    }

    charsum::ReportDocument doc;
    doc.command = command;

    if (*theorem) {
      const charsum::FunctionSpec f = charsum::FunctionSpec::parse(function_name);
      if (terms_cap < 1) throw charsum::DomainError("--terms-cap must be positive");
      const charsum::CharacterGroup group = charsum::build_character_group(modulus);
      std::vector<charsum::DirichletCharacter> primitive;
      for (const auto& chi : group.primitive_characters()) {
        if (chi.modulus() >= 3) primitive.push_back(chi);
      }
      if (primitive.empty()) {
        doc.notices.push_back("no primitive characters mod " + std::to_string(modulus));
      }
      charsum::SeriesOptions options;
      options.terms_cap = terms_cap;
      options.cesaro_window = cesaro_terms;
      charsum::CoefficientTable cos_table(f, charsum::CoefficientKind::Cos);
      charsum::CoefficientTable sin_table(f, charsum::CoefficientKind::Sin);
      for (const auto& chi : primitive) {
        auto& table = chi.parity() == charsum::Parity::Even ? cos_table : sin_table;
        const auto start = std::chrono::steady_clock::now();
        const charsum::TheoremVerification v = charsum::verify_theorem(chi, table, tol, options);
        charsum::VerificationReport r = charsum::theorem_report(chi, f.name(), v, tol);
        r.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        doc.reports.push_back(std::move(r));
      }
    } else if (*example) {
      charsum::examples::ExampleOptions options;
      options.terms_cap = terms_cap;
      options.cesaro_window = cesaro_terms;
      const auto start = std::chrono::steady_clock::now();
      charsum::examples::IdentityCheck check;
      switch (example_id) {
        case 1: check = charsum::examples::example1(discriminant, tol, options); break;
        case 2: check = charsum::examples::example2(discriminant, tol, options); break;
        case 3: check = charsum::examples::example3(discriminant, tol, options); break;
        default: {
          if (y_text.empty()) throw charsum::DomainError("example 4 requires --y");
          const double t = tol_option->count() ? tol : charsum::examples::kPolyaTolerance;
          check = charsum::examples::example4(discriminant, charsum::Rational::parse(y_text), t, options);
        }
      }
      charsum::VerificationReport r = charsum::example_report(check);
      r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      doc.reports.push_back(std::move(r));
    } else if (*sweep) {
      if (sweep->get_option("--format")->count() == 0) out.format = "csv";
      charsum::SweepOptions options;
      options.tol = tol;
      options.example.terms_cap = terms_cap;
      // Open the destination first so an unwritable path fails before the work.
      if (!out.path.empty()) emit(out, "");
      doc.reports = charsum::sweep(from, to, options);
    }

    emit(out, render(doc, out.format));
    return doc.all_pass() ? 0 : kExitFail;
  } catch (const charsum::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const charsum::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << " (achieved " << e.achieved_error() << ")\n";
    return kExitUsage;
  }
}
