#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jackchar/cache.hpp"
#include "jackchar/ch_expansion.hpp"
#include "jackchar/characters.hpp"
#include "jackchar/cumulants.hpp"
#include "jackchar/error.hpp"
#include "jackchar/free_cumulants.hpp"
#include "jackchar/jack.hpp"
#include "jackchar/parallel.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/render.hpp"
#include "jackchar/report.hpp"
#include "jackchar/row_functions.hpp"
#include "jackchar/symgroup.hpp"

namespace {

using jackchar::CacheStore;
using jackchar::ChExpansion;
using jackchar::Expander;
using jackchar::JackTable;
using jackchar::KLPolynomial;
using jackchar::Partition;
using jackchar::Report;

struct Options {
  std::string format = "pretty";
  std::string cache_dir;
  int jobs = 1;
  int budget_jack = -1;  // unset: sized from the request

  int budget(int computed) const { return budget_jack > 0 ? budget_jack : computed; }
};

// Filtration degree sum(|pi_i| + len(pi_i)) of a tuple's pointwise product;
// expansions with this bound consume diagrams up to two sizes beyond it.
int product_degree(const std::vector<Partition>& pis) {
  int degree = 0;
  for (const Partition& pi : pis) degree += pi.size() + pi.length();
  return degree;
}

std::vector<Partition> parse_partitions(const std::vector<std::string>& texts) {
  std::vector<Partition> pis;
  pis.reserve(texts.size());
  for (const std::string& text : texts) pis.push_back(Partition::parse(text));
  return pis;
}

void print_report(const Report& report, const Options& options) {
  if (options.format == "json")
    std::cout << jackchar::report_to_json_lines(report);
  else if (options.format == "csv")
    std::cout << jackchar::report_to_csv(report);
  else
    std::cout << jackchar::report_to_pretty(report);
}

int run_jack(const Options& options, const std::string& lambda_text) {
  Partition lambda = Partition::parse(lambda_text);
  JackTable jack(CacheStore::from_options(options.cache_dir), options.budget(lambda.size()));
  auto expansion = jack.jack_in_p_basis(lambda);
  if (options.format == "json")
    std::cout << jackchar::powersum_to_json(expansion).dump() << "\n";
  else if (options.format == "csv")
    std::cout << jackchar::powersum_to_csv(expansion);
  else
    std::cout << jackchar::render_powersum(expansion) << "\n";
  return 0;
}

int run_char(const Options& options, const std::string& pi_text, const std::string& lambda_text) {
  Partition pi = Partition::parse(pi_text);
  Partition lambda = Partition::parse(lambda_text);
  JackTable jack(CacheStore::from_options(options.cache_dir), options.budget(lambda.size()));
  jackchar::LaurentScalar value = jackchar::ch_classical(jack, pi, lambda);
  if (options.format == "json")
    std::cout << jackchar::laurent_to_json(value).dump() << "\n";
  else if (options.format == "csv")
    std::cout << jackchar::laurent_to_csv(value);
  else
    std::cout << jackchar::render_laurent(value) << "\n";
  return 0;
}

int run_structure(const Options& options, const std::string& pi_text,
                  const std::string& sigma_text) {
  std::vector<Partition> pis = parse_partitions({pi_text, sigma_text});
  CacheStore cache = CacheStore::from_options(options.cache_dir);
  JackTable jack(cache, options.budget(product_degree(pis) + 2));
  Expander expander(jack, cache);
  auto rows = expander.structure_coefficients(pis[0], pis[1]);
  if (options.format == "json")
    std::cout << jackchar::structure_to_json(rows).dump() << "\n";
  else if (options.format == "csv")
    std::cout << jackchar::structure_to_csv(rows);
  else
    std::cout << jackchar::render_structure(rows) << "\n";
  return 0;
}

int run_cumulant(const Options& options, const std::vector<std::string>& texts) {
  std::vector<Partition> pis = parse_partitions(texts);
  CacheStore cache = CacheStore::from_options(options.cache_dir);
  JackTable jack(cache, options.budget(product_degree(pis) + 2));
  Expander expander(jack, cache);
  ChExpansion kappa = jackchar::kappa_dot(expander, pis);
  if (options.format == "json")
    std::cout << jackchar::ch_expansion_to_json(kappa).dump() << "\n";
  else if (options.format == "csv")
    std::cout << jackchar::ch_expansion_to_csv(kappa);
  else
    std::cout << jackchar::render_ch_expansion(kappa) << "\n";
  return 0;
}

int run_kl(const Options& options, const std::vector<std::string>& texts) {
  std::vector<Partition> pis = parse_partitions(texts);
  CacheStore cache = CacheStore::from_options(options.cache_dir);
  KLPolynomial result;
  if (pis.size() == 1) {
    // Single target: the character itself.
    const Partition& pi = pis[0];
    int degree = pi.size() + pi.length();
    JackTable jack(cache, options.budget(degree + 2));
    result = jackchar::kerov_lassalle_solve(
        [&jack, &pi](const Partition& lambda) { return jackchar::ch_classical(jack, pi, lambda); },
        degree, degree % 2);
  } else {
    // Several targets: their conditional cumulant.
    int degree = product_degree(pis) - 2 * (static_cast<int>(pis.size()) - 1);
    JackTable jack(cache, options.budget(product_degree(pis) + 2));
    Expander expander(jack, cache);
    ChExpansion kappa = jackchar::kappa_dot(expander, pis);
    result = jackchar::kerov_lassalle_solve(
        [&kappa, &jack](const Partition& lambda) { return kappa.evaluate(jack, lambda); },
        degree, degree % 2);
  }
  if (options.format == "json") {
    std::cout << result.to_json().dump() << "\n";
  } else if (options.format == "csv") {
    std::cout << "gamma_power,indices,coeff\n";
    for (const auto& [monomial, coeff] : result.terms())
      std::cout << monomial.gamma_power << ",\"" << monomial.indices.to_string() << "\","
                << jackchar::to_string(coeff) << "\n";
  } else {
    std::cout << result.to_string() << "\n";
  }
  return 0;
}

struct SuiteBudgets {
  int max_size = -1;
  int max_parts = -1;
  int max = -1;
  int rank = -1;

  // Per-suite defaults keep the acceptance-scale runs under the documented
  // time budgets; every bound is overridable.
  int size_or(int fallback) const { return max_size > 0 ? max_size : fallback; }
  int parts_or(int fallback) const { return max_parts > 0 ? max_parts : fallback; }
  int max_or(int fallback) const { return max > 0 ? max : fallback; }
  int rank_or(int fallback) const { return rank > 0 ? rank : fallback; }
};

int run_verify(const Options& options, const std::string& suite, const SuiteBudgets& budgets) {
  CacheStore cache = CacheStore::from_options(options.cache_dir);
  bool clean = true;
  auto emit = [&](const Report& report) {
    clean = clean && report.pass();
    print_report(report, options);
  };

  if (suite == "main-theorem") {
    int max_size = budgets.size_or(7);
    int max_parts = budgets.parts_or(3);
    JackTable jack(cache, options.budget(2 * max_size + 2));
    Expander expander(jack, cache);
    emit(jackchar::verify_main_theorem(expander, max_size, max_parts));
  } else if (suite == "kconditions") {
    int max_pi = budgets.max_or(5);
    int max_size = budgets.size_or(8);
    int rows = budgets.parts_or(2);
    int max_k2 = std::min(max_pi, 4);
    JackTable jack(cache,
                   options.budget(std::max(max_size, rows * (max_k2 + 1))));
    for (const Partition& pi : jackchar::partitions_up_to(max_pi)) {
      emit(jackchar::verify_K3(jack, pi, max_size));
      emit(jackchar::verify_K4(jack, pi, max_size));
      if (pi.size() <= max_k2) emit(jackchar::verify_K2(jack, pi, rows));
    }
  } else if (suite == "brillinger") {
    int max_size = budgets.size_or(6);
    int max_parts = budgets.parts_or(3);
    JackTable jack(cache, options.budget(2 * max_size + 2));
    Expander expander(jack, cache);
    jackchar::for_each_multiset(max_size, 2, max_parts,
                                [&](const std::vector<Partition>& pis) {
                                  emit(jackchar::verify_brillinger(expander, pis));
                                });
  } else if (suite == "delta-zero") {
    int max_size = budgets.max_or(6);
    int max_rank = budgets.rank_or(7);
    JackTable jack(cache, options.budget(2 * max_size + 2));
    Expander expander(jack, cache);
    emit(jackchar::scan_delta_zero(expander, max_size, max_rank));
  } else if (suite == "z3") {
    int max_size = budgets.size_or(6);
    JackTable jack(cache, options.budget(2 * max_size + 2));
    Expander expander(jack, cache);
    emit(jackchar::verify_z3_prescribed(expander, max_size));
  } else if (suite == "vanishing") {
    int max_size = budgets.size_or(6);
    int max_parts = budgets.parts_or(budgets.size_or(6));
    JackTable jack(cache, options.budget(max_size));
    emit(jackchar::scan_vanishing(jack, max_size, max_parts));
    emit(jackchar::verify_cool_vanishing(jack, max_size));
  } else if (suite == "kl-positivity") {
    int max_row = budgets.max_or(5);
    JackTable jack(cache, options.budget(2 * max_row + 2));
    Expander expander(jack, cache);
    emit(jackchar::scan_kerov_lassalle_positivity(expander, max_row));
  } else {  // steroids; the option validator admits nothing else
    int max_size = budgets.size_or(6);
    JackTable jack(cache, options.budget(2 * max_size + 2));
    Expander expander(jack, cache);
    emit(jackchar::scan_steroids(expander, max_size));
  }
  return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator and verifier for Jack characters"};
  app.require_subcommand(1);

  Options options;
  auto add_global_options = [&options](CLI::App* target) {
    target->add_option("--format", options.format, "Output form: json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    target->add_option("--cache-dir", options.cache_dir,
                       "Directory for cached intermediates (JACKCHAR_CACHE_DIR overrides)");
    target
        ->add_option("--jobs", options.jobs,
                     "Worker threads for table construction (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    target
        ->add_option("--budget-jack", options.budget_jack,
                     "Largest diagram size the character tables may reach "
                     "(default: sized from the request)")
        ->check(CLI::PositiveNumber);
  };
  add_global_options(&app);

  CLI::App* jack_cmd = app.add_subcommand("jack", "Power-sum expansion of a Jack polynomial");
  jack_cmd->fallthrough();
  std::string jack_lambda;
  jack_cmd->add_option("lambda", jack_lambda, "Diagram, e.g. [2]")->required();

  CLI::App* char_cmd = app.add_subcommand("char", "Jack character value Ch_pi(lambda)");
  char_cmd->fallthrough();
  std::string char_pi;
  std::string char_lambda;
  char_cmd->add_option("pi", char_pi, "Index partition, e.g. [2]")->required();
  char_cmd->add_option("lambda", char_lambda, "Diagram, e.g. [2]")->required();

  CLI::App* structure_cmd =
      app.add_subcommand("structure", "Structure coefficients of Ch_pi Ch_sigma");
  structure_cmd->fallthrough();
  std::string structure_pi;
  std::string structure_sigma;
  structure_cmd->add_option("pi", structure_pi, "First index partition")->required();
  structure_cmd->add_option("sigma", structure_sigma, "Second index partition")->required();

  // The tuple commands take their partitions as raw trailing arguments: a
  // registered vector positional would re-tokenize bracketed values like
  // [2,1] as container literals.
  CLI::App* cumulant_cmd = app.add_subcommand(
      "cumulant", "Conditional cumulant of a character tuple, e.g. cumulant [2] [2] [2]");
  cumulant_cmd->allow_extras();
  add_global_options(cumulant_cmd);

  CLI::App* kl_cmd = app.add_subcommand(
      "kl",
      "Free-cumulant polynomial of a character (one partition) or of a conditional "
      "cumulant of characters (several), e.g. kl [2] [2]");
  kl_cmd->allow_extras();
  add_global_options(kl_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->fallthrough();
  std::string suite;
  SuiteBudgets budgets;
  verify_cmd
      ->add_option("suite", suite,
                   "One of: main-theorem, kconditions, brillinger, delta-zero, z3, "
                   "vanishing, kl-positivity, steroids")
      ->required()
      ->check(CLI::IsMember({"main-theorem", "kconditions", "brillinger", "delta-zero", "z3",
                             "vanishing", "kl-positivity", "steroids"}));
  verify_cmd->add_option("--max-size", budgets.max_size, "Total size bound for scanned tuples")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-parts", budgets.max_parts, "Tuple length (or row count) bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max", budgets.max, "Primary size bound of the suite")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--rank", budgets.rank, "Largest symmetric group rank to test")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto tuple_arguments = [](CLI::App* cmd) {
    std::vector<std::string> texts = cmd->remaining();
    if (texts.empty())
      jackchar::fail(jackchar::ErrorCode::SizeMismatch,
                     cmd->get_name() + " needs at least one partition argument");
    return texts;
  };

  try {
    jackchar::set_job_count(options.jobs);
    if (*jack_cmd) return run_jack(options, jack_lambda);
    if (*char_cmd) return run_char(options, char_pi, char_lambda);
    if (*structure_cmd) return run_structure(options, structure_pi, structure_sigma);
    if (*cumulant_cmd) return run_cumulant(options, tuple_arguments(cumulant_cmd));
    if (*kl_cmd) return run_kl(options, tuple_arguments(kl_cmd));
    return run_verify(options, suite, budgets);
  } catch (const jackchar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
