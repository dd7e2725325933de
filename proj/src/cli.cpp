#include "vtl/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "vtl/invariants.hpp"
#include "vtl/json_io.hpp"
#include "vtl/oracle.hpp"
#include "vtl/suites.hpp"

namespace vtl {

namespace {

struct WordArgs {
  int n = 0;
  std::string word;
  bool want_f = false;
  bool want_arrow = false;
  bool want_both = false;
  bool normalized = false;
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-n,--strands", n, "strand count (alternatively inline: \"-n 2 s1\")");
    cmd->add_option("word", word, "braid word, e.g. \"s1 s1 t1\"");
    cmd->add_flag("--f", want_f, "compute the f-polynomial");
    cmd->add_flag("--arrow", want_arrow, "compute the arrow polynomial");
    cmd->add_flag("--both", want_both, "compute both (default)");
    cmd->add_flag("--normalized", normalized, "divide by -A^2-A^-2 (unknot -> 1)");
    cmd->add_flag("--json", json, "JSON output");
  }

  BraidWord parse() const {
    return n > 0 ? parse_braid(word, n) : parse_braid(word);
  }
  bool f_wanted() const { return want_f || want_both || !want_arrow; }
  bool arrow_wanted() const { return want_arrow || want_both || !want_f; }
};

void print_failures(const SuiteResult& r, std::ostream& out) {
  out << r.summary() << "\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
  for (std::size_t k = 0; k < shown; ++k)
    out << "  counterexample: " << r.failures[k] << "\n";
  if (shown < r.failures.size())
    out << "  ... " << (r.failures.size() - shown) << " more\n";
}

int cmd_invariant(const WordArgs& args, std::ostream& out) {
  const BraidWord w = args.parse();
  nlohmann::json envelope{{"n", w.strands()},
                          {"word", format_letters(w)},
                          {"writhe", writhe(w)},
                          {"normalized", args.normalized}};
  std::string f_text, arrow_text;
  if (args.f_wanted()) {
    LaurentPoly f = f_polynomial(w);
    if (args.normalized) f = normalized(f);
    envelope["f"] = to_json(f);
    f_text = f.str();
  }
  if (args.arrow_wanted()) {
    ArrowPoly a = arrow_polynomial(w);
    if (args.normalized) a = normalized(a);
    envelope["arrow"] = to_json(a);
    arrow_text = a.str();
  }
  if (args.json) {
    out << envelope.dump(2) << "\n";
    return 0;
  }
  out << "word: " << format_braid(w) << "\n";
  out << "writhe: " << writhe(w) << "\n";
  if (args.f_wanted()) out << "f: " << f_text << "\n";
  if (args.arrow_wanted()) out << "arrow: " << arrow_text << "\n";
  return 0;
}

int cmd_oracle(const WordArgs& args, bool compare, std::ostream& out) {
  const BraidWord w = args.parse();
  nlohmann::json envelope{{"n", w.strands()},
                          {"word", format_letters(w)},
                          {"writhe", writhe(w)},
                          {"crossings", classical_crossings(w)}};
  bool agree = true;
  std::string report;
  if (args.f_wanted()) {
    const LaurentPoly oracle = f_state_sum(w);
    envelope["f"] = to_json(oracle);
    report += "f: " + oracle.str() + "\n";
    if (compare) {
      const LaurentPoly algebra = f_polynomial(w);
      const bool same = algebra == oracle;
      agree = agree && same;
      envelope["f_agree"] = same;
      report += "f (algebra): " + algebra.str() + (same ? " [agree]" : " [DISAGREE]") + "\n";
    }
  }
  if (args.arrow_wanted()) {
    const ArrowPoly oracle = arrow_state_sum(w);
    envelope["arrow"] = to_json(oracle);
    report += "arrow: " + oracle.str() + "\n";
    if (compare) {
      const ArrowPoly algebra = arrow_polynomial(w);
      const bool same = algebra == oracle;
      agree = agree && same;
      envelope["arrow_agree"] = same;
      report += "arrow (algebra): " + algebra.str() + (same ? " [agree]" : " [DISAGREE]") + "\n";
    }
  }
  if (args.json)
    out << envelope.dump(2) << "\n";
  else
    out << "word: " << format_braid(w) << "\n" << report;
  return agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"f-polynomial and arrow polynomial of virtual braid closures"};
  app.require_subcommand(1);

  auto* inv_cmd = app.add_subcommand(
      "invariant", "compute the invariants of a braid closure");
  WordArgs inv_args;
  inv_args.attach(inv_cmd);

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force state sums, optionally checked against the algebra");
  WordArgs oracle_args;
  oracle_args.attach(oracle_cmd);
  bool compare = false;
  oracle_cmd->add_flag("--compare", compare,
                       "also run the algebra pipeline and compare");

  auto* check_cmd =
      app.add_subcommand("check", "run one of the identity suites");
  std::string suite;
  int max_n = 0;
  std::uint64_t seed = 1;
  check_cmd
      ->add_option("--suite", suite,
                   "one of: presentation-vtl, presentation-atl, markov-f, "
                   "markov-a, tl-restriction")
      ->required();
  check_cmd->add_option("--max-n", max_n, "largest strand count");
  check_cmd->add_option("--seed", seed, "seed for the randomized parts");

  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "randomized Markov-move invariance of both polynomials");
  int fuzz_words = 50, fuzz_moves = 6, fuzz_max_n = 4;
  std::uint64_t fuzz_seed = 7;
  fuzz_cmd->add_option("--words", fuzz_words, "number of random words");
  fuzz_cmd->add_option("--moves", fuzz_moves, "random moves per word");
  fuzz_cmd->add_option("--seed", fuzz_seed, "seed");
  fuzz_cmd->add_option("--max-n", fuzz_max_n, "largest strand count of source words");

  std::vector<const char*> argv;
  argv.push_back("vtl");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv_cmd->parsed()) return cmd_invariant(inv_args, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_args, compare, out);
    if (check_cmd->parsed()) {
      std::vector<SuiteResult> results;
      if (suite == "presentation-vtl") {
        results.push_back(check_presentation_vtl(max_n > 0 ? max_n : 6));
        results.push_back(check_derived_vtl(max_n > 0 ? max_n : 6));
      } else if (suite == "presentation-atl") {
        results.push_back(check_presentation_atl(max_n > 0 ? max_n : 5));
        results.push_back(check_derived_atl(max_n > 0 ? max_n : 5));
      } else if (suite == "markov-f") {
        results.push_back(check_markov_f(max_n > 0 ? max_n : 4, seed));
      } else if (suite == "markov-a") {
        results.push_back(check_markov_a(max_n > 0 ? max_n : 4, seed));
      } else if (suite == "tl-restriction") {
        results.push_back(check_tl_restriction(max_n > 0 ? max_n : 5, seed));
      } else {
        err << "unknown suite '" << suite << "'\n";
        return 2;
      }
      bool ok = true;
      for (const auto& r : results) {
        print_failures(r, out);
        ok = ok && r.ok();
      }
      return ok ? 0 : 1;
    }
    if (fuzz_cmd->parsed()) {
      const SuiteResult r =
          check_markov_invariance(fuzz_words, fuzz_moves, fuzz_seed, fuzz_max_n);
      print_failures(r, out);
      return r.ok() ? 0 : 1;
    }
  } catch (const TooLarge& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const TooManyCrossings& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const NotDivisible& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace vtl
