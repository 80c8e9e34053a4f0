#include <CLI11.hpp>

#include <iostream>

#include "tracealg/factorization.hpp"
#include "tracealg/group.hpp"
#include "tracealg/lie.hpp"
#include "tracealg/series.hpp"
#include "tracealg/verify.hpp"

namespace {

using namespace tracealg;

struct Options {
  std::string alphabet_path;
  std::string subset;
  std::string plan;
  std::string word;
  int maxlen = 6;
  int degree = 3;
  bool witt = false;
  int check = -1;
  std::string format = "plain";
};

bool machine(const Options& o) { return o.format == "machine"; }

std::string witness_path_str(const TfsaVerdict& v) {
  std::string out;
  for (size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += " - ";
    out += v.witness[i].str();
  }
  return out;
}

int cmd_tfsa(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  auto verdict = is_tfsa(alpha, alpha.parse_subset(o.subset));
  if (machine(o)) {
    std::cout << "tfsa\t" << (verdict.is_tfsa ? "true" : "false");
    for (const auto& t : verdict.witness) std::cout << "\t" << t.str();
    std::cout << "\n";
  } else if (verdict.is_tfsa) {
    std::cout << "TFSA\n";
  } else {
    std::cout << "NOT TFSA\nwitness: " << witness_path_str(verdict) << "\n";
  }
  return 0;
}

int cmd_beta(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  auto beta = beta_generators(alpha, alpha.parse_subset(o.subset), o.maxlen);
  if (machine(o)) {
    for (const auto& g : beta.generators) std::cout << "gen\t" << g.str() << "\n";
    std::cout << "complete\t" << (beta.complete ? "true" : "false") << "\n";
  } else {
    for (const auto& g : beta.generators) std::cout << g.str() << "\n";
    std::cout << "complete: " << (beta.complete ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_mobius(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  auto P = mobius_polynomial(alpha);
  if (machine(o)) {
    for (const auto& [t, c] : P.terms()) std::cout << c << "\t" << t.str() << "\n";
  } else {
    std::cout << P.str() << "\n";
  }
  return 0;
}

int cmd_counts(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  auto S = characteristic_series(alpha, o.maxlen);
  std::vector<long long> counts(o.maxlen + 1, 0);
  for (const auto& [t, c] : S.terms()) ++counts[t.length()];
  for (int k = 0; k <= o.maxlen; ++k) {
    if (machine(o))
      std::cout << "count\t" << k << "\t" << counts[k] << "\n";
    else
      std::cout << "length " << k << ": " << counts[k] << "\n";
  }
  if (o.witt) {
    auto d = witt_dimensions(alpha, o.maxlen);
    for (int m = 1; m <= o.maxlen; ++m) {
      if (machine(o))
        std::cout << "witt\t" << m << "\t" << d[m - 1] << "\n";
      else
        std::cout << "witt " << m << ": " << d[m - 1] << "\n";
    }
  }
  return 0;
}

int cmd_factorize(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  auto plan = build_plan(alpha, o.plan, o.maxlen);
  auto F = factorization_from_plan(plan);
  if (o.word.empty() && o.check < 0) {
    for (size_t i = 0; i < F.levels.size(); ++i) {
      std::cout << (machine(o) ? "level\t" : "level ") << i << (machine(o) ? "" : ":");
      for (const auto& g : F.levels[i].generators) std::cout << (machine(o) ? "\t" : " ") << g.str();
      std::cout << "\n";
    }
    return 0;
  }
  if (!o.word.empty()) {
    auto t = parse_trace(alpha, o.word);
    auto parts = decompose(F, t, o.maxlen);
    if (machine(o)) {
      for (const auto& [lvl, f] : parts) std::cout << "factor\t" << lvl << "\t" << f.str() << "\n";
    } else if (parts.empty()) {
      std::cout << "1\n";
    } else {
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) std::cout << " . ";
        std::cout << parts[i].second.str() << "@" << parts[i].first;
      }
      std::cout << "\n";
    }
  }
  if (o.check >= 0) {
    auto res = verify_factorization(F, o.check);
    if (res.ok) {
      std::cout << (machine(o) ? "check\tok\n" : "factorization verified\n");
    } else {
      if (machine(o))
        std::cout << "check\tfail\t" << res.counterexample->str() << "\t" << res.count << "\n";
      else
        std::cout << "not a factorization: " << res.counterexample->str() << " has " << res.count
                  << " decompositions\n";
      return 1;
    }
  }
  return 0;
}

int cmd_lie_basis(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  auto plan = build_plan(alpha, o.plan, std::max(o.maxlen, o.degree));
  auto basis = lie_basis(alpha, plan, o.degree);
  char sep = machine(o) ? '\t' : ' ';
  for (const auto& e : basis)
    std::cout << e.degree << sep << e.label.str() << sep << e.poly.str() << "\n";
  return 0;
}

int cmd_group_reduce(const Options& o) {
  auto alpha = parse_alphabet_file(o.alphabet_path);
  DoubledAlphabet dbl = extend_alphabet(alpha);
  auto w = parse_group_word(dbl, o.word);
  auto r = reduce_trace(dbl, w);
  std::cout << r.trace().str() << "\n";
  return 0;
}

int cmd_verify() { return run_verification(std::cout).ok() ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computer algebra for free partially commutative monoids, Lie algebras and groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool needs_alphabet = true) {
    if (needs_alphabet)
      cmd->add_option("--alphabet", o.alphabet_path, "alphabet file")->required();
    cmd->add_option("--format", o.format, "plain or machine")
        ->check(CLI::IsMember({"plain", "machine"}));
  };

  auto* tfsa = app.add_subcommand("tfsa", "decide the TFSA condition for a subalphabet");
  add_common(tfsa);
  tfsa->add_option("--subset", o.subset, "letters of B (comma separated)")->required();

  auto* beta = app.add_subcommand("beta", "enumerate the beta generators of an elimination");
  add_common(beta);
  beta->add_option("--subset", o.subset, "letters of B")->required();
  beta->add_option("--maxlen", o.maxlen, "length bound");

  auto* mobius = app.add_subcommand("mobius", "Mobius polynomial of the alphabet");
  add_common(mobius);

  auto* counts = app.add_subcommand("counts", "trace counts from the characteristic series");
  add_common(counts);
  counts->add_option("--maxlen", o.maxlen, "length bound");
  counts->add_flag("--witt", o.witt, "also print graded Lie dimensions");

  auto* factorize = app.add_subcommand("factorize", "build and use an elimination plan");
  add_common(factorize);
  factorize->add_option("--plan", o.plan, "semicolon separated generators, e.g. 'c;acc;b'")
      ->required();
  factorize->add_option("--maxlen", o.maxlen, "level enumeration bound");
  factorize->add_option("--word", o.word, "trace to decompose");
  factorize->add_option("--check", o.check, "verify unique decomposition up to this length");

  auto* lie = app.add_subcommand("lie-basis", "basis of the free partially commutative Lie algebra");
  add_common(lie);
  lie->add_option("--plan", o.plan, "elimination plan")->required();
  lie->add_option("--degree", o.degree, "degree bound");
  lie->add_option("--maxlen", o.maxlen, "level enumeration bound");

  auto* group = app.add_subcommand("group-reduce", "reduced form of a group word");
  add_common(group);
  group->add_option("--word", o.word, "group word, apostrophe = inverse")->required();

  app.add_subcommand("verify", "run the verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tfsa->parsed()) return cmd_tfsa(o);
    if (beta->parsed()) return cmd_beta(o);
    if (mobius->parsed()) return cmd_mobius(o);
    if (counts->parsed()) return cmd_counts(o);
    if (factorize->parsed()) return cmd_factorize(o);
    if (lie->parsed()) return cmd_lie_basis(o);
    if (group->parsed()) return cmd_group_reduce(o);
    return cmd_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
