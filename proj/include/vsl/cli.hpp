#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vsl/invariant.hpp"
#include "vsl/json_io.hpp"
#include "vsl/linking.hpp"
#include "vsl/statesum.hpp"
#include "vsl/word.hpp"

namespace vsl {

namespace detail {

// Exit-code contract: 0 = success; 1 = the computation rejected its inputs or
// found a violation; 2 = the command line, a word, or an input file could not
// be parsed.  `InputError` marks the second kind inside command bodies.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto loading(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

inline bool is_json_path(const std::string& s) {
  return s.size() >= 5 && s.compare(s.size() - 5, 5, ".json") == 0;
}

inline std::optional<int> hint_of(int n_option) {
  if (n_option <= 0) return std::nullopt;
  return n_option;
}

inline StringLinkDiagram load_string_link(const std::string& arg, int n_option) {
  if (is_json_path(arg)) return string_link_from_json(load_json_file(arg));
  return from_braid_word(parse_virtual_word(arg, hint_of(n_option)));
}

inline int parse_spec_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected a number, got \"" + s + "\"");
  }
  if (used != s.size())
    throw std::invalid_argument(what + ": trailing characters in \"" + s + "\"");
  return value;
}

inline FiniteVfb make_vfb_from_spec(const std::string& spec) {
  const std::string usage = "trivial:<m>, constant:<comma-separated permutation>, or linear:<m>";
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("vfb spec \"" + spec + "\" has no ':' (expected " + usage + ")");
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (name == "trivial") return trivial_vfb(parse_spec_int(rest, "trivial:<m>"));
  if (name == "linear") return linear_vfb(parse_spec_int(rest, "linear:<m>"));
  if (name == "constant") {
    std::vector<int> psi;
    std::stringstream ss(rest);
    std::string cell;
    while (std::getline(ss, cell, ',')) psi.push_back(parse_spec_int(cell, "constant:<csv>"));
    if (psi.empty()) throw std::invalid_argument("constant:<csv> needs at least one entry");
    return constant_action_vfb(psi);
  }
  throw std::invalid_argument("unknown vfb family \"" + name + "\" (expected " + usage + ")");
}

inline VirtualBraidWord random_virtual_word(std::mt19937_64& rng, int n, int len) {
  const LetterKind kinds[] = {LetterKind::SigmaPos, LetterKind::SigmaNeg, LetterKind::Tau};
  VirtualBraidWord w;
  w.n = n;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({kinds[rng() % 3], 1 + static_cast<int>(rng() % (n - 1))});
  return w;
}

inline FlatBraidWord random_flat_word(std::mt19937_64& rng, int n, int len) {
  FlatBraidWord w;
  w.n = n;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({rng() % 2 == 0 ? LetterKind::FlatCross : LetterKind::Tau,
                         1 + static_cast<int>(rng() % (n - 1))});
  return w;
}

inline std::string trace_line(const std::vector<Move>& trace) {
  std::string out;
  for (const Move& m : trace) {
    if (!out.empty()) out += "; ";
    out += to_string(m);
  }
  return out.empty() ? "(empty)" : out;
}

// The invariant half of a linking report; virtual_between is a diagram-level
// bound, not an invariant, so fuzz comparisons must skip it.
inline bool same_linking_invariants(const LinkingReport& x, const LinkingReport& y) {
  return x.lk == y.lk && x.lk_v == y.lk_v && x.a == y.a;
}

struct FuzzFailure {
  std::string headline;
  std::vector<std::pair<std::string, std::string>> details;
};

inline int report_fuzz(const std::optional<FuzzFailure>& failure, const std::string& target,
                       int trials, std::uint64_t seed, int steps, std::ostream& out) {
  if (!failure) {
    out << "ok: " << trials << " trials (target " << target << ", seed " << seed << ", steps "
        << steps << ")\n";
    return 0;
  }
  out << "FAIL: " << failure->headline << "\n";
  for (const auto& [key, value] : failure->details) out << "  " << key << ": " << value << "\n";
  return 1;
}

inline int fuzz_matrix(int trials, std::uint64_t seed, int steps, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::optional<FuzzFailure> failure;
  for (int trial = 0; trial < trials && !failure; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const VirtualBraidWord w = random_virtual_word(rng, n, static_cast<int>(rng() % 9));
    const StringLinkDiagram d = from_braid_word(w);
    const std::string base = to_string(matrix_invariant(d));
    const LinkingReport base_report = linking_report(d);

    std::vector<Move> trace;
    const VirtualBraidWord moved = random_equivalent(w, steps, rng(), &trace);
    const StringLinkDiagram d2 = from_braid_word(moved);
    const std::string after = to_string(matrix_invariant(d2));
    if (after != base || !same_linking_invariants(base_report, linking_report(d2))) {
      failure = FuzzFailure{"invariants changed under word rewrites (trial " +
                                std::to_string(trial) + ")",
                            {{"word", format_word(w)},
                             {"rewritten", format_word(moved)},
                             {"trace", trace_line(trace)},
                             {"matrix before", base},
                             {"matrix after", after}}};
      break;
    }

    const int strand = static_cast<int>(rng() % n);
    const int position = static_cast<int>(rng() % (d.strands[static_cast<std::size_t>(strand)].size() + 1));
    const CrossingKind kinds[] = {CrossingKind::Virtual, CrossingKind::RealPositive,
                                  CrossingKind::RealNegative};
    const CrossingKind kind = kinds[rng() % 3];
    const StringLinkDiagram kinked = insert_kink(d, strand, position, kind, rng() % 2 == 0);
    const std::string kinked_matrix = to_string(matrix_invariant(kinked));
    if (kinked_matrix != base || !same_linking_invariants(base_report, linking_report(kinked))) {
      failure = FuzzFailure{"invariants changed under a kink insertion (trial " +
                                std::to_string(trial) + ")",
                            {{"word", format_word(w)},
                             {"kink", to_string(kind) + " on strand " + std::to_string(strand) +
                                          " at position " + std::to_string(position)},
                             {"matrix before", base},
                             {"matrix after", kinked_matrix}}};
    }
  }
  return report_fuzz(failure, "matrix", trials, seed, steps, out);
}

inline int fuzz_vc(int trials, std::uint64_t seed, int steps, std::ostream& out) {
  std::mt19937_64 rng(seed);
  const std::vector<FiniteVfb> structures = {trivial_vfb(2), trivial_vfb(3),
                                             constant_action_vfb({1, 0}), linear_vfb(2),
                                             linear_vfb(3)};
  std::optional<FuzzFailure> failure;
  for (int trial = 0; trial < trials && !failure; ++trial) {
    const FiniteVfb& S = structures[static_cast<std::size_t>(trial) % structures.size()];
    const int n = 2 + static_cast<int>(rng() % 2);
    const FlatBraidWord w = random_flat_word(rng, n, static_cast<int>(rng() % 7));
    const long long base = count_colorings(closure(w), S);

    std::vector<Move> trace;
    const FlatBraidWord moved = random_equivalent(w, steps, rng(), &trace);
    const long long after = count_colorings(closure(moved), S);
    if (after != base) {
      failure = FuzzFailure{"vc changed under word rewrites (trial " + std::to_string(trial) + ")",
                            {{"word", format_word(w)},
                             {"rewritten", format_word(moved)},
                             {"trace", trace_line(trace)},
                             {"vc before", std::to_string(base)},
                             {"vc after", std::to_string(after)}}};
      break;
    }

    const std::size_t shift = rng() % (w.letters.size() + 1);
    const long long rotated = count_colorings(closure(rotate_word(w, shift)), S);
    if (rotated != base) {
      failure = FuzzFailure{"vc changed under rotation (trial " + std::to_string(trial) + ")",
                            {{"word", format_word(w)},
                             {"rotation", std::to_string(shift)},
                             {"vc before", std::to_string(base)},
                             {"vc after", std::to_string(rotated)}}};
    }
  }
  return report_fuzz(failure, "vc", trials, seed, steps, out);
}

inline int fuzz_statesum(int trials, std::uint64_t seed, int steps, std::ostream& out) {
  std::mt19937_64 rng(seed);
  struct Pair {
    FiniteVfb S;
    Cochain2 phi;
  };
  std::vector<Pair> pairs;
  {
    Cochain2 a2;
    a2.coeff = Coefficients::integers();
    a2.table = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
    pairs.push_back({trivial_vfb(2), a2});
    Cochain2 a3;
    a3.coeff = Coefficients::modular(3);
    a3.table = {{Int(0), Int(1), Int(2)}, {Int(2), Int(0), Int(1)}, {Int(1), Int(2), Int(0)}};
    pairs.push_back({trivial_vfb(3), a3});
    const FiniteVfb swap = constant_action_vfb({1, 0});
    for (const Cochain2& phi : enumerate_cocycles(swap, Coefficients::integers()))
      pairs.push_back({swap, phi});
    const FiniteVfb linear = linear_vfb(2);
    for (const Cochain2& phi : enumerate_cocycles(linear, Coefficients::modular(5)))
      pairs.push_back({linear, phi});
  }
  std::optional<FuzzFailure> failure;
  for (int trial = 0; trial < trials && !failure; ++trial) {
    const auto& [S, phi] = pairs[static_cast<std::size_t>(trial) % pairs.size()];
    const int n = 2 + static_cast<int>(rng() % 2);
    const FlatBraidWord w = random_flat_word(rng, n, static_cast<int>(rng() % 7));
    const StateSumResult base = state_sum(closure(w), S, phi);

    Int total(0);
    for (const auto& [element, multiplicity] : base.value.terms()) total += multiplicity;
    if (total != Int(static_cast<long>(count_colorings(closure(w), S)))) {
      failure = FuzzFailure{"state-sum multiplicity differs from vc (trial " +
                                std::to_string(trial) + ")",
                            {{"word", format_word(w)},
                             {"state sum", base.value.to_string()},
                             {"vc", std::to_string(count_colorings(closure(w), S))}}};
      break;
    }

    std::vector<Move> trace;
    const FlatBraidWord moved = random_equivalent(w, steps, rng(), &trace);
    const StateSumResult after = state_sum(closure(moved), S, phi);
    if (!(after.value == base.value)) {
      failure = FuzzFailure{"state sum changed under word rewrites (trial " +
                                std::to_string(trial) + ")",
                            {{"word", format_word(w)},
                             {"rewritten", format_word(moved)},
                             {"trace", trace_line(trace)},
                             {"before", base.value.to_string()},
                             {"after", after.value.to_string()}}};
      break;
    }

    const std::size_t shift = rng() % (w.letters.size() + 1);
    const StateSumResult rotated = state_sum(closure(rotate_word(w, shift)), S, phi);
    if (!(rotated.value == base.value)) {
      failure = FuzzFailure{"state sum changed under rotation (trial " + std::to_string(trial) +
                                ")",
                            {{"word", format_word(w)},
                             {"rotation", std::to_string(shift)},
                             {"before", base.value.to_string()},
                             {"after", rotated.value.to_string()}}};
    }
  }
  return report_fuzz(failure, "statesum", trials, seed, steps, out);
}

}  // namespace detail

/**
 * Command-line driver.  `args` excludes the program name.  All report text
 * goes to `out`, diagnostics to `err`; output is byte-stable for fixed inputs
 * and seed.  Returns the process exit code (0 ok, 1 violation, 2 bad input).
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants of virtual string links and flat virtual links"};
  app.name("vslink");
  app.require_subcommand(1);

  std::string input, word_text, vfb_path, cocycle_path, vfb_spec;
  std::string complex_name = "vf", coeff_name = "Z", target;
  bool list_colorings = false;
  int n_option = 0, max_degree = 3, trials = 100, steps = 12;
  std::uint64_t seed = 0;

  auto* matrix_cmd = app.add_subcommand("matrix", "dual-number matrix invariant M of a string link");
  matrix_cmd->add_option("input", input, "virtual braid word, or a diagram .json path")->required();
  matrix_cmd->add_option("--n", n_option, "strand count for words without an n= header");

  auto* rho_cmd = app.add_subcommand("rho", "braid representation of a virtual braid word");
  rho_cmd->add_option("word", word_text, "virtual braid word")->required();
  rho_cmd->add_option("--n", n_option, "strand count for words without an n= header");

  auto* burau_cmd = app.add_subcommand("burau", "Burau matrix of a virtual braid word");
  burau_cmd->add_option("word", word_text, "virtual braid word")->required();
  burau_cmd->add_option("--n", n_option, "strand count for words without an n= header");

  auto* permrep_cmd =
      app.add_subcommand("permrep", "permutation representation of a 3-strand flat braid word");
  permrep_cmd->add_option("word", word_text, "flat braid word on 3 strands")->required();

  auto* linking_cmd = app.add_subcommand("linking", "linking numbers and diagonal data");
  linking_cmd->add_option("input", input, "virtual braid word, or a diagram .json path")->required();
  linking_cmd->add_option("--n", n_option, "strand count for words without an n= header");

  auto* vfb_cmd = app.add_subcommand("vfb", "virtual flat biquandle utilities");
  vfb_cmd->require_subcommand(1);
  auto* vfb_check_cmd = vfb_cmd->add_subcommand("check", "check the axioms of a table");
  vfb_check_cmd->add_option("file", vfb_path, "structure .json path")->required();
  auto* vfb_make_cmd = vfb_cmd->add_subcommand("make", "emit a built-in structure as JSON");
  vfb_make_cmd
      ->add_option("spec", vfb_spec, "trivial:<m> | constant:<comma-separated permutation> | linear:<m>")
      ->required();

  auto* colorings_cmd = app.add_subcommand("colorings", "count colorings of a flat word's closure");
  colorings_cmd->add_option("word", word_text, "flat braid word")->required();
  colorings_cmd->add_option("--vfb", vfb_path, "structure .json path")->required();
  colorings_cmd->add_flag("--list", list_colorings, "also list every coloring");
  colorings_cmd->add_option("--n", n_option, "strand count for words without an n= header");

  auto* homology_cmd = app.add_subcommand("homology", "homology of a virtual flat biquandle");
  homology_cmd->add_option("--vfb", vfb_path, "structure .json path")->required();
  homology_cmd->add_option("--complex", complex_name, "vf or sf")->required();
  homology_cmd->add_option("--max-degree", max_degree, "top degree to report (default 3)");
  homology_cmd->add_option("--coeff", coeff_name, "Z or Z<m> (default Z)");

  auto* cocycles_cmd = app.add_subcommand("cocycles", "state-sum cocycle lattice generators");
  cocycles_cmd->add_option("--vfb", vfb_path, "structure .json path")->required();
  cocycles_cmd->add_option("--coeff", coeff_name, "Z or Z<m> (default Z)");

  auto* statesum_cmd = app.add_subcommand("statesum", "cocycle state sum of a flat word's closure");
  statesum_cmd->add_option("word", word_text, "flat braid word")->required();
  statesum_cmd->add_option("--vfb", vfb_path, "structure .json path")->required();
  statesum_cmd->add_option("--cocycle", cocycle_path, "weight cochain .json path")->required();
  statesum_cmd->add_option("--n", n_option, "strand count for words without an n= header");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "rewrite-based invariance fuzzing");
  fuzz_cmd->add_option("--target", target, "matrix, vc, or statesum")->required();
  fuzz_cmd->add_option("--trials", trials, "number of trials (default 100)");
  fuzz_cmd->add_option("--seed", seed, "random seed")->required();
  fuzz_cmd->add_option("--steps", steps, "rewrite steps per trial (default 12)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (matrix_cmd->parsed()) {
      const StringLinkDiagram d =
          detail::loading([&] { return detail::load_string_link(input, n_option); });
      out << to_string(matrix_invariant(d)) << "\n";
    } else if (rho_cmd->parsed()) {
      const VirtualBraidWord w = detail::loading(
          [&] { return parse_virtual_word(word_text, detail::hint_of(n_option)); });
      out << to_string(rho(w)) << "\n";
    } else if (burau_cmd->parsed()) {
      const VirtualBraidWord w = detail::loading(
          [&] { return parse_virtual_word(word_text, detail::hint_of(n_option)); });
      out << to_string(burau(w)) << "\n";
    } else if (permrep_cmd->parsed()) {
      const FlatBraidWord w =
          detail::loading([&] { return parse_flat_word(word_text, 3); });
      out << to_string(permutation_rep_fvb3(w)) << "\n";
    } else if (linking_cmd->parsed()) {
      const StringLinkDiagram d =
          detail::loading([&] { return detail::load_string_link(input, n_option); });
      out << to_string(linking_report(d)) << "\n";
    } else if (vfb_check_cmd->parsed()) {
      const FiniteVfb S =
          detail::loading([&] { return vfb_from_json(load_json_file(vfb_path)); });
      const std::vector<AxiomViolation> violations = validate_vfb(S);
      if (violations.empty()) {
        out << "ok: virtual flat biquandle of order " << S.order << "\n";
        return 0;
      }
      for (const AxiomViolation& v : violations) out << to_string(v) << "\n";
      return 1;
    } else if (vfb_make_cmd->parsed()) {
      const FiniteVfb S = detail::loading([&] { return detail::make_vfb_from_spec(vfb_spec); });
      out << to_json(S).dump(2) << "\n";
    } else if (colorings_cmd->parsed()) {
      const FlatBraidWord w = detail::loading(
          [&] { return parse_flat_word(word_text, detail::hint_of(n_option)); });
      const FiniteVfb S =
          detail::loading([&] { return vfb_from_json(load_json_file(vfb_path)); });
      const auto colorings = enumerate_colorings(closure(w), S);
      out << colorings.size() << "\n";
      if (list_colorings)
        for (const auto& coloring : colorings) {
          for (std::size_t i = 0; i < coloring.size(); ++i)
            out << (i ? " " : "") << coloring[i];
          out << "\n";
        }
    } else if (homology_cmd->parsed()) {
      const FiniteVfb S =
          detail::loading([&] { return vfb_from_json(load_json_file(vfb_path)); });
      const Coefficients A = detail::loading([&] { return parse_coefficients(coeff_name); });
      detail::loading([&] {
        if (complex_name != "vf" && complex_name != "sf")
          throw std::invalid_argument("--complex must be vf or sf, got \"" + complex_name + "\"");
        if (max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
        return 0;
      });
      const auto groups = complex_name == "vf" ? homology_vf(S, max_degree, A)
                                               : homology_sf(S, max_degree, A);
      for (std::size_t n = 0; n < groups.size(); ++n)
        out << "H_" << n << " = " << groups[n].to_string() << "\n";
    } else if (cocycles_cmd->parsed()) {
      const FiniteVfb S =
          detail::loading([&] { return vfb_from_json(load_json_file(vfb_path)); });
      const Coefficients A = detail::loading([&] { return parse_coefficients(coeff_name); });
      const std::vector<Cochain2> generators = enumerate_cocycles(S, A);
      out << generators.size() << " generator(s) over " << to_string(A) << "\n";
      for (const Cochain2& phi : generators) out << to_json(phi).dump() << "\n";
    } else if (statesum_cmd->parsed()) {
      const FlatBraidWord w = detail::loading(
          [&] { return parse_flat_word(word_text, detail::hint_of(n_option)); });
      const FiniteVfb S =
          detail::loading([&] { return vfb_from_json(load_json_file(vfb_path)); });
      const Cochain2 phi =
          detail::loading([&] { return cochain2_from_json(load_json_file(cocycle_path)); });
      out << state_sum(closure(w), S, phi).value.to_string() << "\n";
    } else if (fuzz_cmd->parsed()) {
      detail::loading([&] {
        if (target != "matrix" && target != "vc" && target != "statesum")
          throw std::invalid_argument("--target must be matrix, vc, or statesum, got \"" +
                                      target + "\"");
        if (trials < 0) throw std::invalid_argument("--trials must be >= 0");
        if (steps < 0) throw std::invalid_argument("--steps must be >= 0");
        return 0;
      });
      if (target == "matrix") return detail::fuzz_matrix(trials, seed, steps, out);
      if (target == "vc") return detail::fuzz_vc(trials, seed, steps, out);
      return detail::fuzz_statesum(trials, seed, steps, out);
    }
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace vsl
