#ifndef EGROUPOID_CLI_HPP_
#define EGROUPOID_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "errors.hpp"
#include "json_io.hpp"
#include "reports.hpp"

namespace egroupoid {

  enum ExitCode : int { exit_ok = 0, exit_indefinite = 1, exit_input = 2, exit_internal = 3 };

  struct AnalysisConfig {
    std::optional<std::string> family;
    std::optional<std::string> input;
    std::optional<int>         truncation;
    std::size_t                basis_budget = default_basis_budget;
    std::string                format       = "json";
    std::uint64_t              seed         = 1;
    bool                       kill_zero    = false;
    unsigned                   alphabet     = 2;
    std::string                variant      = "A";
    int                        levels       = 30;
    std::string                elements;
    std::string                character;
  };

  inline int default_truncation(FamilyKind k) {
    return k == FamilyKind::polycyclic ? 3 : 10;
  }

  struct ResolvedInput {
    AnyCarrier carrier;
    int        truncation = 0;
  };

  inline ResolvedInput resolve_input(AnalysisConfig const& cfg) {
    if (cfg.family.has_value() == cfg.input.has_value()) {
      throw input_error("give exactly one of --family and --input");
    }
    InputDocument doc;
    if (cfg.family) {
      auto kind = parse_family(*cfg.family);
      if (!kind) {
        throw input_error("unknown family '" + *cfg.family + "'");
      }
      FamilyInput f;
      f.spec.family   = *kind;
      f.spec.alphabet = cfg.alphabet;
      if (*kind == FamilyKind::polycyclic && (cfg.alphabet < 2 || cfg.alphabet > 9)) {
        throw input_error("--alphabet must be in 2..9");
      }
      doc = f;
    } else {
      doc = parse_input(read_json_file(*cfg.input));
    }
    int L = 0;
    if (auto const* f = std::get_if<FamilyInput>(&doc)) {
      L = f->has_truncation ? f->spec.truncation : default_truncation(f->spec.family);
    }
    if (cfg.truncation) {
      if (*cfg.truncation < 0) {
        throw input_error("--truncation must be >= 0");
      }
      L = *cfg.truncation;
    }
    return {build_carrier(doc, cfg.kill_zero), L};
  }

  //! Splits on commas outside brackets, so "(2,0),(1,1)" gives two names.
  inline std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string              item;
    int                      depth = 0;
    auto                     flush = [&] {
      auto const b = item.find_first_not_of(" \t");
      auto const e = item.find_last_not_of(" \t");
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
      item.clear();
    };
    for (char ch : s) {
      depth += (ch == '(' || ch == '[') - (ch == ')' || ch == ']');
      if (ch == ',' && depth == 0) {
        flush();
      } else {
        item += ch;
      }
    }
    flush();
    return out;
  }

  inline Report run_command(std::string const& cmd, AnalysisConfig const& cfg) {
    if (cfg.basis_budget == 0) {
      throw input_error("--basis-budget must be positive");
    }
    if (cmd == "k0") {
      auto v = parse_variant(cfg.variant);
      if (!v) {
        throw input_error("--variant must be A or B");
      }
      if (cfg.levels < 1) {
        throw input_error("--levels must be >= 1");
      }
      return k0_report(*v, cfg.levels);
    }
    if (cmd == "degeneration") {
      auto local = cfg;
      if (!local.family && !local.input) {
        local.family = "chain_with_symmetry";
      }
      auto in         = resolve_input(local);
      auto const* ch  = std::get_if<ChainFamily>(&in.carrier);
      if (ch == nullptr || !ch->has_symmetry()) {
        throw input_error("degeneration applies to chain_with_symmetry only");
      }
      return degeneration_json(*ch, std::max(in.truncation, 1), cfg.basis_budget);
    }

    auto in = resolve_input(cfg);
    return std::visit(
        [&](auto const& c) -> Report {
          int const L = in.truncation;
          if (cmd == "analyze") {
            return analyze_report(c, L, cfg.basis_budget);
          }
          if (cmd == "germs") {
            if (cfg.character.empty()) {
              throw input_error("germs needs --character");
            }
            return germs_report(c, character_from_string(c, cfg.character), L);
          }
          if (cmd == "gram") {
            auto const list = split_list(cfg.elements);
            if (list.empty()) {
              throw input_error("gram needs --elements");
            }
            std::vector<element_t<std::decay_t<decltype(c)>>> els;
            for (auto const& s : list) {
              auto g = element_from_string(c, s);
              if (std::find(els.begin(), els.end(), g) != els.end()) {
                throw input_error("element '" + s + "' listed twice");
              }
              els.push_back(g);
            }
            auto chars = cfg.character.empty()
                             ? characters(c, L)
                             : std::vector{character_from_string(c, cfg.character)};
            return gram_report(c, els, chars, L, cfg.basis_budget, cfg.seed);
          }
          if (cmd == "check") {
            return check_report(c, L, cfg.basis_budget, cfg.seed);
          }
          throw input_error("unknown command '" + cmd + "'");
        },
        in.carrier);
  }

  //! Parses argv, runs one subcommand and writes its report to `out`.
  //! Returns 0 when every verdict is definite, 1 when some verdict is Unknown
  //! or an invariant fails, 2 on malformed input.
  inline int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App       app{"Inverse semigroups, their spectra, germ groupoids and modules"};
    AnalysisConfig cfg;
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* sub) {
      sub->add_option("--family", cfg.family,
                      "chain_with_symmetry | pure_chain | bicyclic | polycyclic");
      sub->add_option("--input", cfg.input, "JSON file with a finite or family input");
      sub->add_option("--truncation", cfg.truncation, "truncation level L");
      sub->add_option("--basis-budget", cfg.basis_budget, "basic opens per neighbourhood scan");
      sub->add_option("--kill-zero", cfg.kill_zero, "drop the character at zero")
          ->default_val(false)
          ->expected(0, 1)
          ->default_str("false");
      sub->add_option("--alphabet", cfg.alphabet, "polycyclic alphabet size (2..9)");
      sub->add_option("--seed", cfg.seed, "seed for randomized probes");
      sub->add_option("--format", cfg.format, "json | text")
          ->check(CLI::IsMember({"json", "text"}));
    };

    auto* analyze = app.add_subcommand("analyze", "continuity and Hausdorff verdicts");
    add_input(analyze);
    auto* germs = app.add_subcommand("germs", "germ classes over a base point");
    add_input(germs);
    germs->add_option("--character", cfg.character, "base point: idempotent name or limit:<code>");
    auto* gramc = app.add_subcommand("gram", "Gram matrices, positivity, independence");
    add_input(gramc);
    gramc->add_option("--elements", cfg.elements, "comma-separated element names");
    gramc->add_option("--character", cfg.character, "restrict to one character");
    auto* k0 = app.add_subcommand("k0", "Bratteli stages and K0 of the AF filtrations");
    k0->add_option("--variant", cfg.variant, "A | B");
    k0->add_option("--levels", cfg.levels, "number of inclusions");
    k0->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    k0->add_option("--seed", cfg.seed, "accepted for uniformity");
    auto* degen = app.add_subcommand("degeneration", "degeneration of the C0(X)-valued module");
    add_input(degen);
    auto* check = app.add_subcommand("check", "the full invariant suite");
    add_input(check);

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return e.get_exit_code() == 0 ? exit_ok : exit_input;
    }

    try {
      auto const  cmd = app.get_subcommands().front()->get_name();
      auto const  r   = run_command(cmd, cfg);
      out << render(r.body, cfg.format == "text");
      return r.definite ? exit_ok : exit_indefinite;
    } catch (input_error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input;
    } catch (usage_error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input;
    } catch (resource_error const& e) {
      err << "error: " << e.what() << " (" << e.partial_size() << " elements so far)\n";
      return exit_input;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << "\n";
      return exit_internal;
    }
  }

}  // namespace egroupoid

#endif  // EGROUPOID_CLI_HPP_
