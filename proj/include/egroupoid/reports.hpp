#ifndef EGROUPOID_REPORTS_HPP_
#define EGROUPOID_REPORTS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "continuity.hpp"
#include "groupoid.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "ktheory.hpp"
#include "l2_module.hpp"
#include "spectrum.hpp"

namespace egroupoid {

  //! A JSON report together with whether every verdict in it is definite
  //! (or, for check, whether every invariant held).
  struct Report {
    json body;
    bool definite = true;
  };

  inline constexpr std::size_t report_idempotent_cap = 200;

  template <Carrier C>
  std::string character_key(C const& c, Character<element_t<C>> const& x) {
    return x.is_principal() ? c.name(x.e) : "limit:" + x.code;
  }

  template <Carrier C>
  json semilattice_json(C const& c, int L) {
    auto idems     = idempotents_prefix(c, L, report_idempotent_cap + 1);
    bool truncated = idems.size() > report_idempotent_cap;
    if (truncated) {
      idems.resize(report_idempotent_cap);
    }
    json edges = json::array();
    auto below = [&](auto const& e, auto const& f) {
      return !(e == f) && c.compose(e, f) == e;
    };
    for (auto const& e : idems) {
      for (auto const& f : idems) {
        if (!below(e, f)) {
          continue;
        }
        bool cover = std::none_of(idems.begin(), idems.end(), [&](auto const& m) {
          return below(e, m) && below(m, f);
        });
        if (cover) {
          edges.push_back({c.name(e), c.name(f)});
        }
      }
    }
    return {{"idempotents", names(c, idems)},
            {"count", idems.size()},
            {"listing_truncated", truncated},
            {"hasse_edges", edges}};
  }

  template <Carrier C>
  json character_inventory(C const& c, int L) {
    auto const chars     = characters(c, L);
    std::size_t principal = 0;
    json        limits    = json::array();
    for (auto const& x : chars) {
      if (x.is_principal()) {
        ++principal;
      } else {
        limits.push_back(to_json(c, x));
      }
    }
    return {{"count", chars.size()}, {"principal", principal}, {"limit", limits}};
  }

  template <Carrier C>
  Report analyze_report(C const& c, int L, std::size_t budget) {
    Report out;
    auto   hv  = hausdorff_verdict(c, L, budget);
    json   per = json::array();
    for (auto const& [g, v] : hv.continuity.per_element) {
      per.push_back(to_json(c, g, v));
    }
    std::string summary;
    switch (hv.continuity.global) {
      case Verdict::continuous:
        summary = "E-continuous; Hausdorff";
        break;
      case Verdict::discontinuous:
        summary = "not E-continuous; groupoid not Hausdorff";
        break;
      default:
        summary = "undecided";
    }
    json haus{{"verdict", to_string(hv.kind)}};
    if (hv.continuity.discontinuous_at) {
      auto const g = *hv.continuity.discontinuous_at;
      haus["discontinuous_at"] = c.name(g);
      for (auto const& [el, v] : hv.continuity.per_element) {
        if (el == g && v.witness) {
          haus["witness"] = to_json(c, *v.witness);
        }
      }
    }
    if (hv.evidence_pair) {
      auto const& [a, b]     = *hv.evidence_pair;
      haus["evidence_pair"]  = {to_json(c, a), to_json(c, b)};
      haus["direct_check"]   = to_json(c, direct_separation_check(c, a, b, L, budget));
    }
    out.body = json{{"command", "analyze"},
                    {"family", c.family_name()},
                    {"truncation", L},
                    {"basis_budget", budget},
                    {"element_count", hv.continuity.per_element.size()},
                    {"semilattice", semilattice_json(c, L)},
                    {"characters", character_inventory(c, L)},
                    {"verdicts", per},
                    {"global", to_string(hv.continuity.global)},
                    {"hausdorff", haus},
                    {"summary", summary}};
    out.definite = hv.continuity.global != Verdict::unknown;
    return out;
  }

  template <Carrier C>
  Report germs_report(C const& c, Character<element_t<C>> const& x, int L) {
    auto const classes = germs_over(c, x, L);
    json       list    = json::array();
    for (auto const& a : classes) {
      auto [src, rng] = source_range(c, a.rep);
      list.push_back({{"germ", to_json(c, a.rep)}, {"range", to_json(c, rng)}});
    }
    json table = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        auto ab = compose_germs(c, classes[i].rep, classes[j].rep, L);
        if (!ab) {
          continue;
        }
        auto const it = std::find(classes.begin(), classes.end(), *ab);
        json       entry{{"left", i}, {"right", j}};
        if (it != classes.end()) {
          entry["product"] = static_cast<std::size_t>(it - classes.begin());
        } else {
          entry["product_germ"] = to_json(c, ab->rep);
        }
        table.push_back(entry);
      }
    }
    return {json{{"command", "germs"},
                 {"family", c.family_name()},
                 {"truncation", L},
                 {"base", to_json(c, x)},
                 {"class_count", classes.size()},
                 {"classes", list},
                 {"compositions", table}},
            true};
  }

  template <Carrier C>
  Report gram_report(C const&                                    c,
                     std::vector<element_t<C>> const&            els,
                     std::vector<Character<element_t<C>>> const& chars,
                     int                                         L,
                     std::size_t                                 budget,
                     std::uint64_t                               seed) {
    Report out;
    auto const G       = gram(c, els, chars, L, budget);
    json       entries = json::array();
    json       flags   = json::array();
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = 0; j < els.size(); ++j) {
        auto const& p = G.entries[i][j];
        json        e{{"a", c.name(els[i])},
                      {"b", c.name(els[j])},
                      {"attainment", to_string(p.attainment.kind)}};
        if (p.value.maxima) {
          e["maxima"] = names(c, *p.value.maxima);
        }
        if (p.attainment.witness) {
          e["witness"] = to_json(c, *p.attainment.witness);
        }
        if (p.attainment.kind == Verdict::unknown) {
          out.definite = false;
        }
        if (p.attainment.kind == Verdict::discontinuous && i < j) {
          flags.push_back("<phi_" + c.name(els[i]) + ", phi_" + c.name(els[j])
                          + "> is not attained on a finite set; see the degeneration "
                            "command");
        }
        entries.push_back(e);
      }
    }
    json matrices = json::object();
    for (auto const& m : G.at) {
      json rows = json::array();
      for (auto const& r : m.matrix) {
        json row = json::array();
        for (auto const& v : r) {
          row.push_back(to_string(v));
        }
        rows.push_back(row);
      }
      matrices[character_key(c, m.x)] = rows;
    }
    auto psd     = gram_psd_check(c, els, chars, L, budget);
    json psd_bad = json::array();
    for (auto const& [x, idx] : psd.violations) {
      psd_bad.push_back({{"x", to_json(c, x)}, {"minor", idx}});
    }

    auto distinct = els;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto const   trials = random_trials(seed, distinct.size(), 10);
    auto const   probe  = linear_independence_probe(c, distinct, trials, chars, L, budget);
    std::size_t  pass   = 0;
    json         tjson  = json::array();
    for (auto const& t : probe) {
      json coef = json::array();
      for (auto const& k : t.coef) {
        coef.push_back(k.str());
      }
      json entry{{"coef", coef}, {"result", to_string(t.result)}};
      if (t.nonzero_at) {
        entry["nonzero_at"] = to_json(c, *t.nonzero_at);
      }
      tjson.push_back(entry);
      pass += t.result == ProbeResult::pass ? 1 : 0;
    }

    out.body = json{{"command", "gram"},
                    {"family", c.family_name()},
                    {"truncation", L},
                    {"elements", names(c, els)},
                    {"entries", entries},
                    {"gram", matrices},
                    {"psd", {{"passed", psd.passed()},
                             {"matrices_checked", psd.matrices_checked},
                             {"violations", psd_bad}}},
                    {"independence", {{"seed", seed},
                                      {"trials", probe.size()},
                                      {"pass", pass},
                                      {"inconclusive", probe.size() - pass},
                                      {"detail", tjson}}},
                    {"flags", flags}};
    return out;
  }

  inline json to_json(BratteliStage const& s) {
    json p = json::array();
    for (auto const& m : s.minimal_projections) {
      p.push_back({{"name", m.name}, {"expression", m.expression}});
    }
    return {{"level", s.level},
            {"rank", s.rank},
            {"minimal_projections", p},
            {"verified", s.verified()}};
  }

  inline Report k0_report(AfVariant v, int levels) {
    auto const r      = k0_colimit_description(v, levels);
    json       stages = json::array();
    bool       ok     = true;
    for (auto const& s : r.stages) {
      stages.push_back(to_json(s));
      ok = ok && s.verified();
    }
    json inclusions = json::array();
    for (std::size_t n = 0; n < r.inclusions.size(); ++n) {
      inclusions.push_back({{"from", n},
                            {"to", n + 1},
                            {"matrix", r.inclusions[n]},
                            {"splitting_rows", splitting_rows(r.inclusions[n])}});
    }
    return {json{{"command", "k0"},
                 {"variant", to_string(v)},
                 {"levels", levels},
                 {"stages", stages},
                 {"inclusions", inclusions},
                 {"stable_generators", r.stable_generators},
                 {"splitting_classes", r.splitting_classes},
                 {"distinguished_class", r.distinguished_class},
                 {"description", r.description}},
            ok};
  }

  inline Report degeneration_json(ChainFamily const& c, int L, std::size_t budget) {
    auto const r     = degeneration_report(c, L, budget);
    json       steps = json::array();
    for (auto const& s : r.steps) {
      steps.push_back({{"claim", s.claim}, {"verified", s.verified}, {"detail", s.detail}});
    }
    return {json{{"command", "degeneration"},
                 {"family", c.family_name()},
                 {"truncation", L},
                 {"steps", steps},
                 {"verified", r.verified()},
                 {"conclusion", r.conclusion}},
            r.verified()};
  }

  template <Carrier C>
  Report check_report(C const& c, int L, std::size_t budget, std::uint64_t seed) {
    auto const results = run_invariants(c, L, budget, seed);
    json       list    = json::array();
    bool       ok      = true;
    for (auto const& r : results) {
      json e{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}};
      if (!r.detail.empty()) {
        e["detail"] = r.detail;
      }
      list.push_back(e);
      ok = ok && r.passed;
    }
    return {json{{"command", "check"},
                 {"family", c.family_name()},
                 {"truncation", L},
                 {"seed", seed},
                 {"invariants", list},
                 {"passed", ok}},
            ok};
  }

  //! One "path: value" line per scalar, in document order.
  inline void flatten(json const& j, std::string const& path, std::ostream& out) {
    if (j.is_object()) {
      if (j.empty()) {
        out << path << ": {}\n";
      }
      for (auto const& [k, v] : j.items()) {
        flatten(v, path.empty() ? k : path + "." + k, out);
      }
    } else if (j.is_array()) {
      if (j.empty()) {
        out << path << ": []\n";
      }
      for (std::size_t i = 0; i < j.size(); ++i) {
        flatten(j[i], path + "[" + std::to_string(i) + "]", out);
      }
    } else if (j.is_string()) {
      out << path << ": " << j.get<std::string>() << "\n";
    } else {
      out << path << ": " << j.dump() << "\n";
    }
  }

  inline std::string render(json const& j, bool as_text) {
    if (!as_text) {
      return j.dump(2) + "\n";
    }
    std::ostringstream s;
    flatten(j, "", s);
    return s.str();
  }

}  // namespace egroupoid

#endif  // EGROUPOID_REPORTS_HPP_
