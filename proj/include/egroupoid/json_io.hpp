#ifndef EGROUPOID_JSON_IO_HPP_
#define EGROUPOID_JSON_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "carrier.hpp"
#include "continuity.hpp"
#include "errors.hpp"
#include "finite_semigroup.hpp"
#include "groupoid.hpp"
#include "l2_module.hpp"
#include "partial_bijection.hpp"
#include "rational.hpp"

namespace egroupoid {

  using json = nlohmann::ordered_json;

  ////////////////////////////////////////////////////////////////////////
  // Characters, elements, germs, vectors
  ////////////////////////////////////////////////////////////////////////

  template <Carrier C>
  json to_json(C const& c, Character<element_t<C>> const& x) {
    if (x.is_principal()) {
      return {{"kind", "principal"}, {"e", c.name(x.e)}};
    }
    return {{"kind", "limit"}, {"code", x.code}};
  }

  template <Carrier C>
  element_t<C> element_from_string(C const& c, std::string const& s) {
    auto g = c.parse(s);
    if (!g) {
      throw input_error("unknown element '" + s + "' in " + c.family_name());
    }
    return *g;
  }

  template <Carrier C>
  element_t<C> idempotent_from_string(C const& c, std::string const& s) {
    auto e = element_from_string(c, s);
    if (!c.is_idempotent(e)) {
      throw input_error("'" + s + "' is not an idempotent");
    }
    return e;
  }

  template <Carrier C>
  Character<element_t<C>> character_from_json(C const& c, json const& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw input_error("a character needs a string \"kind\"");
    }
    auto const kind = j["kind"].get<std::string>();
    Character<element_t<C>> x;
    if (kind == "principal") {
      if (!j.contains("e") || !j["e"].is_string()) {
        throw input_error("a principal character needs a string \"e\"");
      }
      x = Character<element_t<C>>::principal(idempotent_from_string(c, j["e"].get<std::string>()));
    } else if (kind == "limit") {
      if (!j.contains("code") || !j["code"].is_string()) {
        throw input_error("a limit character needs a string \"code\"");
      }
      auto code = j["code"].get<std::string>();
      if (!c.valid_limit_code(code)) {
        throw input_error("unknown limit code '" + code + "'");
      }
      x = Character<element_t<C>>::limit(std::move(code));
    } else {
      throw input_error("unknown character kind '" + kind + "'");
    }
    if (!in_spectrum(c, x)) {
      throw input_error("the character is not a point of the spectrum");
    }
    return x;
  }

  //! Short form for the command line: an idempotent name for a principal
  //! character, "limit:<code>" for a limit character, or a JSON object.
  template <Carrier C>
  Character<element_t<C>> character_from_string(C const& c, std::string const& s) {
    if (!s.empty() && s.front() == '{') {
      json j;
      try {
        j = json::parse(s);
      } catch (json::parse_error const& e) {
        throw input_error(std::string("bad character JSON: ") + e.what());
      }
      return character_from_json(c, j);
    }
    if (s.rfind("limit:", 0) == 0) {
      return character_from_json(c, json{{"kind", "limit"}, {"code", s.substr(6)}});
    }
    return character_from_json(c, json{{"kind", "principal"}, {"e", s}});
  }

  template <Carrier C>
  json to_json(C const& c, GermRep<element_t<C>> const& a) {
    return {{"g", c.name(a.g)}, {"x", to_json(c, a.x)}};
  }

  template <Carrier C>
  json to_json(C const& c, BasicOpen<element_t<C>> const& U) {
    json neg = json::array();
    for (auto const& f : U.negatives) {
      neg.push_back(c.name(f));
    }
    return {{"positive", c.name(U.positive)}, {"negatives", neg}};
  }

  template <Carrier C>
  json names(C const& c, std::vector<element_t<C>> const& v) {
    json out = json::array();
    for (auto const& g : v) {
      out.push_back(c.name(g));
    }
    return out;
  }

  template <Carrier C>
  json to_json(C const& c, FormalSum<element_t<C>> const& v) {
    json terms = json::array();
    for (auto const& [g, k] : v.terms) {
      terms.push_back({{"coef", k.str()}, {"g", c.name(g)}});
    }
    return {{"terms", terms}};
  }

  template <Carrier C>
  FormalSum<element_t<C>> vector_from_json(C const& c, json const& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
      throw input_error("a vector needs a \"terms\" array");
    }
    FormalSum<element_t<C>> out;
    for (auto const& t : j["terms"]) {
      if (!t.contains("coef") || !t["coef"].is_string() || !t.contains("g")
          || !t["g"].is_string()) {
        throw input_error("a term needs string \"coef\" and \"g\"");
      }
      out.add(element_from_string(c, t["g"].get<std::string>()),
              parse_qcomplex(t["coef"].get<std::string>()));
    }
    return out;
  }

  template <Carrier C>
  json to_json(C const& c, EpsilonFunction<element_t<C>> const& f) {
    json terms = json::array();
    for (auto const& [e, r] : f.terms) {
      terms.push_back({{"coef", to_string(r)}, {"e", c.name(e)}});
    }
    return {{"terms", terms}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  template <Carrier C>
  json to_json(C const& c, element_t<C> const& g, ContinuityVerdict<element_t<C>> const& v) {
    json out{{"element", c.name(g)}, {"verdict", to_string(v.kind)}};
    if (v.kind == Verdict::continuous) {
      out["certificate"] = names(c, v.certificate);
    }
    if (v.witness) {
      out["witness"] = to_json(c, *v.witness);
    }
    out["bound"]      = v.bound;
    out["stabilized"] = v.stabilized;
    if (v.neighborhoods_checked > 0) {
      out["neighborhoods_checked"] = v.neighborhoods_checked;
    }
    if (!v.note.empty()) {
      out["note"] = v.note;
    }
    return out;
  }

  template <Carrier C>
  json to_json(C const& c, SeparationResult<element_t<C>> const& r) {
    json out{{"result", to_string(r.kind)}};
    if (!r.method.empty()) {
      out["method"] = r.method;
    }
    if (!r.certificate.empty()) {
      out["certificate"]         = names(c, r.certificate);
      out["characters_verified"] = r.characters_verified;
    }
    if (r.splitting_idempotent) {
      out["splitting_idempotent"] = c.name(*r.splitting_idempotent);
    }
    if (r.pairs_checked > 0) {
      out["neighborhood_pairs_checked"] = r.pairs_checked;
      json samples                      = json::array();
      for (auto const& [U, germ] : r.common_germs) {
        samples.push_back({{"open", to_json(c, U)}, {"common_germ", to_json(c, germ)}});
      }
      out["common_germs"] = samples;
    }
    if (!r.note.empty()) {
      out["note"] = r.note;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Input documents
  ////////////////////////////////////////////////////////////////////////

  struct FiniteInput {
    std::uint32_t                 degree = 0;
    std::vector<PartialBijection> generators;
    std::size_t                   cap = 100000;
  };

  struct FamilyInput {
    FamilySpec spec;
    bool       has_truncation = false;
  };

  using InputDocument = std::variant<FiniteInput, FamilyInput>;

  inline InputDocument parse_input(json const& j) {
    if (!j.is_object()) {
      throw input_error("input must be a JSON object");
    }
    try {
      if (j.contains("family")) {
        FamilyInput in;
        auto        name = j.at("family").get<std::string>();
        auto        kind = parse_family(name);
        if (!kind) {
          throw input_error("unknown family '" + name + "'");
        }
        in.spec.family = *kind;
        if (j.contains("params")) {
          auto const& p = j.at("params");
          if (!p.is_object()) {
            throw input_error("\"params\" must be an object");
          }
          in.spec.alphabet  = p.value("alphabet", 2u);
          in.spec.oracle    = p.value("oracle", true);
          in.spec.kill_zero = p.value("kill_zero", false);
        }
        if (j.contains("truncation")) {
          in.spec.truncation = j.at("truncation").get<int>();
          in.has_truncation  = true;
          if (in.spec.truncation < 0) {
            throw input_error("truncation must be >= 0");
          }
        }
        if (in.spec.family == FamilyKind::polycyclic
            && (in.spec.alphabet < 2 || in.spec.alphabet > 9)) {
          throw input_error("polycyclic alphabet must be in 2..9");
        }
        return in;
      }
      if (j.contains("degree")) {
        FiniteInput in;
        in.degree = j.at("degree").get<std::uint32_t>();
        in.cap    = j.value("cap", std::size_t{100000});
        if (!j.contains("generators") || !j["generators"].is_array()) {
          throw input_error("\"generators\" must be an array");
        }
        for (auto const& g : j["generators"]) {
          std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
          for (auto const& p : g.at("pairs")) {
            if (!p.is_array() || p.size() != 2) {
              throw input_error("each pair must be [source, target]");
            }
            pairs.emplace_back(p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>());
          }
          in.generators.emplace_back(in.degree, std::move(pairs));
        }
        return in;
      }
    } catch (json::exception const& e) {
      throw input_error(std::string("malformed input: ") + e.what());
    }
    throw input_error("input needs either \"family\" or \"degree\"");
  }

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw input_error("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
  }

  inline AnyCarrier build_carrier(InputDocument const& doc, bool kill_zero) {
    if (auto const* f = std::get_if<FiniteInput>(&doc)) {
      auto s = generate_closure(f->generators, f->cap);
      s.set_kill_zero(kill_zero);
      return s;
    }
    auto spec = std::get<FamilyInput>(doc).spec;
    spec.kill_zero = spec.kill_zero || kill_zero;
    return make_carrier(spec);
  }

}  // namespace egroupoid

#endif  // EGROUPOID_JSON_IO_HPP_
