#ifndef BOOLINV_IO_HPP_
#define BOOLINV_IO_HPP_

// JSON file formats and the short text literals used on the command line.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolinv/booleanization.hpp"
#include "boolinv/cuntz_toeplitz.hpp"
#include "boolinv/definite_lang.hpp"
#include "boolinv/error.hpp"
#include "boolinv/ring_rep.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv::io {

  using json = nlohmann::ordered_json;

  inline json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      fail(error_kind::malformed_input, std::string("invalid JSON: ") + e.what());
    }
  }

  template <class F>
  auto guarded(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (json::exception const& e) {
      fail(error_kind::malformed_input, std::string("unexpected JSON shape: ") + e.what());
    }
  }

  // -- Cayley tables -----------------------------------------------------------

  inline json to_json(CayleyTable const& t) {
    json rows = json::array();
    for (auto const& row : t.rows()) {
      rows.push_back(row);
    }
    json out;
    out["name"]     = t.name();
    out["elements"] = t.labels();
    out["zero"]     = index(t.zero());
    out["identity"] = t.identity() ? json(index(*t.identity())) : json(nullptr);
    out["table"]    = rows;
    return out;
  }

  inline CayleyTable table_from_json(json const& j) {
    return guarded([&] {
      std::optional<std::size_t> identity;
      if (j.contains("identity") && !j.at("identity").is_null()) {
        identity = j.at("identity").get<std::size_t>();
      }
      return CayleyTable(j.value("name", std::string("table")),
                         j.at("elements").get<std::vector<std::string>>(),
                         j.at("zero").get<std::size_t>(), identity,
                         j.at("table").get<std::vector<std::vector<std::size_t>>>());
    });
  }

  inline json to_json(ElementMap const& m) {
    json arr = json::array();
    for (auto x : m) {
      arr.push_back(index(x));
    }
    return arr;
  }

  inline json delta_to_json(ElementMap const& delta) {
    return json{{"delta", to_json(delta)}};
  }

  inline ElementMap element_map_from_json(json const& j, std::size_t target_size) {
    return guarded([&] {
      ElementMap out;
      for (auto const& x : j) {
        auto i = x.get<std::size_t>();
        if (i >= target_size) {
          fail(error_kind::malformed_input, "element index out of range");
        }
        out.push_back(element(i));
      }
      return out;
    });
  }

  // -- words and languages -----------------------------------------------------

  inline json words_to_json(WordSet const& ws) {
    json arr = json::array();
    for (auto const& w : ws) {
      arr.push_back(to_string(w));
    }
    return arr;
  }

  inline WordSet words_from_json(json const& j, std::size_t n) {
    return guarded([&] {
      WordSet out;
      for (auto const& w : j) {
        out.insert(parse_word(w.get<std::string>(), n));
      }
      return out;
    });
  }

  inline json to_json(DefiniteLang const& L) {
    return json{{"alphabet", L.alphabet},
                {"bounded", words_to_json(L.bounded)},
                {"code", words_to_json(L.code)}};
  }

  //! Accepts raw input and returns the normal form.
  inline DefiniteLang lang_from_json(json const& j) {
    return guarded([&] {
      auto n = j.at("alphabet").get<std::size_t>();
      if (n == 0) {
        fail(error_kind::malformed_input, "alphabet must be non-empty");
      }
      return normalize(n, words_from_json(j.at("bounded"), n), words_from_json(j.at("code"), n));
    });
  }

  // -- permissible maps and Cuntz elements ---------------------------------------

  inline json pairs_to_json(WordMap const& m) {
    json arr = json::array();
    for (auto const& [k, v] : m) {
      arr.push_back(json::array({to_string(k), to_string(v)}));
    }
    return arr;
  }

  inline WordPairs pairs_from_json(json const& j, std::size_t n) {
    return guarded([&] {
      WordPairs out;
      for (auto const& p : j) {
        if (!p.is_array() || p.size() != 2) {
          fail(error_kind::malformed_input, "expected a pair of words");
        }
        out.emplace_back(parse_word(p[0].get<std::string>(), n),
                         parse_word(p[1].get<std::string>(), n));
      }
      return out;
    });
  }

  inline json to_json(PermMap const& m) {
    return json{{"alphabet", m.alphabet},
                {"finite", pairs_to_json(m.finite)},
                {"table", pairs_to_json(m.table)}};
  }

  inline PermMap perm_map_from_json(json const& j) {
    return guarded([&] {
      auto n = j.at("alphabet").get<std::size_t>();
      return pm_canonicalize(n, pairs_from_json(j.value("finite", json::array()), n),
                             pairs_from_json(j.value("table", json::array()), n));
    });
  }

  inline json to_json(CuntzElement const& c) {
    return json{{"alphabet", c.alphabet}, {"table", pairs_to_json(c.table)}};
  }

  // -- polycyclic literals -----------------------------------------------------

  //! "y,x" with "e" for the empty word; "0" alone is zero.
  inline PolyElement parse_poly(std::string const& s, std::size_t n) {
    check_polycyclic_alphabet(n);
    if (s == "0") {
      return PolyElement::zero_element();
    }
    auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
      fail(error_kind::malformed_input, "'" + s + "' is not of the form y,x");
    }
    auto word = [&](std::string part) {
      if (part.empty()) {
        fail(error_kind::malformed_input, "empty component in '" + s + "' (use e)");
      }
      return part == "e" ? Word{} : parse_word(part, n);
    };
    return PolyElement::pair(word(s.substr(0, comma)), word(s.substr(comma + 1)));
  }

  inline std::string to_string(PolyElement const& p) {
    if (p.zero) {
      return "0";
    }
    auto word = [](Word const& w) { return w.empty() ? std::string("e") : boolinv::to_string(w); };
    return word(p.y) + "," + word(p.x);
  }

  // -- reports -----------------------------------------------------------------

  inline json to_json(RelationReport const& r) {
    return json{{"leq", r.leq}, {"geq", r.geq}, {"compatible", r.compatible},
                {"orthogonal", r.orthogonal}};
  }

  inline json to_json(ValidationReport const& r, CayleyTable const& t) {
    json vs = json::array();
    for (auto const& v : r.violations) {
      json w = json::array();
      for (auto x : v.witness) {
        w.push_back(t.label(x));
      }
      vs.push_back(json{{"axiom", v.axiom}, {"witness", w}});
    }
    return json{{"ok", r.ok()}, {"violations", vs}};
  }

  inline json to_json(Classification const& c) {
    return json{{"meet_semigroup", c.is_meet_semigroup},
                {"distributive", c.is_distributive},
                {"boolean", c.is_boolean},
                {"monoid", c.is_monoid}};
  }

  inline json bisections_to_json(BisectionTable const& B) {
    json arr = json::array();
    for (auto const& X : B.bisections) {
      arr.push_back(X.arrows());
    }
    return arr;
  }

  inline json to_json(RussiaReport const& r) {
    return json{{"s_double_prime_size", r.s_double_prime_size},
                {"booleanization_size", r.booleanization_size},
                {"isomorphic", r.isomorphic}};
  }

}  // namespace boolinv::io

#endif  // BOOLINV_IO_HPP_
