#ifndef BOOLINV_TOOLS_CLI_HPP_
#define BOOLINV_TOOLS_CLI_HPP_

// Command-line front end. run() takes the arguments after the program name
// and returns the process exit code: 0 success, 1 invalid input, 2 refusal.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boolinv/booleanization.hpp"
#include "boolinv/catalog.hpp"
#include "boolinv/completion.hpp"
#include "boolinv/cuntz_toeplitz.hpp"
#include "boolinv/definite_lang.hpp"
#include "boolinv/io.hpp"
#include "boolinv/ring_rep.hpp"

namespace boolinv::cli {

  using io::json;

  struct Options {
    std::string              format = "text";
    std::string              builtin_name;
    std::string              in, in2;
    std::size_t              alphabet = 0;
    std::string              bounded, code, bounded2, code2;
    std::string              op;
    std::size_t              n = 2;
    std::vector<std::string> literals;
    std::uint64_t            seed    = 0;
    std::size_t              max_len = 3;
    bool                     direct  = false;
    std::string              target, theta;
  };

  inline std::string read_file(std::string const& path) {
    std::ifstream f(path);
    if (!f) {
      fail(error_kind::malformed_input, "cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  inline CayleyTable load_table(std::string const& name, std::string const& path) {
    if (!name.empty() && !path.empty()) {
      fail(error_kind::malformed_input, "give either --builtin or --in, not both");
    }
    if (!name.empty()) {
      return builtin(name);
    }
    if (path.empty()) {
      fail(error_kind::malformed_input, "a table is required (--builtin or --in)");
    }
    return io::table_from_json(io::parse_json(read_file(path)));
  }

  //! Comma-separated words, "e" for the empty word.
  inline WordSet word_list(std::string const& s, std::size_t n) {
    WordSet out;
    if (s.empty()) {
      return out;
    }
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
      out.insert(item == "e" ? Word{} : parse_word(item, n));
    }
    if (s.back() == ',') {
      fail(error_kind::malformed_input, "trailing comma in word list");
    }
    return out;
  }

  inline std::string render_word(Word const& w) {
    return w.empty() ? "e" : to_string(w);
  }

  inline std::string render_words(WordSet const& ws) {
    std::string out;
    for (auto const& w : ws) {
      out += (out.empty() ? "" : ",") + render_word(w);
    }
    return out;
  }

  inline std::string render_pairs(WordMap const& m) {
    std::string out;
    for (auto const& [k, v] : m) {
      out += (out.empty() ? "" : ", ") + render_word(k) + "->" + render_word(v);
    }
    return out;
  }

  inline std::string render(DefiniteLang const& L) {
    return "bounded: " + render_words(L.bounded) + "\ncode: " + render_words(L.code) + "\n";
  }

  inline std::string render(PermMap const& m) {
    return "finite: " + render_pairs(m.finite) + "\ntable: " + render_pairs(m.table) + "\n";
  }

  inline std::string render(RelationReport const& r) {
    auto b = [](bool x) { return x ? "true" : "false"; };
    return std::string("leq: ") + b(r.leq) + "\ngeq: " + b(r.geq) + "\ncompatible: "
           + b(r.compatible) + "\northogonal: " + b(r.orthogonal) + "\n";
  }

  inline std::string render_flags(json const& j) {
    std::string out;
    for (auto const& [k, v] : j.items()) {
      out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    return out;
  }

  class Runner {
  public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(std::vector<std::string> args) {
      CLI::App app{"Finite inverse semigroups, their Booleanizations, and the "
                   "Cuntz-Toeplitz monoid"};
      app.name("boolinv");
      app.require_subcommand(1, 1);
      build(app);
      try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
      } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out_, err_);
        return code == 0 ? 0 : 1;
      }
      try {
        action_();
        return status_;
      } catch (Error const& e) {
        err_ << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? 1 : 2;
      } catch (std::exception const& e) {
        err_ << "error: " << e.what() << "\n";
        return 2;
      }
    }

  private:
    bool json_out() const {
      return o_.format == "json";
    }

    void emit(json const& j, std::string const& text) {
      if (json_out()) {
        out_ << j.dump(2) << "\n";
      } else {
        out_ << text;
      }
    }

    void emit(json const& j) {
      emit(j, render_flags(j));
    }

    CLI::App* leaf(CLI::App* family, std::string const& name, std::string const& desc,
                   std::function<void()> f) {
      auto* sub = family->add_subcommand(name, desc);
      sub->add_option("--format", o_.format, "Output format")
          ->check(CLI::IsMember({"json", "text"}));
      sub->callback([this, f] { action_ = f; });
      return sub;
    }

    void table_opts(CLI::App* sub) {
      sub->add_option("--builtin", o_.builtin_name, "Built-in table name")
          ->check(CLI::IsMember(builtin_names()));
      sub->add_option("--in", o_.in, "Cayley table JSON file");
    }

    InverseSemigroup semigroup() const {
      return InverseSemigroup(load_table(o_.builtin_name, o_.in));
    }

    DefiniteLang language(std::string const& path, std::string const& bounded,
                          std::string const& code) const {
      if (!path.empty()) {
        return io::lang_from_json(io::parse_json(read_file(path)));
      }
      if (o_.alphabet == 0) {
        fail(error_kind::malformed_input, "--alphabet is required for inline languages");
      }
      return normalize(o_.alphabet, word_list(bounded, o_.alphabet), word_list(code, o_.alphabet));
    }

    PermMap perm_map(std::string const& path) const {
      if (path.empty()) {
        fail(error_kind::malformed_input, "a map file is required");
      }
      return io::perm_map_from_json(io::parse_json(read_file(path)));
    }

    void build(CLI::App& app) {
      build_semigroup(app.add_subcommand("semigroup", "Cayley-table computations"));
      build_lang(app.add_subcommand("lang", "Definite languages"));
      build_poly(app.add_subcommand("poly", "Polycyclic monoid arithmetic"));
      build_ct(app.add_subcommand("ct", "Permissible maps and the Cuntz quotient"));
      build_rep(app.add_subcommand("rep", "Ring representation checks"));
      for (auto* sub : app.get_subcommands({})) {
        sub->require_subcommand(1, 1);
      }
    }

    void build_semigroup(CLI::App* fam) {
      table_opts(leaf(fam, "verify", "Check the inverse semigroup axioms", [this] {
        auto t = load_table(o_.builtin_name, o_.in);
        auto r = verify_inverse_semigroup(t);
        std::string text = r.ok() ? "ok\n" : "";
        for (auto const& v : r.violations) {
          text += "violates " + v.axiom + ":";
          for (auto x : v.witness) {
            text += " " + t.label(x);
          }
          text += "\n";
        }
        emit(io::to_json(r, t), text);
        status_ = r.ok() ? 0 : 1;
      }));

      table_opts(leaf(fam, "classify", "Meet, distributive, Boolean, monoid", [this] {
        emit(io::to_json(classify(semigroup())));
      }));

      table_opts(leaf(fam, "complete", "Distributive completion D(S)", [this] {
        auto S = semigroup();
        auto D = completion_table(S);
        json ideals = json::array();
        std::string text = "size: " + std::to_string(D.dtable.size()) + "\n";
        for (auto const& I : D.ideals) {
          ideals.push_back(ideal_label(S, I));
          text += ideal_label(S, I) + "\n";
        }
        emit(json{{"size", D.dtable.size()},
                  {"dtable", io::to_json(D.dtable.table())},
                  {"delta", io::to_json(D.delta)},
                  {"ideals", ideals}},
             text);
      }));

      auto* b = leaf(fam, "booleanize", "Booleanization B(S)", [this] {
        auto S  = semigroup();
        auto FB = booleanize(S);
        auto const& B = FB.btable();
        json j{{"size", B.size()},
               {"btable", io::to_json(B.table())},
               {"beta", io::to_json(FB.beta)},
               {"bisections", io::bisections_to_json(FB.dist.B)}};
        std::string text = "size: " + std::to_string(B.size()) + "\n";
        if (o_.direct) {
          auto D = direct_booleanize(S, FB);
          j["direct_size"]      = D.B.table.size();
          j["direct_certified"] = D.certified;
          text += "direct route: " + std::to_string(D.B.table.size())
                  + (D.certified ? " (certified isomorphic)\n" : " (not certified)\n");
        }
        for (auto x : B.elements()) {
          text += B.label(x) + "\n";
        }
        emit(j, text);
      });
      table_opts(b);
      b->add_flag("--direct", o_.direct, "Also build the proper-filter route and certify it");

      table_opts(leaf(fam, "hull", "Boolean hull of the image of D(S) inside B(S)", [this] {
        auto S  = semigroup();
        auto FB = booleanize(S);
        auto h  = boolean_hull(FB.btable(), FB.dist.beta);
        emit(json{{"hull_size", h.elements.size()},
                  {"ambient_size", FB.btable().size()},
                  {"isomorphic", h.isomorphic},
                  {"equals_ambient", h.elements.size() == FB.btable().size()}});
      }));

      auto* f = leaf(fam, "factor", "Factor a homomorphism through B(S)", [this] {
        auto S = semigroup();
        InverseSemigroup T(builtin(o_.target));
        ElementMap theta;
        std::stringstream ss(o_.theta);
        std::string item;
        while (std::getline(ss, item, ',')) {
          theta.push_back(by_label(T, item));
        }
        if (theta.size() != S.size()) {
          fail(error_kind::malformed_input, "--theta needs one target label per element");
        }
        if (!is_homomorphism(S, T, theta)) {
          fail(error_kind::malformed_input, "--theta is not a homomorphism");
        }
        auto FB = booleanize(S);
        auto r  = factor_through(S, FB, theta, T);
        json gamma = json::array();
        for (auto g : r.gamma) {
          gamma.push_back(T.label(g));
        }
        emit(json{{"gamma", gamma},
                  {"is_morphism", r.is_morphism},
                  {"extends_theta", r.extends_theta},
                  {"unique", r.unique}});
      });
      table_opts(f);
      f->add_option("--target", o_.target, "Built-in Boolean target table")
          ->required()
          ->check(CLI::IsMember(builtin_names()));
      f->add_option("--theta", o_.theta, "Target labels of the source elements, comma separated")
          ->required();
    }

    void lang_inline_opts(CLI::App* sub) {
      sub->add_option("--in", o_.in, "Language JSON file");
      sub->add_option("--alphabet", o_.alphabet, "Alphabet size");
      sub->add_option("--bounded", o_.bounded, "Bounded words, comma separated (e = empty word)");
      sub->add_option("--code", o_.code, "Generators of the unbounded part, comma separated");
    }

    void build_lang(CLI::App* fam) {
      lang_inline_opts(leaf(fam, "normalize", "Normal form of X + YA*", [this] {
        auto L = language(o_.in, o_.bounded, o_.code);
        emit(io::to_json(L), render(L));
      }));

      auto* c = leaf(fam, "combine", "Boolean operations on languages", [this] {
        static std::map<std::string, lang_op> const ops{{"union", lang_op::union_},
                                                        {"intersect", lang_op::intersect},
                                                        {"difference", lang_op::difference},
                                                        {"complement", lang_op::complement}};
        auto op = ops.at(o_.op);
        auto L1 = language(o_.in, o_.bounded, o_.code);
        std::optional<DefiniteLang> L2;
        if (op != lang_op::complement) {
          L2 = language(o_.in2, o_.bounded2, o_.code2);
        }
        auto R = combine(op, L1, L2);
        emit(io::to_json(R), render(R));
      });
      lang_inline_opts(c);
      c->add_option("--op", o_.op, "union, intersect, difference or complement")
          ->required()
          ->check(CLI::IsMember({"union", "intersect", "difference", "complement"}));
      c->add_option("--in2", o_.in2, "Second language JSON file");
      c->add_option("--bounded2", o_.bounded2, "Second language bounded words");
      c->add_option("--code2", o_.code2, "Second language code");

      auto* e = leaf(fam, "essential", "Is YA* essential?", [this] {
        if (o_.alphabet == 0) {
          fail(error_kind::malformed_input, "--alphabet is required");
        }
        auto r = is_essential(word_list(o_.code, o_.alphabet), o_.alphabet);
        json comp = json::array();
        for (auto const& w : r.complement) {
          comp.push_back(to_string(w));
        }
        emit(json{{"essential", r.essential}, {"complement", comp}},
             std::string("essential: ") + (r.essential ? "true" : "false")
                 + (r.essential ? "\ncomplement: " + render_words(r.complement) : "") + "\n");
      });
      e->add_option("--alphabet", o_.alphabet, "Alphabet size")->required();
      e->add_option("--code", o_.code, "Prefix code, comma separated")->required();
    }

    void poly_opts(CLI::App* sub) {
      sub->add_option("--n", o_.n, "Number of generators");
      sub->add_option("elements", o_.literals, "Two literals y,x (e = empty word, 0 = zero)")
          ->expected(2)
          ->required();
    }

    void build_poly(CLI::App* fam) {
      poly_opts(leaf(fam, "mul", "Product of two elements", [this] {
        auto p = io::parse_poly(o_.literals.at(0), o_.n);
        auto q = io::parse_poly(o_.literals.at(1), o_.n);
        auto r = io::to_string(poly_product(o_.n, p, q));
        emit(json{{"result", r}}, r + "\n");
      }));
      poly_opts(leaf(fam, "relate", "Order, compatibility and orthogonality", [this] {
        auto p = io::parse_poly(o_.literals.at(0), o_.n);
        auto q = io::parse_poly(o_.literals.at(1), o_.n);
        auto r = poly_relate(o_.n, p, q);
        emit(io::to_json(r), render(r));
      }));
    }

    void build_ct(CLI::App* fam) {
      auto binary = [&](std::string const& name, std::string const& desc,
                        std::function<PermMap(PermMap const&, PermMap const&)> f) {
        auto* sub = leaf(fam, name, desc, [this, f] {
          auto m = f(perm_map(o_.in), perm_map(o_.in2));
          emit(io::to_json(m), render(m));
        });
        sub->add_option("--in", o_.in, "First map (JSON)")->required();
        sub->add_option("--in2", o_.in2, "Second map (JSON)")->required();
      };
      binary("compose", "Product, applying the second map first", pm_compose);
      binary("meet", "Greatest lower bound", pm_meet);
      binary("join", "Join of compatible maps", pm_join);
      binary("subtract", "Relative complement a \\ b", pm_subtract);

      leaf(fam, "fix", "Fixed-point language", [this] {
        auto L = pm_fix(perm_map(o_.in));
        emit(io::to_json(L), render(L));
      })->add_option("--in", o_.in, "Map (JSON)")->required();

      leaf(fam, "quotient", "Image in the Cuntz inverse monoid", [this] {
        auto c = quotient_theta(perm_map(o_.in));
        emit(io::to_json(c), "table: " + render_pairs(c.table) + "\n");
      })->add_option("--in", o_.in, "Map (JSON)")->required();

      auto* cg = leaf(fam, "congruent", "Equal modulo finite-domain maps", [this] {
        auto c = congruence(perm_map(o_.in), perm_map(o_.in2));
        if (!c.agree()) {
          throw std::logic_error("congruence tests disagree");
        }
        emit(json{{"congruent", c.by_quotient}},
             std::string("congruent: ") + (c.by_quotient ? "true" : "false") + "\n");
      });
      cg->add_option("--in", o_.in, "First map (JSON)")->required();
      cg->add_option("--in2", o_.in2, "Second map (JSON)")->required();

      auto* rnd = leaf(fam, "random", "A seeded random canonical map", [this] {
        std::mt19937_64 rng(o_.seed);
        auto            m = random_perm_map(o_.n, o_.max_len, rng);
        emit(io::to_json(m), render(m));
      });
      rnd->add_option("--seed", o_.seed, "Random seed")->required();
      rnd->add_option("--n", o_.n, "Alphabet size");
      rnd->add_option("--max-len", o_.max_len, "Longest representation word");
    }

    void build_rep(CLI::App* fam) {
      table_opts(leaf(fam, "russia-check", "Compare B(S) with S'' in the regular representation",
                      [this] {
                        auto r = russia_check(semigroup());
                        auto j = io::to_json(r);
                        std::string text = render_flags(j);
                        if (!r.first_mismatch.empty()) {
                          text += "first mismatch: " + r.first_mismatch + "\n";
                        }
                        emit(j, text);
                        status_ = r.isomorphic ? 0 : 2;
                      }));
    }

    std::ostream&         out_;
    std::ostream&         err_;
    Options               o_;
    std::function<void()> action_;
    int                   status_ = 0;
  };

  inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr) {
    Runner r(out, err);
    return r.run(std::move(args));
  }

}  // namespace boolinv::cli

#endif  // BOOLINV_TOOLS_CLI_HPP_
