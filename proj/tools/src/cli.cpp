//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotsemi/diagrams.hpp"
#include "knotsemi/errors.hpp"
#include "knotsemi/growth.hpp"
#include "knotsemi/io.hpp"
#include "knotsemi/oracle.hpp"
#include "knotsemi/presentation.hpp"

namespace knotsemi::cli {

  namespace {
    using nlohmann::json;

    struct Options {
      std::string family;
      std::string pd;
      std::string counts;
      std::string theorem;
      std::string conjecture;
      std::string params;
      std::string move;
      std::string site;
      std::string direction = "insert";
      std::string format    = "csv";
      std::size_t max_len   = 4;
      std::size_t pad       = default_padding;
      std::size_t terms     = 10;
      std::optional<std::uint64_t> budget;
      bool          rational = false;
      GrowthOptions growth;
    };

    std::uint64_t parse_uint(std::string_view s, std::string_view what) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParameterError(std::string(what) + ": expected a nonnegative integer, found '"
                             + std::string(s) + "'");
      }
      return v;
    }

    std::vector<std::uint32_t> parse_params(std::string_view text, std::size_t arity) {
      std::vector<std::uint32_t> out;
      while (true) {
        auto comma = text.find(',');
        auto v     = parse_uint(text.substr(0, comma), "--params");
        if (v == 0 || v > 100'000) {
          throw ParameterError("--params entries must lie in 1..100000");
        }
        out.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string_view::npos) {
          break;
        }
        text.remove_prefix(comma + 1);
      }
      if (out.size() != arity) {
        throw ParameterError("--params expects " + std::to_string(arity) + " value"
                             + (arity == 1 ? "" : "s"));
      }
      return out;
    }

    std::uint64_t resolve_budget(Options const& o) {
      if (o.budget) {
        return *o.budget;
      }
      if (char const* env = std::getenv("KNOTGROWTH_BUDGET")) {
        auto b = parse_uint(env, "KNOTGROWTH_BUDGET");
        if (b == 0) {
          throw ParameterError("KNOTGROWTH_BUDGET must be positive");
        }
        return b;
      }
      return default_word_budget;
    }

    Diagram load_diagram(Options const& o) {
      if (!o.pd.empty()) {
        return read_pd_file(o.pd);
      }
      if (o.family.empty()) {
        throw ParameterError("one of --family or --pd is required");
      }
      return build_family(parse_family_spec(o.family));
    }

    struct CountSource {
      std::vector<std::uint64_t> counts;
      std::string                source;
    };

    // Counts for degrees 1..degrees, from a file, a model semigroup or the
    // oracle, in that order of preference.
    CountSource load_counts(Options const& o, std::size_t degrees, std::uint64_t budget) {
      if (!o.counts.empty()) {
        auto c = read_counts_file(o.counts);
        if (c.size() < degrees) {
          throw ParameterError("the counts file has " + std::to_string(c.size())
                               + " degrees, " + std::to_string(degrees) + " requested");
        }
        c.resize(degrees);
        return {c, "counts:" + o.counts};
      }
      if (o.family.empty()) {
        throw ParameterError("one of --family or --counts is required");
      }
      auto spec = parse_family_spec(o.family);
      if (auto s = model_semigroup(spec)) {
        return {model_counts(*s, degrees), "model " + s->to_string()};
      }
      auto d = build_family(spec);
      auto p = enumerate_classes(presentation_from_diagram(d), degrees, o.pad, budget);
      return {p.counts(), "oracle L=" + std::to_string(degrees) + " P=" + std::to_string(o.pad)};
    }

    void print(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_present(Options const& o, std::ostream& out) {
      print(out, to_json(presentation_from_diagram(load_diagram(o))));
      return ok;
    }

    int cmd_classes(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      auto d      = load_diagram(o);
      auto p      = enumerate_classes(presentation_from_diagram(d), o.max_len, o.pad, budget);
      if (o.format == "json") {
        print(out,
              {{"schema_version", schema_version},
               {"subject", d.provenance()},
               {"params", {{"max_len", o.max_len}, {"pad", o.pad}}},
               {"counts", p.counts()},
               {"sweeps", p.sweeps()}});
      } else {
        write_csv(out, std::span<std::uint64_t const>(p.counts()), "count", 1);
      }
      return ok;
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      std::optional<TheoremInstance> t;
      if (o.theorem == "torus") {
        t = torus_theorem(parse_params(o.params, 1)[0]);
      } else if (o.theorem == "torus-link") {
        t = torus_link_theorem(parse_params(o.params, 1)[0]);
      } else if (o.theorem == "twist") {
        t = twist_theorem(parse_params(o.params, 1)[0]);
      } else {
        auto p = parse_params(o.params, 2);
        t      = dtw_theorem(p[0], p[1]);
      }
      auto report = verify_theorem(*t, o.max_len, o.pad, budget);
      print(out, to_json(report));
      return report.all_verified() ? ok : not_verified;
    }

    int cmd_probe(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      auto p      = parse_params(o.params, 3);
      print(out, to_json(conjecture_probe(p[0], p[1], p[2], o.max_len, o.pad, budget)));
      return ok;
    }

    int cmd_growth(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      auto src    = load_counts(o, o.terms, budget);
      auto series = growth_from_counts(src.counts, o.growth);
      write_csv(out, std::span<std::int64_t const>(series.coefficients), "coefficient");
      if (o.rational) {
        print(out,
              {{"schema_version", schema_version},
               {"source", src.source},
               {"rational", series.rational ? to_json(*series.rational) : json(nullptr)},
               {"notes", series.notes}});
      }
      return ok;
    }

    int cmd_skew(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      auto src    = load_counts(o, o.terms, budget);
      auto skew   = skew_growth(growth_from_counts(src.counts, o.growth), o.terms);
      write_csv(out, std::span<std::int64_t const>(skew.coefficients), "coefficient");
      return ok;
    }

    int cmd_gkdim(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      auto src    = load_counts(o, o.max_len, budget);
      auto e      = gk_dimension(growth_from_counts(src.counts, o.growth), o.growth);
      auto j      = to_json(e);
      j["source"] = src.source;
      print(out, j);
      return ok;
    }

    int cmd_rmove(Options const& o, std::ostream& out) {
      auto budget = resolve_budget(o);
      auto before = load_diagram(o);
      auto move   = parse_move(o.move, o.site);
      if (o.direction == "remove") {
        move.direction = ReidemeisterMove::Direction::remove;
      }
      auto after = apply_reidemeister(before, move);
      auto check = reidemeister_dimension_check(before, after, o.max_len, o.pad, budget);
      auto j     = to_json(check);
      j["move"]  = to_string(move);
      print(out, j);
      return ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    std::vector<char const*> argv{"knotgrowth"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Knot semigroups, alternating sum semigroups and growth", "knotgrowth"};
    app.require_subcommand(1, 1);

    auto family_input = [&](CLI::App* sub, bool with_counts) {
      auto* f = sub->add_option("--family", o.family,
                                "trivial | hopf | torus2:n | twist:n | dtw:n,l | "
                                "conway:a1,... | cmln:m,l,n");
      auto* alt = with_counts ? sub->add_option("--counts", o.counts, "degree,count CSV file")
                                    ->check(CLI::ExistingFile)
                              : sub->add_option("--pd", o.pd, "planar diagram JSON file")
                                    ->check(CLI::ExistingFile);
      f->excludes(alt);
      alt->excludes(f);
    };
    auto oracle_options = [&](CLI::App* sub) {
      sub->add_option("--max-len", o.max_len, "reporting length L")
          ->check(CLI::Range(1, 64));
      sub->add_option("--pad", o.pad, "padding P")->check(CLI::Range(0, 16));
      sub->add_option("--budget", o.budget, "word budget (default 5e6 or KNOTGROWTH_BUDGET)")
          ->check(CLI::PositiveNumber);
    };
    auto growth_options = [&](CLI::App* sub) {
      sub->add_option("--window", o.growth.window, "trailing agreement window")
          ->check(CLI::Range(2, 16));
      sub->add_option("--ratio-window", o.growth.ratio_window, "exponential ratio window")
          ->check(CLI::Range(1, 16));
      sub->add_option("--delta", o.growth.delta, "exponential ratio margin")
          ->check(CLI::Range(0.0, 10.0));
    };

    auto* present = app.add_subcommand("present", "print the knot semigroup presentation");
    family_input(present, false);

    auto* classes = app.add_subcommand("classes", "count congruence classes per degree");
    family_input(classes, false);
    oracle_options(classes);
    classes->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "verify an isomorphism theorem instance");
    verify->add_option("--theorem", o.theorem)
        ->required()
        ->check(CLI::IsMember({"torus", "torus-link", "twist", "dtw"}));
    verify->add_option("--params", o.params, "n, or n,l for dtw")->required();
    oracle_options(verify);

    auto* probe = app.add_subcommand("probe", "probe the C(m,l,n) conjecture");
    probe->add_option("--conjecture", o.conjecture)->required()->check(CLI::IsMember({"cmln"}));
    probe->add_option("--params", o.params, "m,l,n")->required();
    oracle_options(probe);

    auto* growth = app.add_subcommand("growth", "growth series");
    family_input(growth, true);
    growth->add_option("--terms", o.terms, "number of degrees")->check(CLI::Range(1, 200));
    growth->add_flag("--rational", o.rational, "also print the rational form");
    growth->add_option("--pad", o.pad, "oracle padding P")->check(CLI::Range(0, 16));
    growth->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
    growth_options(growth);

    auto* skew = app.add_subcommand("skew", "skew growth series");
    family_input(skew, true);
    skew->add_option("--terms", o.terms, "series order")->check(CLI::Range(1, 200));
    skew->add_option("--pad", o.pad, "oracle padding P")->check(CLI::Range(0, 16));
    skew->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
    growth_options(skew);

    auto* gkdim = app.add_subcommand("gkdim", "Gelfand-Kirillov dimension estimate");
    family_input(gkdim, true);
    oracle_options(gkdim);
    growth_options(gkdim);

    auto* rmove = app.add_subcommand("rmove", "compare growth across a Reidemeister move");
    family_input(rmove, false);
    rmove->add_option("--move", o.move)->required()->check(CLI::IsMember({"r1", "r2", "r3"}));
    rmove->add_option("--site", o.site, "arc=I | crossing=C | over=Y,under=X | crossings=...")
        ->required();
    rmove->add_option("--direction", o.direction)->check(CLI::IsMember({"insert", "remove"}));
    oracle_options(rmove);

    o.max_len = 4;
    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : argument_error;
    }
    if (gkdim->parsed() && gkdim->count("--max-len") == 0) {
      o.max_len = 10;
    }

    try {
      // Report into a buffer so that nothing reaches `out` on failure.
      std::ostringstream buffer;
      int                code = ok;
      if (present->parsed()) {
        code = cmd_present(o, buffer);
      } else if (classes->parsed()) {
        code = cmd_classes(o, buffer);
      } else if (verify->parsed()) {
        code = cmd_verify(o, buffer);
      } else if (probe->parsed()) {
        code = cmd_probe(o, buffer);
      } else if (growth->parsed()) {
        code = cmd_growth(o, buffer);
      } else if (skew->parsed()) {
        code = cmd_skew(o, buffer);
      } else if (gkdim->parsed()) {
        code = cmd_gkdim(o, buffer);
      } else if (rmove->parsed()) {
        code = cmd_rmove(o, buffer);
      }
      out << buffer.str();
      return code;
    } catch (ResourceError const& e) {
      err << "knotgrowth: budget exceeded: " << e.what() << '\n';
      return budget_error;
    } catch (InternalError const& e) {
      err << "knotgrowth: internal error: " << e.what() << '\n';
      return internal_error;
    } catch (Error const& e) {
      err << "knotgrowth: " << e.what() << '\n';
      return argument_error;
    } catch (std::exception const& e) {
      err << "knotgrowth: internal error: " << e.what() << '\n';
      return internal_error;
    }
  }

}  // namespace knotsemi::cli
