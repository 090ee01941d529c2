//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "knotsemi/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "knotsemi/errors.hpp"
#include "knotsemi/io.hpp"
#include "strands.hpp"

namespace knotsemi {

  Crossing::Crossing(ArcId over_arc, ArcId under1, ArcId under2)
      : over(over_arc), under{std::min(under1, under2), std::max(under1, under2)} {}

  ////////////////////////////////////////////////////////////////////////
  // Family specs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::uint32_t> parse_uint_list(std::string_view text,
                                               std::string_view what) {
      std::vector<std::uint32_t> result;
      while (true) {
        auto          comma = text.find(',');
        auto          item  = text.substr(0, comma);
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
          throw ParameterError("invalid " + std::string(what)
                               + " parameter list: '" + std::string(text) + "'");
        }
        result.push_back(value);
        if (comma == std::string_view::npos) {
          break;
        }
        text.remove_prefix(comma + 1);
      }
      return result;
    }

    std::vector<std::uint32_t> expect_count(std::vector<std::uint32_t> v,
                                            std::size_t                n,
                                            std::string_view           what) {
      if (v.size() != n) {
        throw ParameterError(std::string(what) + " expects "
                             + std::to_string(n) + " parameter(s)");
      }
      return v;
    }

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    std::string join(std::vector<std::uint32_t> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v[i]);
      }
      return out;
    }
  }  // namespace

  FamilySpec parse_family_spec(std::string_view text) {
    auto        colon = text.find(':');
    std::string name(text.substr(0, colon));
    std::string_view args
        = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    bool has_args = colon != std::string_view::npos;

    FamilySpec spec;
    if (name == "trivial" && !has_args) {
      spec = family::Trivial{};
    } else if (name == "hopf" && !has_args) {
      spec = family::Hopf{};
    } else if (name == "torus2" && has_args) {
      spec = family::Torus2{expect_count(parse_uint_list(args, name), 1, name)[0]};
    } else if (name == "twist" && has_args) {
      spec = family::Twist{expect_count(parse_uint_list(args, name), 1, name)[0]};
    } else if (name == "dtw" && has_args) {
      auto v = expect_count(parse_uint_list(args, name), 2, name);
      spec   = family::DoubleTwist{v[0], v[1]};
    } else if (name == "conway" && has_args) {
      spec = family::Conway{parse_uint_list(args, name)};
    } else if (name == "cmln" && has_args) {
      auto v = expect_count(parse_uint_list(args, name), 3, name);
      spec   = family::ConwayMLN{v[0], v[1], v[2]};
    } else if (name == "pd" && has_args && !args.empty()) {
      spec = family::CustomPD{std::string(args)};
    } else {
      throw ParameterError("unknown family spec '" + std::string(text)
                           + "' (expected trivial | hopf | torus2:n | twist:n | "
                             "dtw:n,l | conway:a1,a2,... | cmln:m,l,n)");
    }
    validate(spec);
    return spec;
  }

  std::string to_string(FamilySpec const& spec) {
    return std::visit(
        overloaded{
            [](family::Trivial const&) -> std::string { return "trivial"; },
            [](family::Hopf const&) -> std::string { return "hopf"; },
            [](family::Torus2 const& f) { return "torus2:" + std::to_string(f.n); },
            [](family::Twist const& f) { return "twist:" + std::to_string(f.n); },
            [](family::DoubleTwist const& f) {
              return "dtw:" + std::to_string(f.n) + "," + std::to_string(f.l);
            },
            [](family::Conway const& f) { return "conway:" + join(f.twists); },
            [](family::ConwayMLN const& f) {
              return "cmln:" + join({f.m, f.l, f.n});
            },
            [](family::CustomPD const& f) { return "pd:" + f.path; }},
        spec);
  }

  void validate(FamilySpec const& spec) {
    auto positive = [](std::initializer_list<std::uint32_t> values) {
      for (auto v : values) {
        if (v == 0) {
          throw ParameterError("family parameters must be positive");
        }
      }
    };
    std::visit(overloaded{[](family::Trivial const&) {},
                          [](family::Hopf const&) {},
                          [&](family::Torus2 const& f) { positive({f.n}); },
                          [&](family::Twist const& f) { positive({f.n}); },
                          [&](family::DoubleTwist const& f) { positive({f.n, f.l}); },
                          [&](family::Conway const& f) {
                            if (f.twists.empty()) {
                              throw ParameterError("Conway twist list is empty");
                            }
                            for (auto a : f.twists) {
                              positive({a});
                            }
                          },
                          [&](family::ConwayMLN const& f) { positive({f.m, f.l, f.n}); },
                          [](family::CustomPD const& f) {
                            if (f.path.empty()) {
                              throw ParameterError("empty PD file path");
                            }
                          }},
               spec);
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagram
  ////////////////////////////////////////////////////////////////////////

  Diagram::Diagram(std::size_t              arc_count,
                   std::vector<Crossing>    crossings,
                   std::string              provenance,
                   std::vector<std::string> arc_labels)
      : _arc_count(arc_count),
        _crossings(std::move(crossings)),
        _provenance(std::move(provenance)),
        _arc_labels(std::move(arc_labels)) {
    if (_arc_count == 0) {
      throw ParameterError("a diagram needs at least one arc");
    }
    if (_arc_labels.empty()) {
      for (std::size_t i = 0; i < _arc_count; ++i) {
        _arc_labels.push_back("a" + std::to_string(i));
      }
    } else if (_arc_labels.size() != _arc_count) {
      throw ParameterError("arc label count does not match arc count");
    }
    std::vector<std::size_t> ends(_arc_count, 0);
    for (std::size_t c = 0; c < _crossings.size(); ++c) {
      auto const& x = _crossings[c];
      for (ArcId a : {x.over, x.under[0], x.under[1]}) {
        if (a.value >= _arc_count) {
          throw ParameterError("crossing " + std::to_string(c)
                               + " refers to arc " + std::to_string(a.value)
                               + " but the diagram has "
                               + std::to_string(_arc_count) + " arcs");
        }
      }
      ++ends[x.under[0].value];
      ++ends[x.under[1].value];
    }
    for (std::size_t a = 0; a < _arc_count; ++a) {
      if (ends[a] % 2 != 0) {
        throw ParameterError("arc " + std::to_string(a)
                             + " ends at an odd number of undercrossings");
      }
    }
  }

  std::size_t Diagram::under_occurrences(ArcId a) const {
    std::size_t n = 0;
    for (auto const& x : _crossings) {
      n += (x.under[0] == a) + (x.under[1] == a);
    }
    return n;
  }

  bool operator==(Diagram const& x, Diagram const& y) {
    if (x._arc_count != y._arc_count || x._crossings.size() != y._crossings.size()) {
      return false;
    }
    auto a = x._crossings;
    auto b = y._crossings;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Diagram torus2(std::uint32_t n, std::string provenance) {
      std::vector<Crossing> crossings;
      for (std::uint32_t i = 0; i < n; ++i) {
        crossings.emplace_back(i, (i + n - 1) % n, (i + 1) % n);
      }
      return Diagram(n, std::move(crossings), std::move(provenance));
    }

    Diagram double_twist(std::uint32_t n, std::uint32_t l, std::string provenance) {
      auto const              residues = dtw_arc_residues(n, l);
      std::int64_t const      modulus  = std::int64_t{l} * n + 1;
      std::vector<std::int64_t> arc_of(modulus, -1);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < residues.size(); ++i) {
        arc_of[residues[i]] = static_cast<std::int64_t>(i);
        labels.push_back("a" + std::to_string(residues[i]));
      }
      auto arc = [&](std::int64_t r) {
        auto a = arc_of[((r % modulus) + modulus) % modulus];
        if (a < 0) {
          throw InternalError("double twist relation refers to a missing arc");
        }
        return static_cast<std::uint32_t>(a);
      };
      std::vector<Crossing> crossings;
      // Bottom twist region: a_{i-1} and a_{i+1} pass under a_i.
      for (std::int64_t i = 1; i <= n; ++i) {
        crossings.emplace_back(arc(i), arc(i - 1), arc(i + 1));
      }
      // Top twist region, indices taken modulo ln + 1 so that a_{ln+1} = a_0.
      for (std::int64_t j = 0; j < l; ++j) {
        crossings.emplace_back(arc((l - j) * n + 1),
                               arc((l - j - 1) * n + 1),
                               arc((l - j + 1) * n + 1));
      }
      return Diagram(residues.size(), std::move(crossings), std::move(provenance),
                     std::move(labels));
    }
  }  // namespace

  std::vector<std::int64_t> dtw_arc_residues(std::uint32_t n, std::uint32_t l) {
    if (n == 0 || l == 0) {
      throw ParameterError("double twist parameters must be positive");
    }
    std::vector<std::int64_t> result;
    for (std::int64_t i = 0; i <= n; ++i) {
      result.push_back(i);
    }
    for (std::int64_t j = 1; j < l; ++j) {
      result.push_back(j * n + 1);
    }
    return result;
  }

  Diagram braid_closure(std::size_t strands, std::span<int const> word) {
    if (strands == 0) {
      throw ParameterError("a braid needs at least one strand");
    }
    detail::StrandTracer tracer(strands);
    for (int g : word) {
      auto i = static_cast<std::size_t>(g < 0 ? -g : g);
      if (g == 0 || i >= strands) {
        throw ParameterError("braid generator " + std::to_string(g)
                             + " out of range");
      }
      tracer.cross(i - 1, g > 0 ? 0 : 1);
    }
    tracer.close_braid();
    std::ostringstream provenance;
    provenance << "braid:" << strands;
    for (int g : word) {
      provenance << ',' << g;
    }
    return tracer.finish(provenance.str());
  }

  Diagram conway_diagram(std::span<std::uint32_t const> twists) {
    if (twists.empty()) {
      throw ParameterError("Conway twist list is empty");
    }
    // Four positions. Odd twist regions (1-based) twist the middle pair,
    // even ones the outer pair 0-1; the bottom closure depends on which pair
    // was twisted last.
    detail::StrandTracer tracer(4);
    tracer.cap_top(0, 1);
    tracer.cap_top(2, 3);
    for (std::size_t r = 0; r < twists.size(); ++r) {
      if (twists[r] == 0) {
        throw ParameterError("Conway twists must be positive");
      }
      for (std::uint32_t k = 0; k < twists[r]; ++k) {
        tracer.cross(r % 2 == 0 ? 1 : 0, detail::StrandTracer::undetermined);
      }
    }
    if (twists.size() % 2 == 1) {
      tracer.cap_bottom(0, 1);
      tracer.cap_bottom(2, 3);
    } else {
      tracer.cap_bottom(1, 2);
      tracer.cap_bottom(0, 3);
    }
    tracer.make_alternating();
    return tracer.finish(
        "conway:" + join(std::vector<std::uint32_t>(twists.begin(), twists.end())));
  }

  Diagram build_family(FamilySpec const& spec) {
    validate(spec);
    auto provenance = to_string(spec);
    return std::visit(
        overloaded{
            [&](family::Trivial const&) {
              return Diagram(1, {}, provenance, {"a"});
            },
            [&](family::Hopf const&) {
              return Diagram(2, {Crossing(0, 1, 1), Crossing(1, 0, 0)}, provenance,
                             {"a", "b"});
            },
            [&](family::Torus2 const& f) { return torus2(f.n, provenance); },
            [&](family::Twist const& f) { return double_twist(f.n, 2, provenance); },
            [&](family::DoubleTwist const& f) {
              return double_twist(f.n, f.l, provenance);
            },
            [&](family::Conway const& f) { return conway_diagram(f.twists); },
            [&](family::ConwayMLN const& f) {
              std::vector<std::uint32_t> twists{f.m, f.l, f.n};
              auto d = conway_diagram(twists);
              return Diagram(d.arc_count(), d.crossings(), provenance);
            },
            [&](family::CustomPD const& f) { return read_pd_file(f.path); }},
        spec);
  }

}  // namespace knotsemi
