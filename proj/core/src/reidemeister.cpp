//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// Reidemeister moves as rewrites of the arc/crossing data. Without a planar
// embedding the inserted kink or finger is placed next to one end of the
// chosen arc, so every overpass of that arc stays on the original letter.

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>

#include "knotsemi/diagrams.hpp"
#include "knotsemi/errors.hpp"

namespace knotsemi {

  namespace {
    using Kind      = ReidemeisterMove::Kind;
    using Direction = ReidemeisterMove::Direction;

    void require(bool cond, std::string const& msg) {
      if (!cond) {
        throw MoveError(msg);
      }
    }

    void check_arc(Diagram const& d, std::uint32_t a) {
      require(a < d.arc_count(), "arc " + std::to_string(a) + " does not exist");
    }

    void check_crossing(Diagram const& d, std::uint32_t c) {
      require(c < d.crossing_count(),
              "crossing " + std::to_string(c) + " does not exist");
    }

    ArcId other_under(Crossing const& x, ArcId a) {
      return x.under[0] == a ? x.under[1] : x.under[0];
    }

    bool is_over_anywhere(std::vector<Crossing> const& xs, ArcId a) {
      return std::any_of(
          xs.begin(), xs.end(), [a](Crossing const& x) { return x.over == a; });
    }

    // Moves the last under-endpoint of `from` (in crossing order) to `to`.
    // Returns false if `from` has no under-endpoint.
    bool move_last_endpoint(std::vector<Crossing>& xs, ArcId from, ArcId to) {
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
        if (it->has_under(from)) {
          *it = Crossing(it->over, to, other_under(*it, from));
          return true;
        }
      }
      return false;
    }

    // Rebuilds the crossings after redirecting arcs (`redirect[a]` is the
    // arc that replaces a, or nullopt if a disappears) and compacting the
    // surviving arc indices.
    Diagram compact(Diagram const&                           d,
                    std::vector<Crossing>                    xs,
                    std::vector<std::optional<ArcId>> const& redirect,
                    std::string                              provenance) {
      std::vector<std::uint32_t> index(d.arc_count(), 0);
      std::vector<std::string>   labels;
      std::uint32_t              next = 0;
      for (std::uint32_t a = 0; a < d.arc_count(); ++a) {
        if (redirect[a] == ArcId{a}) {
          index[a] = next++;
          labels.push_back(d.arc_labels()[a]);
        }
      }
      auto remap = [&](ArcId a) {
        auto target = redirect[a.value];
        if (!target || redirect[target->value] != *target) {
          throw InternalError("move left a reference to a deleted arc");
        }
        return ArcId{index[target->value]};
      };
      for (auto& x : xs) {
        x = Crossing(remap(x.over), remap(x.under[0]), remap(x.under[1]));
      }
      return Diagram(next, std::move(xs), std::move(provenance), std::move(labels));
    }

    std::vector<std::optional<ArcId>> identity_redirect(Diagram const& d) {
      std::vector<std::optional<ArcId>> r;
      for (std::uint32_t a = 0; a < d.arc_count(); ++a) {
        r.emplace_back(ArcId{a});
      }
      return r;
    }

    std::string next_label(Diagram const& d) {
      return "a" + std::to_string(d.arc_count());
    }

    Diagram r1_insert(Diagram const& d, std::uint32_t arc) {
      check_arc(d, arc);
      auto       xs     = d.crossings();
      auto       labels = d.arc_labels();
      ArcId      x{arc};
      ArcId      fresh{static_cast<std::uint32_t>(d.arc_count())};
      if (move_last_endpoint(xs, x, fresh)) {
        labels.push_back(next_label(d));
        xs.emplace_back(x, x, fresh);
        return Diagram(d.arc_count() + 1, std::move(xs), d.provenance() + "+R1",
                       std::move(labels));
      }
      // A component without undercrossings: the kink closes the loop on
      // itself and the strand stays a single arc.
      xs.emplace_back(x, x, x);
      return Diagram(d.arc_count(), std::move(xs), d.provenance() + "+R1",
                     std::move(labels));
    }

    Diagram r1_remove(Diagram const& d, std::uint32_t c) {
      check_crossing(d, c);
      auto xs     = d.crossings();
      auto kink   = xs[c];
      require(kink.has_under(kink.over),
              "crossing " + std::to_string(c) + " is not a kink");
      xs.erase(xs.begin() + c);
      ArcId z        = other_under(kink, kink.over);
      auto  redirect = identity_redirect(d);
      redirect[std::max(z, kink.over).value] = std::min(z, kink.over);
      return compact(d, std::move(xs), redirect, d.provenance() + "-R1");
    }

    Diagram r2_insert(Diagram const& d, std::uint32_t over, std::uint32_t under) {
      check_arc(d, over);
      check_arc(d, under);
      auto        xs     = d.crossings();
      auto        labels = d.arc_labels();
      ArcId       y{over};
      ArcId       x{under};
      std::size_t arcs = d.arc_count();
      ArcId       middle{static_cast<std::uint32_t>(arcs++)};
      labels.push_back("a" + std::to_string(middle.value));
      ArcId tail = x;
      ArcId fresh{static_cast<std::uint32_t>(arcs)};
      if (move_last_endpoint(xs, x, fresh)) {
        tail = fresh;
        labels.push_back("a" + std::to_string(fresh.value));
        ++arcs;
      }
      xs.emplace_back(y, x, middle);
      xs.emplace_back(y, middle, tail);
      return Diagram(arcs, std::move(xs), d.provenance() + "+R2", std::move(labels));
    }

    Diagram r2_remove(Diagram const& d, std::uint32_t c1, std::uint32_t c2) {
      check_crossing(d, c1);
      check_crossing(d, c2);
      require(c1 != c2, "R2 removal needs two distinct crossings");
      auto const& xs = d.crossings();
      auto const  a  = xs[c1];
      auto const  b  = xs[c2];
      require(a.over == b.over, "R2 crossings must share the over arc");
      std::optional<ArcId> middle;
      for (ArcId m : a.under) {
        if (m != a.over && b.has_under(m) && d.under_occurrences(m) == 2
            && a.under[0] != a.under[1] && b.under[0] != b.under[1]
            && !is_over_anywhere(xs, m)) {
          middle = m;
          break;
        }
      }
      require(middle.has_value(),
              "crossings " + std::to_string(c1) + " and " + std::to_string(c2)
                  + " do not bound an R2 bigon");
      ArcId head = other_under(a, *middle);
      ArcId tail = other_under(b, *middle);

      std::vector<Crossing> rest;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != c1 && i != c2) {
          rest.push_back(xs[i]);
        }
      }
      auto redirect = identity_redirect(d);
      redirect[middle->value].reset();
      redirect[std::max(head, tail).value] = std::min(head, tail);
      return compact(d, std::move(rest), redirect, d.provenance() + "-R2");
    }

    Diagram r3(Diagram const& d, std::uint32_t c1, std::uint32_t c2, std::uint32_t c3) {
      for (auto c : {c1, c2, c3}) {
        check_crossing(d, c);
      }
      require(c1 != c2 && c2 != c3 && c1 != c3, "R3 needs three distinct crossings");
      auto        xs  = d.crossings();
      auto const  top = xs[c1];
      auto const  low = xs[c2];
      auto const  mid = xs[c3];
      require(top.over == low.over,
              "R3: the first two crossings must share the top over arc");
      require(top.has_under(mid.over),
              "R3: the third crossing's over arc must pass under the top arc");
      ArcId m_after  = mid.over;
      ArcId m_before = other_under(top, m_after);
      std::optional<ArcId> bottom_mid;
      for (ArcId b : low.under) {
        if (mid.has_under(b) && d.under_occurrences(b) == 2
            && !is_over_anywhere(xs, b)) {
          bottom_mid = b;
          break;
        }
      }
      require(bottom_mid.has_value(),
              "R3: the bottom strand has no short arc between crossings "
                  + std::to_string(c2) + " and " + std::to_string(c3));
      ArcId b_first = other_under(low, *bottom_mid);
      ArcId b_last  = other_under(mid, *bottom_mid);
      // The middle strand now crosses the bottom one before passing under the
      // top strand; the short bottom arc keeps its index.
      xs[c3] = Crossing(m_before, b_first, *bottom_mid);
      xs[c2] = Crossing(top.over, *bottom_mid, b_last);
      return Diagram(d.arc_count(), std::move(xs), d.provenance() + "~R3",
                     d.arc_labels());
    }

    std::vector<std::uint32_t> parse_indices(std::string_view text,
                                             std::string_view site) {
      std::vector<std::uint32_t> out;
      while (true) {
        auto          comma = text.find(',');
        auto          item  = text.substr(0, comma);
        std::uint32_t v     = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
          throw ParameterError("malformed move site '" + std::string(site) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
          return out;
        }
        text.remove_prefix(comma + 1);
      }
    }

    bool starts_with(std::string_view s, std::string_view prefix) {
      return s.substr(0, prefix.size()) == prefix;
    }
  }  // namespace

  ReidemeisterMove parse_move(std::string_view kind, std::string_view site) {
    ReidemeisterMove move{};
    if (kind == "r1" || kind == "R1") {
      move.kind = Kind::R1;
    } else if (kind == "r2" || kind == "R2") {
      move.kind = Kind::R2;
    } else if (kind == "r3" || kind == "R3") {
      move.kind = Kind::R3;
    } else {
      throw ParameterError("unknown move '" + std::string(kind)
                           + "' (expected r1, r2 or r3)");
    }
    auto bad = [&] {
      throw ParameterError("site '" + std::string(site) + "' does not fit move "
                           + std::string(kind));
    };
    if (starts_with(site, "arc=")) {
      move.direction = Direction::insert;
      move.site      = parse_indices(site.substr(4), site);
      if (move.kind != Kind::R1 || move.site.size() != 1) {
        bad();
      }
    } else if (starts_with(site, "crossing=")) {
      move.direction = Direction::remove;
      move.site      = parse_indices(site.substr(9), site);
      if (move.kind != Kind::R1 || move.site.size() != 1) {
        bad();
      }
    } else if (starts_with(site, "over=")) {
      auto comma = site.find(",under=");
      if (comma == std::string_view::npos || move.kind != Kind::R2) {
        bad();
      }
      move.direction = Direction::insert;
      move.site      = parse_indices(site.substr(5, comma - 5), site);
      auto under     = parse_indices(site.substr(comma + 7), site);
      move.site.insert(move.site.end(), under.begin(), under.end());
      if (move.site.size() != 2) {
        bad();
      }
    } else if (starts_with(site, "crossings=")) {
      move.direction = Direction::remove;
      move.site      = parse_indices(site.substr(10), site);
      std::size_t want = move.kind == Kind::R2 ? 2 : 3;
      if (move.kind == Kind::R1 || move.site.size() != want) {
        bad();
      }
    } else {
      bad();
    }
    return move;
  }

  std::string to_string(ReidemeisterMove const& move) {
    std::string out = move.kind == Kind::R1   ? "r1"
                      : move.kind == Kind::R2 ? "r2"
                                              : "r3";
    out += move.direction == Direction::insert ? " insert" : " remove";
    for (std::size_t i = 0; i < move.site.size(); ++i) {
      out += (i == 0 ? " @ " : ",") + std::to_string(move.site[i]);
    }
    return out;
  }

  Diagram apply_reidemeister(Diagram const& d, ReidemeisterMove const& move) {
    auto need = [&](std::size_t n) {
      require(move.site.size() == n,
              "move " + to_string(move) + " needs " + std::to_string(n)
                  + " site indices");
    };
    switch (move.kind) {
      case Kind::R1:
        need(1);
        return move.direction == Direction::insert ? r1_insert(d, move.site[0])
                                                   : r1_remove(d, move.site[0]);
      case Kind::R2:
        need(2);
        return move.direction == Direction::insert
                   ? r2_insert(d, move.site[0], move.site[1])
                   : r2_remove(d, move.site[0], move.site[1]);
      case Kind::R3:
        need(3);
        return r3(d, move.site[0], move.site[1], move.site[2]);
    }
    throw MoveError("unknown move kind");
  }

}  // namespace knotsemi
