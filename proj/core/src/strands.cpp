//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "strands.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <utility>

#include "knotsemi/errors.hpp"

namespace knotsemi::detail {

  StrandTracer::StrandTracer(std::size_t width) {
    for (std::size_t i = 0; i < width; ++i) {
      _initial.push_back(new_edge());
    }
    _current = _initial;
  }

  std::size_t StrandTracer::new_edge() {
    _glue.push_back(_glue.size());
    return _glue.size() - 1;
  }

  std::size_t StrandTracer::find(std::size_t e) {
    while (_glue[e] != e) {
      e = _glue[e] = _glue[_glue[e]];
    }
    return e;
  }

  void StrandTracer::glue(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      _glue[std::max(a, b)] = std::min(a, b);
    }
  }

  void StrandTracer::cross(std::size_t i, int over) {
    if (i + 1 >= _current.size()) {
      throw ParameterError("crossing position out of range");
    }
    std::size_t left  = new_edge();
    std::size_t right = new_edge();
    // The strand entering at i leaves at i + 1 and vice versa.
    _crossings.push_back(
        Cross{{Slot{_current[i], right}, Slot{_current[i + 1], left}}, over});
    _current[i]     = left;
    _current[i + 1] = right;
  }

  void StrandTracer::cap_top(std::size_t i, std::size_t j) {
    glue(_initial.at(i), _initial.at(j));
  }

  void StrandTracer::cap_bottom(std::size_t i, std::size_t j) {
    glue(_current.at(i), _current.at(j));
  }

  void StrandTracer::close_braid() {
    for (std::size_t i = 0; i < _current.size(); ++i) {
      glue(_current[i], _initial[i]);
    }
  }

  void StrandTracer::make_alternating() {
    // Each segment joins two crossing slots that are consecutive along a
    // strand. If x_c is the over slot of crossing c, slot (c, k) is over iff
    // x_c == k, and consecutive slots must differ, giving the parity
    // constraint x_c ^ x_d == 1 ^ k ^ k'.
    std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> ends;
    for (std::size_t c = 0; c < _crossings.size(); ++c) {
      for (int k = 0; k < 2; ++k) {
        auto const& s = _crossings[c].slots[k];
        ends[find(s.in)].emplace_back(c, k);
        ends[find(s.out)].emplace_back(c, k);
      }
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(
        _crossings.size());
    for (auto const& [seg, e] : ends) {
      if (e.size() != 2) {
        throw InternalError("strand segment without two crossing ends");
      }
      int parity = 1 ^ e[0].second ^ e[1].second;
      adj[e[0].first].emplace_back(e[1].first, parity);
      adj[e[1].first].emplace_back(e[0].first, parity);
    }
    std::vector<int> value(_crossings.size(), -1);
    for (std::size_t start = 0; start < _crossings.size(); ++start) {
      if (value[start] != -1) {
        continue;
      }
      value[start] = _crossings[start].over == undetermined
                         ? 0
                         : _crossings[start].over;
      std::queue<std::size_t> todo;
      todo.push(start);
      while (!todo.empty()) {
        std::size_t c = todo.front();
        todo.pop();
        for (auto [d, parity] : adj[c]) {
          int want = value[c] ^ parity;
          if (value[d] == -1) {
            value[d] = want;
            todo.push(d);
          } else if (value[d] != want) {
            throw InternalError("projection admits no alternating diagram");
          }
        }
      }
    }
    for (std::size_t c = 0; c < _crossings.size(); ++c) {
      _crossings[c].over = value[c];
    }
  }

  Diagram StrandTracer::finish(std::string provenance) {
    std::size_t const n = _glue.size();
    // Arcs: segments joined along each over strand.
    std::vector<std::size_t> arc(n);
    std::iota(arc.begin(), arc.end(), 0);
    auto arc_find = [&arc](std::size_t e) {
      while (arc[e] != e) {
        e = arc[e] = arc[arc[e]];
      }
      return e;
    };
    auto arc_join = [&](std::size_t a, std::size_t b) {
      a = arc_find(a);
      b = arc_find(b);
      if (a != b) {
        arc[std::max(a, b)] = std::min(a, b);
      }
    };
    for (std::size_t e = 0; e < n; ++e) {
      arc_join(e, find(e));
    }
    for (auto const& x : _crossings) {
      if (x.over == undetermined) {
        throw InternalError("crossing left without over strand");
      }
      auto const& s = x.slots[x.over];
      arc_join(s.in, s.out);
    }
    std::map<std::size_t, std::uint32_t> id;
    for (std::size_t e = 0; e < n; ++e) {
      id.emplace(arc_find(e), static_cast<std::uint32_t>(id.size()));
    }
    std::vector<Crossing> crossings;
    for (auto const& x : _crossings) {
      auto const& o = x.slots[x.over];
      auto const& u = x.slots[1 - x.over];
      crossings.emplace_back(id.at(arc_find(o.in)),
                             id.at(arc_find(u.in)),
                             id.at(arc_find(u.out)));
    }
    return Diagram(id.size(), std::move(crossings), std::move(provenance));
  }

}  // namespace knotsemi::detail
