//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "knotsemi/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "knotsemi/errors.hpp"

namespace knotsemi {

  Word::Word(std::vector<letter_type> letters) : _letters(std::move(letters)) {
    if (_letters.empty()) {
      throw DomainError("words must be nonempty");
    }
  }

  Relation::Relation(Word u, Word v) {
    if (u.size() != v.size()) {
      throw DomainError("relations must preserve length");
    }
    if (u == v) {
      throw DomainError("trivial relation");
    }
    if (v < u) {
      std::swap(u, v);
    }
    lhs = std::move(u);
    rhs = std::move(v);
  }

  Presentation::Presentation(std::size_t              alphabet_size,
                             std::vector<Relation>    relations,
                             std::vector<std::string> letter_names)
      : _alphabet_size(alphabet_size),
        _relations(std::move(relations)),
        _letter_names(std::move(letter_names)) {
    if (_alphabet_size == 0) {
      throw ParameterError("the alphabet must be nonempty");
    }
    for (auto const& r : _relations) {
      for (auto const* w : {&r.lhs, &r.rhs}) {
        for (auto a : *w) {
          if (a >= _alphabet_size) {
            throw ParameterError("relation letter " + std::to_string(a)
                                 + " outside the alphabet");
          }
        }
      }
    }
    if (_letter_names.empty()) {
      for (std::size_t i = 0; i < _alphabet_size; ++i) {
        _letter_names.push_back("a" + std::to_string(i));
      }
    } else if (_letter_names.size() != _alphabet_size) {
      throw ParameterError("letter name count does not match the alphabet");
    }
    std::sort(_relations.begin(), _relations.end());
    _relations.erase(std::unique(_relations.begin(), _relations.end()),
                     _relations.end());
  }

  Presentation presentation_from_diagram(Diagram const& d) {
    std::vector<Relation> relations;
    auto add = [&relations](Word u, Word v) {
      if (u != v) {
        relations.emplace_back(std::move(u), std::move(v));
      }
    };
    for (auto const& c : d.crossings()) {
      letter_type x = c.under[0].value;
      letter_type y = c.over.value;
      letter_type z = c.under[1].value;
      add({x, y}, {y, z});
      add({y, x}, {z, y});
    }
    return Presentation(d.arc_count(), std::move(relations), d.arc_labels());
  }

  namespace {
    Word rename_letters(Word const& w, std::span<letter_type const> perm) {
      std::vector<letter_type> out;
      out.reserve(w.size());
      for (auto a : w) {
        out.push_back(perm[a]);
      }
      return Word(std::move(out));
    }
  }  // namespace

  Presentation relabel(Presentation const& p, std::span<letter_type const> permutation) {
    auto const n = p.alphabet_size();
    if (permutation.size() != n) {
      throw ParameterError("permutation size does not match the alphabet");
    }
    std::vector<bool> seen(n, false);
    for (auto a : permutation) {
      if (a >= n || seen[a]) {
        throw ParameterError("relabeling is not a bijection");
      }
      seen[a] = true;
    }
    std::vector<Relation>    relations;
    std::vector<std::string> names(n);
    for (auto const& r : p.relations()) {
      relations.emplace_back(rename_letters(r.lhs, permutation), rename_letters(r.rhs, permutation));
    }
    for (std::size_t i = 0; i < n; ++i) {
      names[permutation[i]] = p.letter_names()[i];
    }
    return Presentation(n, std::move(relations), std::move(names));
  }

  std::optional<std::vector<letter_type>> find_relabeling(Presentation const& p,
                                                          Presentation const& q) {
    auto const n = p.alphabet_size();
    if (n != q.alphabet_size() || p.relations().size() != q.relations().size()) {
      return std::nullopt;
    }
    auto occurrences = [n](Presentation const& x) {
      std::vector<std::size_t> count(n, 0);
      for (auto const& r : x.relations()) {
        for (auto a : r.lhs) {
          ++count[a];
        }
        for (auto a : r.rhs) {
          ++count[a];
        }
      }
      return count;
    };
    auto const p_occ = occurrences(p);
    auto const q_occ = occurrences(q);
    std::set<Relation> target(q.relations().begin(), q.relations().end());

    // Relations of p become checkable once their largest letter is assigned.
    std::vector<std::vector<Relation const*>> ready(n);
    for (auto const& r : p.relations()) {
      letter_type top = 0;
      for (auto a : r.lhs) {
        top = std::max(top, a);
      }
      for (auto a : r.rhs) {
        top = std::max(top, a);
      }
      ready[top].push_back(&r);
    }

    std::vector<letter_type> perm(n);
    std::vector<bool>        used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
      if (i == n) {
        return true;
      }
      for (letter_type b = 0; b < n; ++b) {
        if (used[b] || p_occ[i] != q_occ[b]) {
          continue;
        }
        perm[i] = b;
        used[b] = true;
        bool ok = std::all_of(ready[i].begin(), ready[i].end(), [&](auto const* r) {
          return target.count(Relation(rename_letters(r->lhs, perm), rename_letters(r->rhs, perm))) > 0;
        });
        if (ok && extend(i + 1)) {
          return true;
        }
        used[b] = false;
      }
      return false;
    };
    if (extend(0)) {
      return perm;
    }
    return std::nullopt;
  }

}  // namespace knotsemi
