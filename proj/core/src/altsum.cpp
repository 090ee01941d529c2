//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "knotsemi/altsum.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "knotsemi/errors.hpp"

namespace knotsemi {

  GroupG GroupG::zmod(std::int64_t m) {
    if (m < 1) {
      throw ParameterError("Z_m needs m >= 1, found " + std::to_string(m));
    }
    return GroupG(m);
  }

  bool GroupG::is_even(std::int64_t g) const {
    g = reduce(g);
    if (_modulus == 0) {
      return g % 2 == 0;
    }
    for (std::int64_t h = 0; h < _modulus; ++h) {
      if ((2 * h) % _modulus == g) {
        return true;
      }
    }
    return false;
  }

  std::string GroupG::to_string() const {
    return _modulus == 0 ? "Z" : "Z_" + std::to_string(_modulus);
  }

  ASElement multiply(ASElement const& x, ASElement const& y) {
    if (x.modulus != y.modulus || x.even_count.has_value() != y.even_count.has_value()) {
      throw DomainError("cannot multiply elements of different semigroups");
    }
    if (x.length == 0 || y.length == 0) {
      throw DomainError("elements have positive length");
    }
    ASElement z;
    z.modulus = x.modulus;
    z.length  = x.length + y.length;
    z.alt     = x.length % 2 == 0 ? x.alt + y.alt : x.alt - y.alt;
    if (z.modulus != 0) {
      z.alt = ((z.alt % z.modulus) + z.modulus) % z.modulus;
    }
    if (x.even_count) {
      z.even_count = *x.even_count + *y.even_count;
    }
    return z;
  }

  AltSumSemigroup::AltSumSemigroup(GroupG g, std::vector<std::int64_t> b, bool strong)
      : _group(g), _b(std::move(b)), _strong(strong) {
    if (_b.empty()) {
      throw ParameterError("the generating set B must be nonempty");
    }
    for (auto& x : _b) {
      x = _group.reduce(x);
    }
    std::sort(_b.begin(), _b.end());
    _b.erase(std::unique(_b.begin(), _b.end()), _b.end());
  }

  bool AltSumSemigroup::contains(std::int64_t g) const {
    return std::binary_search(_b.begin(), _b.end(), g);
  }

  std::int64_t AltSumSemigroup::alt(std::span<std::int64_t const> w) const {
    if (w.empty()) {
      throw DomainError("alt of the empty word");
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!contains(w[i])) {
        throw DomainError("letter " + std::to_string(w[i]) + " is not in B");
      }
      sum = _group.reduce(i % 2 == 0 ? sum + w[i] : sum - w[i]);
    }
    return sum;
  }

  ASElement AltSumSemigroup::class_of(std::span<std::int64_t const> w) const {
    ASElement e;
    e.length  = w.size();
    e.alt     = alt(w);
    e.modulus = _group.modulus();
    if (_strong) {
      e.even_count = static_cast<std::size_t>(std::count_if(
          w.begin(), w.end(), [this](std::int64_t g) { return _group.is_even(g); }));
    }
    return e;
  }

  std::vector<ASElement> AltSumSemigroup::elements(std::size_t t) const {
    if (t == 0) {
      throw DomainError("degree 0 has no word classes (the unit is adjoined "
                        "by the growth series)");
    }
    // States (alt, even count); prepending b maps alt s to b - s.
    std::vector<std::pair<std::int64_t, bool>> letters;
    for (auto x : _b) {
      letters.emplace_back(x, _group.is_even(x));
    }
    std::set<std::pair<std::int64_t, std::size_t>> current;
    for (auto [x, even] : letters) {
      current.emplace(x, _strong && even ? 1 : 0);
    }
    for (std::size_t len = 1; len < t; ++len) {
      std::set<std::pair<std::int64_t, std::size_t>> next;
      for (auto [s, e] : current) {
        for (auto [x, even] : letters) {
          next.emplace(_group.reduce(x - s), e + (_strong && even ? 1 : 0));
        }
      }
      current = std::move(next);
    }
    std::vector<ASElement> out;
    out.reserve(current.size());
    for (auto [s, e] : current) {
      ASElement x;
      x.length  = t;
      x.alt     = s;
      x.modulus = _group.modulus();
      if (_strong) {
        x.even_count = e;
      }
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t AltSumSemigroup::count_elements(std::size_t t) const {
    if (t == 0) {
      throw DomainError("count_elements needs t >= 1");
    }
    if (!_group.finite()) {
      return elements(t).size();
    }
    // Dense reachable sets over Z_m (times the even count for SAS).
    auto const        m     = static_cast<std::size_t>(_group.modulus());
    std::size_t const width = _strong ? t + 1 : 1;
    std::vector<char> current(m * width, 0);
    std::vector<std::pair<std::size_t, std::size_t>> letters;
    for (auto x : _b) {
      letters.emplace_back(static_cast<std::size_t>(x),
                           _strong && _group.is_even(x) ? 1 : 0);
    }
    for (auto [x, e] : letters) {
      current[x * width + e] = 1;
    }
    for (std::size_t len = 1; len < t; ++len) {
      std::vector<char> next(m * width, 0);
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t e = 0; e < width; ++e) {
          if (!current[s * width + e]) {
            continue;
          }
          for (auto [x, de] : letters) {
            next[((x + m - s) % m) * width + e + de] = 1;
          }
        }
      }
      current = std::move(next);
    }
    return static_cast<std::uint64_t>(std::count(current.begin(), current.end(), 1));
  }

  ASElement AltSumSemigroup::element(std::size_t                length,
                                     std::int64_t               alt,
                                     std::optional<std::size_t> even_count) const {
    if (_strong != even_count.has_value()) {
      throw DomainError(_strong ? "SAS elements need an even count"
                                : "AS elements have no even count");
    }
    ASElement e;
    e.length     = length;
    e.alt        = _group.reduce(alt);
    e.even_count = even_count;
    e.modulus    = _group.modulus();
    auto all     = elements(length);
    if (!std::binary_search(all.begin(), all.end(), e)) {
      throw DomainError("no word of length " + std::to_string(length)
                        + " has these invariants in " + to_string());
    }
    return e;
  }

  ASElement AltSumSemigroup::multiply(ASElement const& x, ASElement const& y) const {
    for (auto const* e : {&x, &y}) {
      if (e->modulus != _group.modulus() || e->even_count.has_value() != _strong) {
        throw DomainError("element does not belong to " + to_string());
      }
    }
    return knotsemi::multiply(x, y);
  }

  std::string AltSumSemigroup::to_string() const {
    std::ostringstream os;
    os << (_strong ? "SAS(" : "AS(") << _group.to_string() << ", {";
    for (std::size_t i = 0; i < _b.size(); ++i) {
      os << (i == 0 ? "" : ",") << _b[i];
    }
    os << "})";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabets of the double twist theorem and the C(m, l, n) conjecture
  ////////////////////////////////////////////////////////////////////////

  DtwAlphabet dtw_alphabet(std::uint32_t n, std::uint32_t l) {
    if (n == 0 || l == 0) {
      throw ParameterError("double twist parameters must be positive");
    }
    DtwAlphabet a{n, l, std::int64_t{l} * n + 1, {}};
    for (std::int64_t i = 0; i <= n; ++i) {
      a.set.push_back(i);
    }
    for (std::int64_t j = 0; j < l; ++j) {
      a.set.push_back((j * n + 1) % a.modulus);
    }
    std::sort(a.set.begin(), a.set.end());
    a.set.erase(std::unique(a.set.begin(), a.set.end()), a.set.end());
    return a;
  }

  ConjectureAlphabet conjecture_alphabet(std::uint32_t m, std::uint32_t l, std::uint32_t n) {
    if (m == 0 || l == 0 || n == 0) {
      throw ParameterError("C(m, l, n) parameters must be positive");
    }
    std::int64_t const M = (std::int64_t{m} * l + 1) * n + m;
    ConjectureAlphabet a{m, l, n, M, {}, std::nullopt};
    auto add = [&](std::int64_t x) { a.set.push_back(((x % M) + M) % M); };
    for (std::int64_t i = 0; i <= std::int64_t{n} + 1; ++i) {
      add(i);
    }
    for (std::int64_t j = 0; j <= std::int64_t{l} + 1; ++j) {
      add(j * n + 1);
    }
    for (std::int64_t k = 0; k < m; ++k) {
      add((k * l + 1) * n + k);
    }
    std::sort(a.set.begin(), a.set.end());
    a.set.erase(std::unique(a.set.begin(), a.set.end()), a.set.end());
    if (M % 2 == 0) {
      a.warning = "(ml+1)n+m = " + std::to_string(M)
                  + " is even; the conjectured isomorphism assumes it is odd";
    }
    return a;
  }

  GroupWord canonical_word(DtwAlphabet const& a, ASElement const& e) {
    auto const M = a.modulus;
    auto const n = static_cast<std::int64_t>(a.n);
    if (e.modulus != M || e.even_count.has_value()) {
      throw DomainError("element is not in AS(Z_" + std::to_string(M) + ", C_{n,l})");
    }
    auto const s = ((e.alt % M) + M) % M;
    if (e.length == 0) {
      throw DomainError("elements have positive length");
    }
    if (e.length == 1) {
      if (!std::binary_search(a.set.begin(), a.set.end(), s)) {
        throw DomainError("alternating sum " + std::to_string(s)
                          + " is not a letter of C_{n,l}");
      }
      return {s};
    }
    GroupWord w(e.length, 0);
    // Priority: s 0 0^{t-2}, then 0 c 0^{t-2}, then d c 0^{t-2}.
    if (s <= n) {
      w[0] = s;
      return w;
    }
    if (auto neg = (M - s) % M; neg >= 1 && neg <= n) {
      w[1] = neg;
      return w;
    }
    for (std::int64_t j = 2; j < a.l; ++j) {
      std::int64_t d = j * n + 1;
      for (std::int64_t c = 1; c <= n; ++c) {
        if (((d - c) % M + M) % M == s) {
          w[0] = d;
          w[1] = c;
          return w;
        }
      }
    }
    throw InternalError("no canonical word of length " + std::to_string(e.length)
                        + " with alternating sum " + std::to_string(s));
  }

}  // namespace knotsemi
