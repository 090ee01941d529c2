//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "knotsemi/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "knotsemi/errors.hpp"

namespace knotsemi {

  std::uint64_t word_universe_size(std::size_t k, std::size_t max_len) {
    constexpr auto top   = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  total = 0;
    std::uint64_t  power = 1;
    for (std::size_t n = 1; n <= max_len; ++n) {
      if (k != 0 && power > top / k) {
        return top;
      }
      power *= k;
      if (total > top - power) {
        return top;
      }
      total += power;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // CongruencePartition
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t CongruencePartition::count(std::size_t degree) const {
    if (degree == 0 || degree > _counts.size()) {
      throw DomainError("degree " + std::to_string(degree)
                        + " outside the reported range 1.."
                        + std::to_string(_counts.size()));
    }
    return _counts[degree - 1];
  }

  std::uint64_t CongruencePartition::words_of_length(std::size_t degree) const {
    if (degree == 0 || degree >= _pow.size()) {
      throw DomainError("word length outside the enumerated range");
    }
    return _pow[degree];
  }

  Word CongruencePartition::word(std::size_t degree, std::uint64_t rank) const {
    if (rank >= words_of_length(degree)) {
      throw DomainError("word rank out of range");
    }
    std::vector<letter_type> letters(degree);
    for (std::size_t i = degree; i-- > 0;) {
      letters[i] = static_cast<letter_type>(rank % _k);
      rank /= _k;
    }
    return Word(std::move(letters));
  }

  std::uint64_t CongruencePartition::rank(Word const& w) const {
    static_cast<void>(words_of_length(w.size()));  // range check
    std::uint64_t r = 0;
    for (auto a : w) {
      if (a >= _k) {
        throw DomainError("letter outside the alphabet");
      }
      r = r * _k + a;
    }
    return r;
  }

  std::uint64_t CongruencePartition::class_id(std::size_t degree, std::uint64_t rank) const {
    if (rank >= words_of_length(degree)) {
      throw DomainError("word rank out of range");
    }
    return _rep[_offset[degree] + rank];
  }

  std::uint64_t CongruencePartition::class_id(Word const& w) const {
    return class_id(w.size(), rank(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::uint32_t find(std::uint32_t x) {
        while (_parent[x] != x) {
          x = _parent[x] = _parent[_parent[x]];
        }
        return x;
      }

      // The smaller index becomes the root, which keeps the representatives
      // independent of the merge order.
      bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (a > b) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

      std::vector<std::uint32_t> release() && {
        for (std::uint32_t i = 0; i < _parent.size(); ++i) {
          find(i);
        }
        return std::move(_parent);
      }

     private:
      std::vector<std::uint32_t> _parent;
    };
  }  // namespace

  CongruencePartition enumerate_classes(Presentation const& p,
                                        std::size_t         max_len,
                                        std::size_t         padding,
                                        std::uint64_t       budget) {
    if (max_len == 0) {
      throw ParameterError("the reporting length must be at least 1");
    }
    std::size_t const k     = p.alphabet_size();
    std::size_t const N     = max_len + padding;
    std::uint64_t     total = word_universe_size(k, N);
    if (total > budget || total > std::numeric_limits<std::uint32_t>::max()) {
      throw ResourceError("the oracle needs " + std::to_string(total)
                              + " words (alphabet " + std::to_string(k)
                              + ", lengths 1.." + std::to_string(N)
                              + ") but the budget is " + std::to_string(budget),
                          total);
    }

    CongruencePartition result;
    result._k       = k;
    result._max_len = max_len;
    result._padding = padding;
    result._pow.assign(N + 2, 1);
    result._offset.assign(N + 2, 0);
    for (std::size_t n = 1; n <= N + 1; ++n) {
      result._pow[n] = result._pow[n - 1] * k;
    }
    for (std::size_t n = 2; n <= N + 1; ++n) {
      result._offset[n] = result._offset[n - 1] + result._pow[n - 1];
    }
    auto const& pow    = result._pow;
    auto const& offset = result._offset;
    auto        id     = [&](Word const& w) {
      std::uint64_t r = 0;
      for (auto a : w) {
        r = r * k + a;
      }
      return static_cast<std::uint32_t>(offset[w.size()] + r);
    };

    UnionFind uf(total);
    for (auto const& r : p.relations()) {
      if (r.lhs.size() <= N) {
        uf.unite(id(r.lhs), id(r.rhs));
      }
    }

    constexpr auto none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> seen;
    bool                       changed = true;
    while (changed) {
      changed = false;
      ++result._sweeps;
      // Compatibility: u ~ v implies au ~ av and ua ~ va. Joining every
      // word with its representative is enough.
      for (std::size_t n = 1; n < N; ++n) {
        auto const base = static_cast<std::uint32_t>(offset[n]);
        auto const up   = offset[n + 1];
        for (std::uint64_t w = 0; w < pow[n]; ++w) {
          std::uint64_t r = uf.find(static_cast<std::uint32_t>(base + w)) - base;
          if (r == w) {
            continue;
          }
          for (std::uint64_t a = 0; a < k; ++a) {
            changed |= uf.unite(static_cast<std::uint32_t>(up + a * pow[n] + w),
                                static_cast<std::uint32_t>(up + a * pow[n] + r));
            changed |= uf.unite(static_cast<std::uint32_t>(up + w * k + a),
                                static_cast<std::uint32_t>(up + r * k + a));
          }
        }
      }
      // Cancellation: aw ~ aw' implies w ~ w', and wa ~ w'a implies w ~ w'.
      for (std::size_t n = N - 1; n >= 1; --n) {
        auto const base = offset[n];
        auto const up   = offset[n + 1];
        seen.resize(pow[n + 1]);
        for (int side = 0; side < 2; ++side) {
          for (std::uint64_t a = 0; a < k; ++a) {
            std::fill(seen.begin(), seen.end(), none);
            for (std::uint64_t w = 0; w < pow[n]; ++w) {
              std::uint64_t x = side == 0 ? a * pow[n] + w : w * k + a;
              auto root = uf.find(static_cast<std::uint32_t>(up + x)) - up;
              if (seen[root] == none) {
                seen[root] = static_cast<std::uint32_t>(w);
              } else {
                changed |= uf.unite(static_cast<std::uint32_t>(base + w),
                                    static_cast<std::uint32_t>(base + seen[root]));
              }
            }
          }
        }
        if (n == 1) {
          break;
        }
      }
    }

    result._rep = std::move(uf).release();
    for (std::size_t n = 1; n <= max_len; ++n) {
      std::uint64_t c = 0;
      for (std::uint64_t w = 0; w < pow[n]; ++w) {
        c += result._rep[offset[n] + w] == offset[n] + w;
      }
      result._counts.push_back(c);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    GroupWord image(Word const& w, std::span<std::int64_t const> phi) {
      GroupWord out;
      out.reserve(w.size());
      for (auto a : w) {
        out.push_back(phi[a]);
      }
      return out;
    }

    void check_phi(Presentation const&           p,
                   std::span<std::int64_t const> phi,
                   AltSumSemigroup const&        s) {
      if (phi.size() != p.alphabet_size()) {
        throw ParameterError("the letter map covers " + std::to_string(phi.size())
                             + " letters but the alphabet has "
                             + std::to_string(p.alphabet_size()));
      }
      for (auto g : phi) {
        if (!s.contains(s.group().reduce(g))) {
          throw DomainError("letter image " + std::to_string(g) + " is not in B of "
                            + s.to_string());
        }
      }
    }
  }  // namespace

  bool verify_homomorphism(Presentation const&           p,
                           std::span<std::int64_t const> phi,
                           AltSumSemigroup const&        s) {
    check_phi(p, phi, s);
    std::vector<std::int64_t> reduced(phi.begin(), phi.end());
    for (auto& g : reduced) {
      g = s.group().reduce(g);
    }
    return std::all_of(p.relations().begin(), p.relations().end(), [&](Relation const& r) {
      return s.class_of(image(r.lhs, reduced)) == s.class_of(image(r.rhs, reduced));
    });
  }

  std::string to_string(Verdict v) {
    return v == Verdict::verified ? "VERIFIED" : "UNRESOLVED";
  }

  bool VerificationReport::all_verified() const {
    return !degrees.empty()
           && std::all_of(degrees.begin(), degrees.end(), [](DegreeResult const& d) {
                return d.verdict == Verdict::verified;
              });
  }

  VerificationReport verify_isomorphism(Presentation const&           p,
                                        std::span<std::int64_t const> phi,
                                        AltSumSemigroup const&        s,
                                        std::size_t                   max_len,
                                        std::size_t                   padding,
                                        std::uint64_t                 budget) {
    VerificationReport report;
    report.semigroup = s.to_string();
    report.max_len   = max_len;
    report.padding   = padding;
    report.homomorphism = verify_homomorphism(p, phi, s);
    for (auto g : phi) {
      report.phi.push_back(s.group().reduce(g));
    }
    std::set<std::int64_t> image_set(report.phi.begin(), report.phi.end());
    bool const onto = image_set.size() == s.generators().size();

    auto const partition = enumerate_classes(p, max_len, padding, budget);
    for (std::size_t d = 1; d <= max_len; ++d) {
      DegreeResult r{d, partition.count(d), s.count_elements(d), false,
                     Verdict::unresolved};
      if (report.homomorphism) {
        std::unordered_map<std::uint64_t, ASElement> element_of;
        for (std::uint64_t w = 0; w < partition.words_of_length(d); ++w) {
          auto e = s.class_of(image(partition.word(d, w), report.phi));
          auto [it, fresh] = element_of.emplace(partition.class_id(d, w), e);
          if (!fresh && it->second != e) {
            throw InternalError("oracle class at degree " + std::to_string(d)
                                + " maps to two different elements of "
                                + s.to_string());
          }
        }
        std::set<ASElement> distinct;
        for (auto const& [c, e] : element_of) {
          distinct.insert(e);
        }
        r.aligned = distinct.size() == element_of.size();
        if (onto && r.oracle < r.as) {
          throw InternalError("oracle count " + std::to_string(r.oracle)
                              + " below the count " + std::to_string(r.as) + " of "
                              + s.to_string() + " at degree " + std::to_string(d));
        }
        if (r.aligned && r.oracle == r.as) {
          r.verdict = Verdict::verified;
        }
      }
      report.degrees.push_back(r);
    }
    if (!report.homomorphism) {
      report.notes.push_back("the letter map is not a homomorphism onto "
                             + s.to_string());
    } else if (!onto) {
      report.notes.push_back("the letter map does not hit every generator of "
                             + s.to_string());
    }
    if (report.homomorphism && !report.all_verified()) {
      report.notes.push_back(
          "UNRESOLVED degrees are not refutations: oracle counts are upper "
          "bounds; raise the padding to find more cancellation witnesses");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theorem fixtures
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::int64_t> iota_values(std::int64_t n) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 0);
      return v;
    }
  }  // namespace

  TheoremInstance torus_theorem(std::uint32_t n) {
    auto d = build_family(family::Torus2{n});
    TheoremInstance t{"torus T(2," + std::to_string(n) + ") vs AS(Z_n,Z_n)",
                      std::move(d),
                      iota_values(n),
                      AltSumSemigroup(GroupG::zmod(n), iota_values(n)),
                      {}};
    if (n % 2 == 0) {
      t.warnings.push_back("n is even: T(2,n) is a link, whose semigroup is "
                           "stated for SAS(Z_n,Z_n)");
    }
    return t;
  }

  TheoremInstance torus_link_theorem(std::uint32_t n) {
    auto d = build_family(family::Torus2{n});
    TheoremInstance t{"torus link T(2," + std::to_string(n) + ") vs SAS(Z_n,Z_n)",
                      std::move(d),
                      iota_values(n),
                      AltSumSemigroup(GroupG::zmod(n), iota_values(n), true),
                      {}};
    if (n % 2 == 1) {
      t.warnings.push_back("n is odd: SAS(Z_n,Z_n) coincides with AS(Z_n,Z_n)");
    }
    return t;
  }

  TheoremInstance twist_theorem(std::uint32_t n) {
    auto d = build_family(family::Twist{n});
    return TheoremInstance{
        "twist knot tw_" + std::to_string(n) + " vs AS(Z_{2n+1},[n+2])",
        std::move(d),
        dtw_arc_residues(n, 2),
        AltSumSemigroup(GroupG::zmod(2 * std::int64_t{n} + 1), iota_values(n + 2)),
        {}};
  }

  TheoremInstance dtw_theorem(std::uint32_t n, std::uint32_t l) {
    auto            a = dtw_alphabet(n, l);
    TheoremInstance t{"double twist dtw(" + std::to_string(n) + "," + std::to_string(l)
                          + ") vs AS(Z_{ln+1},C_{n,l})",
                      build_family(family::DoubleTwist{n, l}),
                      dtw_arc_residues(n, l),
                      a.semigroup(),
                      {}};
    if ((std::uint64_t{n} * l) % 2 == 1) {
      t.warnings.push_back("nl is odd: the double twist isomorphism assumes nl even");
    }
    return t;
  }

  VerificationReport verify_theorem(TheoremInstance const& t,
                                    std::size_t            max_len,
                                    std::size_t            padding,
                                    std::uint64_t          budget) {
    auto report = verify_isomorphism(presentation_from_diagram(t.diagram), t.phi,
                                     t.semigroup, max_len, padding, budget);
    report.subject = t.name;
    report.notes.insert(report.notes.begin(), t.warnings.begin(), t.warnings.end());
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjecture probe
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<std::int64_t>> fox_colourings(Diagram const& d,
                                                        std::int64_t   modulus,
                                                        std::span<std::int64_t const> allowed,
                                                        std::size_t limit) {
    if (modulus < 1) {
      throw ParameterError("colouring modulus must be positive");
    }
    auto const arcs = d.arc_count();
    // A crossing is checked as soon as its largest arc is coloured.
    std::vector<std::vector<Crossing>> ready(arcs);
    for (auto const& x : d.crossings()) {
      ready[std::max({x.over, x.under[0], x.under[1]}).value].push_back(x);
    }
    std::set<std::int64_t> values;
    for (auto g : allowed) {
      values.insert(((g % modulus) + modulus) % modulus);
    }
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t>              colour(arcs, 0);
    std::set<std::int64_t>                 used;
    std::function<void(std::size_t)>       extend = [&](std::size_t i) {
      if (found.size() >= limit) {
        return;
      }
      if (i == arcs) {
        found.push_back(colour);
        return;
      }
      for (auto v : values) {
        if (used.count(v)) {
          continue;
        }
        colour[i] = v;
        bool ok   = std::all_of(ready[i].begin(), ready[i].end(), [&](Crossing const& x) {
          auto sum = colour[x.under[0].value] + colour[x.under[1].value]
                     - 2 * colour[x.over.value];
          return sum % modulus == 0;
        });
        if (ok) {
          used.insert(v);
          extend(i + 1);
          used.erase(v);
        }
      }
    };
    extend(0);
    return found;
  }

  VerificationReport conjecture_probe(std::uint32_t m,
                                      std::uint32_t l,
                                      std::uint32_t n,
                                      std::size_t   max_len,
                                      std::size_t   padding,
                                      std::uint64_t budget) {
    auto const alphabet = conjecture_alphabet(m, l, n);
    auto const diagram  = build_family(family::ConwayMLN{m, l, n});
    auto const p        = presentation_from_diagram(diagram);
    AltSumSemigroup const s(GroupG::zmod(alphabet.modulus), alphabet.set);

    std::vector<std::string> notes{
        "conjecture probe - a mismatch is a finding, not a refutation"};
    if (alphabet.warning) {
      notes.push_back(*alphabet.warning);
    }
    if (alphabet.set.size() != diagram.arc_count()) {
      notes.push_back("the conjectured alphabet has " + std::to_string(alphabet.set.size())
                      + " elements but the diagram has "
                      + std::to_string(diagram.arc_count()) + " arcs");
    }
    std::vector<std::int64_t> phi;
    for (std::size_t i = 0; i < diagram.arc_count(); ++i) {
      phi.push_back(alphabet.set[i % alphabet.set.size()]);
    }
    if (verify_homomorphism(p, phi, s)) {
      notes.push_back("labeling: arcs in diagram order onto the sorted alphabet");
    } else {
      auto colourings = fox_colourings(diagram, alphabet.modulus, alphabet.set, 1);
      if (!colourings.empty()) {
        phi = colourings.front();
        notes.push_back("labeling: arc-order labeling is not a homomorphism; "
                        "using the first injective Fox colouring into the alphabet");
      } else {
        notes.push_back("labeling: no injective Fox colouring into the alphabet "
                        "exists; reporting the arc-order labeling");
      }
    }
    auto report = verify_isomorphism(p, phi, s, max_len, padding, budget);
    report.subject = "C(" + std::to_string(m) + "," + std::to_string(l) + ","
                     + std::to_string(n) + ") vs conjectured AS(Z_"
                     + std::to_string(alphabet.modulus) + ", ...)";
    report.conjecture_probe = true;
    report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
    return report;
  }

}  // namespace knotsemi
