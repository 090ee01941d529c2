//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "knotsemi/altsum.hpp"
#include "knotsemi/diagrams.hpp"
#include "knotsemi/errors.hpp"
#include "knotsemi/oracle.hpp"
#include "knotsemi/presentation.hpp"

namespace knotsemi {

  namespace {
    using counts = std::vector<std::uint64_t>;

    Presentation trefoil() {
      return presentation_from_diagram(build_family(family::Torus2{3}));
    }
  }  // namespace

  TEST_CASE("word universe sizes", "[oracle]") {
    REQUIRE(word_universe_size(2, 3) == 14);
    REQUIRE(word_universe_size(1, 5) == 5);
    REQUIRE(word_universe_size(10, 30) == UINT64_MAX);
  }

  TEST_CASE("free and trivial presentations", "[oracle]") {
    REQUIRE(enumerate_classes(Presentation(2, {}), 3, 0).counts() == counts{2, 4, 8});
    REQUIRE(enumerate_classes(Presentation(2, {}), 3, 2).counts() == counts{2, 4, 8});
    for (std::size_t L = 1; L <= 6; ++L) {
      REQUIRE(enumerate_classes(Presentation(1, {}), L, 2).counts() == counts(L, 1));
    }
  }

  TEST_CASE("trefoil closure", "[oracle]") {
    auto p = enumerate_classes(trefoil(), 2, 1);
    REQUIRE(p.count(2) == 3);
    REQUIRE(p.count(1) == 3);
    REQUIRE(p.same_class(Word{0, 0}, Word{1, 1}));
    REQUIRE(p.same_class(Word{1, 1}, Word{2, 2}));
    REQUIRE_FALSE(p.same_class(Word{0}, Word{1}));
    REQUIRE(p.same_class(Word{0, 1}, Word{1, 2}));
    REQUIRE_THROWS_AS(p.count(3), DomainError);
    REQUIRE(p.word(2, p.rank(Word{2, 1})) == Word{2, 1});
    REQUIRE(p.words_of_length(3) == 27);
  }

  TEST_CASE("Hopf link closure", "[oracle]") {
    auto p = enumerate_classes(presentation_from_diagram(build_family(family::Hopf{})), 5, 1);
    REQUIRE(p.counts() == counts{2, 3, 4, 5, 6});
  }

  TEST_CASE("counts decrease monotonically with padding", "[oracle]") {
    for (auto spec : {FamilySpec{family::Torus2{3}}, FamilySpec{family::DoubleTwist{2, 2}},
                      FamilySpec{family::Conway{{2, 2}}}}) {
      auto  p    = presentation_from_diagram(build_family(spec));
      auto  prev = enumerate_classes(p, 3, 0).counts();
      for (std::size_t pad = 1; pad <= 2; ++pad) {
        auto next = enumerate_classes(p, 3, pad).counts();
        for (std::size_t d = 0; d < 3; ++d) {
          REQUIRE(next[d] <= prev[d]);
        }
        prev = next;
      }
    }
  }

  TEST_CASE("counts do not depend on letter order", "[oracle]") {
    auto p = presentation_from_diagram(build_family(family::DoubleTwist{3, 2}));
    std::vector<letter_type> perm{3, 0, 4, 1, 2};
    REQUIRE(enumerate_classes(p, 3, 1).counts()
            == enumerate_classes(relabel(p, perm), 3, 1).counts());
  }

  TEST_CASE("classes are length homogeneous", "[oracle]") {
    auto p = enumerate_classes(trefoil(), 3, 1);
    std::set<std::uint64_t> ids2, ids3;
    for (std::uint64_t r = 0; r < p.words_of_length(2); ++r) {
      ids2.insert(p.class_id(2, r));
    }
    for (std::uint64_t r = 0; r < p.words_of_length(3); ++r) {
      ids3.insert(p.class_id(3, r));
    }
    for (auto id : ids2) {
      REQUIRE(ids3.count(id) == 0);
    }
  }

  TEST_CASE("soundness: oracle counts bound AS counts from above", "[oracle]") {
    for (auto const& t : {torus_theorem(5), dtw_theorem(2, 2), twist_theorem(3)}) {
      for (std::size_t pad = 0; pad <= 2; ++pad) {
        auto r = verify_theorem(t, 3, pad);
        REQUIRE(r.homomorphism);
        for (auto const& d : r.degrees) {
          REQUIRE(d.oracle >= d.as);
          REQUIRE((d.verdict == Verdict::verified) == (d.oracle == d.as && d.aligned));
        }
      }
    }
  }

  TEST_CASE("a kink collapses to the original letter", "[oracle]") {
    auto unknot = build_family(family::Trivial{});
    auto twice  = apply_reidemeister(apply_reidemeister(unknot, parse_move("r1", "arc=0")),
                                     parse_move("r1", "arc=0"));
    REQUIRE(twice.arc_count() == 2);
    auto p = enumerate_classes(presentation_from_diagram(twice), 5, 2);
    REQUIRE(p.counts() == counts(5, 1));
    REQUIRE(p.same_class(Word{0}, Word{1}));
  }

  TEST_CASE("budget", "[oracle]") {
    REQUIRE_THROWS_AS(enumerate_classes(trefoil(), 10, 2, 1000), ResourceError);
    try {
      enumerate_classes(trefoil(), 3, 0, 10);
    } catch (ResourceError const& e) {
      REQUIRE(e.required() == 39);
    }
    REQUIRE_THROWS_AS(enumerate_classes(trefoil(), 0, 2), ParameterError);
  }

  TEST_CASE("homomorphism check", "[oracle]") {
    AltSumSemigroup z3(GroupG::zmod(3), {0, 1, 2});
    std::vector<std::int64_t> good{0, 1, 2}, bad{0, 1, 1}, short_map{0, 1};
    REQUIRE(verify_homomorphism(trefoil(), good, z3));
    REQUIRE_FALSE(verify_homomorphism(trefoil(), bad, z3));
    REQUIRE_THROWS_AS(verify_homomorphism(trefoil(), short_map, z3), ParameterError);
    AltSumSemigroup z2(GroupG::zmod(2), {0, 1});
    std::vector<std::int64_t> hopf_map{0, 1};
    REQUIRE(verify_homomorphism(presentation_from_diagram(build_family(family::Hopf{})),
                                hopf_map, z2));
    std::vector<std::int64_t> outside{0, 1, 5};
    REQUIRE_THROWS_AS(verify_homomorphism(trefoil(), outside,
                                          AltSumSemigroup(GroupG::zmod(7), {0, 1, 2})),
                      DomainError);
  }

  TEST_CASE("theorem instances", "[oracle]") {
    auto r = verify_theorem(torus_theorem(3), 4, 2);
    REQUIRE(r.homomorphism);
    REQUIRE(r.all_verified());
    for (auto const& d : r.degrees) {
      REQUIRE(d.oracle == 3);
      REQUIRE(d.as == 3);
    }

    auto dtw = verify_theorem(dtw_theorem(2, 2), 4, 2);
    REQUIRE(dtw.all_verified());
    counts oracle;
    for (auto const& d : dtw.degrees) {
      oracle.push_back(d.oracle);
    }
    REQUIRE(oracle == counts{4, 5, 5, 5});

    REQUIRE(verify_theorem(torus_link_theorem(4), 3, 2).all_verified());
    REQUIRE(verify_theorem(twist_theorem(2), 3, 2).all_verified());
    REQUIRE(verify_theorem(twist_theorem(3), 3, 2).all_verified());

    REQUIRE_FALSE(torus_theorem(4).warnings.empty());
    REQUIRE_FALSE(torus_link_theorem(5).warnings.empty());
    REQUIRE_FALSE(dtw_theorem(3, 3).warnings.empty());
    REQUIRE(dtw_theorem(3, 2).warnings.empty());
  }

  TEST_CASE("a labeling that is not onto B is not verified", "[oracle]") {
    // Trefoil letters into AS(Z_3, Z_3) through a non-homomorphism.
    AltSumSemigroup           z3(GroupG::zmod(3), {0, 1, 2});
    std::vector<std::int64_t> bad{0, 1, 1};
    auto r = verify_isomorphism(trefoil(), bad, z3, 2, 1);
    REQUIRE_FALSE(r.homomorphism);
    REQUIRE_FALSE(r.all_verified());
  }

  TEST_CASE("Fox colourings", "[oracle]") {
    auto d = build_family(family::Torus2{3});
    std::vector<std::int64_t> all{0, 1, 2};
    auto cs = fox_colourings(d, 3, all, 100);
    REQUIRE(cs.size() == 6);  // injective colourings are the permutations of Z_3
    for (auto const& c : cs) {
      AltSumSemigroup z3(GroupG::zmod(3), all);
      REQUIRE(verify_homomorphism(trefoil(), c, z3));
    }
    REQUIRE(fox_colourings(d, 5, all, 100).empty());
  }

  TEST_CASE("conjecture probe", "[oracle]") {
    auto r = conjecture_probe(1, 1, 2, 3, 2);
    REQUIRE(r.conjecture_probe);
    REQUIRE(r.degrees.size() == 3);
    REQUIRE_FALSE(r.notes.empty());
    auto odd = conjecture_probe(1, 1, 1, 3, 2);
    REQUIRE(odd.degrees.size() == 3);
    auto even = conjecture_probe(2, 1, 2, 2, 1);
    bool warned = false;
    for (auto const& n : even.notes) {
      warned = warned || n.find("even") != std::string::npos;
    }
    REQUIRE(warned);
  }

}  // namespace knotsemi
