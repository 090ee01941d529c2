//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "knotsemi/altsum.hpp"
#include "knotsemi/errors.hpp"
#include "test-helpers.hpp"

namespace knotsemi {

  namespace {
    std::vector<std::int64_t> range(std::int64_t n) {
      std::vector<std::int64_t> v;
      for (std::int64_t i = 0; i < n; ++i) {
        v.push_back(i);
      }
      return v;
    }

    struct Fixture {
      std::int64_t              modulus;
      std::vector<std::int64_t> b;
      bool                      strong;
    };

    std::vector<Fixture> fixtures() {
      return {{3, range(3), false},
              {5, range(5), false},
              {4, range(4), true},
              {2, range(2), true},
              {5, {0, 1, 2, 3}, false},
              {7, {0, 1, 2, 3, 4}, false},
              {9, {0, 1, 2, 3, 5}, false},
              {7, {0, 1, 2, 3, 4}, true}};
    }

    GroupWord random_word(std::mt19937& rng, std::vector<std::int64_t> const& b,
                          std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(1, max_len);
      std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
      GroupWord w(len(rng));
      for (auto& x : w) {
        x = b[pick(rng)];
      }
      return w;
    }
  }  // namespace

  TEST_CASE("evenness in Z_m", "[altsum]") {
    auto z4 = GroupG::zmod(4);
    REQUIRE(z4.is_even(0));
    REQUIRE(z4.is_even(2));
    REQUIRE_FALSE(z4.is_even(1));
    REQUIRE_FALSE(z4.is_even(3));
    auto z5 = GroupG::zmod(5);
    for (std::int64_t g = 0; g < 5; ++g) {
      REQUIRE(z5.is_even(g));
    }
    REQUIRE(GroupG::integers().is_even(-4));
    REQUIRE_FALSE(GroupG::integers().is_even(3));
    REQUIRE_THROWS_AS(GroupG::zmod(0), ParameterError);
  }

  TEST_CASE("alternating sums and products", "[altsum]") {
    AltSumSemigroup s(GroupG::zmod(7), range(7));
    std::vector<std::int64_t> w{3, 5, 1};
    REQUIRE(s.alt(w) == (3 - 5 + 1 + 7) % 7);
    auto x = s.class_of(std::vector<std::int64_t>{2});
    auto y = s.class_of(std::vector<std::int64_t>{6});
    auto xy = s.multiply(x, y);
    REQUIRE(xy.length == 2);
    REQUIRE(xy.alt == (2 - 6 + 7) % 7);
    auto u = s.class_of(std::vector<std::int64_t>{1, 3});
    auto v = s.class_of(std::vector<std::int64_t>{4, 0, 2});
    auto uv = s.multiply(u, v);
    REQUIRE(uv.length == 5);
    REQUIRE(uv.alt == (u.alt + v.alt) % 7);
    REQUIRE_THROWS_AS(AltSumSemigroup(GroupG::zmod(5), {0, 1}).alt(std::vector<std::int64_t>{2}),
                      DomainError);
  }

  TEST_CASE("class_of examples", "[altsum]") {
    AltSumSemigroup z5(GroupG::zmod(5), range(5));
    REQUIRE(z5.alt(std::vector<std::int64_t>{1, 3, 2}) == 0);
    REQUIRE(z5.alt(std::vector<std::int64_t>{4}) == 4);

    AltSumSemigroup z3(GroupG::zmod(3), range(3));
    auto            e = z3.class_of(std::vector<std::int64_t>{0, 0});
    REQUIRE(e.length == 2);
    REQUIRE(e.alt == 0);
    REQUIRE_FALSE(e.even_count.has_value());

    AltSumSemigroup sas(GroupG::zmod(4), range(4), true);
    auto            f = sas.class_of(std::vector<std::int64_t>{1, 2, 3});
    REQUIRE(f.length == 3);
    REQUIRE(f.alt == 2);
    REQUIRE(f.even_count == 1);

    AltSumSemigroup c22(GroupG::zmod(5), {0, 1, 2, 3});
    auto            g = c22.class_of(std::vector<std::int64_t>{3, 1});
    REQUIRE(g.length == 2);
    REQUIRE(g.alt == 2);
    REQUIRE_THROWS_AS(c22.class_of(std::vector<std::int64_t>{4}), DomainError);

    // (1,a)(1,b) = (2,a-b) and (2,a)(3,b) = (5,a+b)
    REQUIRE(multiply(c22.element(1, 3), c22.element(1, 1)).alt == 2);
    REQUIRE(multiply(c22.element(2, 3), c22.element(3, 1)).alt == 4);
    REQUIRE(multiply(c22.element(2, 3), c22.element(3, 1)).length == 5);
  }

  TEST_CASE("AS(Z_m, Z_m) has m elements in every degree", "[altsum]") {
    for (std::int64_t m = 1; m <= 9; ++m) {
      AltSumSemigroup s(GroupG::zmod(m), range(m));
      for (std::size_t t = 1; t <= 8; ++t) {
        REQUIRE(s.count_elements(t) == static_cast<std::uint64_t>(m));
      }
    }
  }

  TEST_CASE("alt of a concatenation, 1000 random pairs", "[altsum][property]") {
    std::mt19937 rng(20241015);
    for (auto const& f : fixtures()) {
      AltSumSemigroup s(GroupG::zmod(f.modulus), f.b, f.strong);
      for (int i = 0; i < 1000; ++i) {
        auto u  = random_word(rng, f.b, 7);
        auto v  = random_word(rng, f.b, 7);
        auto uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        REQUIRE(s.class_of(uv) == s.multiply(s.class_of(u), s.class_of(v)));
        std::int64_t sign = u.size() % 2 == 0 ? 1 : -1;
        REQUIRE(s.alt(uv) == (((s.alt(u) + sign * s.alt(v)) % f.modulus) + f.modulus) % f.modulus);
      }
    }
  }

  TEST_CASE("associativity and cancellativity, 1000 random triples", "[altsum][property]") {
    std::mt19937 rng(7);
    for (auto const& s : {AltSumSemigroup(GroupG::zmod(7), {0, 1, 2, 3, 4}),
                          AltSumSemigroup(GroupG::zmod(4), range(4), true)}) {
      auto b = s.generators();
      for (int i = 0; i < 1000; ++i) {
        auto x = s.class_of(random_word(rng, b, 5));
        auto y = s.class_of(random_word(rng, b, 5));
        auto z = s.class_of(random_word(rng, b, 5));
        REQUIRE(s.multiply(s.multiply(x, y), z) == s.multiply(x, s.multiply(y, z)));
        // xz = yz implies x = y and zx = zy implies x = y
        REQUIRE((s.multiply(x, z) == s.multiply(y, z)) == (x == y));
        REQUIRE((s.multiply(z, x) == s.multiply(z, y)) == (x == y));
      }
    }
  }

  TEST_CASE("count_elements against exhaustive enumeration", "[altsum][property]") {
    for (auto const& f : fixtures()) {
      AltSumSemigroup s(GroupG::zmod(f.modulus), f.b, f.strong);
      for (std::size_t t = 1; t <= 5; ++t) {
        INFO(s.to_string() << ", t = " << t);
        auto expected = test::brute_force_count(f.modulus, s.generators(), f.strong, t);
        REQUIRE(s.count_elements(t) == expected);
        REQUIRE(s.elements(t).size() == expected);
      }
    }
  }

  TEST_CASE("count_elements examples", "[altsum]") {
    AltSumSemigroup z3(GroupG::zmod(3), range(3));
    REQUIRE(z3.count_elements(2) == 3);
    AltSumSemigroup c22(GroupG::zmod(5), {0, 1, 2, 3});
    REQUIRE(c22.count_elements(1) == 4);
    REQUIRE(c22.count_elements(2) == 5);
    REQUIRE_THROWS_AS(c22.count_elements(0), DomainError);
    AltSumSemigroup integers(GroupG::integers(), {0, 1});
    REQUIRE(integers.count_elements(3) == 4);  // alt in {-1, 0, 1, 2}
  }

  TEST_CASE("SAS and AS coincide for odd moduli", "[altsum]") {
    for (std::int64_t m : {3, 5, 7, 9}) {
      AltSumSemigroup as(GroupG::zmod(m), range(m));
      AltSumSemigroup sas(GroupG::zmod(m), range(m), true);
      for (std::size_t t = 1; t <= 5; ++t) {
        REQUIRE(as.count_elements(t) == sas.count_elements(t));
        for (auto const& e : sas.elements(t)) {
          REQUIRE(e.even_count == t);
        }
      }
    }
  }

  TEST_CASE("element construction is checked against reachable sets", "[altsum]") {
    AltSumSemigroup s(GroupG::zmod(5), {0, 1});
    REQUIRE(s.element(1, 1).alt == 1);
    REQUIRE_THROWS_AS(s.element(1, 3), DomainError);
    REQUIRE_THROWS_AS(s.element(2, 0, 1), DomainError);
    AltSumSemigroup sas(GroupG::zmod(4), range(4), true);
    REQUIRE_THROWS_AS(sas.element(1, 1), DomainError);
    REQUIRE_THROWS_AS(sas.element(1, 1, 1), DomainError);  // 1 is odd in Z_4
    REQUIRE(sas.element(1, 2, 1).even_count == 1);
    REQUIRE_THROWS_AS(s.multiply(s.element(1, 1), sas.element(1, 2, 1)), DomainError);
  }

  TEST_CASE("double twist alphabets", "[altsum]") {
    REQUIRE(dtw_alphabet(2, 2).set == std::vector<std::int64_t>{0, 1, 2, 3});
    REQUIRE(dtw_alphabet(2, 2).modulus == 5);
    for (std::uint32_t n = 1; n <= 6; ++n) {
      auto a = dtw_alphabet(n, 1);
      REQUIRE(a.modulus == n + 1);
      REQUIRE(a.set == range(n + 1));
    }
    for (std::uint32_t n = 2; n <= 5; ++n) {
      auto a = dtw_alphabet(n, 2);
      REQUIRE(a.modulus == 2 * n + 1);
      REQUIRE(a.set == range(n + 2));
    }
    REQUIRE(dtw_alphabet(3, 2).semigroup().to_string() == "AS(Z_7, {0,1,2,3,4})");
    REQUIRE_THROWS_AS(dtw_alphabet(0, 2), ParameterError);
  }

  TEST_CASE("conjecture alphabets", "[altsum]") {
    auto a = conjecture_alphabet(1, 1, 2);
    REQUIRE(a.modulus == 5);
    REQUIRE(a.set == std::vector<std::int64_t>{0, 1, 2, 3});
    for (auto [m, l, n] : {std::tuple{1u, 1u, 1u}, std::tuple{2u, 3u, 1u}, std::tuple{3u, 2u, 4u}}) {
      auto b = conjecture_alphabet(m, l, n);
      REQUIRE(b.modulus == (m * l + 1) * n + m);
      for (auto x : b.set) {
        REQUIRE(x >= 0);
        REQUIRE(x < b.modulus);
      }
    }
    REQUIRE_FALSE(a.warning.has_value());
    REQUIRE(conjecture_alphabet(1, 1, 1).modulus == 3);
    REQUIRE(conjecture_alphabet(2, 1, 2).warning.has_value());  // (2+1)2+2 = 8
  }

  TEST_CASE("canonical words", "[altsum]") {
    auto a22 = dtw_alphabet(2, 2);
    auto s22 = a22.semigroup();
    REQUIRE(canonical_word(a22, s22.element(3, 0)) == GroupWord{0, 0, 0});
    REQUIRE(canonical_word(a22, s22.element(2, 4)) == GroupWord{0, 1});
    REQUIRE(canonical_word(a22, s22.element(1, 3)) == GroupWord{3});
    auto a32 = dtw_alphabet(3, 2);
    auto w   = canonical_word(a32, a32.semigroup().element(2, 4));
    REQUIRE(a32.semigroup().alt(w) == 4);
    ASElement bad{1, 5, std::nullopt, 7};  // 5 is not a letter of C_{3,2}
    REQUIRE_THROWS_AS(canonical_word(a32, bad), DomainError);

    for (auto [n, l] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 4u},
                        std::pair{4u, 3u}}) {
      auto alphabet = dtw_alphabet(n, l);
      auto s        = alphabet.semigroup();
      for (std::size_t t = 2; t <= 4; ++t) {
        std::set<GroupWord> seen;
        for (auto const& e : s.elements(t)) {
          auto w = canonical_word(alphabet, e);
          REQUIRE(w.size() == t);
          REQUIRE(s.class_of(w) == e);
          REQUIRE(seen.insert(w).second);
          // shape: only the first two letters may be nonzero
          for (std::size_t i = 2; i < t; ++i) {
            REQUIRE(w[i] == 0);
          }
        }
        REQUIRE(seen.size() == s.count_elements(t));
      }
    }
  }

  TEST_CASE("canonical words are unique among the four shapes", "[altsum]") {
    // Enumerate every word of the shapes s00.., 0c0.., dc0.. and check that
    // each alternating sum is hit by exactly one shape once the priority
    // order is applied.
    for (auto [n, l] : {std::pair{2u, 2u}, std::pair{3u, 2u}}) {
      auto alphabet = dtw_alphabet(n, l);
      auto s        = alphabet.semigroup();
      auto const M  = alphabet.modulus;
      for (std::size_t t = 2; t <= 4; ++t) {
        std::map<std::int64_t, std::vector<GroupWord>> by_sum;
        auto add = [&](std::int64_t x0, std::int64_t x1) {
          GroupWord w(t, 0);
          w[0] = x0;
          w[1] = x1;
          by_sum[s.alt(w)].push_back(w);
        };
        for (std::int64_t x = 0; x <= n; ++x) {
          add(x, 0);
        }
        for (std::int64_t c = 1; c <= n; ++c) {
          add(0, c);
        }
        for (std::int64_t j = 2; j < l; ++j) {
          for (std::int64_t c = 1; c <= n; ++c) {
            add(j * n + 1, c);
          }
        }
        REQUIRE(by_sum.size() == static_cast<std::size_t>(M));
        for (auto const& [sum, words] : by_sum) {
          REQUIRE(canonical_word(alphabet, s.element(t, sum)) == words.front());
        }
      }
    }
  }

}  // namespace knotsemi
