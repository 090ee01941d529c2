//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// This file contains exact arithmetic in the alternating sum semigroups
// AS(G, B) (words over B modulo length and alternating sum) and their strong
// variants SAS(G, B) (which also remember the number of even letters).

#ifndef KNOTSEMI_ALTSUM_HPP_
#define KNOTSEMI_ALTSUM_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t, uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

namespace knotsemi {

  //! Either Z_m (m >= 1) or Z.
  class GroupG {
   public:
    static GroupG zmod(std::int64_t m);
    static GroupG integers() noexcept {
      return GroupG(0);
    }

    //! 0 for Z.
    [[nodiscard]] std::int64_t modulus() const noexcept {
      return _modulus;
    }
    [[nodiscard]] bool finite() const noexcept {
      return _modulus != 0;
    }
    [[nodiscard]] std::int64_t reduce(std::int64_t g) const noexcept {
      if (_modulus == 0) {
        return g;
      }
      g %= _modulus;
      return g < 0 ? g + _modulus : g;
    }

    //! g is even iff g = 2h for some h in the group. In Z_m with m odd every
    //! element is even.
    [[nodiscard]] bool is_even(std::int64_t g) const;

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(GroupG, GroupG) = default;

   private:
    explicit GroupG(std::int64_t m) noexcept : _modulus(m) {}
    std::int64_t _modulus;
  };

  //! A word over B, written with the group elements themselves.
  using GroupWord = std::vector<std::int64_t>;

  //! The class of a word: its length, alternating sum, and for strong
  //! semigroups the number of even letters.
  struct ASElement {
    std::size_t                length = 0;
    std::int64_t               alt    = 0;
    std::optional<std::size_t> even_count;
    //! Modulus of the ambient group (0 for Z); elements of different groups
    //! never compare equal and cannot be multiplied.
    std::int64_t modulus = 0;

    friend auto operator<=>(ASElement const&, ASElement const&) = default;
  };

  //! Product of classes: lengths add, alt(uv) = alt(u) + (-1)^{|u|} alt(v),
  //! even counts add. Throws DomainError when x and y come from different
  //! kinds of semigroup.
  ASElement multiply(ASElement const& x, ASElement const& y);

  class AltSumSemigroup {
   public:
    //! B is reduced into G and deduplicated. Throws ParameterError if B is
    //! empty.
    AltSumSemigroup(GroupG g, std::vector<std::int64_t> b, bool strong = false);

    [[nodiscard]] GroupG group() const noexcept {
      return _group;
    }
    //! B, sorted.
    [[nodiscard]] std::vector<std::int64_t> const& generators() const noexcept {
      return _b;
    }
    [[nodiscard]] bool strong() const noexcept {
      return _strong;
    }
    [[nodiscard]] bool contains(std::int64_t g) const;

    //! b_1 - b_2 + b_3 - ... computed in G. Throws DomainError on an empty
    //! word or a letter outside B.
    [[nodiscard]] std::int64_t alt(std::span<std::int64_t const> w) const;

    [[nodiscard]] ASElement class_of(std::span<std::int64_t const> w) const;

    //! The element with the given parts, checked against the set of classes
    //! of words of that length. Throws DomainError if no word realises it.
    [[nodiscard]] ASElement element(std::size_t                length,
                                    std::int64_t               alt,
                                    std::optional<std::size_t> even_count
                                    = std::nullopt) const;

    //! multiply() after checking both factors belong to this semigroup.
    [[nodiscard]] ASElement multiply(ASElement const& x, ASElement const& y) const;

    //! All classes of words of length t, sorted. Throws DomainError if t = 0.
    [[nodiscard]] std::vector<ASElement> elements(std::size_t t) const;

    //! Number of classes of words of length t, by the reachable set recurrence
    //! S_1 = B, S_{t+1} = {b - s : b in B, s in S_t}.
    [[nodiscard]] std::uint64_t count_elements(std::size_t t) const;

    [[nodiscard]] std::string to_string() const;

   private:
    GroupG                    _group;
    std::vector<std::int64_t> _b;
    bool                      _strong;
  };

  //! C_{n,l} = {0, ..., n} u {jn + 1 : 0 <= j < l} inside Z_{ln+1}.
  struct DtwAlphabet {
    std::uint32_t             n;
    std::uint32_t             l;
    std::int64_t              modulus;
    std::vector<std::int64_t> set;

    [[nodiscard]] AltSumSemigroup semigroup() const {
      return AltSumSemigroup(GroupG::zmod(modulus), set);
    }
  };

  DtwAlphabet dtw_alphabet(std::uint32_t n, std::uint32_t l);

  struct ConjectureAlphabet {
    std::uint32_t             m;
    std::uint32_t             l;
    std::uint32_t             n;
    std::int64_t              modulus;
    std::vector<std::int64_t> set;
    //! Set when (ml + 1)n + m is even, outside the conjecture's hypothesis.
    std::optional<std::string> warning;
  };

  //! The union of {i : 0 <= i <= n + 1}, {jn + 1 : 0 <= j <= l + 1} and
  //! {(kl + 1)n + k : 0 <= k < m}, reduced modulo (ml + 1)n + m.
  ConjectureAlphabet conjecture_alphabet(std::uint32_t m, std::uint32_t l, std::uint32_t n);

  //! The canonical representative of e in AS(Z_{ln+1}, C_{n,l}): one of
  //! 0 0 0^{t-2}, c 0 0^{t-2}, 0 c 0^{t-2} or d c 0^{t-2} with c in {1..n}
  //! and d in {2n+1, 3n+1, ..., (l-1)n+1}. Length-1 elements are their own
  //! letter.
  GroupWord canonical_word(DtwAlphabet const& a, ASElement const& e);

}  // namespace knotsemi

#endif  // KNOTSEMI_ALTSUM_HPP_
