//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#ifndef KNOTSEMI_PRESENTATION_HPP_
#define KNOTSEMI_PRESENTATION_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <initializer_list>
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "diagrams.hpp"  // for Diagram

namespace knotsemi {

  using letter_type = std::uint32_t;

  //! A nonempty word over the letters 0, ..., alphabet_size - 1.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<letter_type> letters);
    Word(std::initializer_list<letter_type> letters)
        : Word(std::vector<letter_type>(letters)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] letter_type operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] std::vector<letter_type> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] auto begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _letters.end();
    }

    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<letter_type> _letters;
  };

  //! A defining relation lhs = rhs with |lhs| = |rhs|, stored with
  //! lhs < rhs so that relations compare as unordered pairs.
  struct Relation {
    Word lhs;
    Word rhs;

    //! Throws DomainError if the sides have different lengths or are equal.
    Relation(Word u, Word v);

    friend auto operator<=>(Relation const&, Relation const&) = default;
  };

  class Presentation {
   public:
    //! Relations are validated against the alphabet, deduplicated and
    //! sorted.
    Presentation(std::size_t              alphabet_size,
                 std::vector<Relation>    relations,
                 std::vector<std::string> letter_names = {});

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }
    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    [[nodiscard]] std::vector<std::string> const& letter_names() const noexcept {
      return _letter_names;
    }

    //! Equality of alphabet size and relation sets; names are ignored.
    friend bool operator==(Presentation const& x, Presentation const& y) {
      return x._alphabet_size == y._alphabet_size && x._relations == y._relations;
    }

   private:
    std::size_t              _alphabet_size;
    std::vector<Relation>    _relations;
    std::vector<std::string> _letter_names;
  };

  //! Letters are the arcs; every crossing with over arc y and under arcs
  //! x, z contributes xy = yz and yx = zy.
  Presentation presentation_from_diagram(Diagram const& d);

  //! Renames letter i to permutation[i]. Throws ParameterError unless the
  //! permutation is a bijection on the alphabet.
  Presentation relabel(Presentation const& p, std::span<letter_type const> permutation);

  //! A permutation taking p to q, found by backtracking over letter images,
  //! or nullopt if none exists. Intended for small alphabets.
  std::optional<std::vector<letter_type>> find_relabeling(Presentation const& p,
                                                          Presentation const& q);

}  // namespace knotsemi

#endif  // KNOTSEMI_PRESENTATION_HPP_
