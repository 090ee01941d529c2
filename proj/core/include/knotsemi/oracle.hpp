//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// This file contains a brute force approximation of the least cancellative
// congruence generated by a presentation, restricted to words of bounded
// length, and the verification of isomorphisms with alternating sum
// semigroups by comparing class counts degree by degree.
//
// The closure only ever merges classes that the cancellative congruence also
// merges, so the computed partition refines the true one and the reported
// counts are upper bounds. If a homomorphism onto AS(G, B) exists the true
// counts are also lower bounded by the AS counts, hence equality settles the
// degree.

#ifndef KNOTSEMI_ORACLE_HPP_
#define KNOTSEMI_ORACLE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint64_t, int64_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "altsum.hpp"        // for AltSumSemigroup
#include "diagrams.hpp"      // for Diagram
#include "presentation.hpp"  // for Presentation, Word

namespace knotsemi {

  inline constexpr std::uint64_t default_word_budget = 5'000'000;
  inline constexpr std::size_t   default_padding     = 2;

  //! Number of words of length 1, ..., max_len over k letters, saturating at
  //! UINT64_MAX.
  std::uint64_t word_universe_size(std::size_t k, std::size_t max_len);

  class CongruencePartition {
   public:
    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _k;
    }
    [[nodiscard]] std::size_t max_report_len() const noexcept {
      return _max_len;
    }
    [[nodiscard]] std::size_t padding() const noexcept {
      return _padding;
    }
    //! Number of closure sweeps until the fixed point was reached.
    [[nodiscard]] std::size_t sweeps() const noexcept {
      return _sweeps;
    }

    //! Class counts for degrees 1..max_report_len (index 0 is degree 1).
    [[nodiscard]] std::vector<std::uint64_t> const& counts() const noexcept {
      return _counts;
    }
    [[nodiscard]] std::uint64_t count(std::size_t degree) const;

    //! Number of words of length `degree` (k^degree).
    [[nodiscard]] std::uint64_t words_of_length(std::size_t degree) const;

    //! The word of the given length with the given base-k rank (first letter
    //! most significant).
    [[nodiscard]] Word word(std::size_t degree, std::uint64_t rank) const;
    [[nodiscard]] std::uint64_t rank(Word const& w) const;

    //! Class identifier of a word; equal identifiers mean equal classes.
    //! Words up to max_report_len + padding are accepted.
    [[nodiscard]] std::uint64_t class_id(Word const& w) const;
    [[nodiscard]] std::uint64_t class_id(std::size_t degree, std::uint64_t rank) const;

    [[nodiscard]] bool same_class(Word const& u, Word const& v) const {
      return class_id(u) == class_id(v);
    }

   private:
    friend CongruencePartition enumerate_classes(Presentation const&,
                                                 std::size_t,
                                                 std::size_t,
                                                 std::uint64_t);

    std::size_t                _k       = 0;
    std::size_t                _max_len = 0;
    std::size_t                _padding = 0;
    std::size_t                _sweeps  = 0;
    std::vector<std::uint64_t> _offset;
    std::vector<std::uint64_t> _pow;
    std::vector<std::uint32_t> _rep;
    std::vector<std::uint64_t> _counts;
  };

  //! Closes the partition of all words of length 1..L+P under relation
  //! seeding, two-sided multiplication by letters and left/right
  //! cancellation, to a fixed point. Throws ResourceError if the number of
  //! words exceeds `budget`.
  CongruencePartition enumerate_classes(Presentation const& p,
                                        std::size_t         max_len,
                                        std::size_t         padding = default_padding,
                                        std::uint64_t       budget  = default_word_budget);

  //! True iff both sides of every relation have the same class in s after
  //! applying phi letterwise. phi[i] is the image of letter i. Throws
  //! ParameterError if phi does not cover the alphabet and DomainError if an
  //! image is not in B.
  bool verify_homomorphism(Presentation const&           p,
                           std::span<std::int64_t const> phi,
                           AltSumSemigroup const&        s);

  enum class Verdict { verified, unresolved };

  std::string to_string(Verdict v);

  struct DegreeResult {
    std::size_t   degree;
    std::uint64_t oracle;
    std::uint64_t as;
    //! Every oracle class maps into one element and distinct classes map to
    //! distinct elements.
    bool    aligned;
    Verdict verdict;
  };

  struct VerificationReport {
    std::string               subject;
    std::string               semigroup;
    std::vector<std::int64_t> phi;
    std::size_t               max_len = 0;
    std::size_t               padding = 0;
    bool                      homomorphism = false;
    bool                      conjecture_probe = false;
    std::vector<DegreeResult> degrees;
    std::vector<std::string>  notes;

    [[nodiscard]] bool all_verified() const;
  };

  //! Throws InternalError if an oracle count drops below the AS count
  //! while phi is a homomorphism onto B, which would mean the closure merged
  //! classes the congruence does not.
  VerificationReport verify_isomorphism(Presentation const&           p,
                                        std::span<std::int64_t const> phi,
                                        AltSumSemigroup const&        s,
                                        std::size_t                   max_len,
                                        std::size_t                   padding = default_padding,
                                        std::uint64_t budget = default_word_budget);

  //! A diagram, the arc labeling and the semigroup a theorem identifies its
  //! knot semigroup with.
  struct TheoremInstance {
    std::string               name;
    Diagram                   diagram;
    std::vector<std::int64_t> phi;
    AltSumSemigroup           semigroup;
    std::vector<std::string>  warnings;
  };

  //! T(2, n) and AS(Z_n, Z_n); warns when n is even.
  TheoremInstance torus_theorem(std::uint32_t n);
  //! T(2, n) and SAS(Z_n, Z_n); warns when n is odd.
  TheoremInstance torus_link_theorem(std::uint32_t n);
  //! Twist knot with n half-twists and AS(Z_{2n+1}, {0, ..., n+1}).
  TheoremInstance twist_theorem(std::uint32_t n);
  //! Double twist knot and AS(Z_{ln+1}, C_{n,l}); warns when nl is odd.
  TheoremInstance dtw_theorem(std::uint32_t n, std::uint32_t l);

  VerificationReport verify_theorem(TheoremInstance const& t,
                                    std::size_t            max_len,
                                    std::size_t            padding = default_padding,
                                    std::uint64_t          budget  = default_word_budget);

  //! Fox colourings f : arcs -> Z_m (f(x) + f(z) = 2 f(y) at every crossing
  //! with over arc y) that are injective with image inside `allowed`, in
  //! lexicographic order, at most `limit` of them. These are exactly the
  //! injective letter maps that are homomorphisms into AS(Z_m, allowed).
  std::vector<std::vector<std::int64_t>> fox_colourings(Diagram const& d,
                                                        std::int64_t   modulus,
                                                        std::span<std::int64_t const> allowed,
                                                        std::size_t    limit = 1);

  //! Builds C(m, l, n), labels its arcs by the conjectured alphabet and runs
  //! verify_isomorphism. A failed homomorphism under the arc-order labeling
  //! triggers a search over Fox colourings; the report records which
  //! labeling was used. Verdicts are findings, not pass/fail.
  VerificationReport conjecture_probe(std::uint32_t m,
                                      std::uint32_t l,
                                      std::uint32_t n,
                                      std::size_t   max_len,
                                      std::size_t   padding = default_padding,
                                      std::uint64_t budget  = default_word_budget);

}  // namespace knotsemi

#endif  // KNOTSEMI_ORACLE_HPP_
