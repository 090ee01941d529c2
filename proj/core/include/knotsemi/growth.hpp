//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// Growth series P(t) of knot semigroups graded by word length (with the
// adjoined unit in degree 0), their inverses N(t) with P(t) N(t) = 1, and
// Gelfand-Kirillov dimension estimates of the semigroup algebras. All series
// arithmetic is exact integer arithmetic; overflow throws DomainError.

#ifndef KNOTSEMI_GROWTH_HPP_
#define KNOTSEMI_GROWTH_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t, uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "altsum.hpp"    // for AltSumSemigroup
#include "diagrams.hpp"  // for Diagram, FamilySpec
#include "oracle.hpp"    // for default_padding, default_word_budget

namespace knotsemi {

  using Polynomial = std::vector<std::int64_t>;  // ascending powers

  //! num(t) / den(t) with den(0) = 1.
  struct RationalForm {
    Polynomial num;
    Polynomial den;

    friend bool operator==(RationalForm const&, RationalForm const&) = default;
  };

  //! The first `terms` coefficients of r.
  std::vector<std::int64_t> expand(RationalForm const& r, std::size_t terms);

  //! a * b truncated to `terms` coefficients.
  std::vector<std::int64_t> convolve(std::span<std::int64_t const> a,
                                     std::span<std::int64_t const> b,
                                     std::size_t                   terms);

  //! (1 - t)^k as a polynomial.
  Polynomial one_minus_t_power(std::size_t k);

  struct GrowthSeries {
    //! coefficients[d] is the number of elements of degree d; coefficients[0]
    //! is 1.
    std::vector<std::int64_t>   coefficients;
    std::optional<RationalForm> rational;
    std::vector<std::string>    notes;

    [[nodiscard]] std::size_t truncation() const noexcept {
      return coefficients.empty() ? 0 : coefficients.size() - 1;
    }
  };

  struct SkewSeries {
    std::vector<std::int64_t>   coefficients;
    std::optional<RationalForm> rational;

    [[nodiscard]] std::size_t order() const noexcept {
      return coefficients.empty() ? 0 : coefficients.size() - 1;
    }
  };

  //! Tool constants of the growth classification.
  struct GrowthOptions {
    //! Trailing coefficients that must agree before a rational form is
    //! attached, and trailing finite differences that must vanish.
    std::size_t window = 3;
    //! Largest k tried for a denominator (1 - t)^k.
    std::size_t max_pole_order = 3;
    //! Consecutive ratios f(n+1)/f(n) >= 1 + delta that signal exponential
    //! growth.
    std::size_t ratio_window = 4;
    double      delta        = 0.2;
    //! Fewest cumulative values gk_dimension accepts without a rational form.
    std::size_t min_samples = 6;
  };

  //! Series 1 + sum counts[d-1] t^d. A rational form num / (1 - t)^k is
  //! attached for the smallest k for which (1 - t)^k P(t) ends in
  //! window - 1 zero coefficients.
  GrowthSeries growth_from_counts(std::span<std::uint64_t const> counts,
                                  GrowthOptions const&           opts = {});

  //! ((n - 1)t + 1) / (1 - t), expanded to `terms` degrees.
  GrowthSeries torus_growth(std::uint32_t n, std::size_t terms = 10);

  //! (1 + (n + l - 1)t + (nl - n - l + 1)t^2) / (1 - t). The two twist
  //! regions enter symmetrically; n_twists plays the role written m in the
  //! growth corollary.
  GrowthSeries dtw_growth(std::uint32_t n_twists, std::uint32_t l_twists,
                          std::size_t terms = 10);

  //! The power series inverse of p to `order`. With a rational form the
  //! coefficients of p beyond its truncation come from the closed form and
  //! the reciprocal closed form is attached; otherwise order is capped at the
  //! truncation of p. Throws DomainError if p(0) != 1.
  SkewSeries skew_growth(GrowthSeries const& p, std::size_t order);

  //! 1 + counts[0] + ... + counts[d-1]: the dimension of V^d for
  //! V = span{1, letters}. Throws DomainError if d exceeds counts.size().
  std::uint64_t cumulative_dimension(std::span<std::uint64_t const> counts, std::size_t d);

  struct GkEstimate {
    enum class Kind { finite, infinite, unresolved };
    enum class Method { exact_rational, finite_difference, exponential_detect, none };

    Kind                       kind   = Kind::unresolved;
    std::uint64_t              value  = 0;
    Method                     method = Method::none;
    std::vector<std::uint64_t> cumulative;
    std::string                evidence;

    friend bool operator==(GkEstimate const& x, GkEstimate const& y) {
      return x.kind == y.kind && (x.kind != Kind::finite || x.value == y.value);
    }
  };

  std::string to_string(GkEstimate::Method m);
  std::string to_string(GkEstimate const& e);

  //! Exact rational path if p has a rational form, else finite differences
  //! of cumulative dimensions, else exponential detection.
  GkEstimate gk_dimension(GrowthSeries const& p, GrowthOptions const& opts = {});
  GkEstimate gk_dimension(std::span<std::uint64_t const> counts,
                          GrowthOptions const&           opts = {});

  //! Finite-difference route only, ignoring any rational form.
  GkEstimate gk_dimension_by_differences(std::span<std::uint64_t const> counts,
                                         GrowthOptions const&           opts = {});

  //! The alternating sum semigroup a theorem identifies with the knot
  //! semigroup of the family, if one is known: trivial, hopf, torus2, twist,
  //! and dtw with nl even.
  std::optional<AltSumSemigroup> model_semigroup(FamilySpec const& spec);

  //! count_elements of s for degrees 1..degrees.
  std::vector<std::uint64_t> model_counts(AltSumSemigroup const& s, std::size_t degrees);

  struct ReidemeisterCheck {
    std::string                before;
    std::string                after;
    std::size_t                max_len = 0;
    std::size_t                padding = 0;
    std::vector<std::uint64_t> counts_before;
    std::vector<std::uint64_t> counts_after;
    //! cumulative_*[d] for d = 0..max_len.
    std::vector<std::uint64_t> cumulative_before;
    std::vector<std::uint64_t> cumulative_after;
    GkEstimate                 gk_before;
    GkEstimate                 gk_after;

    //! Cumulative dimensions agree at degree d.
    [[nodiscard]] bool equal_at(std::size_t d) const;
    //! Agreement for every degree from..max_len.
    [[nodiscard]] bool equal_from(std::size_t from) const;
  };

  //! Runs the oracle on both diagrams and compares the cumulative dimensions
  //! degree by degree.
  ReidemeisterCheck reidemeister_dimension_check(Diagram const& before,
                                                 Diagram const& after,
                                                 std::size_t    max_len,
                                                 std::size_t    padding = default_padding,
                                                 std::uint64_t  budget = default_word_budget);

}  // namespace knotsemi

#endif  // KNOTSEMI_GROWTH_HPP_
