//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "knotsemi/growth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <variant>

#include "knotsemi/errors.hpp"
#include "knotsemi/presentation.hpp"

namespace knotsemi {

  namespace {
    std::int64_t add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw DomainError("integer overflow in series arithmetic");
      }
      return r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw DomainError("integer overflow in series arithmetic");
      }
      return r;
    }

    void trim(Polynomial& p) {
      while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
      }
    }

    std::int64_t value_at_one(Polynomial const& p) {
      std::int64_t s = 0;
      for (auto c : p) {
        s = add(s, c);
      }
      return s;
    }

    // p / (1 - t), assuming p(1) = 0.
    Polynomial divide_one_minus_t(Polynomial const& p) {
      Polynomial q(p.size() > 1 ? p.size() - 1 : 1, 0);
      std::int64_t acc = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc  = add(acc, p[i]);
        q[i] = acc;
      }
      return q;
    }

    std::vector<std::int64_t> to_signed(std::span<std::uint64_t const> counts) {
      std::vector<std::int64_t> c{1};
      for (auto x : counts) {
        if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
          throw DomainError("count too large for series arithmetic");
        }
        c.push_back(static_cast<std::int64_t>(x));
      }
      return c;
    }
  }  // namespace

  Polynomial one_minus_t_power(std::size_t k) {
    Polynomial p{1};
    for (std::size_t i = 0; i < k; ++i) {
      Polynomial q(p.size() + 1, 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j]     = add(q[j], p[j]);
        q[j + 1] = add(q[j + 1], -p[j]);
      }
      p = std::move(q);
    }
    return p;
  }

  std::vector<std::int64_t> convolve(std::span<std::int64_t const> a,
                                     std::span<std::int64_t const> b,
                                     std::size_t                   terms) {
    std::vector<std::int64_t> c(terms, 0);
    for (std::size_t i = 0; i < std::min(a.size(), terms); ++i) {
      for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) {
        c[i + j] = add(c[i + j], mul(a[i], b[j]));
      }
    }
    return c;
  }

  std::vector<std::int64_t> expand(RationalForm const& r, std::size_t terms) {
    if (r.den.empty() || r.den[0] != 1) {
      throw DomainError("rational forms need a denominator with constant term 1");
    }
    std::vector<std::int64_t> s(terms, 0);
    for (std::size_t i = 0; i < terms; ++i) {
      std::int64_t v = i < r.num.size() ? r.num[i] : 0;
      for (std::size_t j = 1; j < r.den.size() && j <= i; ++j) {
        v = add(v, -mul(r.den[j], s[i - j]));
      }
      s[i] = v;
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Growth series
  ////////////////////////////////////////////////////////////////////////

  GrowthSeries growth_from_counts(std::span<std::uint64_t const> counts,
                                  GrowthOptions const&           opts) {
    GrowthSeries p;
    p.coefficients     = to_signed(counts);
    std::size_t const D = p.truncation();
    std::size_t const zeros = opts.window > 0 ? opts.window - 1 : 0;
    for (std::size_t k = 1; k <= opts.max_pole_order && zeros > 0; ++k) {
      // Enough terms that the numerator is pinned before the zero tail.
      if (D + 1 < zeros + k + 1) {
        break;
      }
      auto q = convolve(one_minus_t_power(k), p.coefficients, D + 1);
      if (std::all_of(q.end() - zeros, q.end(), [](auto x) { return x == 0; })) {
        trim(q);
        p.rational = RationalForm{std::move(q), one_minus_t_power(k)};
        break;
      }
    }
    return p;
  }

  GrowthSeries torus_growth(std::uint32_t n, std::size_t terms) {
    if (n == 0) {
      throw ParameterError("torus_growth needs n >= 1");
    }
    GrowthSeries p;
    p.rational     = RationalForm{{1, std::int64_t{n} - 1}, {1, -1}};
    trim(p.rational->num);
    p.coefficients = expand(*p.rational, terms + 1);
    if (n % 2 == 0) {
      p.notes.push_back("n is even, outside the closed form's odd hypothesis; the "
                        "series counts AS(Z_n,Z_n)");
    }
    return p;
  }

  GrowthSeries dtw_growth(std::uint32_t n_twists, std::uint32_t l_twists, std::size_t terms) {
    if (n_twists == 0 || l_twists == 0) {
      throw ParameterError("dtw_growth needs positive parameters");
    }
    std::int64_t const m = n_twists;
    std::int64_t const l = l_twists;
    GrowthSeries       p;
    p.rational = RationalForm{{1, m + l - 1, m * l - m - l + 1}, {1, -1}};
    trim(p.rational->num);
    p.coefficients = expand(*p.rational, terms + 1);
    if ((m * l) % 2 == 1) {
      p.notes.push_back("ml is odd, outside the closed form's hypothesis that ml is even");
    }
    return p;
  }

  SkewSeries skew_growth(GrowthSeries const& p, std::size_t order) {
    if (p.coefficients.empty() || p.coefficients[0] != 1) {
      throw DomainError("a growth series is invertible only with constant term 1");
    }
    std::vector<std::int64_t> coeffs = p.coefficients;
    SkewSeries                n;
    if (p.rational) {
      coeffs = expand(*p.rational, order + 1);
      if (p.rational->num.empty() || p.rational->num[0] != 1) {
        throw DomainError("the numerator of a growth series has constant term 1");
      }
      n.rational = RationalForm{p.rational->den, p.rational->num};
    } else {
      order = std::min(order, p.truncation());
    }
    n.coefficients.assign(order + 1, 0);
    n.coefficients[0] = 1;
    for (std::size_t i = 1; i <= order; ++i) {
      std::int64_t v = 0;
      for (std::size_t j = 1; j <= i && j < coeffs.size(); ++j) {
        v = add(v, mul(coeffs[j], n.coefficients[i - j]));
      }
      n.coefficients[i] = -v;
    }
    return n;
  }

  std::uint64_t cumulative_dimension(std::span<std::uint64_t const> counts, std::size_t d) {
    if (d > counts.size()) {
      throw DomainError("cumulative dimension at degree " + std::to_string(d)
                        + " needs counts up to that degree");
    }
    return std::accumulate(counts.begin(), counts.begin() + d, std::uint64_t{1});
  }

  ////////////////////////////////////////////////////////////////////////
  // Gelfand-Kirillov dimension
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(GkEstimate::Method m) {
    switch (m) {
      case GkEstimate::Method::exact_rational:
        return "exact-rational";
      case GkEstimate::Method::finite_difference:
        return "finite-difference";
      case GkEstimate::Method::exponential_detect:
        return "exponential-detect";
      case GkEstimate::Method::none:
        return "none";
    }
    return "none";
  }

  std::string to_string(GkEstimate const& e) {
    switch (e.kind) {
      case GkEstimate::Kind::finite:
        return std::to_string(e.value);
      case GkEstimate::Kind::infinite:
        return "infinity";
      case GkEstimate::Kind::unresolved:
        return "unresolved";
    }
    return "unresolved";
  }

  namespace {
    std::vector<std::uint64_t> cumulative_of(std::span<std::int64_t const> coefficients) {
      std::vector<std::uint64_t> f;
      std::uint64_t              acc = 0;
      for (auto c : coefficients) {
        acc += static_cast<std::uint64_t>(c);
        f.push_back(acc);
      }
      return f;
    }

    std::vector<std::uint64_t> counts_of(GrowthSeries const& p) {
      std::vector<std::uint64_t> c;
      for (std::size_t i = 1; i < p.coefficients.size(); ++i) {
        c.push_back(static_cast<std::uint64_t>(p.coefficients[i]));
      }
      return c;
    }

    std::optional<std::size_t> pole_order(Polynomial const& den) {
      for (std::size_t k = 0; k < den.size(); ++k) {
        auto p = one_minus_t_power(k);
        if (p == den) {
          return k;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  GkEstimate gk_dimension_by_differences(std::span<std::uint64_t const> counts,
                                         GrowthOptions const&           opts) {
    GkEstimate e;
    auto       coeffs = to_signed(counts);
    e.cumulative      = cumulative_of(coeffs);
    auto const& f     = e.cumulative;
    if (f.size() < opts.min_samples) {
      e.evidence = "only " + std::to_string(f.size()) + " cumulative values, need "
                   + std::to_string(opts.min_samples);
      return e;
    }
    std::vector<std::int64_t> diff(f.begin(), f.end());
    for (std::size_t order = 1; diff.size() > opts.window; ++order) {
      std::vector<std::int64_t> next;
      for (std::size_t i = 1; i < diff.size(); ++i) {
        next.push_back(add(diff[i], -diff[i - 1]));
      }
      diff = std::move(next);
      if (diff.size() >= opts.window
          && std::all_of(diff.end() - opts.window, diff.end(),
                         [](auto x) { return x == 0; })) {
        e.kind     = GkEstimate::Kind::finite;
        e.value    = order - 1;
        e.method   = GkEstimate::Method::finite_difference;
        e.evidence = "difference of order " + std::to_string(order)
                     + " vanishes on the last " + std::to_string(opts.window)
                     + " samples";
        return e;
      }
    }
    std::size_t sustained = 0;
    for (std::size_t i = f.size() - 1; i > 0 && sustained < opts.ratio_window; --i) {
      if (f[i - 1] == 0
          || static_cast<double>(f[i]) < (1.0 + opts.delta) * static_cast<double>(f[i - 1])) {
        break;
      }
      ++sustained;
    }
    if (sustained >= opts.ratio_window) {
      e.kind     = GkEstimate::Kind::infinite;
      e.method   = GkEstimate::Method::exponential_detect;
      e.evidence = "ratio f(n+1)/f(n) >= " + std::to_string(1.0 + opts.delta)
                   + " on the last " + std::to_string(opts.ratio_window) + " samples";
      return e;
    }
    e.evidence = "no vanishing difference and no sustained exponential ratio";
    return e;
  }

  GkEstimate gk_dimension(GrowthSeries const& p, GrowthOptions const& opts) {
    if (p.rational) {
      if (auto k = pole_order(p.rational->den)) {
        Polynomial num = p.rational->num;
        trim(num);
        while (*k > 0 && value_at_one(num) == 0) {
          num = divide_one_minus_t(num);
          --*k;
        }
        if (value_at_one(num) != 0) {
          GkEstimate e;
          e.kind       = GkEstimate::Kind::finite;
          e.value      = *k;
          e.method     = GkEstimate::Method::exact_rational;
          e.cumulative = cumulative_of(p.coefficients);
          e.evidence   = "P(t)/(1-t) has denominator (1-t)^" + std::to_string(*k + 1)
                       + " and numerator nonzero at t=1";
          return e;
        }
      }
    }
    auto counts = counts_of(p);
    return gk_dimension_by_differences(counts, opts);
  }

  GkEstimate gk_dimension(std::span<std::uint64_t const> counts, GrowthOptions const& opts) {
    return gk_dimension(growth_from_counts(counts, opts), opts);
  }

  ////////////////////////////////////////////////////////////////////////
  // Models and Reidemeister comparison
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    std::vector<std::int64_t> range(std::int64_t n) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 0);
      return v;
    }
  }  // namespace

  std::optional<AltSumSemigroup> model_semigroup(FamilySpec const& spec) {
    using Result = std::optional<AltSumSemigroup>;
    return std::visit(
        overloaded{
            [](family::Trivial const&) -> Result {
              return AltSumSemigroup(GroupG::zmod(1), {0});
            },
            [](family::Hopf const&) -> Result {
              return AltSumSemigroup(GroupG::zmod(2), {0, 1}, true);
            },
            [](family::Torus2 const& f) -> Result {
              return AltSumSemigroup(GroupG::zmod(f.n), range(f.n), f.n % 2 == 0);
            },
            [](family::Twist const& f) -> Result {
              return AltSumSemigroup(GroupG::zmod(2 * std::int64_t{f.n} + 1),
                                     range(std::int64_t{f.n} + 2));
            },
            [](family::DoubleTwist const& f) -> Result {
              if ((std::uint64_t{f.n} * f.l) % 2 == 1) {
                return std::nullopt;
              }
              return dtw_alphabet(f.n, f.l).semigroup();
            },
            [](auto const&) -> Result { return std::nullopt; }},
        spec);
  }

  std::vector<std::uint64_t> model_counts(AltSumSemigroup const& s, std::size_t degrees) {
    std::vector<std::uint64_t> c;
    for (std::size_t d = 1; d <= degrees; ++d) {
      c.push_back(s.count_elements(d));
    }
    return c;
  }

  bool ReidemeisterCheck::equal_at(std::size_t d) const {
    return d < cumulative_before.size() && d < cumulative_after.size()
           && cumulative_before[d] == cumulative_after[d];
  }

  bool ReidemeisterCheck::equal_from(std::size_t from) const {
    for (std::size_t d = from; d <= max_len; ++d) {
      if (!equal_at(d)) {
        return false;
      }
    }
    return true;
  }

  ReidemeisterCheck reidemeister_dimension_check(Diagram const& before,
                                                 Diagram const& after,
                                                 std::size_t    max_len,
                                                 std::size_t    padding,
                                                 std::uint64_t  budget) {
    ReidemeisterCheck r;
    r.before  = before.provenance();
    r.after   = after.provenance();
    r.max_len = max_len;
    r.padding = padding;
    r.counts_before
        = enumerate_classes(presentation_from_diagram(before), max_len, padding, budget)
              .counts();
    r.counts_after
        = enumerate_classes(presentation_from_diagram(after), max_len, padding, budget)
              .counts();
    for (std::size_t d = 0; d <= max_len; ++d) {
      r.cumulative_before.push_back(cumulative_dimension(r.counts_before, d));
      r.cumulative_after.push_back(cumulative_dimension(r.counts_after, d));
    }
    r.gk_before = gk_dimension(r.counts_before);
    r.gk_after  = gk_dimension(r.counts_after);
    return r;
  }

}  // namespace knotsemi
