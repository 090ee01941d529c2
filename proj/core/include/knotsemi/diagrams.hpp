//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// This file contains the arc/crossing representation of knot and link
// diagrams, builders for the parametric families (torus, twist, double twist,
// Conway normal forms) and Reidemeister moves as local rewrites.

#ifndef KNOTSEMI_DIAGRAMS_HPP_
#define KNOTSEMI_DIAGRAMS_HPP_

#include <array>        // for array
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, int64_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

namespace knotsemi {

  //! Index of an arc in a Diagram.
  struct ArcId {
    std::uint32_t value = 0;

    friend auto operator<=>(ArcId, ArcId) = default;
  };

  //! A crossing: one over arc and an unordered pair of under arcs.
  //!
  //! The under pair is stored sorted. Degenerate crossings are allowed: the
  //! two under arcs may coincide (Hopf link) and the over arc may coincide
  //! with an under arc (Reidemeister I kink).
  struct Crossing {
    ArcId                over;
    std::array<ArcId, 2> under;

    Crossing() = default;
    Crossing(ArcId over_arc, ArcId under1, ArcId under2);
    Crossing(std::uint32_t over_arc, std::uint32_t under1, std::uint32_t under2)
        : Crossing(ArcId{over_arc}, ArcId{under1}, ArcId{under2}) {}

    [[nodiscard]] bool has_under(ArcId a) const noexcept {
      return under[0] == a || under[1] == a;
    }

    friend auto operator<=>(Crossing const&, Crossing const&) = default;
  };

  namespace family {
    struct Trivial {};
    struct Hopf {};
    struct Torus2 {
      std::uint32_t n;
    };
    //! n clockwise half-twists and 2 anticlockwise half-twists.
    struct Twist {
      std::uint32_t n;
    };
    //! n clockwise and l anticlockwise half-twists; the 2-bridge knot C(l, n).
    struct DoubleTwist {
      std::uint32_t n;
      std::uint32_t l;
    };
    //! Conway normal form C(a_1, ..., a_k), positive twists only.
    struct Conway {
      std::vector<std::uint32_t> twists;
    };
    struct ConwayMLN {
      std::uint32_t m;
      std::uint32_t l;
      std::uint32_t n;
    };
    //! A diagram read from a JSON planar-diagram file.
    struct CustomPD {
      std::string path;
    };
  }  // namespace family

  using FamilySpec = std::variant<family::Trivial,
                                  family::Hopf,
                                  family::Torus2,
                                  family::Twist,
                                  family::DoubleTwist,
                                  family::Conway,
                                  family::ConwayMLN,
                                  family::CustomPD>;

  //! Parses `trivial | hopf | torus2:n | twist:n | dtw:n,l | conway:a1,...
  //! | cmln:m,l,n`. Throws ParameterError on malformed input or zero
  //! parameters.
  FamilySpec parse_family_spec(std::string_view text);

  //! Canonical textual form, the inverse of parse_family_spec.
  std::string to_string(FamilySpec const& spec);

  //! Throws ParameterError if a parameter is zero or a Conway list is empty.
  void validate(FamilySpec const& spec);

  class Diagram {
   public:
    //! Throws ParameterError if arc_count is zero, an arc index is out of
    //! range, or some arc terminates at an odd number of undercrossings.
    Diagram(std::size_t              arc_count,
            std::vector<Crossing>    crossings,
            std::string              provenance = "custom",
            std::vector<std::string> arc_labels = {});

    [[nodiscard]] std::size_t arc_count() const noexcept {
      return _arc_count;
    }

    [[nodiscard]] std::size_t crossing_count() const noexcept {
      return _crossings.size();
    }

    [[nodiscard]] std::vector<Crossing> const& crossings() const noexcept {
      return _crossings;
    }

    [[nodiscard]] std::string const& provenance() const noexcept {
      return _provenance;
    }

    [[nodiscard]] std::vector<std::string> const& arc_labels() const noexcept {
      return _arc_labels;
    }

    //! Number of times arc `a` occurs as an under arc over all crossings.
    [[nodiscard]] std::size_t under_occurrences(ArcId a) const;

    //! Structural equality: same arc count and same crossing multiset.
    friend bool operator==(Diagram const& x, Diagram const& y);

   private:
    std::size_t              _arc_count;
    std::vector<Crossing>    _crossings;
    std::string              _provenance;
    std::vector<std::string> _arc_labels;
  };

  Diagram build_family(FamilySpec const& spec);

  //! Residue in Z_{ln+1} carried by each arc of build_family(DoubleTwist{n, l}),
  //! in arc order: a_0, ..., a_n, a_{n+1}, a_{2n+1}, ..., a_{(l-1)n+1}.
  std::vector<std::int64_t> dtw_arc_residues(std::uint32_t n, std::uint32_t l);

  //! Closure of a braid on `strands` strands. Generator +i (1-based) is the
  //! crossing of positions i and i+1 with the left strand over, -i the mirror.
  Diagram braid_closure(std::size_t strands, std::span<int const> word);

  //! Alternating 4-plat diagram of C(a_1, ..., a_k).
  Diagram conway_diagram(std::span<std::uint32_t const> twists);

  struct ReidemeisterMove {
    enum class Kind { R1, R2, R3 };
    enum class Direction { insert, remove };

    Kind      kind;
    Direction direction;
    //! R1 insert: {arc}. R1 remove: {crossing}.
    //! R2 insert: {over arc, under arc}. R2 remove: {crossing, crossing}.
    //! R3: {c1, c2, c3} with c1, c2 sharing the top over arc and c3 the
    //! crossing of the middle strand over the bottom strand.
    std::vector<std::uint32_t> site;
  };

  //! Parses a kind (`r1`, `r2`, `r3`) and a site descriptor (`arc=I`,
  //! `crossing=C`, `over=Y,under=X`, `crossings=C1,C2[,C3]`).
  ReidemeisterMove parse_move(std::string_view kind, std::string_view site);

  std::string to_string(ReidemeisterMove const& move);

  //! Throws MoveError if the site does not match the local pattern of the
  //! move.
  Diagram apply_reidemeister(Diagram const& d, ReidemeisterMove const& move);

}  // namespace knotsemi

#endif  // KNOTSEMI_DIAGRAMS_HPP_
