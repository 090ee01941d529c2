//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// Builds arc/crossing diagrams from a vertical strand picture: a row of
// positions, crossings between neighbouring positions, and caps or a braid
// closure gluing the loose ends.

#ifndef KNOTSEMI_SRC_STRANDS_HPP_
#define KNOTSEMI_SRC_STRANDS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "knotsemi/diagrams.hpp"

namespace knotsemi::detail {

  class StrandTracer {
   public:
    static constexpr int undetermined = -1;

    explicit StrandTracer(std::size_t width);

    //! Crosses positions i and i + 1. `over` is 0 if the strand currently at
    //! i goes over, 1 if the strand at i + 1 does, or `undetermined` to be
    //! fixed later by make_alternating().
    void cross(std::size_t i, int over);

    void cap_top(std::size_t i, std::size_t j);
    void cap_bottom(std::size_t i, std::size_t j);
    void close_braid();

    //! Chooses every undetermined crossing so that each strand alternates
    //! over and under. Throws InternalError if the projection admits no
    //! alternating assignment.
    void make_alternating();

    [[nodiscard]] Diagram finish(std::string provenance);

   private:
    struct Slot {
      std::size_t in;
      std::size_t out;
    };
    struct Cross {
      std::array<Slot, 2> slots;
      int                 over;
    };

    std::size_t new_edge();
    std::size_t find(std::size_t e);
    void        glue(std::size_t a, std::size_t b);

    std::vector<std::size_t> _initial;
    std::vector<std::size_t> _current;
    std::vector<std::size_t> _glue;
    std::vector<Cross>       _crossings;
  };

}  // namespace knotsemi::detail

#endif  // KNOTSEMI_SRC_STRANDS_HPP_
