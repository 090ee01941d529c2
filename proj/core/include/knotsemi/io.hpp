//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// JSON and CSV serialization of diagrams, presentations, verification reports
// and growth data. Every JSON document written here carries
// "schema_version": 1; object keys are emitted sorted.

#ifndef KNOTSEMI_IO_HPP_
#define KNOTSEMI_IO_HPP_

#include <cstdint>      // for uint64_t, int64_t
#include <iosfwd>       // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <nlohmann/json.hpp>

#include "diagrams.hpp"      // for Diagram
#include "growth.hpp"        // for GkEstimate, RationalForm, ReidemeisterCheck
#include "oracle.hpp"        // for VerificationReport
#include "presentation.hpp"  // for Presentation

namespace knotsemi {

  inline constexpr int schema_version = 1;

  //! Parses {"arcs": k, "crossings": [{"over": i, "under": [j, j2]}, ...]}.
  //! Throws ParseError on malformed JSON or out-of-range indices.
  Diagram diagram_from_pd_json(std::string_view text, std::string provenance = "pd");

  //! Reads a planar-diagram JSON file; the provenance is "pd:<path>".
  Diagram read_pd_file(std::string const& path);

  nlohmann::json to_json(Diagram const& d);
  nlohmann::json to_json(Presentation const& p);
  nlohmann::json to_json(VerificationReport const& r);
  nlohmann::json to_json(RationalForm const& r);
  nlohmann::json to_json(GkEstimate const& e);
  nlohmann::json to_json(ReidemeisterCheck const& c);

  //! Header "degree,<value_name>" and one row per entry; row i has degree
  //! first_degree + i.
  template <typename T>
  void write_csv(std::ostream&    os,
                 std::span<T const> values,
                 std::string_view value_name,
                 std::size_t      first_degree = 0);

  //! Parses "degree,count" rows (a header line is optional). Degrees must be
  //! consecutive starting at 1; a degree-0 row must have count 1 and is
  //! skipped. Throws ParseError otherwise.
  std::vector<std::uint64_t> parse_counts(std::string_view text);
  std::vector<std::uint64_t> read_counts_file(std::string const& path);

}  // namespace knotsemi

#include "io.tpp"

#endif  // KNOTSEMI_IO_HPP_
