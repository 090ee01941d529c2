//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include "knotsemi/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "knotsemi/errors.hpp"

namespace knotsemi {

  using nlohmann::json;

  namespace {
    std::string slurp(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParameterError("cannot open file " + path);
      }
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }

    std::uint32_t arc_index(json const& v, std::uint64_t arcs, char const* what) {
      if (!v.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer arc index");
      }
      auto i = v.get<std::int64_t>();
      if (i < 0 || static_cast<std::uint64_t>(i) >= arcs) {
        throw ParseError(std::string(what) + " index " + std::to_string(i)
                         + " is out of range for " + std::to_string(arcs) + " arcs");
      }
      return static_cast<std::uint32_t>(i);
    }

    json word_json(Word const& w) {
      return json(w.letters());
    }
  }  // namespace

  Diagram diagram_from_pd_json(std::string_view text, std::string provenance) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("malformed diagram JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("arcs") || !doc.contains("crossings")) {
      throw ParseError("diagram JSON needs the keys \"arcs\" and \"crossings\"");
    }
    auto const& arcs = doc["arcs"];
    if (!arcs.is_number_integer() || arcs.get<std::int64_t>() < 1) {
      throw ParseError("\"arcs\" must be a positive integer");
    }
    auto const k = arcs.get<std::uint64_t>();
    if (!doc["crossings"].is_array()) {
      throw ParseError("\"crossings\" must be an array");
    }
    std::vector<Crossing> crossings;
    for (auto const& c : doc["crossings"]) {
      if (!c.is_object() || !c.contains("over") || !c.contains("under")
          || !c["under"].is_array() || c["under"].size() != 2) {
        throw ParseError("each crossing needs \"over\" and a two-element \"under\"");
      }
      crossings.emplace_back(arc_index(c["over"], k, "over"),
                             arc_index(c["under"][0], k, "under"),
                             arc_index(c["under"][1], k, "under"));
    }
    try {
      return Diagram(k, std::move(crossings), std::move(provenance));
    } catch (ParameterError const& e) {
      throw ParseError(e.what());
    }
  }

  Diagram read_pd_file(std::string const& path) {
    return diagram_from_pd_json(slurp(path), "pd:" + path);
  }

  json to_json(Diagram const& d) {
    json crossings = json::array();
    for (auto const& c : d.crossings()) {
      crossings.push_back(
          {{"over", c.over.value}, {"under", {c.under[0].value, c.under[1].value}}});
    }
    return {{"schema_version", schema_version},
            {"arcs", d.arc_count()},
            {"crossings", crossings},
            {"labels", d.arc_labels()},
            {"provenance", d.provenance()}};
  }

  json to_json(Presentation const& p) {
    json relations = json::array();
    for (auto const& r : p.relations()) {
      relations.push_back({word_json(r.lhs), word_json(r.rhs)});
    }
    return {{"schema_version", schema_version},
            {"alphabet", p.alphabet_size()},
            {"names", p.letter_names()},
            {"relations", relations}};
  }

  json to_json(VerificationReport const& r) {
    json degrees = json::array();
    for (auto const& d : r.degrees) {
      degrees.push_back({{"d", d.degree},
                         {"oracle", d.oracle},
                         {"as", d.as},
                         {"aligned", d.aligned},
                         {"verdict", to_string(d.verdict)}});
    }
    return {{"schema_version", schema_version},
            {"params",
             {{"subject", r.subject},
              {"semigroup", r.semigroup},
              {"phi", r.phi},
              {"max_len", r.max_len},
              {"pad", r.padding}}},
            {"homomorphism", r.homomorphism},
            {"conjecture_probe", r.conjecture_probe},
            {"degrees", degrees},
            {"all_verified", r.all_verified()},
            {"notes", r.notes}};
  }

  json to_json(RationalForm const& r) {
    return {{"num", r.num}, {"den", r.den}};
  }

  json to_json(GkEstimate const& e) {
    json value;
    switch (e.kind) {
      case GkEstimate::Kind::finite:
        value = e.value;
        break;
      case GkEstimate::Kind::infinite:
        value = "infinity";
        break;
      case GkEstimate::Kind::unresolved:
        value = "unresolved";
        break;
    }
    return {{"schema_version", schema_version},
            {"gk", value},
            {"method", to_string(e.method)},
            {"cumulative", e.cumulative},
            {"evidence", e.evidence}};
  }

  json to_json(ReidemeisterCheck const& c) {
    json degrees = json::array();
    for (std::size_t d = 0; d <= c.max_len; ++d) {
      degrees.push_back({{"d", d},
                         {"before", c.cumulative_before[d]},
                         {"after", c.cumulative_after[d]},
                         {"equal", c.equal_at(d)}});
    }
    json gk_before = to_json(c.gk_before);
    json gk_after  = to_json(c.gk_after);
    gk_before.erase("schema_version");
    gk_after.erase("schema_version");
    return {{"schema_version", schema_version},
            {"params", {{"before", c.before}, {"after", c.after},
                        {"max_len", c.max_len}, {"pad", c.padding}}},
            {"counts_before", c.counts_before},
            {"counts_after", c.counts_after},
            {"cumulative", degrees},
            {"equal_from_2", c.equal_from(2)},
            {"gk_before", gk_before},
            {"gk_after", gk_after},
            {"gk_equal", c.gk_before == c.gk_after}};
  }

  std::vector<std::uint64_t> parse_counts(std::string_view text) {
    std::vector<std::uint64_t> counts;
    std::istringstream         in{std::string(text)};
    std::string                line;
    std::size_t                line_no = 0;
    auto number = [&](std::string_view s, std::uint64_t& out) {
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
    };
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view row(line);
      if (row.find_first_not_of(" \r\t") == std::string_view::npos) {
        continue;
      }
      auto comma = row.find(',');
      std::uint64_t degree = 0, count = 0;
      if (comma == std::string_view::npos || !number(row.substr(0, comma), degree)
          || !number(row.substr(comma + 1), count)) {
        if (line_no == 1) {
          continue;  // header
        }
        throw ParseError("line " + std::to_string(line_no) + ": expected degree,count");
      }
      if (degree == 0 && counts.empty()) {
        if (count != 1) {
          throw ParseError("the degree-0 count must be 1");
        }
        continue;
      }
      if (degree != counts.size() + 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected degree "
                         + std::to_string(counts.size() + 1));
      }
      counts.push_back(count);
    }
    if (counts.empty()) {
      throw ParseError("no counts found");
    }
    return counts;
  }

  std::vector<std::uint64_t> read_counts_file(std::string const& path) {
    return parse_counts(slurp(path));
  }

}  // namespace knotsemi
