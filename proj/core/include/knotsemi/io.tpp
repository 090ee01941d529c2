//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#ifndef KNOTSEMI_IO_TPP_
#define KNOTSEMI_IO_TPP_

#include <ostream>

namespace knotsemi {

  template <typename T>
  void write_csv(std::ostream&      os,
                 std::span<T const> values,
                 std::string_view   value_name,
                 std::size_t        first_degree) {
    os << "degree," << value_name << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << first_degree + i << ',' << values[i] << '\n';
    }
  }

}  // namespace knotsemi

#endif  // KNOTSEMI_IO_TPP_
