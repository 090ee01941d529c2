//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#ifndef KNOTSEMI_KNOTSEMI_HPP_
#define KNOTSEMI_KNOTSEMI_HPP_

#include "altsum.hpp"        // IWYU pragma: export
#include "diagrams.hpp"      // IWYU pragma: export
#include "errors.hpp"        // IWYU pragma: export
#include "growth.hpp"        // IWYU pragma: export
#include "io.hpp"            // IWYU pragma: export
#include "oracle.hpp"        // IWYU pragma: export
#include "presentation.hpp"  // IWYU pragma: export

#endif  // KNOTSEMI_KNOTSEMI_HPP_
