#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pborel/ideal.hpp"

namespace pborel {

/// Named test ideals shipped with the library. "rp2" is the Stanley-Reisner
/// ideal of the 6-vertex minimal triangulation of the real projective plane,
/// the canonical ideal whose Betti table depends on whether the field has
/// characteristic 2.
std::optional<MonomialIdeal> builtin_ideal(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace pborel
