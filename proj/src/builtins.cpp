#include "pborel/builtins.hpp"

namespace pborel {

namespace {

MonomialIdeal make(std::size_t n, const std::vector<std::vector<Exponent>>& rows) {
  std::vector<Monomial> gens;
  gens.reserve(rows.size());
  for (const auto& r : rows) gens.emplace_back(r);
  return minimalize(n, std::move(gens));
}

}  // namespace

std::optional<MonomialIdeal> builtin_ideal(const std::string& name) {
  if (name == "rp2") {
    return make(6, {{1, 1, 1, 0, 0, 0},
                    {1, 1, 0, 1, 0, 0},
                    {1, 0, 1, 0, 1, 0},
                    {0, 1, 0, 1, 1, 0},
                    {0, 0, 1, 1, 1, 0},
                    {0, 1, 1, 0, 0, 1},
                    {1, 0, 0, 1, 0, 1},
                    {0, 0, 1, 1, 0, 1},
                    {1, 0, 0, 0, 1, 1},
                    {0, 1, 0, 0, 1, 1}});
  }
  if (name == "maximal3") {
    return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  }
  if (name == "cycle5") {
    // Stanley-Reisner ideal of the 5-cycle
    return make(5, {{1, 0, 1, 0, 0},
                    {1, 0, 0, 1, 0},
                    {0, 1, 0, 1, 0},
                    {0, 1, 0, 0, 1},
                    {0, 0, 1, 0, 1}});
  }
  if (name == "staircase2") {
    return make(2, {{3, 0}, {1, 1}, {0, 2}});
  }
  if (name == "triangle3") {
    return make(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"rp2", "maximal3", "cycle5", "staircase2", "triangle3"};
}

}  // namespace pborel
