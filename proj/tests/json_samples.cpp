// Writes one JSON document per line for the schema checks that have no CLI
// verb: a polynomial, a root datum and a Demazure algebra element.
#include <iostream>
#include <memory>

#include "nilhecke/json_io.hpp"

using namespace nilhecke;

int main() {
  const auto g = std::make_shared<const WeylGroup>(preset_datum("U3"));
  const DemazureCalculus calc(g, Ring::rationals());
  const auto& names = g->datum().var_names;
  const Polynomial f = parse_polynomial("e1^2*e2 - 1/2*e3 + 4", names, Ring::rationals());
  std::cout << json_io::to_json(f, names).dump() << "\n";
  std::cout << json_io::to_json(g->datum()).dump() << "\n";
  const auto x = calc.multiply(calc.scalar(f), calc.reflection_element(g->longest()));
  std::cout << json_io::to_json(x, *g).dump() << "\n";
}
