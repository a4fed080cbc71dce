#pragma once

#include <string>
#include <vector>

#include "nilhecke/polynomial.hpp"

namespace nilhecke {

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

/// Character lattice X(T) of rank r with simple roots (in the chosen basis of
/// X(T)) and simple coroots (in the dual basis). Polynomial variables are the
/// basis characters.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<std::string> var_names;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;

  std::size_t num_simple() const { return simple_roots.size(); }

  /// <lambda, alpha_i^vee>.
  long pair_with_coroot(const IntVec& lambda, std::size_t i) const;
  /// C[i][j] = <alpha_i, alpha_j^vee>.
  IntMat cartan_matrix() const;
  /// Throws InvalidCartanData unless the data are consistent.
  void validate() const;

  Polynomial character(const IntVec& lambda, const Ring& ring) const;
  Polynomial simple_root(std::size_t i, const Ring& ring) const;

  friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

/// U2, U3, U4, SU2, SU3, SO3, PSU3, Sp2 (plus Un and SUn for small n).
RootDatum preset_datum(const std::string& name);
std::vector<std::string> preset_names();
bool is_preset_name(const std::string& name);
/// Name of the built-in datum equal to `datum` (same name and same roots and
/// coroots), or "" when there is none.
std::string matching_preset(const RootDatum& datum);

RootDatum make_datum(std::string name, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                     std::vector<std::string> var_names = {});

/// Coordinates of a linear form written in the datum's variables,
/// e.g. "2e1" or "e1-e2".
IntVec parse_character(const std::string& text, const RootDatum& datum);

}  // namespace nilhecke
