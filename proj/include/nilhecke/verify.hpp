#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nilhecke/root_datum.hpp"

namespace nilhecke {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<RootDatum> data;  // overrides each suite's default groups when nonempty
  int bound = 8;
  int samples = 100;
  std::uint64_t seed = 20240611;
};

/// Suite names in criterion order, followed by "orthogonality".
std::vector<std::string> suite_names();

/// Runs one suite, or every numbered suite for "all". Throws UnknownPreset for
/// an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options = {});

/// Informational: for each datum, whether the Gram matrix of the pairing on
/// the default Schubert family is the antidiagonal permutation w' = w0 w.
std::vector<std::string> orthogonality_experiment(const std::vector<RootDatum>& data);

/// The rank-2 raw datum with Cartan matrix [[2,-1],[-3,2]] and |W| = 12.
RootDatum g2_datum();

/// Random polynomial with at most `terms` terms of degree at most `max_degree`
/// and coefficients in [-5, 5].
Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, std::size_t nvars, int max_degree,
                             int terms = 5);

}  // namespace nilhecke
