#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilhecke/demazure.hpp"
#include "nilhecke/homogeneous.hpp"
#include "nilhecke/invariants.hpp"
#include "nilhecke/schubert.hpp"

namespace nilhecke::json_io {

using nlohmann::json;

json to_json(const Polynomial& f, const std::vector<std::string>& names);
/// Reads {"vars": [...], "terms": [{"exp": [...], "coeff": "p/q"}]} into `ring`.
Polynomial polynomial_from_json(const json& j, const Ring& ring);

json to_json(const RootDatum& datum);
/// Validates the data; throws ParseError or InvalidCartanData.
RootDatum datum_from_json(const json& j);
RootDatum read_datum_file(const std::string& path);

/// Weyl words are written with 1-based indices.
json word_json(const Word& word);

json to_json(const DemazureElement& x, const WeylGroup& group);
json to_json(const SchubertFamily& family);
json matrix_json(const WeylGroup& group, int generator, const std::vector<std::size_t>& order,
                 const PolyMatrix& entries, const std::vector<std::string>& names);
json to_json(const HilbertSeries& s);
json to_json(const TableRowReport& report);

/// Family members sorted by (length, word), the order used in every output.
std::vector<std::size_t> family_order(const WeylGroup& group);

}  // namespace nilhecke::json_io
