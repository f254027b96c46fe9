// JSON serialization of the mathematical objects (file formats used by the
// command-line tool).
#pragma once

#include <json.hpp>

#include "exterior.hpp"
#include "homology.hpp"
#include "snf.hpp"
#include "surface.hpp"

namespace mcg {

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j, int rank);

nlohmann::json mapping_class_to_json(const MappingClass& f);
MappingClass mapping_class_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const SymplecticMatrix& m);
SymplecticMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json int_matrix_to_json(const IntMat& m);
IntMat int_matrix_from_json(const nlohmann::json& j);

nlohmann::json exterior_to_json(const ExteriorElement& e);
ExteriorElement exterior_from_json(const nlohmann::json& j);

}  // namespace mcg
