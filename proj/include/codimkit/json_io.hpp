#pragma once

#include <string>

#include "json.hpp"

#include "codimkit/characters.hpp"
#include "codimkit/guessing.hpp"
#include "codimkit/multilinear.hpp"
#include "codimkit/rational_forms.hpp"
#include "codimkit/sequence.hpp"

namespace codimkit {

// All rational values cross the JSON boundary as strings ("5/2", "-3") so
// nothing is ever rounded.

nlohmann::json json_of(const Sequence& s);
nlohmann::json json_of(const Polynomial& p);
nlohmann::json json_of(const RationalFunction& r);
nlohmann::json json_of(const LinearRecurrence& rec);
nlohmann::json json_of(const AlgebraicEquation& eq);
nlohmann::json json_of(const GuessReport& report);
nlohmann::json json_of(const Partition& p);
nlohmann::json json_of(const CharacterSum& sum);
nlohmann::json json_of(const OracleResult& r);

Sequence sequence_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);
RationalFunction rational_from_json(const nlohmann::json& j);
LinearRecurrence recurrence_from_json(const nlohmann::json& j);
AlgebraicEquation algebraic_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);
CharacterSum character_sum_from_json(const nlohmann::json& j);

}  // namespace codimkit
