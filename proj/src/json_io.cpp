#include "codimkit/json_io.hpp"

#include <stdexcept>

namespace codimkit {

namespace {

using nlohmann::json;

json rats_to_array(const std::vector<Rat>& values) {
  json arr = json::array();
  for (const Rat& v : values) {
    arr.push_back(rat_to_string(v));
  }
  return arr;
}

std::vector<Rat> rats_from_array(const json& arr, const char* what) {
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string(what) + " must be an array");
  }
  std::vector<Rat> out;
  for (const json& v : arr) {
    if (!v.is_string()) {
      throw std::invalid_argument(std::string(what) +
                                  " entries must be rational strings");
    }
    out.push_back(rat_from_string(v.get<std::string>()));
  }
  return out;
}

}  // namespace

nlohmann::json json_of(const Sequence& s) {
  return json{{"offset", s.offset}, {"terms", rats_to_array(s.terms)}};
}

nlohmann::json json_of(const Polynomial& p) { return rats_to_array(p.coeffs); }

nlohmann::json json_of(const RationalFunction& r) {
  return json{{"num", json_of(r.num)}, {"den", json_of(r.den)}};
}

nlohmann::json json_of(const LinearRecurrence& rec) {
  return json{{"coeffs", rats_to_array(rec.coeffs)},
              {"initial", rats_to_array(rec.initial)},
              {"start", rec.start}};
}

nlohmann::json json_of(const AlgebraicEquation& eq) {
  json coeffs = json::array();
  for (const Polynomial& p : eq.coeffs) {
    coeffs.push_back(json_of(p));
  }
  return json{{"coeffs", coeffs}};
}

nlohmann::json json_of(const GuessReport& report) {
  json j;
  j["found"] = report.found;
  switch (report.kind) {
    case GuessKind::recurrence:
      j["kind"] = "recurrence";
      break;
    case GuessKind::rational:
      j["kind"] = "rational";
      break;
    case GuessKind::algebraic:
      j["kind"] = "algebraic";
      break;
  }
  if (report.recurrence) {
    j["model"] = json_of(*report.recurrence);
  } else if (report.rational) {
    j["model"] = json_of(*report.rational);
  } else if (report.algebraic) {
    j["model"] = json_of(*report.algebraic);
  } else {
    j["model"] = nullptr;
  }
  j["used"] = report.used;
  j["verified"] = report.verified;
  return j;
}

nlohmann::json json_of(const Partition& p) {
  json arr = json::array();
  for (long part : p.parts) {
    arr.push_back(part);
  }
  return arr;
}

nlohmann::json json_of(const CharacterSum& sum) {
  json terms = json::array();
  for (const auto& [shape, mult] : sum.terms) {
    terms.push_back(json{{"shape", json_of(shape)}, {"mult", mult}});
  }
  return json{{"n", sum.n}, {"terms", terms}};
}

nlohmann::json json_of(const OracleResult& r) {
  return json{{"n", r.n},
              {"rank", r.rank},
              {"codimension", r.codim},
              {"primes", json::array({r.prime1, r.prime2})},
              {"seed", r.seed}};
}

Sequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms")) {
    throw std::invalid_argument("sequence JSON must have a terms array");
  }
  long offset = 0;
  if (j.contains("offset")) {
    offset = j.at("offset").get<long>();
  }
  return make_sequence(rats_from_array(j.at("terms"), "terms"), offset);
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  return poly_from(rats_from_array(j, "polynomial coefficients"));
}

RationalFunction rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational JSON must have num and den arrays");
  }
  return make_rational(polynomial_from_json(j.at("num")),
                       polynomial_from_json(j.at("den")));
}

LinearRecurrence recurrence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("initial")) {
    throw std::invalid_argument(
        "recurrence JSON must have coeffs and initial arrays");
  }
  LinearRecurrence rec;
  rec.coeffs = rats_from_array(j.at("coeffs"), "coeffs");
  rec.initial = rats_from_array(j.at("initial"), "initial");
  rec.start = j.contains("start") ? j.at("start").get<long>() : 0;
  return rec;
}

AlgebraicEquation algebraic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw std::invalid_argument(
        "equation JSON must have an array of coefficient polynomials");
  }
  AlgebraicEquation eq;
  for (const json& p : j.at("coeffs")) {
    eq.coeffs.push_back(polynomial_from_json(p));
  }
  return eq;
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("partition JSON must be an array of parts");
  }
  std::vector<long> parts;
  for (const json& v : j) {
    parts.push_back(v.get<long>());
  }
  return make_partition(std::move(parts));
}

CharacterSum character_sum_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw std::invalid_argument(
        "character JSON must have a degree n and a terms array");
  }
  std::map<Partition, long> terms;
  for (const json& term : j.at("terms")) {
    Partition shape = partition_from_json(term.at("shape"));
    long mult = term.at("mult").get<long>();
    terms[shape] += mult;
  }
  return make_character_sum(j.at("n").get<long>(), std::move(terms));
}

}  // namespace codimkit
