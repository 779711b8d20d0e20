/*
   Copyright 2026 The modinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MODINV_SERIALIZE_HPP
#define MODINV_SERIALIZE_HPP

// JSON encodings:
//   polynomial  {"ring": "Q", "blocks": [3], "p": 5, "terms": [{"coeff": "-1/2", "exps": [0,2,0]}, ...]}
//               terms grlex-descending; "p" is null when no prime is attached.
//   suite       [{"name": "f3", "blockIndex": 1, "degree": 2, "kind": "connecting", <polynomial fields>}, ...]

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "modinv/builder.hpp"
#include "modinv/oracle.hpp"
#include "modinv/polynomial.hpp"

namespace modinv {

using Json = nlohmann::ordered_json;

template <RingScalar S>
Json to_json(const Polynomial<S>& f, std::optional<std::uint32_t> p = std::nullopt) {
    Json j;
    j["ring"] = f.ring().tag().to_string();
    j["blocks"] = f.table().blocks();
    j["p"] = p ? Json(*p) : Json(nullptr);
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back({{"coeff", c.to_string()}, {"exps", m.exps}});
    j["terms"] = std::move(terms);
    return j;
}

/// Parses a polynomial; the "ring" field must match `ring`.
template <RingScalar S>
Polynomial<S> polynomial_from_json(const Json& j, const typename S::ring_type& ring) {
    try {
        if (j.at("ring").get<std::string>() != ring.tag().to_string()) {
            throw Error(Errc::RingMismatch, "polynomial is over " + j.at("ring").get<std::string>() + ", expected " +
                                                ring.tag().to_string());
        }
        const VariableTable table(j.at("blocks").get<std::vector<int>>());
        Polynomial<S> f(ring, table);
        for (const auto& term : j.at("terms")) {
            f.add_term(Monomial(term.at("exps").get<std::vector<std::uint32_t>>()),
                       ring.parse(term.at("coeff").get<std::string>()));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed polynomial JSON: ") + e.what());
    }
}

template <RingScalar S>
Json to_json(const InvariantSuite<S>& suite) {
    Json out = Json::array();
    for (const auto& e : suite.entries) {
        Json j;
        j["name"] = e.name;
        j["blockIndex"] = e.block + 1;
        j["degree"] = e.degree;
        j["kind"] = std::string(kind_name(e.kind));
        const Json poly = to_json(e.polynomial, suite.spec.p);
        for (const auto& [key, value] : poly.items()) j[key] = value;
        out.push_back(std::move(j));
    }
    return out;
}

/// Reads a suite over F_p written by to_json; p and blocks come from the entries.
InvariantSuite<Fp> suite_from_json(const Json& j);

Json to_json(const SeparationReport& report, bool with_timing = false);
Json to_json(const ConstancyResult& result);
Json to_json(const LiftingResult& result);
Json to_json(const FixedPointCensus& census);
Json to_json(const WeightSpaceBasis& basis);
Json to_json(const EliminationStep& step);

/// Suite plus, for every connecting entry, the restricted delta-matrices and determinants used.
Json export_bundle(const RepresentationSpec& spec);

}  // namespace modinv

#endif  // MODINV_SERIALIZE_HPP
