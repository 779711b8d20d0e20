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

#include "modinv/serialize.hpp"

namespace modinv {

InvariantSuite<Fp> suite_from_json(const Json& j) {
    try {
        if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "a suite is a nonempty JSON array");
        const Json& first = j.front();
        if (first.at("p").is_null()) throw Error(Errc::ParseError, "suite entries must carry p");
        RepresentationSpec spec{first.at("p").get<std::uint32_t>(), first.at("blocks").get<std::vector<int>>()};
        spec.validate();
        const PrimeField field(spec.p);
        InvariantSuite<Fp> suite{spec, {}};
        for (const auto& e : j) {
            if (e.at("p").get<std::uint32_t>() != spec.p || e.at("blocks").get<std::vector<int>>() != spec.blocks) {
                throw Error(Errc::TableMismatch, "suite entries disagree on p or blocks");
            }
            const auto kind = parse_kind(e.at("kind").get<std::string>());
            SuiteEntry<Fp> entry{e.at("name").get<std::string>(), e.at("blockIndex").get<std::size_t>() - 1,
                                 e.at("degree").get<int>(), kind, polynomial_from_json<Fp>(e, field), 1};
            suite.entries.push_back(std::move(entry));
        }
        return suite;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed suite JSON: ") + e.what());
    }
}

Json to_json(const SeparationReport& report, bool with_timing) {
    Json j;
    j["p"] = report.spec.p;
    j["blocks"] = report.spec.blocks;
    j["field"] = report.field.to_string();
    j["totalPoints"] = report.total_points;
    j["pointsInB"] = report.points_in_b;
    j["orbitCountInB"] = report.orbit_count_in_b;
    j["fiberCount"] = report.fiber_count;
    j["separatedOrbits"] = report.separated_orbits;
    j["unseparatedOrbitPairs"] = report.unseparated_pairs;
    j["separated"] = report.separated;
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) witnesses.push_back({{"orbitRepA", w.a}, {"orbitRepB", w.b}});
    j["witnessPairs"] = std::move(witnesses);
    if (with_timing) j["elapsedMs"] = report.elapsed_ms;
    return j;
}

Json to_json(const ConstancyResult& result) {
    Json j{{"passed", result.passed}, {"pointsChecked", result.points_checked}};
    if (!result.passed) {
        j["entry"] = result.entry;
        j["point"] = result.point;
    }
    return j;
}

Json to_json(const LiftingResult& result) {
    Json j{{"n", result.n}, {"passed", result.passed}, {"pairsChecked", result.pairs_checked}};
    if (result.violation) j["violation"] = {{"v", result.violation->a}, {"w", result.violation->b}};
    return j;
}

Json to_json(const FixedPointCensus& census) {
    return {{"fixedInB", census.fixed_in_b},
            {"fixedOutsideB", census.fixed_outside_b},
            {"freePointsInB", census.free_points_in_b},
            {"freePointsOutsideB", census.free_points_outside_b},
            {"orbitsInB", census.orbits_in_b},
            {"orbitsOutsideB", census.orbits_outside_b}};
}

Json to_json(const WeightSpaceBasis& basis) {
    return {{"family", std::string(family_name(basis.family))},
            {"weight", basis.weight},
            {"n", basis.n},
            {"monomials", basis.names()}};
}

Json to_json(const EliminationStep& step) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < step.matrix.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < step.matrix.cols(); ++c) row.push_back(step.matrix(i, c).to_string());
        rows.push_back(std::move(row));
    }
    return {{"source", to_json(step.source)},
            {"target", to_json(step.target)},
            {"rows", std::move(rows)},
            {"det", step.det ? Json(step.det->to_string()) : Json(nullptr)}};
}

Json export_bundle(const RepresentationSpec& spec) {
    const auto suite = build_suite(spec);
    Json matrices = Json::array();
    for (const auto& e : suite.entries) {
        if (e.kind != EntryKind::Connecting) continue;
        const auto& f = connecting_invariant(e.position);
        for (const auto& step : f.steps) {
            Json record = to_json(step);
            record["entry"] = e.name;
            record["detModP"] = step.det ? Json(reduce_mod_p(*step.det, spec.p).to_string()) : Json(nullptr);
            matrices.push_back(std::move(record));
        }
    }
    Json j;
    j["p"] = spec.p;
    j["blocks"] = spec.blocks;
    j["suite"] = to_json(suite);
    j["rationalSuite"] = to_json(build_rational_suite(spec));
    j["matrices"] = std::move(matrices);
    return j;
}

}  // namespace modinv
