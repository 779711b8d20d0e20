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

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "modinv/oracle.hpp"
#include "modinv/serialize.hpp"

namespace modinv {
namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return Errc::ParseError;
}

// Independent census: polynomial evaluation and explicit orbits from the action module.
struct NaiveCensus {
    std::uint64_t total = 0;
    std::uint64_t in_b = 0;
    std::uint64_t orbits = 0;
    std::uint64_t fibers = 0;
    std::uint64_t separated_orbits = 0;
    std::uint64_t unseparated_pairs = 0;
};

template <class F>
std::vector<Polynomial<typename F::value_type>> lift_suite(const InvariantSuite<Fp>& suite, const F& field) {
    using S = typename F::value_type;
    std::vector<Polynomial<S>> out;
    for (const auto& e : suite.entries) {
        out.push_back(map_coefficients<S>(e.polynomial, field, [&](const Fp& c) { return field.from_int(c.value()); }));
    }
    return out;
}

template <class F>
std::vector<PointVector<typename F::value_type>> all_points(const VariableTable& table, const F& field) {
    using S = typename F::value_type;
    std::vector<PointVector<S>> out;
    std::vector<std::uint32_t> c(table.size(), 0);
    const auto q = static_cast<std::uint32_t>(field.size());
    while (true) {
        std::vector<S> coords;
        for (auto v : c) coords.push_back(field.element(v));
        out.emplace_back(table, std::move(coords));
        std::size_t i = c.size();
        while (i > 0 && ++c[i - 1] == q) c[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

template <class F>
NaiveCensus naive_census(const InvariantSuite<Fp>& suite, const F& field) {
    using S = typename F::value_type;
    const auto polys = lift_suite(suite, field);
    const auto table = suite.spec.table();
    NaiveCensus c;
    std::map<std::vector<S>, std::set<std::vector<S>>> fibers;  // tuple -> orbit representatives
    for (const auto& v : all_points(table, field)) {
        ++c.total;
        if (!in_open_set_B(v)) continue;
        ++c.in_b;
        std::vector<S> tuple;
        for (const auto& f : polys) tuple.push_back(evaluate(f, v.coords()));
        fibers[tuple].insert(orbit_representative(v).coords());
    }
    c.fibers = fibers.size();
    for (const auto& [tuple, reps] : fibers) {
        c.orbits += reps.size();
        if (reps.size() == 1) ++c.separated_orbits;
        c.unseparated_pairs += reps.size() * (reps.size() - 1) / 2;
    }
    return c;
}

template <class F>
void expect_matches_naive(const RepresentationSpec& spec, const F& field) {
    const auto suite = build_suite(spec);
    const auto naive = naive_census(suite, field);
    const auto report = separation_report(suite, field);
    SCOPED_TRACE(field.tag().to_string() + " blocks " + Json(spec.blocks).dump());
    EXPECT_EQ(report.total_points, naive.total);
    EXPECT_EQ(report.points_in_b, naive.in_b);
    EXPECT_EQ(report.orbit_count_in_b, naive.orbits);
    EXPECT_EQ(report.fiber_count, naive.fibers);
    EXPECT_EQ(report.separated_orbits, naive.separated_orbits);
    EXPECT_EQ(report.unseparated_pairs, naive.unseparated_pairs);
    EXPECT_EQ(report.separated, naive.fibers == naive.orbits);
    EXPECT_EQ(report.separated, report.witnesses.empty());
    EXPECT_LE(report.fiber_count, report.orbit_count_in_b);
    EXPECT_LE(report.witnesses.size(), 10u);
}

std::vector<std::uint32_t> codes(std::initializer_list<std::uint32_t> v) { return v; }

TEST(CheckedPointCount, Budget) {
    EXPECT_EQ(checked_point_count(5, 3, 1000), 125u);
    EXPECT_EQ(code_of([] { checked_point_count(7, 7, 1000); }), Errc::BudgetExceeded);
    EXPECT_EQ(code_of([] { checked_point_count(1u << 16, 8, 10'000'000); }), Errc::BudgetExceeded);
}

TEST(OrbitConstancy, Examples) {
    const PrimeField f5(5);
    const auto suite = build_suite({5, {3}});
    const auto result = verify_orbit_constancy(suite, f5);
    EXPECT_TRUE(result.passed);
    EXPECT_EQ(result.points_checked, 125u);

    // f3 on the orbit of (1,0,0) takes the value 0 at all five points.
    const auto& f3 = suite.entries[2].polynomial;
    ASSERT_EQ(suite.entries[2].name, "f3");
    for (auto pt : {codes({1, 0, 0}), codes({1, 1, 0}), codes({1, 2, 1}), codes({1, 3, 3}), codes({1, 4, 1})}) {
        std::vector<Fp> v;
        for (auto c : pt) v.push_back(f5.element(c));
        EXPECT_EQ(evaluate(f3, v), f5.zero());
    }
}

TEST(OrbitConstancy, CorruptedEntryFails) {
    const PrimeField f5(5);
    auto suite = build_suite({5, {3}});
    const auto table = suite.spec.table();
    suite.entries[2].polynomial += Polynomial<Fp>::variable(f5, table, 1);
    const auto result = verify_orbit_constancy(suite, f5);
    EXPECT_FALSE(result.passed);
    EXPECT_EQ(result.entry, "f3");
    ASSERT_EQ(result.point.size(), 3u);
    std::vector<Fp> v;
    for (const auto& c : result.point) v.push_back(f5.parse(c));
    const auto& f = suite.entries[2].polynomial;
    const PointVector<Fp> pv(table, v);
    EXPECT_NE(evaluate(f, act_point(pv).coords()), evaluate(f, v));
}

TEST(OrbitConstancy, AllSmallSuites) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int n = 1; n <= static_cast<int>(p) && n <= 5; ++n) {
            EXPECT_TRUE(verify_orbit_constancy(build_suite({p, {n}}), PrimeField(p)).passed) << p << " " << n;
        }
    }
    // Extension fields up to 343 elements.
    EXPECT_TRUE(verify_orbit_constancy(build_suite({7, {2}}), ExtensionField(7, 3)).passed);
    EXPECT_TRUE(verify_orbit_constancy(build_suite({5, {3}}), ExtensionField(5, 2)).passed);
    EXPECT_TRUE(verify_orbit_constancy(build_suite({3, {2}}), ExtensionField(3, 5)).passed);
    EXPECT_TRUE(verify_orbit_constancy(build_suite({2, {2}}), ExtensionField(2, 8)).passed);
    EXPECT_TRUE(verify_orbit_constancy(build_suite({5, {2, 2}}), ExtensionField(5, 2)).passed);
    EXPECT_TRUE(verify_orbit_constancy(build_suite({5, {1, 3, 2}}), PrimeField(5)).passed);
}

TEST(OrbitConstancy, Errors) {
    const auto suite = build_suite({7, {7}});
    OracleOptions small;
    small.budget = 1000;
    EXPECT_EQ(code_of([&] { verify_orbit_constancy(suite, PrimeField(7), small); }), Errc::BudgetExceeded);
    EXPECT_EQ(code_of([] { verify_orbit_constancy(build_suite({5, {3}}), PrimeField(7)); }), Errc::RingMismatch);
}

TEST(SeparationReport, IndecomposableExamples) {
    const PrimeField f5(5);
    auto r = separation_report(build_suite({5, {3}}), f5);
    EXPECT_EQ(r.points_in_b, 100u);
    EXPECT_EQ(r.orbit_count_in_b, 20u);
    EXPECT_EQ(r.fiber_count, 20u);
    EXPECT_TRUE(r.separated);
    r = separation_report(build_suite({5, {2}}), f5);
    EXPECT_EQ(r.orbit_count_in_b, 4u);
    EXPECT_TRUE(r.separated);
}

TEST(SeparationReport, MatchesNaiveOracle) {
    expect_matches_naive({5, {3}}, PrimeField(5));
    expect_matches_naive({5, {2}}, PrimeField(5));
    expect_matches_naive({5, {4}}, PrimeField(5));
    expect_matches_naive({5, {2, 2}}, PrimeField(5));
    expect_matches_naive({5, {1, 3}}, PrimeField(5));
    expect_matches_naive({5, {2, 1}}, PrimeField(5));
    expect_matches_naive({7, {3}}, PrimeField(7));
    expect_matches_naive({3, {2, 2}}, ExtensionField(3, 2));
    expect_matches_naive({3, {3}}, ExtensionField(3, 2));
    expect_matches_naive({2, {2, 2}}, ExtensionField(2, 2));
    expect_matches_naive({5, {2}}, ExtensionField(5, 2));
    expect_matches_naive({5, {3}}, ExtensionField(5, 2));
}

TEST(SeparationReport, SingleBlockSeparates) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int n = 2; n <= static_cast<int>(p); ++n) {
            std::uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= p;
            if (total > 1'000'000) continue;
            const auto r = separation_report(build_suite({p, {n}}), PrimeField(p));
            EXPECT_TRUE(r.separated) << "p=" << p << " n=" << n;
            EXPECT_EQ(r.points_in_b, total / p * (p - 1));
            EXPECT_EQ(r.orbit_count_in_b, r.points_in_b / p);
            EXPECT_EQ(r.fiber_count, r.orbit_count_in_b);
            EXPECT_EQ(r.separated_orbits, r.orbit_count_in_b);
        }
    }
}

TEST(SeparationReport, DeterministicAcrossWorkerCounts) {
    for (const RepresentationSpec spec : {RepresentationSpec{5, {2, 2}}, RepresentationSpec{5, {4}}}) {
        const auto suite = build_suite(spec);
        std::string reference;
        for (unsigned threads : {1u, 2u, 3u, 8u}) {
            OracleOptions options;
            options.threads = threads;
            const auto text = to_json(separation_report(suite, PrimeField(5), options)).dump();
            if (reference.empty()) reference = text;
            EXPECT_EQ(text, reference) << threads << " workers";
            EXPECT_EQ(to_json(verify_orbit_constancy(suite, PrimeField(5), options)).dump(),
                      to_json(verify_orbit_constancy(suite, PrimeField(5))).dump());
        }
    }
}

TEST(SeparationReport, FiberCountInvariantUnderPermutationAndScaling) {
    for (const RepresentationSpec spec : {RepresentationSpec{5, {2, 2}}, RepresentationSpec{5, {4}},
                                          RepresentationSpec{5, {3, 1}}}) {
        const auto suite = build_suite(spec);
        const auto base = separation_report(suite, PrimeField(5));
        auto permuted = suite;
        std::reverse(permuted.entries.begin(), permuted.entries.end());
        std::rotate(permuted.entries.begin(), permuted.entries.begin() + 1, permuted.entries.end());
        auto scaled = suite;
        for (std::size_t i = 0; i < scaled.entries.size(); ++i) {
            scaled.entries[i].polynomial = Fp(1 + i % 4, 5) * scaled.entries[i].polynomial;
        }
        for (const auto& variant : {permuted, scaled}) {
            const auto r = separation_report(variant, PrimeField(5));
            EXPECT_EQ(r.fiber_count, base.fiber_count);
            EXPECT_EQ(r.orbit_count_in_b, base.orbit_count_in_b);
            EXPECT_EQ(r.unseparated_pairs, base.unseparated_pairs);
            EXPECT_EQ(r.witnesses, base.witnesses);
        }
    }
}

TEST(SeparationReport, DecomposableCandidatePair) {
    const auto suite = build_suite({5, {2, 2}});
    const auto verdict = compare_points(suite, PrimeField(5), codes({1, 0, 1, 0}), codes({1, 0, 1, 1}));
    // Independent check: the orbit of (1,0,1,0) is {(1,s,1,s)}.
    const VariableTable table({2, 2});
    const PrimeField f5(5);
    const PointVector<Fp> v(table, {f5.one(), f5.zero(), f5.one(), f5.zero()});
    const PointVector<Fp> w(table, {f5.one(), f5.zero(), f5.one(), f5.one()});
    const auto orb = orbit(v);
    const bool same_orbit = std::find(orb.begin(), orb.end(), w) != orb.end();
    bool same_tuple = true;
    for (const auto& e : suite.entries) same_tuple = same_tuple && evaluate(e.polynomial, v.coords()) == evaluate(e.polynomial, w.coords());
    EXPECT_FALSE(same_orbit);
    EXPECT_TRUE(same_tuple);
    EXPECT_EQ(verdict.same_orbit, same_orbit);
    EXPECT_EQ(verdict.same_tuple, same_tuple);
    EXPECT_TRUE(verdict.is_witness);
    EXPECT_EQ(verdict.orbit_rep_a, (PointText{"1", "0", "1", "0"}));
    EXPECT_EQ(verdict.orbit_rep_b, (PointText{"1", "0", "1", "1"}));

    const auto same = compare_points(suite, PrimeField(5), codes({1, 0, 1, 0}), codes({1, 3, 1, 3}));
    EXPECT_TRUE(same.same_orbit);
    EXPECT_FALSE(same.is_witness);

    const auto report = separation_report(suite, PrimeField(5));
    ASSERT_FALSE(report.witnesses.empty());
    EXPECT_EQ(report.witnesses.front(), (WitnessPair{{"1", "0", "1", "0"}, {"1", "0", "1", "1"}}));
}

TEST(Lifting, Passes) {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{5, 3}, {5, 4}, {5, 5}, {7, 3}, {7, 4}, {7, 5}}) {
        const auto r = verify_lifting(n, PrimeField(p));
        EXPECT_TRUE(r.passed) << p << " " << n;
        EXPECT_EQ(r.n, n);
        // Pairs v != w in B_n with a common prefix: (p-1) p^(n-2) prefixes, p(p-1)/2 pairs each.
        std::uint64_t prefixes = p - 1;
        for (int i = 0; i < n - 2; ++i) prefixes *= p;
        EXPECT_EQ(r.pairs_checked, prefixes * p * (p - 1) / 2) << p << " " << n;
        EXPECT_FALSE(r.violation.has_value());
    }
    EXPECT_TRUE(verify_lifting(3, ExtensionField(5, 2)).passed);
}

TEST(Lifting, Examples) {
    const PrimeField f5(5);
    const auto suite3 = build_suite({5, {3}});
    const auto& f3 = suite3.entries[2].polynomial;
    EXPECT_EQ(evaluate(f3, std::vector<Fp>{f5.one(), f5.zero(), f5.zero()}), f5.zero());
    EXPECT_EQ(evaluate(f3, std::vector<Fp>{f5.one(), f5.zero(), f5.one()}), f5.one());
    const auto suite4 = build_suite({5, {4}});
    const auto& f4 = suite4.entries[3].polynomial;
    for (std::uint32_t c = 1; c < 5; ++c) {
        const auto a = evaluate(f4, std::vector<Fp>{f5.one(), f5.zero(), f5.zero(), f5.zero()});
        const auto b = evaluate(f4, std::vector<Fp>{f5.one(), f5.zero(), f5.zero(), f5.element(c)});
        EXPECT_EQ(b - a, f5.element(c));
    }
    EXPECT_EQ(code_of([] { verify_lifting(6, PrimeField(5)); }), Errc::BlockExceedsP);
}

TEST(FixedPointCensus, Examples) {
    const PrimeField f5(5);
    auto c = fixed_point_census({5, {3}}, f5);
    EXPECT_EQ(c.fixed_in_b + c.fixed_outside_b, 5u);
    EXPECT_EQ(c.fixed_in_b, 0u);
    EXPECT_EQ(c.free_points_in_b, 100u);
    EXPECT_EQ(c.orbits_in_b, 20u);
    c = fixed_point_census({5, {1}}, f5);
    EXPECT_EQ(c.fixed_in_b + c.fixed_outside_b, 5u);
    EXPECT_EQ(c.free_points_in_b + c.free_points_outside_b, 0u);
    c = fixed_point_census({5, {2, 2}}, ExtensionField(5, 2));
    EXPECT_EQ(c.fixed_in_b, 0u);
    EXPECT_EQ(c.fixed_in_b + c.fixed_outside_b, 625u);  // c_{1,1} = c_{2,1} = 0
    EXPECT_EQ(c.orbits_in_b * 5, c.free_points_in_b);
}

TEST(Json, ReportSchema) {
    const auto r = separation_report(build_suite({5, {3}}), PrimeField(5));
    const Json j = to_json(r);
    EXPECT_EQ(j.at("pointsInB"), 100);
    EXPECT_EQ(j.at("orbitCountInB"), 20);
    EXPECT_EQ(j.at("fiberCount"), 20);
    EXPECT_EQ(j.at("separated"), true);
    EXPECT_EQ(j.at("field"), "F5");
    EXPECT_FALSE(j.contains("elapsedMs"));
    EXPECT_TRUE(to_json(r, true).contains("elapsedMs"));
}

}  // namespace
}  // namespace modinv
