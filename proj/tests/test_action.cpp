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

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "modinv/action.hpp"
#include "modinv/builder.hpp"

namespace modinv {
namespace {

using QPoly = Polynomial<Rational>;

QPoly q(std::string_view text, int n) { return parse_polynomial<Rational>(text, RationalRing{}, VariableTable::flat(n)); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return Errc::ParseError;
}

PointVector<Fp> point(const VariableTable& table, std::uint32_t p, std::vector<std::uint32_t> coords) {
    std::vector<Fp> c;
    for (auto v : coords) c.emplace_back(v, p);
    return PointVector<Fp>(table, std::move(c));
}

// Every point of F_p^n in row-major order.
std::vector<PointVector<Fp>> all_points(const VariableTable& table, std::uint32_t p) {
    std::vector<PointVector<Fp>> out;
    std::vector<std::uint32_t> c(table.size(), 0);
    while (true) {
        out.push_back(point(table, p, c));
        std::size_t i = c.size();
        while (i > 0 && ++c[i - 1] == p) c[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

TEST(RepresentationSpec, Validation) {
    RepresentationSpec spec{7, {5, 3, 1}};
    EXPECT_NO_THROW(spec.validate());
    EXPECT_EQ(spec.n(), 9);
    EXPECT_EQ(spec.m(), 2);
    EXPECT_EQ(spec.r(), 1);
    EXPECT_EQ(code_of([] { RepresentationSpec{5, {7}}.validate(); }), Errc::BlockExceedsP);
    EXPECT_EQ(code_of([] { RepresentationSpec{6, {2}}.validate(); }), Errc::InvalidSpec);
    EXPECT_EQ(code_of([] { RepresentationSpec{5, {0}}.validate(); }), Errc::InvalidSpec);
    EXPECT_EQ(code_of([] { RepresentationSpec{5, {}}.validate(); }), Errc::InvalidSpec);
    try {
        RepresentationSpec{5, {7}}.validate();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("block size exceeds p"), std::string::npos);
    }
}

TEST(Sigma, Examples) {
    EXPECT_EQ(sigma(q("x1", 3)), q("x1", 3));
    EXPECT_EQ(sigma(q("x3", 3)), q("x2 + x3", 3));
    EXPECT_EQ(sigma(q("x1*x3", 3)), q("x1*x2 + x1*x3", 3));
    const auto t = VariableTable({2, 2});
    const auto f = parse_polynomial<Rational>("x1_2*x2_2", RationalRing{}, t);
    EXPECT_EQ(sigma(f),
              parse_polynomial<Rational>("x1_1*x2_1 + x1_1*x2_2 + x1_2*x2_1 + x1_2*x2_2", RationalRing{}, t));
}

TEST(Delta, Examples) {
    for (int i = 2; i <= 6; ++i) {
        for (int j = i; j <= 6; ++j) {
            Monomial m = Monomial::one(6);
            m.exps[i - 1] += 1;
            m.exps[j - 1] += 1;
            const auto f = QPoly::monomial(RationalRing{}, VariableTable::flat(6), m, 1);
            auto xx = [](int a, int b) { return "x" + std::to_string(a) + "*x" + std::to_string(b); };
            const auto expected = q(xx(i - 1, j - 1) + " + " + xx(i - 1, j) + " + " + xx(i, j - 1), 6);
            EXPECT_EQ(delta(f), expected) << i << "," << j;
        }
    }
    EXPECT_TRUE(delta(q("x1^3", 3)).is_zero());
    EXPECT_EQ(delta(q("x2^3", 2)), q("x1^3 + 3*x1^2*x2 + 3*x1*x2^2", 2));
}

TEST(DeltaComponent, Examples) {
    EXPECT_EQ(delta_component(q("x2^2", 2), 3), q("2*x1*x2", 2));
    EXPECT_EQ(delta_component(q("x1*x2*x3", 3), 5), q("x1^2*x3 + x1*x2^2", 3));
    for (int d = 4; d <= 9; ++d) {
        const auto src = q("x1*x" + std::to_string(d - 1), 9);
        EXPECT_EQ(delta_component(src, static_cast<std::uint64_t>(d - 1)), q("x1*x" + std::to_string(d - 2), 9));
    }
}

TEST(ActPoint, Examples) {
    const auto t = VariableTable::flat(3);
    EXPECT_EQ(act_point(point(t, 5, {1, 0, 0})), point(t, 5, {1, 1, 0}));
    EXPECT_EQ(act_point(point(t, 5, {0, 0, 0})), point(t, 5, {0, 0, 0}));
    EXPECT_EQ(act_point(point(t, 5, {1, 4, 1})), point(t, 5, {1, 0, 0}));
    const auto b = VariableTable({2, 1, 2});
    EXPECT_EQ(act_point(point(b, 5, {1, 2, 3, 4, 4})), point(b, 5, {1, 3, 3, 4, 3}));
}

TEST(Orbit, Examples) {
    const auto t = VariableTable::flat(3);
    const auto orb = orbit(point(t, 5, {1, 0, 0}));
    const std::vector<PointVector<Fp>> expected{point(t, 5, {1, 0, 0}), point(t, 5, {1, 1, 0}),
                                                point(t, 5, {1, 2, 1}), point(t, 5, {1, 3, 3}),
                                                point(t, 5, {1, 4, 1})};
    EXPECT_EQ(orb, expected);
    EXPECT_EQ(orbit(point(t, 5, {0, 0, 3})).size(), 1u);
    EXPECT_EQ(orbit_representative(point(t, 5, {1, 3, 3})), point(t, 5, {1, 0, 0}));
    EXPECT_EQ(point(t, 5, {1, 2, 3}).to_string(), "1,2,3");
}

TEST(ProjectPhi, Examples) {
    const auto t = VariableTable::flat(3);
    const auto t2 = VariableTable::flat(2);
    EXPECT_EQ(project_phi(point(t, 5, {1, 2, 3})), point(t2, 5, {1, 2}));
    const auto v = point(t, 5, {1, 0, 0});
    EXPECT_EQ(project_phi(act_point(v)), act_point(project_phi(v)));
    EXPECT_EQ(project_phi(act_point(v)), point(t2, 5, {1, 1}));
    EXPECT_EQ(code_of([] { project_phi(point(VariableTable({2, 2}), 5, {1, 0, 1, 0})); }), Errc::NotSingleBlock);
    EXPECT_EQ(code_of([] { project_phi(point(VariableTable::flat(1), 5, {1})); }), Errc::BlockTooSmall);
}

TEST(ProjectPhi, EquivariantAndPreservesB) {
    for (std::uint32_t p : {3u, 5u}) {
        for (int n = 2; n <= 4; ++n) {
            for (const auto& v : all_points(VariableTable::flat(n), p)) {
                EXPECT_EQ(project_phi(act_point(v)), act_point(project_phi(v)));
                if (n >= 3) EXPECT_EQ(in_open_set_B(project_phi(v)), in_open_set_B(v));
            }
        }
    }
}

TEST(OpenSetB, Examples) {
    const auto t = VariableTable::flat(3);
    EXPECT_TRUE(in_open_set_B(point(t, 5, {1, 0, 0})));
    EXPECT_FALSE(in_open_set_B(point(t, 5, {0, 1, 1})));
    EXPECT_FALSE(in_open_set_B(point(VariableTable({2, 2}), 5, {1, 0, 0, 1})));
    EXPECT_TRUE(in_open_set_B(point(VariableTable({2, 1}), 5, {1, 0, 0})));
}

TEST(ActionProperties, PeriodStabilityOrbitSizes) {
    const std::vector<std::pair<std::uint32_t, std::vector<int>>> cases{
        {2, {2}}, {3, {3}}, {3, {2, 1}}, {5, {3}}, {5, {4}}, {5, {2, 2}}, {5, {1, 3}}, {7, {3}}, {7, {2, 1, 1}}};
    for (const auto& [p, blocks] : cases) {
        const VariableTable table(blocks);
        for (const auto& v : all_points(table, p)) {
            auto w = v;
            for (std::uint32_t i = 0; i < p; ++i) {
                EXPECT_EQ(in_open_set_B(w), in_open_set_B(v));
                w = act_point(w);
            }
            EXPECT_EQ(w, v);
            const auto size = orbit(v).size();
            EXPECT_TRUE(size == 1 || size == p);
            if (in_open_set_B(v)) EXPECT_EQ(size, p);
        }
    }
}

TEST(ActionProperties, FixedPointsNeedLeadingZeros) {
    // g.v = v iff every coordinate except the last of each block vanishes.
    const VariableTable table({3, 2});
    for (const auto& v : all_points(table, 3)) {
        const bool expected = v[0].is_zero() && v[1].is_zero() && v[3].is_zero();
        EXPECT_EQ(act_point(v) == v, expected) << v.to_string();
    }
}

TEST(ActionProperties, SuiteEntriesConstantOnOrbits) {
    const std::vector<std::pair<std::uint32_t, std::vector<int>>> cases{
        {3, {3}}, {5, {3}}, {5, {2, 1}}, {7, {3}}, {3, {2, 1}}};
    for (const auto& [p, blocks] : cases) {
        const RepresentationSpec spec{p, blocks};
        const auto suite = build_suite(spec);
        for (const auto& v : all_points(spec.table(), p)) {
            const auto gv = act_point(v);
            for (const auto& e : suite.entries) {
                EXPECT_EQ(evaluate(e.polynomial, gv.coords()), evaluate(e.polynomial, v.coords())) << e.name;
            }
        }
    }
}

TEST(GradingContainment, DeltaOfW) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> c(-5, 5);
    const int n = 9;
    for (int d = 3; d <= n + 1; ++d) {
        const auto basis = weight_basis(BasisFamily::W, d, n);
        for (int trial = 0; trial < 20; ++trial) {
            QPoly w(RationalRing{}, VariableTable::flat(n));
            for (const auto& m : basis.monomials) w.add_term(m, Rational(c(rng), 1 + trial % 3));
            for (const auto& [weight, part] : weight_components(delta(w))) {
                EXPECT_TRUE(weight + 2 == static_cast<std::uint64_t>(d) || weight + 1 == static_cast<std::uint64_t>(d))
                    << "d=" << d << " weight " << weight;
            }
        }
    }
}

TEST(GradingContainment, DeltaOfS) {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long long> c(-5, 5);
    const int n = 8;
    for (int d = 4; d <= n + 2; ++d) {
        const auto basis = weight_basis(BasisFamily::S, d, n);
        for (int trial = 0; trial < 20; ++trial) {
            QPoly s(RationalRing{}, VariableTable::flat(n));
            for (const auto& m : basis.monomials) s.add_term(m, Rational(c(rng)));
            for (const auto& [weight, part] : weight_components(delta(s))) {
                EXPECT_GE(weight + 3, static_cast<std::uint64_t>(d));
                EXPECT_LE(weight + 1, static_cast<std::uint64_t>(d));
                // The image stays inside S: every monomial is divisible by x1 or x2.
                for (const auto& [m, coeff] : part.terms()) EXPECT_TRUE(m.exps[0] > 0 || m.exps[1] > 0);
            }
        }
    }
}

}  // namespace
}  // namespace modinv
