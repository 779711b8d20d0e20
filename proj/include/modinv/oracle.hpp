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

#ifndef MODINV_ORACLE_HPP
#define MODINV_ORACLE_HPP

// Exhaustive verification over a small finite field F_q: enumerates all q^n
// points (row-major, last coordinate fastest), partitions them into orbits
// (canonical representative = lexicographically smallest orbit element) and
// compares invariant tuples. Work is split over MODINV_THREADS workers; all
// results are sorted before they leave the oracle, so reports do not depend
// on the worker count.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modinv/action.hpp"
#include "modinv/builder.hpp"
#include "modinv/scalar.hpp"

namespace modinv {

struct OracleOptions {
    std::uint64_t budget = 10'000'000;  // max points enumerated
    unsigned threads = 0;               // 0: MODINV_THREADS, else hardware concurrency
    std::size_t witness_cap = 10;
};

unsigned worker_count(const OracleOptions& options);

/// q^n, saturating; throws BudgetExceeded when above `budget`.
std::uint64_t checked_point_count(std::uint64_t q, std::size_t n, std::uint64_t budget);

/// Coordinates as scalar texts, in block order.
using PointText = std::vector<std::string>;

struct ConstancyResult {
    bool passed = true;
    std::uint64_t points_checked = 0;
    std::string entry;  // first violating entry
    PointText point;    // and the point v with f(g.v) != f(v)
};

struct WitnessPair {
    PointText a;
    PointText b;
    friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct SeparationReport {
    RepresentationSpec spec;
    RingTag field;
    std::uint64_t total_points = 0;
    std::uint64_t points_in_b = 0;
    std::uint64_t orbit_count_in_b = 0;
    std::uint64_t fiber_count = 0;
    std::uint64_t unseparated_pairs = 0;  // orbit pairs in B sharing a tuple
    std::uint64_t separated_orbits = 0;   // orbits alone in their fiber
    bool separated = false;
    std::vector<WitnessPair> witnesses;  // capped, sorted
    double elapsed_ms = 0.0;             // not part of the deterministic JSON
};

struct LiftingResult {
    bool passed = true;
    int n = 0;
    std::uint64_t pairs_checked = 0;
    std::optional<WitnessPair> violation;
};

struct FixedPointCensus {
    std::uint64_t fixed_in_b = 0;
    std::uint64_t fixed_outside_b = 0;
    std::uint64_t free_points_in_b = 0;  // points on orbits of size p
    std::uint64_t free_points_outside_b = 0;
    std::uint64_t orbits_in_b = 0;
    std::uint64_t orbits_outside_b = 0;
};

struct PairVerdict {
    bool same_orbit = false;
    bool same_tuple = false;
    bool is_witness = false;  // distinct orbits, identical tuples
    PointText orbit_rep_a;
    PointText orbit_rep_b;
    std::vector<std::string> tuple_a;
    std::vector<std::string> tuple_b;
};

/// f(g.v) = f(v) for every point v and entry f.
template <FiniteField F>
ConstancyResult verify_orbit_constancy(const InvariantSuite<Fp>& suite, const F& field, const OracleOptions& options = {});

template <FiniteField F>
SeparationReport separation_report(const InvariantSuite<Fp>& suite, const F& field, const OracleOptions& options = {});

/// For all v != w in B_n with phi(v) = phi(w): f_n(v) != f_n(w). Needs 3 <= n <= p.
template <FiniteField F>
LiftingResult verify_lifting(int n, const F& field, const OracleOptions& options = {});

template <FiniteField F>
FixedPointCensus fixed_point_census(const RepresentationSpec& spec, const F& field, const OracleOptions& options = {});

/// Decides whether two points (given by element codes) witness nonseparation.
template <FiniteField F>
PairVerdict compare_points(const InvariantSuite<Fp>& suite, const F& field, const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);

}  // namespace modinv

#endif  // MODINV_ORACLE_HPP
