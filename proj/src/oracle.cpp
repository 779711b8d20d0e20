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

#include "modinv/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <thread>

namespace modinv {

unsigned worker_count(const OracleOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("MODINV_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t checked_point_count(std::uint64_t q, std::size_t n, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / q) {
            throw Error(Errc::BudgetExceeded, std::to_string(q) + "^" + std::to_string(n) + " points exceed the budget of " +
                                                  std::to_string(budget));
        }
        total *= q;
    }
    if (total > budget) throw Error(Errc::BudgetExceeded, "point count exceeds the budget");
    return total;
}

namespace {

using Codes = std::vector<std::uint32_t>;

// A polynomial over F_p with coefficients embedded into F as codes.
struct CompiledPolynomial {
    struct Term {
        std::uint32_t coeff;
        std::vector<std::pair<std::size_t, std::uint32_t>> powers;
    };
    std::vector<Term> terms;
};

template <FiniteField F>
std::uint32_t power(const F& field, std::uint32_t base, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1u) r = field.mul(r, base);
        e >>= 1;
        if (e > 0) base = field.mul(base, base);
    }
    return r;
}

template <FiniteField F>
CompiledPolynomial compile(const Polynomial<Fp>& f, const F& field) {
    if (f.ring().characteristic() != field.characteristic()) {
        throw Error(Errc::RingMismatch, "suite over F_" + std::to_string(f.ring().characteristic()) +
                                            " evaluated over a field of characteristic " +
                                            std::to_string(field.characteristic()));
    }
    CompiledPolynomial out;
    for (const auto& [m, c] : f.terms()) {
        CompiledPolynomial::Term term{field.embed_prime(c.value()), {}};
        for (std::size_t v = 0; v < m.exps.size(); ++v) {
            if (m.exps[v] != 0) term.powers.emplace_back(v, m.exps[v]);
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

template <FiniteField F>
std::uint32_t eval(const CompiledPolynomial& f, const F& field, const Codes& point) {
    std::uint32_t total = 0;
    for (const auto& term : f.terms) {
        std::uint32_t value = term.coeff;
        for (const auto& [v, e] : term.powers) value = field.mul(value, power(field, point[v], e));
        total = field.add(total, value);
    }
    return total;
}

// Jordan-block geometry of a table, precomputed.
struct Layout {
    std::vector<bool> has_previous;  // position >= 2
    std::vector<std::size_t> heads;  // first coordinate of every nontrivial block

    explicit Layout(const VariableTable& table) {
        for (std::size_t v = 0; v < table.size(); ++v) has_previous.push_back(table.position(v) >= 2);
        for (std::size_t b = 0; b < table.block_count(); ++b) {
            if (table.blocks()[b] >= 2) heads.push_back(table.block_offset(b));
        }
    }

    template <FiniteField F>
    void act(const F& field, Codes& c) const {
        for (std::size_t v = c.size(); v-- > 0;) {
            if (has_previous[v]) c[v] = field.add(c[v - 1], c[v]);
        }
    }

    bool in_b(const Codes& c) const {
        return std::all_of(heads.begin(), heads.end(), [&c](std::size_t h) { return c[h] != 0; });
    }
};

void decode_point(std::uint64_t index, std::uint64_t q, Codes& out) {
    for (std::size_t v = out.size(); v-- > 0;) {
        out[v] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
}

struct OrbitInfo {
    Codes representative;
    std::size_t size;
};

template <FiniteField F>
OrbitInfo orbit_info(const Layout& layout, const F& field, const Codes& v) {
    OrbitInfo info{v, 1};
    Codes w = v;
    for (;;) {
        layout.act(field, w);
        if (w == v) break;
        ++info.size;
        if (w < info.representative) info.representative = w;
    }
    return info;
}

template <FiniteField F>
PointText point_text(const F& field, const Codes& c) {
    PointText out;
    for (auto x : c) out.push_back(field.code_text(x));
    return out;
}

// Runs body(begin, end, worker) over [0, total) split into contiguous chunks.
template <class Body>
void parallel_chunks(std::uint64_t total, unsigned workers, Body body) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));
    if (workers == 1) {
        body(0, total, 0u);
        return;
    }
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(total, w * chunk);
        const std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([=, &body] { body(begin, end, w); });
    }
    for (auto& t : threads) t.join();
}

std::vector<CompiledPolynomial> compile_all(const InvariantSuite<Fp>& suite, const auto& field) {
    std::vector<CompiledPolynomial> out;
    for (const auto& e : suite.entries) out.push_back(compile(e.polynomial, field));
    return out;
}

}  // namespace

template <FiniteField F>
ConstancyResult verify_orbit_constancy(const InvariantSuite<Fp>& suite, const F& field, const OracleOptions& options) {
    const auto table = suite.spec.table();
    const Layout layout(table);
    const std::uint64_t total = checked_point_count(field.size(), table.size(), options.budget);
    const auto compiled = compile_all(suite, field);

    const unsigned workers = worker_count(options);
    // First violation per worker as (point index, entry index).
    std::vector<std::optional<std::pair<std::uint64_t, std::size_t>>> firsts(workers);
    parallel_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        Codes v(table.size());
        Codes gv(table.size());
        for (std::uint64_t i = begin; i < end; ++i) {
            decode_point(i, field.size(), v);
            gv = v;
            layout.act(field, gv);
            for (std::size_t e = 0; e < compiled.size(); ++e) {
                if (eval(compiled[e], field, v) != eval(compiled[e], field, gv)) {
                    firsts[w] = std::make_pair(i, e);
                    return;
                }
            }
        }
    });

    ConstancyResult result;
    result.points_checked = total;
    std::optional<std::pair<std::uint64_t, std::size_t>> first;
    for (const auto& f : firsts) {
        if (f && (!first || *f < *first)) first = f;
    }
    if (first) {
        result.passed = false;
        result.entry = suite.entries[first->second].name;
        Codes v(table.size());
        decode_point(first->first, field.size(), v);
        result.point = point_text(field, v);
    }
    return result;
}

template <FiniteField F>
SeparationReport separation_report(const InvariantSuite<Fp>& suite, const F& field, const OracleOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const auto table = suite.spec.table();
    const Layout layout(table);
    const std::size_t n = table.size();
    const std::uint64_t total = checked_point_count(field.size(), n, options.budget);
    const auto compiled = compile_all(suite, field);
    const std::size_t width = compiled.size() + n;  // record = tuple ++ representative

    const unsigned workers = worker_count(options);
    std::vector<std::vector<std::uint32_t>> records(workers);
    std::vector<std::uint64_t> in_b(workers, 0);
    parallel_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        Codes v(n);
        for (std::uint64_t i = begin; i < end; ++i) {
            decode_point(i, field.size(), v);
            if (!layout.in_b(v)) continue;
            ++in_b[w];
            if (orbit_info(layout, field, v).representative != v) continue;
            for (const auto& f : compiled) records[w].push_back(eval(f, field, v));
            records[w].insert(records[w].end(), v.begin(), v.end());
        }
    });

    std::vector<Codes> rows;
    for (const auto& chunk : records) {
        for (std::size_t off = 0; off < chunk.size(); off += width) {
            rows.emplace_back(chunk.begin() + static_cast<std::ptrdiff_t>(off),
                              chunk.begin() + static_cast<std::ptrdiff_t>(off + width));
        }
    }
    std::sort(rows.begin(), rows.end());

    SeparationReport report;
    report.spec = suite.spec;
    report.field = field.tag();
    report.total_points = total;
    for (auto c : in_b) report.points_in_b += c;
    report.orbit_count_in_b = rows.size();

    const auto tuple_len = static_cast<std::ptrdiff_t>(compiled.size());
    auto same_tuple = [tuple_len](const Codes& a, const Codes& b) {
        return std::equal(a.begin(), a.begin() + tuple_len, b.begin());
    };
    auto rep_of = [tuple_len](const Codes& r) { return Codes(r.begin() + tuple_len, r.end()); };

    std::vector<std::pair<Codes, Codes>> pairs;
    for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i + 1;
        while (j < rows.size() && same_tuple(rows[i], rows[j])) ++j;
        ++report.fiber_count;
        const std::uint64_t k = j - i;
        report.unseparated_pairs += k * (k - 1) / 2;
        if (k == 1) ++report.separated_orbits;
        for (std::size_t t = i + 1; t < j; ++t) {
            pairs.emplace_back(rep_of(rows[i]), rep_of(rows[t]));
        }
        i = j;
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs.size() > options.witness_cap) pairs.resize(options.witness_cap);
    for (const auto& [a, b] : pairs) report.witnesses.push_back({point_text(field, a), point_text(field, b)});
    report.separated = report.unseparated_pairs == 0;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

template <FiniteField F>
LiftingResult verify_lifting(int n, const F& field, const OracleOptions& options) {
    if (n < 3) throw Error(Errc::RangeViolation, "lifting is checked for n >= 3");
    const RepresentationSpec spec{field.characteristic(), {n}};
    const auto suite = build_suite(spec);
    const auto& entry = suite.entries.back();
    const auto f = compile(entry.polynomial, field);
    const std::uint64_t q = field.size();
    const std::uint64_t total = checked_point_count(q, static_cast<std::size_t>(n), options.budget);
    const std::uint64_t prefixes = total / q;

    const unsigned workers = worker_count(options);
    std::vector<std::optional<std::pair<Codes, Codes>>> violations(workers);
    std::vector<std::uint64_t> checked(workers, 0);
    parallel_chunks(prefixes, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        Codes v(static_cast<std::size_t>(n));
        std::vector<std::int64_t> seen(q);
        for (std::uint64_t i = begin; i < end; ++i) {
            decode_point(i * q, q, v);
            if (v[0] == 0) continue;  // outside B_n
            std::fill(seen.begin(), seen.end(), -1);
            for (std::uint64_t last = 0; last < q; ++last) {
                v.back() = static_cast<std::uint32_t>(last);
                const std::uint32_t value = eval(f, field, v);
                if (seen[value] >= 0 && !violations[w]) {
                    Codes other = v;
                    other.back() = static_cast<std::uint32_t>(seen[value]);
                    violations[w] = std::make_pair(other, v);
                }
                seen[value] = static_cast<std::int64_t>(last);
            }
            checked[w] += q * (q - 1) / 2;
        }
    });

    LiftingResult result;
    result.n = n;
    for (auto c : checked) result.pairs_checked += c;
    for (const auto& vio : violations) {
        if (vio && (!result.violation || point_text(field, vio->first) < result.violation->a)) {
            result.passed = false;
            result.violation = WitnessPair{point_text(field, vio->first), point_text(field, vio->second)};
        }
    }
    return result;
}

template <FiniteField F>
FixedPointCensus fixed_point_census(const RepresentationSpec& spec, const F& field, const OracleOptions& options) {
    spec.validate();
    if (field.characteristic() != spec.p) throw Error(Errc::RingMismatch, "field characteristic differs from p");
    const auto table = spec.table();
    const Layout layout(table);
    const std::uint64_t total = checked_point_count(field.size(), table.size(), options.budget);

    const unsigned workers = worker_count(options);
    std::vector<FixedPointCensus> partial(workers);
    parallel_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        Codes v(table.size());
        Codes gv(table.size());
        auto& c = partial[w];
        for (std::uint64_t i = begin; i < end; ++i) {
            decode_point(i, field.size(), v);
            gv = v;
            layout.act(field, gv);
            const bool fixed = gv == v;
            const bool inside = layout.in_b(v);
            if (fixed) {
                ++(inside ? c.fixed_in_b : c.fixed_outside_b);
            } else {
                ++(inside ? c.free_points_in_b : c.free_points_outside_b);
            }
        }
    });

    FixedPointCensus census;
    for (const auto& c : partial) {
        census.fixed_in_b += c.fixed_in_b;
        census.fixed_outside_b += c.fixed_outside_b;
        census.free_points_in_b += c.free_points_in_b;
        census.free_points_outside_b += c.free_points_outside_b;
    }
    // Nontrivial orbits have exactly p elements.
    census.orbits_in_b = census.fixed_in_b + census.free_points_in_b / spec.p;
    census.orbits_outside_b = census.fixed_outside_b + census.free_points_outside_b / spec.p;
    return census;
}

template <FiniteField F>
PairVerdict compare_points(const InvariantSuite<Fp>& suite, const F& field, const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    const auto table = suite.spec.table();
    if (a.size() != table.size() || b.size() != table.size()) {
        throw Error(Errc::DimensionMismatch, "point length != variable count");
    }
    for (auto c : a) {
        if (c >= field.size()) throw Error(Errc::RangeViolation, "element code out of range");
    }
    for (auto c : b) {
        if (c >= field.size()) throw Error(Errc::RangeViolation, "element code out of range");
    }
    const Layout layout(table);
    const auto compiled = compile_all(suite, field);
    PairVerdict verdict;
    const auto rep_a = orbit_info(layout, field, a).representative;
    const auto rep_b = orbit_info(layout, field, b).representative;
    verdict.same_orbit = rep_a == rep_b;
    verdict.orbit_rep_a = point_text(field, rep_a);
    verdict.orbit_rep_b = point_text(field, rep_b);
    for (const auto& f : compiled) {
        verdict.tuple_a.push_back(field.code_text(eval(f, field, a)));
        verdict.tuple_b.push_back(field.code_text(eval(f, field, b)));
    }
    verdict.same_tuple = verdict.tuple_a == verdict.tuple_b;
    verdict.is_witness = verdict.same_tuple && !verdict.same_orbit;
    return verdict;
}

#define MODINV_INSTANTIATE(F)                                                                                   \
    template ConstancyResult verify_orbit_constancy<F>(const InvariantSuite<Fp>&, const F&, const OracleOptions&); \
    template SeparationReport separation_report<F>(const InvariantSuite<Fp>&, const F&, const OracleOptions&);     \
    template LiftingResult verify_lifting<F>(int, const F&, const OracleOptions&);                               \
    template FixedPointCensus fixed_point_census<F>(const RepresentationSpec&, const F&, const OracleOptions&);   \
    template PairVerdict compare_points<F>(const InvariantSuite<Fp>&, const F&, const std::vector<std::uint32_t>&, \
                                           const std::vector<std::uint32_t>&);

MODINV_INSTANTIATE(PrimeField)
MODINV_INSTANTIATE(ExtensionField)

#undef MODINV_INSTANTIATE

}  // namespace modinv
