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

#ifndef MODINV_BUILDER_HPP
#define MODINV_BUILDER_HPP

// Construction of the low-degree connecting invariants f_n and of the full
// invariant suites x_1, N(x_2), f_3, ..., f_n (per Jordan block).
//
// f_n starts from x_1 x_n (n odd, degree 2) or x_1^2 x_n (n even, degree 3)
// and repeatedly cancels the top weight component of delta(t) with an
// element g of a designated weight space, on which the graded piece
// delta_{d-1} restricts to an isomorphism:
//
//   degree 2:  W_d (d odd),  W'_d = W_d - {x_1 x_{d-1}} (d even)
//   degree 3:  S_d (d <= 4), S^_d (odd d >= 5), S'_d = S_d - {x_1^2 x_{d-2}} (even d >= 6)
//
// Monomials divisible by x_n are never admitted to a designated space, so
// the tail h = f_n - lead stays in k[x_1, ..., x_{n-1}]; when that leaves
// the system unsolvable (n even in degree 2, n = 2 in degree 3) the
// construction reports NoSolution.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/action.hpp"
#include "modinv/error.hpp"
#include "modinv/matrix.hpp"
#include "modinv/polynomial.hpp"
#include "modinv/scalar.hpp"

namespace modinv {

enum class BasisFamily { W, Wprime, S, Sprime, Shat };

std::string_view family_name(BasisFamily family) noexcept;

/// Ordered monomial basis of a weight space in k[x_1, ..., x_n].
struct WeightSpaceBasis {
    BasisFamily family;
    int weight;
    int n;
    std::vector<Monomial> monomials;

    std::size_t dimension() const noexcept { return monomials.size(); }
    int degree() const noexcept { return family == BasisFamily::W || family == BasisFamily::Wprime ? 2 : 3; }
    std::vector<std::string> names() const;
};

/// W_d lists x_1x_{d-1}, x_2x_{d-2}, ...; S_d lists the x_1-divisible
/// monomials x_1^2x_{d-2}, x_1x_2x_{d-3}, ... followed by x_2^2x_{d-4}, x_2x_3x_{d-5}, ...
/// Throws ParityViolation (W' needs even d, S^ odd d, S' even d) and
/// RangeViolation (d > n+1 for the W family, d > n+2 for the S family,
/// d < 6 for S', d < 5 for S^).
WeightSpaceBasis weight_basis(BasisFamily family, int d, int n);

/// Matrix of delta_{d-1} from span(source) to span(target): column j holds
/// the target-coordinates of delta_{d-1}(source[j]).
Matrix<Integer> restricted_delta_matrix(const WeightSpaceBasis& source, const WeightSpaceBasis& target);

struct EliminationStep {
    WeightSpaceBasis source;
    WeightSpaceBasis target;
    Matrix<Integer> matrix;
    std::optional<Integer> det;  // only for square matrices
};

template <FieldScalar S>
struct ConnectingInvariant {
    int n;
    int degree;
    Polynomial<S> polynomial;
    Polynomial<S> tail;
    std::vector<EliminationStep> steps;
};

namespace detail {
/// Designated space for cancelling weight d-1, with x_n-divisible monomials removed.
WeightSpaceBasis designated_basis(int degree, int d, int n);
}  // namespace detail

template <FieldScalar S>
ConnectingInvariant<S> construct_connecting(int n, int degree, const typename S::ring_type& ring) {
    if (degree != 2 && degree != 3) throw Error(Errc::RangeViolation, "connecting invariants have degree 2 or 3");
    if (n < 2) throw Error(Errc::RangeViolation, "connecting invariants need n >= 2");

    const auto table = VariableTable::flat(n);
    Monomial start = Monomial::one(static_cast<std::size_t>(n));
    start.exps[0] = degree - 1;
    start.exps[static_cast<std::size_t>(n - 1)] += 1;
    auto t = Polynomial<S>::monomial(ring, table, start, ring.one());

    std::vector<EliminationStep> steps;
    for (auto residual = delta(t); !residual.is_zero(); residual = delta(t)) {
        const auto parts = weight_components(residual);
        const int top = static_cast<int>(parts.rbegin()->first);
        const Polynomial<S>& component = parts.rbegin()->second;
        const int d = top + 1;

        auto source = detail::designated_basis(degree, d, n);
        auto target = weight_basis(degree == 2 ? BasisFamily::W : BasisFamily::S, top, n);
        auto matrix = restricted_delta_matrix(source, target);

        std::vector<S> rhs(target.dimension(), ring.zero());
        for (const auto& [m, c] : component.terms()) {
            auto it = std::find(target.monomials.begin(), target.monomials.end(), m);
            if (it == target.monomials.end()) {
                throw Error(Errc::NoSolution, "residual leaves the target weight space at weight " + std::to_string(top));
            }
            rhs[static_cast<std::size_t>(it - target.monomials.begin())] = c;
        }
        const auto solution = solve_linear(
            map_entries(matrix, ring.zero(), [&ring](const Integer& e) { return ring.from_integer(e); }), rhs,
            ring.zero());
        if (solution.status != SolveStatus::Unique) {
            throw Error(Errc::NoSolution,
                        std::string("degree-") + std::to_string(degree) + " connecting invariant for n = " +
                            std::to_string(n) + ": delta_" + std::to_string(top) + " system is " +
                            (solution.status == SolveStatus::Inconsistent ? "inconsistent" : "not uniquely solvable"));
        }
        Polynomial<S> g(ring, table);
        for (std::size_t j = 0; j < source.dimension(); ++j) g.add_term(source.monomials[j], solution.x[j]);
        t -= g;

        std::optional<Integer> det;
        if (matrix.square() && matrix.rows() > 0) det = determinant(matrix);
        steps.push_back({std::move(source), std::move(target), std::move(matrix), std::move(det)});
        if (steps.size() > static_cast<std::size_t>(n) + 4) {
            throw Error(Errc::NoSolution, "elimination did not terminate");  // top weight strictly decreases
        }
    }

    Polynomial<S> tail = t;
    tail.add_term(start, -ring.one());
    return {n, degree, std::move(t), std::move(tail), std::move(steps)};
}

/// Degree of f_n: 2 for odd n, 3 for even n.
inline int connecting_degree(int n) { return n % 2 == 1 ? 2 : 3; }

/// x_{b,1}^{p-1} x_{b,2} - x_{b,2}^p for block b (0-based) of the table.
template <RingScalar S>
Polynomial<S> norm_invariant(const typename S::ring_type& ring, const VariableTable& table, std::size_t block,
                             std::uint32_t p) {
    if (block >= table.block_count()) throw Error(Errc::DimensionMismatch, "no such block");
    if (table.blocks()[block] < 2) throw Error(Errc::BlockTooSmall, "the norm needs a block of size >= 2");
    const std::size_t x1 = table.index(block, 1);
    const std::size_t x2 = table.index(block, 2);
    Monomial a = Monomial::one(table.size());
    a.exps[x1] = p - 1;
    a.exps[x2] = 1;
    Monomial b = Monomial::one(table.size());
    b.exps[x2] = p;
    auto f = Polynomial<S>::monomial(ring, table, a, ring.one());
    f.add_term(b, -ring.one());
    return f;
}

/// lambda * f with lambda the lcm of the coefficient denominators; with
/// `primitive` the coefficient content is divided out as well.
Polynomial<Integer> integral_form(const Polynomial<Rational>& f, bool primitive = false);

inline Polynomial<Integer> integral_form(const ConnectingInvariant<Rational>& f, bool primitive = false) {
    return integral_form(f.polynomial, primitive);
}

enum class EntryKind { Linear, Norm, Connecting };

std::string_view kind_name(EntryKind kind) noexcept;
EntryKind parse_kind(std::string_view text);

template <RingScalar S>
struct SuiteEntry {
    std::string name;
    std::size_t block;  // 0-based
    int degree;
    EntryKind kind;
    Polynomial<S> polynomial;
    int position = 1;  // j for x_{i,1} (1), N(x_{i,2}) (2), f_{i,j} (j)
};

template <RingScalar S>
struct InvariantSuite {
    RepresentationSpec spec;
    std::vector<SuiteEntry<S>> entries;

    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& e : entries) out.push_back(e.degree);
        return out;
    }
};

/// Entry name: "x1", "N(x2)", "f3" for one block; "x2_1", "N(x2_2)", "f2_3" otherwise.
std::string entry_name(const RepresentationSpec& spec, std::size_t block, EntryKind kind, int position);

/// The suite over F_p: per block x_{i,1}; N(x_{i,2}) if n_i >= 2; f_{i,3}, ..., f_{i,n_i}
/// built over Q and reduced mod p. Throws BlockExceedsP / InvalidSpec.
InvariantSuite<Fp> build_suite(const RepresentationSpec& spec);

/// The same entries with the connecting invariants kept over Q.
InvariantSuite<Rational> build_rational_suite(const RepresentationSpec& spec);

/// The same entries with connecting invariants replaced by their integral forms.
InvariantSuite<Integer> build_integral_suite(const RepresentationSpec& spec, bool primitive = false);

/// f_n over Q, memoised per n (the construction is deterministic).
const ConnectingInvariant<Rational>& connecting_invariant(int n);

}  // namespace modinv

#endif  // MODINV_BUILDER_HPP
