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

#include "modinv/builder.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace modinv {

std::string_view family_name(BasisFamily family) noexcept {
    switch (family) {
        case BasisFamily::W: return "W";
        case BasisFamily::Wprime: return "Wprime";
        case BasisFamily::S: return "S";
        case BasisFamily::Sprime: return "Sprime";
        case BasisFamily::Shat: return "Shat";
    }
    return "?";
}

std::vector<std::string> WeightSpaceBasis::names() const {
    const auto table = VariableTable::flat(n);
    std::vector<std::string> out;
    for (const auto& m : monomials) out.push_back(monomial_text(m, table));
    return out;
}

namespace {

Monomial product(int n, std::initializer_list<int> indices) {
    Monomial m = Monomial::one(static_cast<std::size_t>(n));
    for (int i : indices) m.exps[static_cast<std::size_t>(i - 1)] += 1;
    return m;
}

std::vector<Monomial> degree2_weight(int d, int n) {
    std::vector<Monomial> out;
    for (int i = 1; 2 * i <= d; ++i) {
        const int j = d - i;
        if (j <= n) out.push_back(product(n, {i, j}));
    }
    return out;
}

// (B1) x_1 x_i x_j with 1 <= i <= j, then (B2) x_2 x_i x_j with 2 <= i <= j.
std::pair<std::vector<Monomial>, std::vector<Monomial>> degree3_weight(int d, int n) {
    std::vector<Monomial> b1;
    std::vector<Monomial> b2;
    for (int i = 1; 2 * i <= d - 1; ++i) {
        const int j = d - 1 - i;
        if (j <= n) b1.push_back(product(n, {1, i, j}));
    }
    if (n >= 2) {
        for (int i = 2; 2 * i <= d - 2; ++i) {
            const int j = d - 2 - i;
            if (j <= n) b2.push_back(product(n, {2, i, j}));
        }
    }
    return {std::move(b1), std::move(b2)};
}

void require_parity(BasisFamily family, int d, bool even) {
    if ((d % 2 == 0) != even) {
        throw Error(Errc::ParityViolation, std::string(family_name(family)) + " needs " + (even ? "even" : "odd") +
                                               " weight, got " + std::to_string(d));
    }
}

}  // namespace

WeightSpaceBasis weight_basis(BasisFamily family, int d, int n) {
    if (n < 1) throw Error(Errc::RangeViolation, "n must be >= 1");
    if (d < 0) throw Error(Errc::RangeViolation, "weights are nonnegative");
    WeightSpaceBasis basis{family, d, n, {}};
    switch (family) {
        case BasisFamily::W:
        case BasisFamily::Wprime: {
            if (d > n + 1) throw Error(Errc::RangeViolation, "W-family weight must satisfy d <= n+1");
            basis.monomials = degree2_weight(d, n);
            if (family == BasisFamily::Wprime) {
                require_parity(family, d, true);
                if (!basis.monomials.empty()) basis.monomials.erase(basis.monomials.begin());
            }
            break;
        }
        case BasisFamily::S:
        case BasisFamily::Sprime:
        case BasisFamily::Shat: {
            if (d > n + 2) throw Error(Errc::RangeViolation, "S-family weight must satisfy d <= n+2");
            auto [b1, b2] = degree3_weight(d, n);
            if (family == BasisFamily::Sprime) {
                require_parity(family, d, true);
                if (d < 6) throw Error(Errc::RangeViolation, "Sprime is defined for even d >= 6");
                b1.erase(b1.begin());
            } else if (family == BasisFamily::Shat) {
                require_parity(family, d, false);
                if (d < 5) throw Error(Errc::RangeViolation, "Shat is defined for odd d >= 5");
                b1.pop_back();
            }
            basis.monomials = std::move(b1);
            basis.monomials.insert(basis.monomials.end(), b2.begin(), b2.end());
            break;
        }
    }
    return basis;
}

Matrix<Integer> restricted_delta_matrix(const WeightSpaceBasis& source, const WeightSpaceBasis& target) {
    const bool target_full = target.family == BasisFamily::W || target.family == BasisFamily::S;
    if (source.n != target.n || target.weight != source.weight - 1 || source.degree() != target.degree() ||
        !target_full) {
        throw Error(Errc::IncompatibleBases, std::string(family_name(source.family)) + "_" +
                                                 std::to_string(source.weight) + " -> " +
                                                 std::string(family_name(target.family)) + "_" +
                                                 std::to_string(target.weight));
    }
    const auto table = VariableTable::flat(source.n);
    const IntegerRing ring;
    Matrix<Integer> a(target.dimension(), source.dimension(), Integer(0));
    for (std::size_t j = 0; j < source.dimension(); ++j) {
        const auto image = delta_component(Polynomial<Integer>::monomial(ring, table, source.monomials[j], ring.one()),
                                           static_cast<std::uint64_t>(target.weight));
        for (const auto& [m, c] : image.terms()) {
            auto it = std::find(target.monomials.begin(), target.monomials.end(), m);
            if (it == target.monomials.end()) {
                throw Error(Errc::IncompatibleBases, "delta image " + monomial_text(m, table) + " outside the target basis");
            }
            a(static_cast<std::size_t>(it - target.monomials.begin()), j) = c;
        }
    }
    return a;
}

namespace detail {

WeightSpaceBasis designated_basis(int degree, int d, int n) {
    BasisFamily family;
    if (degree == 2) {
        family = d % 2 == 1 ? BasisFamily::W : BasisFamily::Wprime;
    } else if (d <= 4) {
        family = BasisFamily::S;
    } else {
        family = d % 2 == 1 ? BasisFamily::Shat : BasisFamily::Sprime;
    }
    auto basis = weight_basis(family, d, n);
    const auto last = static_cast<std::size_t>(n - 1);
    std::erase_if(basis.monomials, [last](const Monomial& m) { return m.exps[last] != 0; });
    return basis;
}

}  // namespace detail

Polynomial<Integer> integral_form(const Polynomial<Rational>& f, bool primitive) {
    BigInt lambda = 1;
    for (const auto& [m, c] : f.terms()) {
        const BigInt den = c.denominator();
        lambda = lambda / boost::multiprecision::gcd(lambda, den) * den;
    }
    const IntegerRing ring;
    auto out = map_coefficients<Integer>(f, ring, [&lambda](const Rational& c) {
        return Integer(BigInt(c.numerator() * (lambda / c.denominator())));
    });
    if (!primitive || out.is_zero()) return out;
    BigInt content = 0;
    for (const auto& [m, c] : out.terms()) content = boost::multiprecision::gcd(content, BigInt(abs(c.value())));
    return map_coefficients<Integer>(out, ring, [&content](const Integer& c) { return Integer(BigInt(c.value() / content)); });
}

std::string_view kind_name(EntryKind kind) noexcept {
    switch (kind) {
        case EntryKind::Linear: return "linear";
        case EntryKind::Norm: return "norm";
        case EntryKind::Connecting: return "connecting";
    }
    return "?";
}

EntryKind parse_kind(std::string_view text) {
    if (text == "linear") return EntryKind::Linear;
    if (text == "norm") return EntryKind::Norm;
    if (text == "connecting") return EntryKind::Connecting;
    throw Error(Errc::ParseError, "unknown entry kind '" + std::string(text) + "'");
}

std::string entry_name(const RepresentationSpec& spec, std::size_t block, EntryKind kind, int position) {
    const std::string index = spec.blocks.size() == 1 ? std::to_string(position)
                                                      : std::to_string(block + 1) + "_" + std::to_string(position);
    switch (kind) {
        case EntryKind::Linear: return "x" + index;
        case EntryKind::Norm: return "N(x" + index + ")";
        case EntryKind::Connecting: return "f" + index;
    }
    return "?";
}

const ConnectingInvariant<Rational>& connecting_invariant(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const ConnectingInvariant<Rational>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<const ConnectingInvariant<Rational>>(
            construct_connecting<Rational>(n, connecting_degree(n), RationalRing{}));
    }
    return *slot;
}

namespace {

// `connecting(j)` yields f_j over k[x_1..x_j] in the suite's ring.
template <RingScalar S, class Connecting>
InvariantSuite<S> assemble(const RepresentationSpec& spec, const typename S::ring_type& ring, Connecting connecting) {
    spec.validate();
    const auto table = spec.table();
    InvariantSuite<S> suite{spec, {}};
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
        const int size = spec.blocks[b];
        suite.entries.push_back({entry_name(spec, b, EntryKind::Linear, 1), b, 1, EntryKind::Linear,
                                 Polynomial<S>::variable(ring, table, table.index(b, 1)), 1});
        if (size >= 2) {
            suite.entries.push_back({entry_name(spec, b, EntryKind::Norm, 2), b, static_cast<int>(spec.p),
                                     EntryKind::Norm, norm_invariant<S>(ring, table, b, spec.p), 2});
        }
        for (int j = 3; j <= size; ++j) {
            auto embedded = relabel_variables(connecting(j), table, [&](std::size_t v) {
                return table.index(b, static_cast<int>(v) + 1);
            });
            suite.entries.push_back({entry_name(spec, b, EntryKind::Connecting, j), b, connecting_degree(j),
                                     EntryKind::Connecting, std::move(embedded), j});
        }
    }
    return suite;
}

}  // namespace

InvariantSuite<Fp> build_suite(const RepresentationSpec& spec) {
    spec.validate();
    return assemble<Fp>(spec, PrimeField(spec.p),
                        [&](int j) { return reduce_mod_p(connecting_invariant(j).polynomial, spec.p); });
}

InvariantSuite<Rational> build_rational_suite(const RepresentationSpec& spec) {
    return assemble<Rational>(spec, RationalRing{}, [](int j) { return connecting_invariant(j).polynomial; });
}

InvariantSuite<Integer> build_integral_suite(const RepresentationSpec& spec, bool primitive) {
    return assemble<Integer>(spec, IntegerRing{},
                             [primitive](int j) { return integral_form(connecting_invariant(j).polynomial, primitive); });
}

}  // namespace modinv
