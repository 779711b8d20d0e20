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

#ifndef MODINV_POLYNOMIAL_HPP
#define MODINV_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modinv/error.hpp"
#include "modinv/scalar.hpp"

namespace modinv {

/// Indeterminates of k[V] for V = V_{n_1} + ... + V_{n_m}, in the order
/// x_{1,1}, ..., x_{1,n_1}, x_{2,1}, ..., x_{m,n_m}. Flat indices are 0-based.
class VariableTable {
public:
    explicit VariableTable(std::vector<int> blocks);
    static VariableTable flat(int n) { return VariableTable({n}); }

    std::size_t size() const noexcept { return block_of_.size(); }
    const std::vector<int>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    bool single_block() const noexcept { return blocks_.size() == 1; }

    std::size_t block_of(std::size_t v) const { return block_of_.at(v); }
    /// 1-based position inside the block; this is the index entering weights.
    int position(std::size_t v) const { return position_.at(v); }
    std::size_t block_offset(std::size_t block) const { return offsets_.at(block); }
    std::size_t index(std::size_t block, int position) const;

    /// "x3" for a single block, "x2_3" (block 2, position 3) otherwise.
    std::string name(std::size_t v) const;
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<int> blocks_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> block_of_;
    std::vector<int> position_;
};

struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    std::uint64_t degree() const noexcept;
    /// Sum of position(v) * exponent; x_i x_j has weight i + j.
    std::uint64_t weight(const VariableTable& table) const;
    bool contains(std::size_t v) const { return exps.at(v) != 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x_n > x_{n-1} > ... > x_1.
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_less(b, a); }
};

std::string monomial_text(const Monomial& m, const VariableTable& table);

namespace detail {
inline bool is_negative(const Integer& c) { return c.sign() < 0; }
inline bool is_negative(const Rational& c) { return c.value().sign() < 0; }
template <class S>
bool is_negative(const S&) { return false; }

template <class S>
std::string coefficient_text(const S& c) { return c.to_string(); }
inline std::string coefficient_text(const Fq& c) { return "(" + c.to_string() + ")"; }
}  // namespace detail

/// Sparse polynomial over a coefficient ring, terms kept in grlex-descending
/// order with no zero coefficients.
template <RingScalar S>
class Polynomial {
public:
    using scalar_type = S;
    using ring_type = typename S::ring_type;
    using term_map = std::map<Monomial, S, GrlexDescending>;

    Polynomial(ring_type ring, VariableTable table) : ring_(std::move(ring)), table_(std::move(table)) {}

    static Polynomial constant(const ring_type& ring, const VariableTable& table, const S& c) {
        Polynomial f(ring, table);
        f.add_term(Monomial::one(table.size()), c);
        return f;
    }

    static Polynomial variable(const ring_type& ring, const VariableTable& table, std::size_t v) {
        return monomial(ring, table, unit(table, v), ring.one());
    }

    static Polynomial monomial(const ring_type& ring, const VariableTable& table, Monomial m, const S& c) {
        if (m.exps.size() != table.size()) throw Error(Errc::DimensionMismatch, "monomial length != variable count");
        Polynomial f(ring, table);
        f.add_term(std::move(m), c);
        return f;
    }

    const ring_type& ring() const noexcept { return ring_; }
    const VariableTable& table() const noexcept { return table_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// -1 for the zero polynomial.
    long total_degree() const {
        return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree());
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_) {
            if (m.degree() != d) return false;
        }
        return true;
    }

    /// Coefficient of m (zero when absent).
    S coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    std::optional<std::pair<Monomial, S>> leading_term() const {
        if (terms_.empty()) return std::nullopt;
        return *terms_.begin();
    }

    /// Accumulates c * m, pruning a cancelled term.
    void add_term(Monomial m, const S& c) {
        if (m.exps.size() != table_.size()) throw Error(Errc::DimensionMismatch, "monomial length != variable count");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const S& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second * s;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
    friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out(a.ring_, a.table_);
        for (const auto& [m, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial out(a.ring_, a.table_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.table_ == b.table_ && a.terms_ == b.terms_;
    }

    /// Plain text, e.g. "x1*x3 - 1/2*x2^2 + 1/2*x1*x2"; "0" for the zero polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = detail::is_negative(c);
            const S magnitude = negative ? -c : c;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            const bool unit = magnitude == ring_.one();
            const bool constant = m.degree() == 0;
            if (constant) {
                out += detail::coefficient_text(magnitude);
            } else {
                if (!unit) out += detail::coefficient_text(magnitude) + "*";
                out += monomial_text(m, table_);
            }
        }
        return out;
    }

private:
    static Monomial unit(const VariableTable& table, std::size_t v) {
        if (v >= table.size()) throw Error(Errc::DimensionMismatch, "variable index out of range");
        Monomial m = Monomial::one(table.size());
        m.exps[v] = 1;
        return m;
    }

    void check(const Polynomial& o) const {
        if (!(ring_ == o.ring_)) throw Error(Errc::RingMismatch, "polynomials over different rings");
        if (!(table_ == o.table_)) throw Error(Errc::TableMismatch, "polynomials over different variable tables");
    }

    ring_type ring_;
    VariableTable table_;
    term_map terms_;
};

template <RingScalar S>
Polynomial<S> pow(const Polynomial<S>& f, std::uint64_t e) {
    auto result = Polynomial<S>::constant(f.ring(), f.table(), f.ring().one());
    auto base = f;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Replaces every variable of f by its image and expands. Variables not
/// occurring in f need no image.
template <RingScalar S>
Polynomial<S> substitute_linear(const Polynomial<S>& f, const std::map<std::size_t, Polynomial<S>>& images) {
    const auto& table = f.table();
    for (const auto& [v, img] : images) {
        if (!(img.table() == table)) throw Error(Errc::TableMismatch, "image over a different variable table");
        if (!(img.ring() == f.ring())) throw Error(Errc::RingMismatch, "image over a different ring");
    }
    // powers[v][e] = image(v)^e, built lazily
    std::map<std::size_t, std::vector<Polynomial<S>>> powers;
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial<S>& {
        auto it = images.find(v);
        if (it == images.end()) throw Error(Errc::MissingImage, "no image for variable " + table.name(v));
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial<S>::constant(f.ring(), table, f.ring().one()));
        while (cache.size() <= e) cache.push_back(cache.back() * it->second);
        return cache[e];
    };

    Polynomial<S> out(f.ring(), table);
    for (const auto& [m, c] : f.terms()) {
        auto term = Polynomial<S>::constant(f.ring(), table, c);
        for (std::size_t v = 0; v < m.exps.size(); ++v) {
            if (m.exps[v] != 0) term = term * power_of(v, m.exps[v]);
        }
        out += term;
    }
    return out;
}

template <RingScalar S>
S evaluate(const Polynomial<S>& f, std::span<const S> point) {
    if (point.size() != f.table().size()) {
        throw Error(Errc::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                 std::to_string(f.table().size()));
    }
    S total = f.ring().zero();
    for (const auto& [m, c] : f.terms()) {
        S term = c;
        for (std::size_t v = 0; v < m.exps.size(); ++v) {
            if (m.exps[v] != 0) term = term * pow(point[v], m.exps[v]);
        }
        total = total + term;
    }
    return total;
}

template <RingScalar S>
S evaluate(const Polynomial<S>& f, const std::vector<S>& point) {
    return evaluate(f, std::span<const S>(point));
}

/// Splits f by monomial weight; the components sum to f.
template <RingScalar S>
std::map<std::uint64_t, Polynomial<S>> weight_components(const Polynomial<S>& f) {
    std::map<std::uint64_t, Polynomial<S>> out;
    for (const auto& [m, c] : f.terms()) {
        auto [it, _] = out.try_emplace(m.weight(f.table()), f.ring(), f.table());
        it->second.add_term(m, c);
    }
    return out;
}

/// Max exponent of x_v; -1 for the zero polynomial.
template <RingScalar S>
long degree_in_variable(const Polynomial<S>& f, std::size_t v) {
    if (v >= f.table().size()) throw Error(Errc::DimensionMismatch, "variable index out of range");
    if (f.is_zero()) return -1;
    long d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max<long>(d, m.exps[v]);
    return d;
}

/// Coefficient of x_v^e as a polynomial in the other variables.
template <RingScalar S>
Polynomial<S> coefficient_of_power(const Polynomial<S>& f, std::size_t v, std::uint32_t e) {
    Polynomial<S> out(f.ring(), f.table());
    for (const auto& [m, c] : f.terms()) {
        if (m.exps.at(v) != e) continue;
        Monomial rest = m;
        rest.exps[v] = 0;
        out.add_term(std::move(rest), c);
    }
    return out;
}

/// Applies `convert` to every coefficient, landing in `ring`.
template <RingScalar T, RingScalar S, class Convert>
Polynomial<T> map_coefficients(const Polynomial<S>& f, const typename T::ring_type& ring, Convert convert) {
    Polynomial<T> out(ring, f.table());
    for (const auto& [m, c] : f.terms()) out.add_term(m, convert(c));
    return out;
}

/// Reduces a polynomial over Q (or Z) modulo p.
template <class S>
    requires std::same_as<S, Rational> || std::same_as<S, Integer>
Polynomial<Fp> reduce_mod_p(const Polynomial<S>& f, std::uint32_t p) {
    return map_coefficients<Fp>(f, PrimeField(p), [p](const S& c) { return reduce_mod_p(c, p); });
}

/// Moves f onto another table whose variables are found by `relabel(v)`.
template <RingScalar S, class Relabel>
Polynomial<S> relabel_variables(const Polynomial<S>& f, const VariableTable& target, Relabel relabel) {
    Polynomial<S> out(f.ring(), target);
    for (const auto& [m, c] : f.terms()) {
        Monomial moved = Monomial::one(target.size());
        for (std::size_t v = 0; v < m.exps.size(); ++v) {
            if (m.exps[v] != 0) moved.exps.at(relabel(v)) += m.exps[v];
        }
        out.add_term(std::move(moved), c);
    }
    return out;
}

/// Parses the plain-text rendering produced by Polynomial::to_string.
template <RingScalar S>
Polynomial<S> parse_polynomial(std::string_view text, const typename S::ring_type& ring, const VariableTable& table);

namespace detail {
// Splits "a - b + c" into signed terms, ignoring separators inside parentheses.
std::vector<std::pair<bool, std::string>> split_terms(std::string_view text);
std::vector<std::string> split_factors(std::string_view term);
std::uint32_t parse_exponent(std::string_view text);
}  // namespace detail

template <RingScalar S>
Polynomial<S> parse_polynomial(std::string_view text, const typename S::ring_type& ring, const VariableTable& table) {
    Polynomial<S> out(ring, table);
    if (text == "0") return out;
    for (const auto& [negative, term] : detail::split_terms(text)) {
        S coeff = ring.one();
        Monomial m = Monomial::one(table.size());
        for (const auto& factor : detail::split_factors(term)) {
            if (!factor.empty() && factor.front() == 'x') {
                const auto caret = factor.find('^');
                const auto name = std::string_view(factor).substr(0, caret);
                const auto v = table.find(name);
                if (!v) throw Error(Errc::ParseError, "unknown variable '" + std::string(name) + "'");
                std::uint32_t e = 1;
                if (caret != std::string::npos) e = detail::parse_exponent(std::string_view(factor).substr(caret + 1));
                m.exps[*v] += e;
            } else if (!factor.empty() && factor.front() == '(' && factor.back() == ')') {
                coeff = coeff * ring.parse(std::string_view(factor).substr(1, factor.size() - 2));
            } else {
                coeff = coeff * ring.parse(factor);
            }
        }
        out.add_term(std::move(m), negative ? -coeff : coeff);
    }
    return out;
}

}  // namespace modinv

#endif  // MODINV_POLYNOMIAL_HPP
