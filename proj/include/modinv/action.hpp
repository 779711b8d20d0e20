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

#ifndef MODINV_ACTION_HPP
#define MODINV_ACTION_HPP

// The generator sigma of Z/p acting by unipotent Jordan blocks, on
// polynomials (sigma(x_{i,j}) = x_{i,j-1} + x_{i,j}, sigma(x_{i,1}) = x_{i,1})
// and on points ((g.c)_{i,j} = c_{i,j-1} + c_{i,j}, c_{i,1} fixed).

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "modinv/error.hpp"
#include "modinv/polynomial.hpp"
#include "modinv/scalar.hpp"

namespace modinv {

struct RepresentationSpec {
    std::uint32_t p = 2;
    std::vector<int> blocks;

    /// Throws InvalidSpec (p not prime, empty or nonpositive blocks) or BlockExceedsP.
    void validate() const;

    int n() const;
    /// Number of nontrivial blocks (n_i >= 2).
    int m() const;
    /// Number of trivial blocks (n_i = 1).
    int r() const;
    VariableTable table() const { return VariableTable(blocks); }

    friend bool operator==(const RepresentationSpec&, const RepresentationSpec&) = default;
};

template <RingScalar S>
Polynomial<S> sigma(const Polynomial<S>& f) {
    const auto& table = f.table();
    std::map<std::size_t, Polynomial<S>> images;
    for (std::size_t v = 0; v < table.size(); ++v) {
        auto image = Polynomial<S>::variable(f.ring(), table, v);
        if (table.position(v) >= 2) image += Polynomial<S>::variable(f.ring(), table, v - 1);
        images.emplace(v, std::move(image));
    }
    return substitute_linear(f, images);
}

/// sigma(f) - f; zero exactly on invariants.
template <RingScalar S>
Polynomial<S> delta(const Polynomial<S>& f) {
    return sigma(f) - f;
}

/// Weight-d component of delta(f).
template <RingScalar S>
Polynomial<S> delta_component(const Polynomial<S>& f, std::uint64_t d) {
    auto parts = weight_components(delta(f));
    auto it = parts.find(d);
    return it == parts.end() ? Polynomial<S>(f.ring(), f.table()) : it->second;
}

template <RingScalar S>
class PointVector {
public:
    PointVector(VariableTable table, std::vector<S> coords) : table_(std::move(table)), coords_(std::move(coords)) {
        if (coords_.size() != table_.size()) throw Error(Errc::DimensionMismatch, "point length != variable count");
    }

    const VariableTable& table() const noexcept { return table_; }
    const std::vector<S>& coords() const noexcept { return coords_; }
    const S& operator[](std::size_t i) const { return coords_.at(i); }
    std::size_t size() const noexcept { return coords_.size(); }

    /// Comma-separated scalar texts; extension-field coordinates are parenthesised.
    std::string to_string() const {
        std::string out;
        for (const auto& c : coords_) {
            if (!out.empty()) out += ',';
            out += detail::coefficient_text(c);
        }
        return out;
    }

    friend bool operator==(const PointVector& a, const PointVector& b) {
        return a.table_ == b.table_ && a.coords_ == b.coords_;
    }
    /// Coordinatewise comparison in block order.
    friend bool operator<(const PointVector& a, const PointVector& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
    }

private:
    VariableTable table_;
    std::vector<S> coords_;
};

template <RingScalar S>
PointVector<S> act_point(const PointVector<S>& v) {
    const auto& table = v.table();
    std::vector<S> out = v.coords();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table.position(i) >= 2) out[i] = v[i - 1] + v[i];
    }
    return PointVector<S>(table, std::move(out));
}

/// The <g>-orbit of v, starting at v, in iteration order (finite fields only).
template <RingScalar S>
    requires(!std::same_as<S, Rational> && !std::same_as<S, Integer>)
std::vector<PointVector<S>> orbit(const PointVector<S>& v) {
    std::vector<PointVector<S>> out{v};
    for (auto w = act_point(v); !(w == v); w = act_point(w)) out.push_back(w);
    return out;
}

/// Lexicographically smallest orbit element; equal for two points iff they share an orbit.
template <RingScalar S>
    requires(!std::same_as<S, Rational> && !std::same_as<S, Integer>)
PointVector<S> orbit_representative(const PointVector<S>& v) {
    auto points = orbit(v);
    return *std::min_element(points.begin(), points.end());
}

/// phi_n: V_n -> V_{n-1}, dropping the last coordinate of a single block.
template <RingScalar S>
PointVector<S> project_phi(const PointVector<S>& v) {
    const auto& table = v.table();
    if (!table.single_block()) throw Error(Errc::NotSingleBlock, "projection needs a single Jordan block");
    if (table.size() < 2) throw Error(Errc::BlockTooSmall, "projection needs a block of size >= 2");
    std::vector<S> coords(v.coords().begin(), v.coords().end() - 1);
    return PointVector<S>(VariableTable::flat(static_cast<int>(table.size() - 1)), std::move(coords));
}

/// c_{i,1} != 0 for every nontrivial block i.
template <RingScalar S>
bool in_open_set_B(const PointVector<S>& v) {
    const auto& table = v.table();
    for (std::size_t b = 0; b < table.block_count(); ++b) {
        if (table.blocks()[b] < 2) continue;
        if (v[table.block_offset(b)].is_zero()) return false;
    }
    return true;
}

}  // namespace modinv

#endif  // MODINV_ACTION_HPP
