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

#include "modinv/polynomial.hpp"

#include <charconv>

namespace modinv {

VariableTable::VariableTable(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error(Errc::InvalidSpec, "a variable table needs at least one block");
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b] < 1) throw Error(Errc::InvalidSpec, "block sizes must be positive");
        offsets_.push_back(offset);
        for (int j = 1; j <= blocks_[b]; ++j) {
            block_of_.push_back(b);
            position_.push_back(j);
        }
        offset += static_cast<std::size_t>(blocks_[b]);
    }
}

std::size_t VariableTable::index(std::size_t block, int position) const {
    if (block >= blocks_.size() || position < 1 || position > blocks_[block]) {
        throw Error(Errc::DimensionMismatch, "no variable at block " + std::to_string(block + 1) + ", position " +
                                                 std::to_string(position));
    }
    return offsets_[block] + static_cast<std::size_t>(position - 1);
}

std::string VariableTable::name(std::size_t v) const {
    if (single_block()) return "x" + std::to_string(position(v));
    return "x" + std::to_string(block_of(v) + 1) + "_" + std::to_string(position(v));
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
    for (std::size_t v = 0; v < size(); ++v) {
        if (this->name(v) == name) return v;
    }
    return std::nullopt;
}

std::uint64_t Monomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

std::uint64_t Monomial::weight(const VariableTable& table) const {
    std::uint64_t w = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) w += static_cast<std::uint64_t>(table.position(v)) * exps[v];
    return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) throw Error(Errc::DimensionMismatch, "monomials of different length");
    Monomial out = a;
    for (std::size_t v = 0; v < b.exps.size(); ++v) out.exps[v] += b.exps[v];
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    for (std::size_t v = a.exps.size(); v-- > 0;) {
        if (a.exps[v] != b.exps[v]) return a.exps[v] < b.exps[v];
    }
    return false;
}

std::string monomial_text(const Monomial& m, const VariableTable& table) {
    std::string out;
    // Within a term, variables are listed in increasing index: x1*x2^2*x3.
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += table.name(v);
        if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
    }
    return out.empty() ? "1" : out;
}

namespace detail {

std::vector<std::pair<bool, std::string>> split_terms(std::string_view text) {
    std::vector<std::pair<bool, std::string>> out;
    bool negative = false;
    std::string current;
    int depth = 0;
    auto flush = [&] {
        std::string trimmed;
        for (char ch : current) {
            if (ch != ' ') trimmed += ch;
        }
        if (trimmed.empty()) throw Error(Errc::ParseError, "empty term in '" + std::string(text) + "'");
        out.emplace_back(negative, std::move(trimmed));
        current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        const bool separator = depth == 0 && (ch == '+' || ch == '-');
        if (separator) {
            // A leading sign opens the first term; otherwise it closes the previous one.
            if (current.find_first_not_of(' ') != std::string::npos) flush();
            negative = ch == '-';
            continue;
        }
        current += ch;
    }
    flush();
    return out;
}

std::vector<std::string> split_factors(std::string_view term) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char ch : term) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '*' && depth == 0) {
            out.push_back(std::move(current));
            current.clear();
            continue;
        }
        current += ch;
    }
    out.push_back(std::move(current));
    return out;
}

std::uint32_t parse_exponent(std::string_view text) {
    std::uint32_t e = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), e);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(Errc::ParseError, "bad exponent '" + std::string(text) + "'");
    }
    return e;
}

}  // namespace detail

}  // namespace modinv
