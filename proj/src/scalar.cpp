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

#include "modinv/scalar.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace modinv {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotAField: return "NotAField";
        case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::TableMismatch: return "TableMismatch";
        case Errc::MissingImage: return "MissingImage";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotSingleBlock: return "NotSingleBlock";
        case Errc::BlockTooSmall: return "BlockTooSmall";
        case Errc::ParityViolation: return "ParityViolation";
        case Errc::RangeViolation: return "RangeViolation";
        case Errc::IncompatibleBases: return "IncompatibleBases";
        case Errc::NoSolution: return "NoSolution";
        case Errc::BlockExceedsP: return "BlockExceedsP";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text.front() == '+' ? text.substr(1) : text));
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(Errc::ParseError, "not a residue: '" + std::string(text) + "'");
    }
    return v;
}

std::uint32_t bigint_mod(const BigInt& v, std::uint32_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1u) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Polynomials over F_p as low-degree-first coefficient vectors.
using PolyFp = std::vector<std::uint32_t>;

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
PolyFp poly_rem(PolyFp a, const PolyFp& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

PolyFp decode(std::uint64_t code, std::uint32_t p, unsigned len) {
    PolyFp out(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return out;
}

bool is_irreducible(const PolyFp& f, std::uint32_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            PolyFp g = decode(c, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::string RingTag::to_string() const {
    switch (kind) {
        case Kind::Rationals: return "Q";
        case Kind::Integers: return "Z";
        case Kind::PrimeField: return "F" + std::to_string(p);
        case Kind::ExtensionField: return "F" + std::to_string(p) + "^" + std::to_string(k);
    }
    return "?";
}

RingTag parse_ring_tag(std::string_view text) {
    if (text == "Q") return RingTag::rationals();
    if (text == "Z") return RingTag::integers();
    if (text.size() >= 2 && text.front() == 'F') {
        text.remove_prefix(1);
        const auto caret = text.find('^');
        const auto p = static_cast<std::uint32_t>(parse_u64(text.substr(0, caret)));
        if (!is_prime(p)) throw Error(Errc::ParseError, "ring characteristic is not prime");
        if (caret == std::string_view::npos) return RingTag::prime_field(p);
        const auto k = static_cast<unsigned>(parse_u64(text.substr(caret + 1)));
        if (k == 1) return RingTag::prime_field(p);
        return RingTag::extension_field(p, k, find_irreducible(p, k));
    }
    throw Error(Errc::ParseError, "unknown ring tag '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Z, Q

Integer IntegerRing::zero() const { return Integer(0); }
Integer IntegerRing::one() const { return Integer(1); }
Integer IntegerRing::from_int(long long v) const { return Integer(v); }
Integer IntegerRing::from_integer(const Integer& v) const { return v; }
Integer IntegerRing::parse(std::string_view text) const { return Integer(parse_bigint(text)); }

Integer Integer::inv() const { throw Error(Errc::NotAField, "inversion requested over Z"); }
Integer operator/(const Integer&, const Integer&) { throw Error(Errc::NotAField, "division requested over Z"); }

Rational RationalRing::zero() const { return Rational(0); }
Rational RationalRing::one() const { return Rational(1); }
Rational RationalRing::from_int(long long v) const { return Rational(v); }
Rational RationalRing::from_integer(const Integer& v) const { return Rational(v); }

Rational RationalRing::parse(std::string_view text) const {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigRational(parse_bigint(text)));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    return Rational(BigRational(num, den));
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    BigInt n(num);
    BigInt d(den);
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    v_ = BigRational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero over Q");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero over Q");
    return Rational(BigRational(1) / v_);
}

std::string Rational::to_string() const {
    const BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
}

// ---------------------------------------------------------------- F_p

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) {
        throw Error(Errc::InvalidSpec, "F_p requires a prime p < 2^31, got " + std::to_string(p));
    }
}

Fp PrimeField::zero() const { return Fp(0, p_); }
Fp PrimeField::one() const { return Fp(1, p_); }

Fp PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint64_t>(r), p_);
}

Fp PrimeField::from_integer(const Integer& v) const { return Fp(bigint_mod(v.value(), p_), p_); }

Fp PrimeField::element(std::uint32_t code) const {
    if (code >= p_) throw Error(Errc::RangeViolation, "residue out of range [0, p)");
    return Fp(code, p_);
}

Fp PrimeField::parse(std::string_view text) const {
    const std::uint64_t v = parse_u64(text);
    if (v >= p_) throw Error(Errc::ParseError, "residue '" + std::string(text) + "' not in [0, p)");
    return Fp(v, p_);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_p");
    return pow_mod(a, p_ - 2, p_);
}

void Fp::check(const Fp& o) const {
    if (p_ != o.p_) {
        throw Error(Errc::RingMismatch,
                    "F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_) + " operands");
    }
}

Fp& Fp::operator+=(const Fp& o) {
    check(o);
    v_ = (v_ + o.v_) % p_;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
}

Fp& Fp::operator/=(const Fp& o) {
    check(o);
    return *this *= o.inv();
}

Fp Fp::inv() const {
    if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_p");
    return Fp(pow_mod(v_, p_ - 2, p_), p_);
}

Fp reduce_mod_p(const Integer& a, std::uint32_t p) { return PrimeField(p).from_integer(a); }

Fp reduce_mod_p(const Rational& a, std::uint32_t p) {
    const PrimeField field(p);
    const Fp den = field.from_integer(Integer(a.denominator()));
    if (den.is_zero()) {
        throw Error(Errc::DenominatorDivisibleByP,
                    "cannot reduce " + a.to_string() + " modulo " + std::to_string(p));
    }
    return field.from_integer(Integer(a.numerator())) / den;
}

// ---------------------------------------------------------------- F_{p^k}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned k, std::uint64_t bound) {
    if (!is_prime(p)) throw Error(Errc::InvalidSpec, "characteristic must be prime");
    if (k == 0) throw Error(Errc::RangeViolation, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > bound) {
            throw Error(Errc::BoundExceeded, "p^k exceeds the field-size bound " + std::to_string(bound));
        }
    }
    for (std::uint64_t code = 0; code < q; ++code) {
        PolyFp f = decode(code, p, k);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw Error(Errc::NoSolution, "no irreducible polynomial found");  // unreachable for prime p
}

namespace detail {

struct ExtFieldData {
    std::uint32_t p;
    unsigned k;
    std::uint32_t q;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> place;  // p^i
    std::vector<std::uint32_t> exp;    // exp[i] = code of g^i, size q-1
    std::vector<std::uint32_t> log;    // log[code], undefined at 0

    std::uint32_t encode(const PolyFp& c) const {
        std::uint32_t code = 0;
        for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
        return code;
    }

    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        const PolyFp x = decode(a, p, k);
        const PolyFp y = decode(b, p, k);
        PolyFp prod(2 * k, 0);
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = 0; j < k; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
            }
        }
        PolyFp r = poly_rem(prod, modulus, p);
        r.resize(k, 0);
        return encode(r);
    }
};

}  // namespace detail

ExtensionField::ExtensionField(std::uint32_t p, unsigned k, std::uint64_t bound) {
    auto data = std::make_shared<detail::ExtFieldData>();
    data->p = p;
    data->k = k;
    data->modulus = find_irreducible(p, k, bound);
    std::uint32_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        data->place.push_back(q);
        q *= p;
    }
    data->q = q;

    // Multiplicative group is cyclic: find the smallest generator by code.
    data->log.assign(q, 0);
    for (std::uint32_t g = 1; g < q; ++g) {
        std::vector<std::uint32_t> powers;
        powers.reserve(q - 1);
        std::uint32_t x = 1;
        do {
            powers.push_back(x);
            x = data->slow_mul(x, g);
        } while (x != 1 && powers.size() < q);
        if (powers.size() == q - 1) {
            data->exp = std::move(powers);
            break;
        }
    }
    for (std::uint32_t i = 0; i + 1 < q; ++i) data->log[data->exp[i]] = i;
    data_ = std::move(data);
}

std::uint32_t ExtensionField::characteristic() const noexcept { return data_->p; }
unsigned ExtensionField::degree() const noexcept { return data_->k; }
std::uint64_t ExtensionField::size() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& ExtensionField::modulus() const noexcept { return data_->modulus; }

Fq ExtensionField::zero() const { return Fq(*this, 0); }
Fq ExtensionField::one() const { return Fq(*this, 1); }

Fq ExtensionField::from_int(long long v) const {
    long long r = v % static_cast<long long>(data_->p);
    if (r < 0) r += data_->p;
    return Fq(*this, static_cast<std::uint32_t>(r));
}

Fq ExtensionField::from_integer(const Integer& v) const { return Fq(*this, bigint_mod(v.value(), data_->p)); }

Fq ExtensionField::element(std::uint32_t code) const {
    if (code >= data_->q) throw Error(Errc::RangeViolation, "field element code out of range");
    return Fq(*this, code);
}

Fq ExtensionField::from_coefficients(const std::vector<std::uint32_t>& low_first) const {
    if (low_first.size() > data_->k) throw Error(Errc::DimensionMismatch, "too many coefficients");
    PolyFp c(low_first);
    for (auto x : c) {
        if (x >= data_->p) throw Error(Errc::RangeViolation, "coefficient not in [0, p)");
    }
    return Fq(*this, data_->encode(c));
}

Fq ExtensionField::parse(std::string_view text) const {
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coeffs.push_back(static_cast<std::uint32_t>(parse_u64(piece)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (coeffs.size() != data_->k) throw Error(Errc::ParseError, "expected " + std::to_string(data_->k) + " residues");
    for (auto x : coeffs) {
        if (x >= data_->p) throw Error(Errc::ParseError, "residue not in [0, p)");
    }
    return from_coefficients(coeffs);
}

RingTag ExtensionField::tag() const { return RingTag::extension_field(data_->p, data_->k, data_->modulus); }

std::uint32_t ExtensionField::add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t p = data_->p;
    std::uint32_t out = 0;
    for (unsigned i = 0; i < data_->k; ++i) {
        const std::uint32_t s = (a % p + b % p) % p;
        out += s * data_->place[i];
        a /= p;
        b /= p;
    }
    return out;
}

std::uint32_t ExtensionField::neg(std::uint32_t a) const noexcept {
    const std::uint32_t p = data_->p;
    std::uint32_t out = 0;
    for (unsigned i = 0; i < data_->k; ++i) {
        const std::uint32_t d = a % p;
        out += (d == 0 ? 0 : p - d) * data_->place[i];
        a /= p;
    }
    return out;
}

std::uint32_t ExtensionField::sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }

std::uint32_t ExtensionField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t order = data_->q - 1;
    return data_->exp[(data_->log[a] + data_->log[b]) % order];
}

std::uint32_t ExtensionField::inv(std::uint32_t a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_q");
    const std::uint32_t order = data_->q - 1;
    return data_->exp[(order - data_->log[a]) % order];
}

std::vector<std::uint32_t> ExtensionField::coefficients(std::uint32_t code) const {
    return decode(code, data_->p, data_->k);
}

std::string ExtensionField::code_text(std::uint32_t code) const {
    std::string out;
    for (auto c : coefficients(code)) {
        if (!out.empty()) out += ',';
        out += std::to_string(c);
    }
    return out;
}

bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->k == b.data_->k);
}

void Fq::check(const Fq& o) const {
    if (!(field_ == o.field_)) throw Error(Errc::RingMismatch, "operands from different extension fields");
}

Fq& Fq::operator+=(const Fq& o) {
    check(o);
    code_ = field_.add(code_, o.code_);
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    check(o);
    code_ = field_.sub(code_, o.code_);
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    check(o);
    code_ = field_.mul(code_, o.code_);
    return *this;
}

Fq& Fq::operator/=(const Fq& o) {
    check(o);
    code_ = field_.mul(code_, field_.inv(o.code_));
    return *this;
}

Fq Fq::inv() const { return Fq(field_, field_.inv(code_)); }

}  // namespace modinv
