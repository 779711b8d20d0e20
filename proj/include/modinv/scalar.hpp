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

#ifndef MODINV_SCALAR_HPP
#define MODINV_SCALAR_HPP

// Exact coefficient rings: Z, Q, F_p and small extension fields F_{p^k}.
//
// Every scalar type S exposes `S::ring_type` and `S::is_field`; ring objects
// build constants (zero(), one(), from_int(), from_integer()) and parse the
// textual encodings. The two finite fields additionally expose a "code"
// interface (elements as integers in [0, q)) used by the brute-force oracle.

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modinv/error.hpp"

namespace modinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Largest field size find_irreducible / ExtensionField will build by default.
inline constexpr std::uint64_t kDefaultFieldBound = 1u << 16;

bool is_prime(std::uint64_t n) noexcept;

struct RingTag {
    enum class Kind { Rationals, Integers, PrimeField, ExtensionField };

    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;
    unsigned k = 0;
    std::vector<std::uint32_t> modulus;  // low-degree-first, monic (size k+1)

    static RingTag rationals() { return {}; }
    static RingTag integers() { return {Kind::Integers, 0, 0, {}}; }
    static RingTag prime_field(std::uint32_t p) { return {Kind::PrimeField, p, 1, {}}; }
    static RingTag extension_field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
        return {Kind::ExtensionField, p, k, std::move(modulus)};
    }

    /// "Q", "Z", "F5", "F5^2".
    std::string to_string() const;

    friend bool operator==(const RingTag&, const RingTag&) = default;
};

/// Inverse of RingTag::to_string; extension moduli are recomputed (they are pinned).
RingTag parse_ring_tag(std::string_view text);

class Integer;
class Rational;
class Fp;
class Fq;
class PrimeField;
class ExtensionField;

struct IntegerRing {
    using value_type = Integer;
    Integer zero() const;
    Integer one() const;
    Integer from_int(long long v) const;
    Integer from_integer(const Integer& v) const;
    Integer parse(std::string_view text) const;
    RingTag tag() const { return RingTag::integers(); }
    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

struct RationalRing {
    using value_type = Rational;
    Rational zero() const;
    Rational one() const;
    Rational from_int(long long v) const;
    Rational from_integer(const Integer& v) const;
    Rational parse(std::string_view text) const;
    RingTag tag() const { return RingTag::rationals(); }
    friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

class Integer {
public:
    using ring_type = IntegerRing;
    static constexpr bool is_field = false;

    Integer() = default;
    Integer(long long v) : v_(v) {}  // NOLINT: literals are integers
    explicit Integer(BigInt v) : v_(std::move(v)) {}

    const BigInt& value() const noexcept { return v_; }
    IntegerRing ring() const noexcept { return {}; }
    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(const Integer& a) { return Integer(BigInt(-a.v_)); }

    /// Z is not a field: always throws NotAField.
    [[noreturn]] Integer inv() const;
    [[noreturn]] friend Integer operator/(const Integer& a, const Integer& b);

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }

    std::string to_string() const { return v_.str(); }

private:
    BigInt v_;
};

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    using ring_type = RationalRing;
    static constexpr bool is_field = true;

    Rational() = default;
    Rational(long long v) : v_(v) {}  // NOLINT
    Rational(long long num, long long den);
    explicit Rational(BigRational v) : v_(std::move(v)) {}
    explicit Rational(const Integer& v) : v_(v.value()) {}

    const BigRational& value() const noexcept { return v_; }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    RationalRing ring() const noexcept { return {}; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integral() const { return denominator() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(BigRational(-a.v_)); }
    Rational inv() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

private:
    BigRational v_;
};

/// F_p for a prime p < 2^31.
class PrimeField {
public:
    using value_type = Fp;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint64_t size() const noexcept { return p_; }
    unsigned degree() const noexcept { return 1; }

    Fp zero() const;
    Fp one() const;
    Fp from_int(long long v) const;
    Fp from_integer(const Integer& v) const;
    Fp element(std::uint32_t code) const;
    Fp parse(std::string_view text) const;
    RingTag tag() const { return RingTag::prime_field(p_); }

    // Element codes are the residues themselves.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t embed_prime(std::uint32_t residue) const noexcept { return residue; }
    std::string code_text(std::uint32_t code) const { return std::to_string(code); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

class Fp {
public:
    using ring_type = PrimeField;
    static constexpr bool is_field = true;

    /// `residue` is reduced mod p.
    Fp(std::uint64_t residue, std::uint32_t p) : v_(static_cast<std::uint32_t>(residue % p)), p_(p) {}

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    PrimeField ring() const { return PrimeField(p_); }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
    Fp inv() const;

    friend bool operator==(const Fp& a, const Fp& b) = default;
    friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) { return a.v_ <=> b.v_; }

    std::string to_string() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const;

    std::uint32_t v_;
    std::uint32_t p_;
};

namespace detail {
struct ExtFieldData;
}

/// F_{p^k} = F_p[t]/(m(t)) with m the pinned minimal irreducible (see find_irreducible).
/// Element code = sum_i c_i p^i for the residue polynomial sum_i c_i t^i.
class ExtensionField {
public:
    using value_type = Fq;

    ExtensionField(std::uint32_t p, unsigned k, std::uint64_t bound = kDefaultFieldBound);

    std::uint32_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint64_t size() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Fq zero() const;
    Fq one() const;
    Fq from_int(long long v) const;
    Fq from_integer(const Integer& v) const;
    Fq element(std::uint32_t code) const;
    Fq from_coefficients(const std::vector<std::uint32_t>& low_first) const;
    /// Comma-separated residues, low degree first ("2,1" is 2 + t).
    Fq parse(std::string_view text) const;
    RingTag tag() const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t embed_prime(std::uint32_t residue) const noexcept { return residue; }
    std::vector<std::uint32_t> coefficients(std::uint32_t code) const;
    std::string code_text(std::uint32_t code) const;

    friend bool operator==(const ExtensionField& a, const ExtensionField& b);

private:
    std::shared_ptr<const detail::ExtFieldData> data_;
};

class Fq {
public:
    using ring_type = ExtensionField;
    static constexpr bool is_field = true;

    Fq(ExtensionField field, std::uint32_t code) : field_(std::move(field)), code_(code) {}

    std::uint32_t code() const noexcept { return code_; }
    const ExtensionField& ring() const noexcept { return field_; }
    bool is_zero() const noexcept { return code_ == 0; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }

    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o);
    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
    friend Fq operator-(const Fq& a) { return Fq(a.field_, a.field_.neg(a.code_)); }
    Fq inv() const;

    friend bool operator==(const Fq& a, const Fq& b) { return a.code_ == b.code_ && a.field_ == b.field_; }
    friend std::strong_ordering operator<=>(const Fq& a, const Fq& b) { return a.code_ <=> b.code_; }

    std::string to_string() const { return field_.code_text(code_); }

private:
    void check(const Fq& o) const;

    ExtensionField field_;
    std::uint32_t code_;
};

template <class S>
concept RingScalar = requires(const S a, const S b) {
    typename S::ring_type;
    { S::is_field } -> std::convertible_to<bool>;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
    { a.ring().zero() } -> std::same_as<S>;
    { a.ring().one() } -> std::same_as<S>;
    { a.ring().from_integer(Integer{}) } -> std::same_as<S>;
};

template <class S>
concept FieldScalar = RingScalar<S> && S::is_field && requires(const S a) {
    { a.inv() } -> std::same_as<S>;
};

/// Finite field with the integer-code interface.
template <class F>
concept FiniteField = requires(const F f, std::uint32_t a) {
    { f.size() } -> std::convertible_to<std::uint64_t>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
    { f.add(a, a) } -> std::same_as<std::uint32_t>;
    { f.mul(a, a) } -> std::same_as<std::uint32_t>;
    { f.neg(a) } -> std::same_as<std::uint32_t>;
    { f.embed_prime(a) } -> std::same_as<std::uint32_t>;
    { f.code_text(a) } -> std::convertible_to<std::string>;
    { f.tag() } -> std::same_as<RingTag>;
};

template <RingScalar S>
S pow(S base, std::uint64_t e) {
    S result = base.ring().one();
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Image of a p-integral rational under Z_(p) -> F_p.
Fp reduce_mod_p(const Rational& a, std::uint32_t p);
Fp reduce_mod_p(const Integer& a, std::uint32_t p);

/// Minimal monic irreducible of degree k over F_p, low-degree-first coefficients.
/// Minimal means smallest code sum_i c_i p^i over the non-leading coefficients.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned k, std::uint64_t bound = kDefaultFieldBound);

}  // namespace modinv

#endif  // MODINV_SCALAR_HPP
