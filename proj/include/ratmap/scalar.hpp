/*
   Copyright 2026 The ratmap Authors

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

/**
 * @file scalar.hpp
 * @brief Exact scalars: unbounded integers, reduced rationals and prime-field residues.
 *
 * A Scalar carries its ring at runtime so that the command line can choose the
 * base ring. Mixing rings in one operation throws RingMismatch.
 */

#ifndef RATMAP_SCALAR_HPP
#define RATMAP_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "error.hpp"

namespace ratmap {

using Integer = boost::multiprecision::cpp_int;

inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw DomainError("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw DomainError("malformed integer literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw DomainError("malformed integer literal '" + std::string(text) + "'");
    Integer value(std::string(text.substr(start)));
    return text[0] == '-' ? Integer(-value) : value;
}

/// (g, s, t) with g = s*a + t*b and g >= 0.
inline std::tuple<Integer, Integer, Integer> extended_gcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Integer q = a / b;
        a = std::exchange(b, a - q * b);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
}

enum class RingKind { integers, rationals, prime_field };

class RingTag {
   public:
    RingTag() = default;

    static RingTag integers() { return RingTag(RingKind::integers, 0); }
    static RingTag rationals() { return RingTag(RingKind::rationals, 0); }

    /// Throws DomainError unless `modulus` is a prime below 2^32 (checked by trial division).
    static RingTag prime_field(std::uint64_t modulus) {
        if (modulus < 2 || modulus > 0xffffffffULL)
            throw DomainError("prime field modulus must lie in [2, 2^32), got " + std::to_string(modulus));
        for (std::uint64_t d = 2; d * d <= modulus; ++d)
            if (modulus % d == 0) throw DomainError("modulus " + std::to_string(modulus) + " is not prime");
        return RingTag(RingKind::prime_field, modulus);
    }

    /// Accepts "z", "q", "fp:P" (any case), as well as the JSON spellings "Z", "Q", "Fp:P".
    static RingTag parse(std::string_view text) {
        std::string lower;
        for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (lower == "z") return integers();
        if (lower == "q") return rationals();
        if (lower.starts_with("fp:")) {
            std::string digits = lower.substr(3);
            if (digits.empty() || digits.size() > 12 ||
                digits.find_first_not_of("0123456789") != std::string::npos)
                throw DomainError("malformed prime field modulus in '" + std::string(text) + "'");
            return prime_field(std::stoull(digits));
        }
        throw DomainError("unknown ring '" + std::string(text) + "' (expected z, q or fp:P)");
    }

    RingKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_field() const noexcept { return kind_ != RingKind::integers; }

    std::string to_string() const {
        switch (kind_) {
            case RingKind::integers:
                return "Z";
            case RingKind::rationals:
                return "Q";
            case RingKind::prime_field:
                return "Fp:" + std::to_string(modulus_);
        }
        return "?";
    }

    friend bool operator==(const RingTag&, const RingTag&) = default;

   private:
    RingTag(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_ = RingKind::integers;
    std::uint64_t modulus_ = 0;
};

class Scalar {
   public:
    Scalar() = default;
    Scalar(const RingTag& ring, Integer value) : ring_(ring), num_(std::move(value)) { normalize(); }
    Scalar(const RingTag& ring, long long value) : Scalar(ring, Integer(value)) {}

    /// num/den in the given ring. Over Z the quotient must be exact.
    static Scalar fraction(const RingTag& ring, Integer num, Integer den) {
        if (den == 0) throw DomainError("zero denominator");
        Scalar s;
        s.ring_ = ring;
        switch (ring.kind()) {
            case RingKind::integers:
                if (num % den != 0) throw InexactDivision(num.str() + "/" + den.str() + " is not an integer");
                s.num_ = num / den;
                break;
            case RingKind::rationals:
                s.num_ = std::move(num);
                s.den_ = std::move(den);
                break;
            case RingKind::prime_field:
                return Scalar(ring, std::move(num)) * Scalar(ring, std::move(den)).inverse();
        }
        s.normalize();
        return s;
    }

    const RingTag& ring() const noexcept { return ring_; }
    const Integer& numerator() const noexcept { return num_; }
    /// Always 1 outside Q.
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integral() const { return den_ == 1; }
    /// Sign of the representative; residues are never negative.
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    /// Units: {+-1} over Z, every nonzero element over a field.
    bool is_unit() const {
        if (ring_.kind() == RingKind::integers) return num_ == 1 || num_ == -1;
        return !is_zero();
    }

    Scalar inverse() const {
        if (!is_unit()) throw InexactDivision(to_string() + " is not invertible in " + ring_.to_string());
        switch (ring_.kind()) {
            case RingKind::integers:
                return *this;
            case RingKind::rationals:
                return fraction(ring_, den_, num_);
            case RingKind::prime_field: {
                auto [g, s, t] = extended_gcd(num_, Integer(ring_.modulus()));
                return Scalar(ring_, s);
            }
        }
        return *this;
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        r.normalize();
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        if (a.ring_.kind() == RingKind::rationals) return fraction(a.ring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        return Scalar(a.ring_, a.num_ + b.num_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        if (a.ring_.kind() == RingKind::rationals) return fraction(a.ring_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
        return Scalar(a.ring_, a.num_ - b.num_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        if (a.ring_.kind() == RingKind::rationals) return fraction(a.ring_, a.num_ * b.num_, a.den_ * b.den_);
        return Scalar(a.ring_, a.num_ * b.num_);
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar pow(unsigned k) const {
        Scalar result(ring_, 1), base = *this;
        for (; k; k >>= 1) {
            if (k & 1) result *= base;
            base *= base;
        }
        return result;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.ring_ == b.ring_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "7", "-7" or "-3/4".
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

   private:
    static void check_same(const Scalar& a, const Scalar& b) {
        if (!(a.ring_ == b.ring_))
            throw RingMismatch("scalar ring mismatch: " + a.ring_.to_string() + " vs " + b.ring_.to_string());
    }

    void normalize() {
        switch (ring_.kind()) {
            case RingKind::integers:
                den_ = 1;
                break;
            case RingKind::rationals: {
                if (den_ < 0) {
                    num_ = -num_;
                    den_ = -den_;
                }
                Integer g = boost::multiprecision::gcd(num_, den_);
                if (g > 1) {
                    num_ /= g;
                    den_ /= g;
                }
                if (num_ == 0) den_ = 1;
                break;
            }
            case RingKind::prime_field: {
                Integer p(ring_.modulus());
                num_ %= p;
                if (num_ < 0) num_ += p;
                den_ = 1;
                break;
            }
        }
    }

    RingTag ring_;
    Integer num_ = 0;
    Integer den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_unit(const Scalar& s) { return s.is_unit(); }

/// a / b where b must divide a in the scalar ring.
inline Scalar exact_div(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw InexactDivision("division by zero");
    if (a.ring().kind() == RingKind::integers) {
        if (!(a.ring() == b.ring())) throw RingMismatch("scalar ring mismatch in division");
        if (a.numerator() % b.numerator() != 0)
            throw InexactDivision(a.to_string() + " is not divisible by " + b.to_string());
        return Scalar(a.ring(), a.numerator() / b.numerator());
    }
    return a * b.inverse();
}

}  // namespace ratmap

#endif
