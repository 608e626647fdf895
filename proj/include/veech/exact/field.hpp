#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "veech/core/error.hpp"

namespace veech {

using Rational = mpq_class;

/// Element of Q(√2,√3), stored on the basis {1, √2, √3, √6}.
class Field {
public:
    static constexpr double kSqrt2 = 1.4142135623730950488;
    static constexpr double kSqrt3 = 1.7320508075688772935;
    static constexpr double kSqrt6 = 2.4494897427831780982;

    Field() = default;
    Field(long v) : c_{Rational(v), 0, 0, 0} {}
    Field(int v) : c_{Rational(v), 0, 0, 0} {}
    Field(const Rational& q) : c_{q, 0, 0, 0} {}
    Field(Rational q0, Rational q1, Rational q2, Rational q3)
        : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {
        for (auto& q : c_) q.canonicalize();
    }

    static Field sqrt2() { return {0, 1, 0, 0}; }
    static Field sqrt3() { return {0, 0, 1, 0}; }
    static Field sqrt6() { return {0, 0, 0, 1}; }
    static Field ratio(long p, long q) {
        Rational r{mpz_class(p), mpz_class(q)};
        r.canonicalize();
        return Field(r);
    }

    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
    bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

    Field operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    Field& operator+=(const Field& o) {
        for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Field& operator-=(const Field& o) {
        for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Field& operator*=(const Field& o) { return *this = *this * o; }
    Field& operator/=(const Field& o) { return *this = *this / o; }

    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }

    friend Field operator*(const Field& p, const Field& q) {
        const auto& a = p.c_;
        const auto& b = q.c_;
        Field r;
        r.c_[0] = a[0] * b[0] + 2 * a[1] * b[1] + 3 * a[2] * b[2] + 6 * a[3] * b[3];
        r.c_[1] = a[0] * b[1] + a[1] * b[0] + 3 * (a[2] * b[3] + a[3] * b[2]);
        r.c_[2] = a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]);
        r.c_[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
        return r;
    }

    // x = u + v√2 with u, v in Q(√3); x·x̄ = u² − 2v² = r + s√3; (r + s√3)(r − s√3) ∈ Q.
    Field inverse() const {
        if (is_zero()) throw DomainError("division by zero field element");
        Field bar{c_[0], -c_[1], c_[2], -c_[3]};
        Field n = *this * bar;
        Field n_bar{n.c_[0], 0, -n.c_[2], 0};
        Rational norm = n.c_[0] * n.c_[0] - 3 * n.c_[2] * n.c_[2];
        Field r = bar * n_bar;
        for (auto& q : r.c_) q /= norm;
        return r;
    }

    friend Field operator/(const Field& a, const Field& b) {
        if (b.is_rational()) {
            if (sgn(b.c_[0]) == 0) throw DomainError("division by zero field element");
            Field r = a;
            for (auto& q : r.c_) q /= b.c_[0];
            return r;
        }
        return a * b.inverse();
    }

    /// Floating value together with an absolute error bound on it.
    struct Approx {
        double value;
        double error;
    };

    Approx approx() const {
        constexpr double eps = std::numeric_limits<double>::epsilon();
        double q0 = c_[0].get_d(), q1 = c_[1].get_d(), q2 = c_[2].get_d(), q3 = c_[3].get_d();
        double t1 = q1 * kSqrt2, t2 = q2 * kSqrt3, t3 = q3 * kSqrt6;
        double v = q0 + t1 + t2 + t3;
        double mag = std::fabs(q0) + std::fabs(t1) + std::fabs(t2) + std::fabs(t3);
        return {v, 8.0 * eps * mag + std::numeric_limits<double>::denorm_min() * 16};
    }

    double to_double() const { return approx().value; }

    int sign() const {
        Approx a = approx();
        if (std::isfinite(a.value) && std::isfinite(a.error) && std::fabs(a.value) > a.error)
            return a.value > 0 ? 1 : -1;
        return exact_sign();
    }

    int exact_sign() const {
        // u = q0 + q2√3, v = q1 + q3√3
        int su = sign_q3(c_[0], c_[2]);
        int sv = sign_q3(c_[1], c_[3]);
        if (sv == 0) return su;
        if (su == 0 || su == sv) return su == 0 ? sv : su;
        // u² − 2v² in Q(√3)
        Rational r = c_[0] * c_[0] + 3 * c_[2] * c_[2] - 2 * (c_[1] * c_[1] + 3 * c_[3] * c_[3]);
        Rational s = 2 * c_[0] * c_[2] - 4 * c_[1] * c_[3];
        return su * sign_q3(r, s);
    }

    Field abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
    friend bool operator<(const Field& a, const Field& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Field& a, const Field& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Field& a, const Field& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Field& a, const Field& b) { return (a - b).sign() >= 0; }

    /// Largest integer n with n <= x.
    mpz_class floor() const {
        if (is_rational()) {
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), c_[0].get_num_mpz_t(), c_[0].get_den_mpz_t());
            return f;
        }
        mpz_class n(std::floor(to_double()));
        while (Field(Rational(n)) > *this) --n;
        while (Field(Rational(n + 1)) <= *this) ++n;
        return n;
    }

    std::string to_string() const;
    static Field parse(std::string_view text);

private:
    // sign of a + b√3, a, b rational
    static int sign_q3(const Rational& a, const Rational& b) {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
        int cmp_sq = ::cmp(Rational(a * a), Rational(3 * b * b));
        return cmp_sq > 0 ? sa : (cmp_sq < 0 ? sb : 0);
    }

    std::array<Rational, 4> c_{};
};

inline int field_sign(const Field& x) { return x.sign(); }

inline std::string Field::to_string() const {
    static constexpr const char* kRad[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& q = c_[i];
        if (sgn(q) == 0) continue;
        Rational mag = sgn(q) < 0 ? Rational(-q) : q;
        if (out.empty()) {
            if (sgn(q) < 0) out += "-";
        } else {
            out += sgn(q) < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += kRad[i];
        } else if (mag.get_num() == 1) {
            out += std::string(kRad[i]) + "/" + mag.get_den().get_str();
        } else {
            out += mag.get_str() + "*" + kRad[i];
        }
    }
    return out.empty() ? "0" : out;
}

// Grammar: term (('+'|'-') term)*, term := [rational ['*']] [radical] ['/' integer]
// radical := sqrt2 | sqrt3 | sqrt6 | r2 | r3 | r6 | s2 | s3 | s6
inline Field Field::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty field element");

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("cannot parse field element '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    };
    auto read_radical = [&]() -> int {
        static constexpr std::pair<const char*, int> kNames[] = {
            {"sqrt2", 1}, {"sqrt3", 2}, {"sqrt6", 3}, {"r2", 1}, {"r3", 2}, {"r6", 3}, {"s2", 1}, {"s3", 2}, {"s6", 3}};
        for (auto [name, idx] : kNames) {
            std::string_view n(name);
            if (s.compare(pos, n.size(), n) == 0) {
                pos += n.size();
                return idx;
            }
        }
        return 0;
    };

    Field result;
    bool first = true;
    while (pos < s.size()) {
        int sg = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sg = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(1);
        bool have_number = false;
        std::string num = read_int();
        if (!num.empty()) {
            have_number = true;
            coeff = Rational(mpz_class(num));
            if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                ++pos;
                std::string den = read_int();
                if (mpz_class(den) == 0) throw fail("zero denominator");
                coeff /= Rational(mpz_class(den));
            }
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        int rad = read_radical();
        if (!have_number && rad == 0) throw fail("expected number or radical at offset " + std::to_string(pos));
        if (rad != 0 && pos < s.size() && s[pos] == '/') {
            ++pos;
            std::string den = read_int();
            if (den.empty() || mpz_class(den) == 0) throw fail("bad denominator");
            coeff /= Rational(mpz_class(den));
        }
        coeff *= sg;
        std::array<Rational, 4> c{0, 0, 0, 0};
        c[static_cast<std::size_t>(rad)] = coeff;
        result += Field(c[0], c[1], c[2], c[3]);
    }
    return result;
}

inline std::ostream& operator<<(std::ostream& os, const Field& x) { return os << x.to_string(); }

}  // namespace veech
