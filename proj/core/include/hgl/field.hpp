#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hgl {

/// The field of scalars: the rationals, or GF(p) for a prime p < 2^31.
class Field {
public:
    Field() = default;  // rationals

    static Field rational() { return Field(); }
    /// Throws FieldError unless p is a prime in [2, 2^31).
    static Field prime(std::int64_t p);
    /// Accepts "Q" or "GF(p)".
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    /// 0 for the rationals.
    std::int64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Field& f);

/// Exact field element. GF(p) values are kept in 0..p-1, rationals as reduced fractions.
class Scalar {
public:
    explicit Scalar(Field f = Field());
    Scalar(Field f, long value);
    Scalar(Field f, const mpq_class& value);

    /// "3", "-2", "2/3". Over GF(p) a fraction means multiplication by the inverse.
    static Scalar parse(Field f, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in 0..p-1; only valid over GF(p).
    std::int64_t residue() const;
    /// Rational value; only valid over Q.
    const mpq_class& rational() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Canonical total order (residues, or rational values); fields must agree.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    Scalar pow(std::int64_t e) const;
    std::string to_string() const;

private:
    Field field_;
    std::variant<std::int64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

namespace detail {
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
inline std::int64_t mod_reduce(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}
}  // namespace detail

}  // namespace hgl
