#include "hgl/field.hpp"

#include <charconv>
#include <utility>
#include <ostream>

#include "hgl/error.hpp"

namespace hgl {

namespace {

bool prime_number(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_same(const Field& a, const Field& b)
{
    if (!(a == b)) throw FieldMismatch("scalar field mismatch: " + a.name() + " vs " + b.name());
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

namespace detail {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw Error("no modular inverse");
    return mod_reduce(t, p);
}

}  // namespace detail

Field Field::prime(std::int64_t p)
{
    if (p >= (std::int64_t{1} << 31)) throw FieldError("GF(p): p must be below 2^31");
    if (!prime_number(p)) throw FieldError("GF(p): " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text)
{
    text = trim(text);
    if (text == "Q" || text == "QQ") return rational();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        auto digits = text.substr(3, text.size() - 4);
        std::int64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw FieldError("unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.name(); }

Scalar::Scalar(Field f) : field_(f)
{
    if (f.is_rational())
        value_ = mpq_class(0);
    else
        value_ = std::int64_t{0};
}

Scalar::Scalar(Field f, long value) : field_(f)
{
    if (f.is_rational())
        value_ = mpq_class(value);
    else
        value_ = detail::mod_reduce(value, f.characteristic());
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f)
{
    if (f.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = std::move(v);
    } else {
        const auto p = f.characteristic();
        mpz_class num = value.get_num() % p;
        mpz_class den = value.get_den() % p;
        if (den == 0) throw Error("denominator divisible by characteristic");
        const auto n = detail::mod_reduce(num.get_si(), p);
        const auto d = detail::mod_reduce(den.get_si(), p);
        value_ = n * detail::mod_inverse(d, p) % p;
    }
}

Scalar Scalar::parse(Field f, std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw Error("malformed number '" + std::string(text) + "'");
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    if (f.is_prime() && d % f.characteristic() == 0)
        throw Error("denominator of '" + std::string(text) + "' vanishes in " + f.name());
    return Scalar(f, mpq_class(n, d));
}

bool Scalar::is_zero() const
{
    if (auto r = std::get_if<std::int64_t>(&value_)) return *r == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = std::get_if<std::int64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::int64_t Scalar::residue() const
{
    if (auto r = std::get_if<std::int64_t>(&value_)) return *r;
    throw FieldError("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const
{
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldError("rational() on a GF(p) scalar");
}

Scalar Scalar::operator-() const { return Scalar(field_) - *this; }

Scalar Scalar::inverse() const
{
    if (is_zero()) throw Error("inverse of zero");
    Scalar out(field_);
    if (field_.is_rational())
        out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    else
        out.value_ = detail::mod_inverse(std::get<std::int64_t>(value_), field_.characteristic());
    return out;
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    require_same(a.field_, b.field_);
    Scalar out(a.field_);
    if (a.field_.is_rational())
        out.value_ = mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_));
    else
        out.value_ = (std::get<std::int64_t>(a.value_) + std::get<std::int64_t>(b.value_)) %
                     a.field_.characteristic();
    return out;
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    require_same(a.field_, b.field_);
    Scalar out(a.field_);
    if (a.field_.is_rational())
        out.value_ = mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_));
    else
        out.value_ = detail::mod_reduce(
            std::get<std::int64_t>(a.value_) - std::get<std::int64_t>(b.value_),
            a.field_.characteristic());
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    require_same(a.field_, b.field_);
    Scalar out(a.field_);
    if (a.field_.is_rational())
        out.value_ = mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_));
    else
        out.value_ = std::get<std::int64_t>(a.value_) * std::get<std::int64_t>(b.value_) %
                     a.field_.characteristic();
    return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    require_same(a.field_, b.field_);
    if (a.field_.is_prime()) return std::get<std::int64_t>(a.value_) <=> std::get<std::int64_t>(b.value_);
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar Scalar::pow(std::int64_t e) const
{
    if (e < 0) return inverse().pow(-e);
    Scalar result(field_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Scalar::to_string() const
{
    if (auto r = std::get_if<std::int64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hgl
