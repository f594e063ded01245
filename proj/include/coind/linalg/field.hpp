#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coind::linalg {

using Scalar = mpq_class;

// Either Q (characteristic 0) or F_p. F_p values are kept as integers in [0,p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    static Field parse(std::string_view spec);  // "q", "f2", "f3", ...

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    Scalar reduce(const Scalar& x) const;
    Scalar from_int(long v) const { return reduce(Scalar(v)); }
    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    // whether the integer q is a unit
    bool is_unit(long q) const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

std::string to_string(const Scalar& x);
bool is_prime(long n);

}  // namespace coind::linalg
