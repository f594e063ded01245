#include "coind/linalg/field.hpp"

#include "coind/error.hpp"

namespace coind::linalg {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.size() >= 2 && (spec[0] == 'f' || spec[0] == 'F')) {
        std::uint32_t p = 0;
        for (char c : spec.substr(1)) {
            if (c < '0' || c > '9') throw DomainError("bad field spec: " + std::string(spec));
            p = p * 10 + static_cast<std::uint32_t>(c - '0');
            if (p > 1000000) throw DomainError("field characteristic too large");
        }
        return prime(p);
    }
    throw DomainError("bad field spec: " + std::string(spec));
}

std::string Field::name() const { return p_ == 0 ? "q" : "f" + std::to_string(p_); }

static mpz_class mod_p(const mpz_class& x, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    return r;
}

Scalar Field::reduce(const Scalar& x) const {
    if (p_ == 0) return x;
    mpz_class num = mod_p(x.get_num(), p_);
    if (x.get_den() == 1) return Scalar(num);
    mpz_class den = mod_p(x.get_den(), p_);
    if (den == 0) throw DomainError("denominator divisible by the characteristic");
    mpz_class di;
    mpz_invert(di.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Scalar(mod_p(num * di, p_));
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw DomainError("division by zero");
    if (p_ == 0) return 1 / a;
    mpz_class r;
    mpz_class v = mod_p(a.get_num(), p_);
    if (v == 0) throw DomainError("division by zero");
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Scalar(r);
}

bool Field::is_unit(long q) const {
    if (p_ == 0) return q != 0;
    return q % static_cast<long>(p_) != 0;
}

std::string to_string(const Scalar& x) {
    Scalar y = x;
    y.canonicalize();
    return y.get_str();
}

}  // namespace coind::linalg
