#include <mutex>
#include <sstream>

#include "coind/error.hpp"
#include "coind/wreath/wreath.hpp"

namespace coind::wreath {

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by a monic polynomial
std::vector<long> poly_div(std::vector<long> a, const std::vector<long>& b) {
    std::vector<long> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = a[i + b.size() - 1];
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    for (long x : a)
        if (x != 0) throw ConsistencyFailure("cyclotomic division left a remainder");
    return q;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int e) {
    static std::map<int, std::vector<long>> cache;
    static std::mutex mu;
    if (e < 1) throw DomainError("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = -1;
    p.back() = 1;
    std::vector<long> div{1};
    for (int d = 1; d < e; ++d)
        if (e % d == 0) div = poly_mul(div, cyclotomic_polynomial(d));
    auto r = poly_div(p, div);
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(e, std::move(r)).first->second;
}

Cyclotomic::Cyclotomic(int e, Scalar value) : e_(e) {
    std::vector<Scalar> raw{std::move(value)};
    reduce(std::move(raw));
}

Cyclotomic Cyclotomic::root(int e, int k) {
    k = ((k % e) + e) % e;
    Cyclotomic z(e);
    std::vector<Scalar> raw(static_cast<std::size_t>(k) + 1, 0);
    raw.back() = 1;
    z.reduce(std::move(raw));
    return z;
}

void Cyclotomic::reduce(std::vector<Scalar> raw) {
    const auto& phi = cyclotomic_polynomial(e_);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = raw.size(); i-- > d;) {
        if (raw[i] == 0) continue;
        Scalar t = raw[i];
        for (std::size_t j = 0; j <= d; ++j) raw[i - d + j] -= t * phi[j];
    }
    raw.resize(d, 0);
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    c_ = std::move(raw);
}

bool Cyclotomic::is_zero() const { return c_.empty(); }
bool Cyclotomic::is_rational() const { return c_.size() <= 1; }

Scalar Cyclotomic::rational() const {
    if (!is_rational()) throw DomainError("cyclotomic value " + to_string() + " is not rational");
    return c_.empty() ? Scalar(0) : c_[0];
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Scalar> raw(static_cast<std::size_t>(e_) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i == 0 ? 0 : static_cast<std::size_t>(e_) - i] += c_[i];
    Cyclotomic r(e_);
    r.reduce(std::move(raw));
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (o.e_ != e_) throw DomainError("cyclotomic orders differ");
    std::vector<Scalar> raw(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) raw[i] += o.c_[i];
    Cyclotomic r(e_);
    r.reduce(std::move(raw));
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + o * Scalar(-1); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (o.e_ != e_) throw DomainError("cyclotomic orders differ");
    Cyclotomic r(e_);
    if (c_.empty() || o.c_.empty()) return r;
    std::vector<Scalar> raw(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    r.reduce(std::move(raw));
    return r;
}

Cyclotomic Cyclotomic::operator*(const Scalar& s) const {
    Cyclotomic r(*this);
    if (s == 0) return Cyclotomic(e_);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string Cyclotomic::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Scalar a = c_[i];
        if (!first) os << (a < 0 ? "-" : "+");
        else if (a < 0) os << "-";
        Scalar m = abs(a);
        if (i == 0) os << m.get_str();
        else {
            if (m != 1) os << m.get_str() << "*";
            os << "z" << e_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace coind::wreath
