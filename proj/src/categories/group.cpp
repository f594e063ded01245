#include "coind/categories/group.hpp"

#include <numeric>

#include "coind/error.hpp"

namespace coind::categories {

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (int d : factors_) {
        if (d < 1) throw DomainError("cyclic factor must be >= 1");
        order_ *= d;
        if (order_ > 4096) throw DomainError("group too large");
    }
}

GroupSpec GroupSpec::parse(std::string_view spec) {
    if (spec == "trivial" || spec == "1" || spec.empty()) return trivial();
    std::vector<int> fs;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t end = spec.find('x', pos);
        if (end == std::string_view::npos) end = spec.size();
        std::string_view tok = spec.substr(pos, end - pos);
        if (tok.size() < 2 || tok[0] != 'z') throw DomainError("bad group spec: " + std::string(spec));
        int d = 0;
        for (char ch : tok.substr(1)) {
            if (ch < '0' || ch > '9') throw DomainError("bad group spec: " + std::string(spec));
            d = d * 10 + (ch - '0');
            if (d > 4096) throw DomainError("bad group spec: " + std::string(spec));
        }
        fs.push_back(d);
        pos = end + 1;
    }
    return GroupSpec(fs);
}

int GroupSpec::exponent() const {
    int e = 1;
    for (int d : factors_) e = std::lcm(e, d);
    return e;
}

std::string GroupSpec::name() const {
    if (factors_.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "xz" : "z") + std::to_string(factors_[i]);
    return s;
}

std::vector<int> GroupSpec::components(int g) const {
    std::vector<int> out(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        out[i] = g % factors_[i];
        g /= factors_[i];
    }
    return out;
}

int GroupSpec::from_components(const std::vector<int>& comps) const {
    int g = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        int v = comps[i] % factors_[i];
        if (v < 0) v += factors_[i];
        g = g * factors_[i] + v;
    }
    return g;
}

int GroupSpec::multiply(int a, int b) const {
    if (factors_.empty()) return 0;
    auto x = components(a), y = components(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return from_components(x);
}

int GroupSpec::inverse(int a) const {
    if (factors_.empty()) return 0;
    auto x = components(a);
    for (auto& v : x) v = -v;
    return from_components(x);
}

std::string GroupSpec::element_name(int g) const {
    if (g == 0) return "e";
    auto x = components(g);
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

std::vector<int> GroupSpec::generators() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] == 1) continue;
        std::vector<int> c(factors_.size(), 0);
        c[i] = 1;
        out.push_back(from_components(c));
    }
    return out;
}

}  // namespace coind::categories
