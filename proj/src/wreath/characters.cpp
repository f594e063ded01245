#include <algorithm>
#include <functional>
#include <set>

#include "coind/error.hpp"
#include "coind/wreath/wreath.hpp"

namespace coind::wreath {

int total(const PartitionFunction& l) {
    int t = 0;
    for (const auto& p : l) t += size(p);
    return t;
}

PartitionFunction empty_function(const GroupSpec& g) { return PartitionFunction(static_cast<std::size_t>(g.order())); }

std::string to_string(const PartitionFunction& l) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i].empty()) continue;
        if (!s.empty()) s += ";";
        s += "chi" + std::to_string(i + 1) + ":" + coind::to_string(l[i]);
    }
    return s.empty() ? "()" : s;
}

PartitionFunction parse_function(const GroupSpec& g, const std::string& s) {
    auto out = empty_function(g);
    if (s == "()" || s.empty()) return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        auto item = s.substr(pos, end - pos);
        auto colon = item.find(':');
        if (item.rfind("chi", 0) != 0 || colon == std::string::npos) throw DomainError("malformed label item '" + item + "'");
        int k = std::stoi(item.substr(3, colon - 3));
        if (k < 1 || k > g.order()) throw DomainError("character index out of range in '" + item + "'");
        out[static_cast<std::size_t>(k - 1)] = parse_partition(item.substr(colon + 1));
        pos = end + 1;
    }
    return out;
}

std::string class_string(const GroupSpec& g, const WreathClass& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].empty()) continue;
        if (!s.empty()) s += ";";
        s += g.element_name(static_cast<int>(i)) + ":" + coind::to_string(r[i]);
    }
    return s.empty() ? "()" : s;
}

Cyclotomic group_character(const GroupSpec& g, int chi, int elem) {
    int e = g.exponent();
    auto a = g.components(chi), x = g.components(elem);
    long k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) k += static_cast<long>(a[i]) * x[i] * (e / g.factors()[i]);
    return Cyclotomic::root(e, static_cast<int>(k % e));
}

namespace {

std::vector<std::vector<Partition>> functions(int slots, int n) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == slots) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int lo = i == slots - 1 ? left : 0;
        for (int s = left; s >= lo; --s)
            for (const auto& p : partitions(s)) {
                cur.push_back(p);
                rec(i + 1, left - s);
                cur.pop_back();
            }
    };
    rec(0, n);
    return out;
}

Scalar z_partition(const Partition& p) {
    Scalar z = 1;
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    for (auto [i, m] : mult)
        for (int t = 1; t <= m; ++t) z *= i * t;
    return z;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    Partition p;
    int l = static_cast<int>(beta.size());
    for (int i = 0; i < l; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

// (partition left after removing an r-rim hook, sign)
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int r) {
    int l = static_cast<int>(p.size());
    std::vector<int> beta;
    for (int i = 0; i < l; ++i) beta.push_back(p[static_cast<std::size_t>(i)] + l - 1 - i);
    std::set<int> bs(beta.begin(), beta.end());
    std::vector<std::pair<Partition, int>> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], nb = b - r;
        if (nb < 0 || bs.count(nb)) continue;
        int between = 0;
        for (int c : beta)
            if (c > nb && c < b) ++between;
        auto nbeta = beta;
        nbeta[i] = nb;
        out.emplace_back(from_beta(nbeta), between % 2 ? -1 : 1);
    }
    return out;
}

}  // namespace

std::vector<PartitionFunction> labels(const GroupSpec& g, int n) { return functions(g.order(), n); }
std::vector<WreathClass> classes(const GroupSpec& g, int n) { return functions(g.order(), n); }

Scalar z_class(const GroupSpec& g, const WreathClass& r) {
    Scalar z = 1;
    for (const auto& p : r) {
        z *= z_partition(p);
        for (std::size_t i = 0; i < p.size(); ++i) z *= g.order();
    }
    return z;
}

PartitionFunction pad(const PartitionFunction& l, int n) {
    if (l.empty()) throw DomainError("label has no trivial-character slot");
    int a = l[0].empty() ? 0 : l[0][0];
    int t = total(l);
    if (n - t < a) throw DomainError("pad needs n >= |lambda| + a = " + std::to_string(t + a) + ", got " + std::to_string(n));
    auto out = l;
    if (n - t > 0) out[0].insert(out[0].begin(), n - t);
    return out;
}

PartitionFunction unpad(const PartitionFunction& l) {
    auto out = l;
    if (!out.empty() && !out[0].empty()) out[0].erase(out[0].begin());
    return out;
}

Cyclotomic wreath_char(const GroupSpec& g, const PartitionFunction& l, const WreathClass& r) {
    if (static_cast<int>(l.size()) != g.order() || static_cast<int>(r.size()) != g.order())
        throw DomainError("label or class does not match the group");
    if (total(l) != total(r)) throw DomainError("label size " + std::to_string(total(l)) + " differs from class size " + std::to_string(total(r)));
    thread_local std::map<std::tuple<std::vector<int>, PartitionFunction, WreathClass>, Cyclotomic> memo;
    auto key = std::make_tuple(g.factors(), l, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int e = g.exponent();
    Cyclotomic v(e);
    std::size_t color = 0;
    while (color < r.size() && r[color].empty()) ++color;
    if (color == r.size()) {
        v = Cyclotomic(e, 1);
    } else {
        auto rest = r;
        int len = rest[color].front();
        rest[color].erase(rest[color].begin());
        for (std::size_t chi = 0; chi < l.size(); ++chi) {
            auto w = group_character(g, static_cast<int>(chi), static_cast<int>(color));
            for (const auto& [smaller, sign] : remove_rim_hooks(l[chi], len)) {
                auto nl = l;
                nl[chi] = smaller;
                v += wreath_char(g, nl, rest) * w * Scalar(sign);
            }
        }
    }
    memo.emplace(key, v);
    return v;
}

long long sym_char(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || !is_partition(mu)) throw DomainError("not a partition");
    if (size(lambda) != size(mu)) throw DomainError("partition sizes differ");
    auto g = GroupSpec::trivial();
    return wreath_char(g, {lambda}, {mu}).rational().get_num().get_si();
}

CharacterVector character(const GroupSpec& g, const PartitionFunction& l) {
    CharacterVector v{g, total(l), {}};
    for (const auto& r : classes(g, v.n)) v.values.push_back(wreath_char(g, l, r));
    return v;
}

const Cyclotomic& CharacterVector::at(const WreathClass& r) const {
    auto cls = classes(group, n);
    auto it = std::find(cls.begin(), cls.end(), r);
    if (it == cls.end()) throw DomainError("class " + class_string(group, r) + " is not a class of this group");
    return values.at(static_cast<std::size_t>(it - cls.begin()));
}

Cyclotomic CharacterVector::degree() const {
    WreathClass id(static_cast<std::size_t>(group.order()));
    id[0] = Partition(static_cast<std::size_t>(n), 1);
    return at(id);
}

CharacterVector zero_character(const GroupSpec& g, int n) {
    return {g, n, std::vector<Cyclotomic>(classes(g, n).size(), Cyclotomic(g.exponent()))};
}

Scalar inner_product(const CharacterVector& a, const CharacterVector& b) {
    if (!(a.group == b.group) || a.n != b.n) throw DomainError("characters of different groups");
    auto cls = classes(a.group, a.n);
    Cyclotomic s(a.group.exponent());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        Scalar inv = 1 / z_class(a.group, cls[i]);
        s += a.values[i] * b.values[i].conj() * inv;
    }
    if (!s.is_rational()) throw NotACharacter("inner product " + s.to_string() + " is irrational");
    return s.rational();
}

CharacterVector circledast(const CharacterVector& x, const CharacterVector& y) {
    if (!(x.group == y.group)) throw DomainError("circledast needs a common group");
    const auto& g = x.group;
    int n = x.n + y.n;
    auto index = [&](int m) {
        std::map<WreathClass, std::size_t> idx;
        auto cl = classes(g, m);
        for (std::size_t i = 0; i < cl.size(); ++i) idx[cl[i]] = i;
        return idx;
    };
    auto ix = index(x.n), iy = index(y.n);
    CharacterVector out{g, n, {}};
    for (const auto& r : classes(g, n)) {
        // (color, cycle length, multiplicity)
        std::vector<std::tuple<std::size_t, int, int>> blocks;
        for (std::size_t c = 0; c < r.size(); ++c) {
            std::map<int, int, std::greater<>> mult;
            for (int p : r[c]) ++mult[p];
            for (auto [len, m] : mult) blocks.emplace_back(c, len, m);
        }
        Cyclotomic v(g.exponent());
        Scalar zr = z_class(g, r);
        std::vector<int> take(blocks.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t b, int size1) {
            if (b == blocks.size()) {
                if (size1 != x.n) return;
                WreathClass r1(r.size()), r2(r.size());
                for (std::size_t k = 0; k < blocks.size(); ++k) {
                    auto [c, len, m] = blocks[k];
                    for (int t = 0; t < take[k]; ++t) r1[c].push_back(len);
                    for (int t = take[k]; t < m; ++t) r2[c].push_back(len);
                }
                Scalar coeff = zr / (z_class(g, r1) * z_class(g, r2));
                v += x.values[ix.at(r1)] * y.values[iy.at(r2)] * coeff;
                return;
            }
            auto [c, len, m] = blocks[b];
            for (int t = 0; t <= m && size1 + t * len <= x.n; ++t) {
                take[b] = t;
                rec(b + 1, size1 + t * len);
            }
            take[b] = 0;
        };
        rec(0, 0);
        out.values.push_back(v);
    }
    return out;
}

std::vector<std::pair<PartitionFunction, long long>> decompose_labels(const CharacterVector& v) {
    std::vector<std::pair<PartitionFunction, long long>> out;
    for (const auto& l : labels(v.group, v.n)) {
        Scalar m = inner_product(v, character(v.group, l));
        if (m.get_den() != 1 || m < 0)
            throw NotACharacter("multiplicity of " + to_string(l) + " is " + m.get_str());
        if (m != 0) out.emplace_back(l, m.get_num().get_si());
    }
    return out;
}

std::map<std::string, long long> decompose(const CharacterVector& v) {
    std::map<std::string, long long> out;
    for (const auto& [l, m] : decompose_labels(v)) out[to_string(l)] = m;
    return out;
}

}  // namespace coind::wreath
