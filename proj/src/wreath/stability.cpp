#include <algorithm>
#include <functional>
#include <set>

#include "coind/error.hpp"
#include "coind/modcore/constructions.hpp"
#include "coind/wreath/wreath.hpp"

namespace coind::wreath {

std::vector<Partition> pieri_set(const Partition& lambda, int add) {
    if (add < 0) throw DomainError("cannot add a negative number of boxes");
    if (!is_partition(lambda)) throw DomainError("not a partition");
    std::vector<Partition> out;
    Partition cur;
    std::size_t rows = lambda.size() + 1;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == rows) {
            if (left == 0) {
                Partition p = cur;
                while (!p.empty() && p.back() == 0) p.pop_back();
                out.push_back(p);
            }
            return;
        }
        int base = i < lambda.size() ? lambda[i] : 0;
        int cap = i == 0 ? base + left : lambda[i - 1];
        for (int v = std::min(cap, base + left); v >= base; --v) {
            cur.push_back(v);
            rec(i + 1, left - (v - base));
            cur.pop_back();
        }
    };
    rec(0, add);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

HbarResult hbar_check(const Partition& nu, int m, int n) {
    if (n < m) throw DomainError("hbar_check needs n >= m");
    if (size(nu) > m) throw DomainError("nu is larger than m");
    HbarResult r;
    r.p_n = pieri_set(nu, n - m);
    r.p_n1 = pieri_set(nu, n + 1 - m);
    std::set<Partition> target(r.p_n1.begin(), r.p_n1.end()), image;
    bool into = true;
    for (auto p : r.p_n) {
        if (p.empty()) p.push_back(1);
        else ++p[0];
        into = into && target.count(p);
        image.insert(p);
    }
    for (const auto& p : r.p_n1)
        if (!image.count(p)) r.missed.push_back(p);
    r.bijective = into && r.missed.empty() && image.size() == r.p_n.size();
    r.report.add("hbar maps P(n) into P(n+1)", into);
    bool above = n >= 2 * m;
    if (above) r.report.add("hbar bijective for n >= 2m", r.bijective);
    Json missed = Json::array();
    for (const auto& p : r.missed) missed.push_back(coind::to_string(p));
    r.report.data["nu"] = coind::to_string(nu);
    r.report.data["m"] = m;
    r.report.data["n"] = n;
    r.report.data["size_P_n"] = r.p_n.size();
    r.report.data["size_P_n1"] = r.p_n1.size();
    r.report.data["bijective"] = r.bijective;
    r.report.data["above_threshold"] = above;
    r.report.data["missed"] = missed;
    return r;
}

WreathClass class_of(const GroupSpec& g, const categories::FIGMorphism& a) {
    if (a.m != a.n) throw DomainError("class_of needs an automorphism");
    WreathClass r(static_cast<std::size_t>(g.order()));
    std::vector<bool> seen(static_cast<std::size_t>(a.n), false);
    for (int s = 0; s < a.n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0, color = g.identity(), t = s;
        while (!seen[static_cast<std::size_t>(t)]) {
            seen[static_cast<std::size_t>(t)] = true;
            color = g.multiply(color, a.c[static_cast<std::size_t>(t)]);
            t = a.f[static_cast<std::size_t>(t)] - 1;
            ++len;
        }
        r[static_cast<std::size_t>(color)].push_back(len);
    }
    for (auto& p : r) std::sort(p.rbegin(), p.rend());
    return r;
}

categories::FIGMorphism class_representative(const GroupSpec& g, const WreathClass& r) {
    int n = total(r);
    categories::FIGMorphism a{n, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), g.identity())};
    int next = 0;
    for (std::size_t color = 0; color < r.size(); ++color)
        for (int len : r[color]) {
            for (int t = 0; t < len; ++t) a.f[static_cast<std::size_t>(next + t)] = next + (t + 1) % len + 1;
            a.c[static_cast<std::size_t>(next)] = static_cast<int>(color);
            next += len;
        }
    return a;
}

CharacterVector module_character(const modcore::TruncatedModule& v, int n) {
    const auto& c = v.category();
    if (c.is_vi()) throw DomainError("module characters are defined for FI_G only");
    if (!v.field().is_rational()) throw DomainError("module characters need characteristic 0");
    if (n < 0 || n > v.truncation()) throw TruncationError("degree " + std::to_string(n) + " outside the truncation");
    const auto& g = c.group();
    CharacterVector out{g, n, {}};
    for (const auto& r : classes(g, n)) {
        Scalar t = v.dim(n) ? v.action(class_representative(g, r)).trace() : Scalar(0);
        out.values.emplace_back(g.exponent(), t);
    }
    return out;
}

std::map<std::string, long long> pieri_prediction(const GroupSpec& g, const PartitionFunction& l, int n) {
    int m = total(l);
    if (n < m) throw DomainError("pieri_prediction needs n >= |lambda|");
    std::map<std::string, long long> out;
    (void)g;
    for (const auto& nu : pieri_set(l[0], n - m)) {
        auto mu = l;
        mu[0] = nu;
        out[to_string(mu)] += 1;
    }
    return out;
}

Report free_module_pieri_check(const GroupSpec& g, int m, int n) {
    Report rep;
    auto c = categories::Category::fig(g);
    auto v = modcore::free_module(c, m, n, linalg::Field::rationals());
    auto got = decompose(module_character(v, n));
    std::map<std::string, long long> want;
    for (const auto& l : labels(g, m)) {
        long long d = character(g, l).degree().rational().get_num().get_si();
        for (const auto& [k, mult] : pieri_prediction(g, l, n)) want[k] += d * mult;
    }
    rep.add("free(" + std::to_string(m) + ") at degree " + std::to_string(n) + " matches horizontal strips", got == want);
    rep.data["decomposition"] = got;
    rep.data["prediction"] = want;
    return rep;
}

RS3Result rs3_check(const modcore::TruncatedModule& v, int n_lo, int n_hi) {
    if (n_lo > n_hi) throw DomainError("empty window");
    RS3Result r;
    std::size_t w = static_cast<std::size_t>(n_hi - n_lo + 1);
    bool integral = true;
    std::string why;
    for (int n = n_lo; n <= n_hi; ++n) {
        r.ns.push_back(n);
        try {
            for (const auto& [l, mult] : decompose_labels(module_character(v, n))) {
                auto& seq = r.multiplicities[to_string(unpad(l))];
                seq.resize(w, 0);
                seq[static_cast<std::size_t>(n - n_lo)] = mult;
            }
        } catch (const NotACharacter& e) {
            integral = false;
            why = e.what();
        }
    }
    for (auto& [k, seq] : r.multiplicities) seq.resize(w, 0);
    r.report.add("multiplicities are nonnegative integers", integral, why);
    for (int n0 = n_lo; n0 <= n_hi && integral; ++n0) {
        bool flat = true;
        for (const auto& [k, seq] : r.multiplicities)
            for (int n = n0 + 1; n <= n_hi; ++n)
                flat = flat && seq[static_cast<std::size_t>(n - n_lo)] == seq[static_cast<std::size_t>(n0 - n_lo)];
        if (flat) {
            r.stable_from = n0;
            break;
        }
    }
    r.stable_within_window = r.stable_from && *r.stable_from < n_hi;
    r.report.add("stable within window", r.stable_within_window,
                 r.stable_from ? "constant from n=" + std::to_string(*r.stable_from) + " to " + std::to_string(n_hi) : "");
    r.report.data["window"] = {n_lo, n_hi};
    r.report.data["multiplicities"] = r.multiplicities;
    r.report.data["stable_from"] = r.stable_from ? Json(*r.stable_from) : Json();
    r.report.data["stable_within_window"] = r.stable_within_window;
    return r;
}

}  // namespace coind::wreath
