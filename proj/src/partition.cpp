#include "coind/partition.hpp"

#include <functional>
#include <sstream>

#include "coind/error.hpp"

namespace coind {

int size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 0; j < p.front(); ++j) {
        int h = 0;
        for (int x : p)
            if (x > j) ++h;
        c.push_back(h);
    }
    return c;
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

Partition parse_partition(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != '(' && ch != ')' && ch != ' ') t += ch;
    Partition p;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            p.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("malformed partition: " + s);
        }
    }
    if (!is_partition(p)) throw DomainError("not a partition: " + s);
    return p;
}

long long hook_dimension(const Partition& p) {
    int n = size(p);
    auto c = conjugate(p);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long long hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return fact / hooks;
}

}  // namespace coind
