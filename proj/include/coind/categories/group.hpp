#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coind::categories {

// G = Z/d_1 x ... x Z/d_k. Elements are encoded as integers in mixed radix,
// first factor most significant, so integer order is tuple-lex order.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<int> factors);
    static GroupSpec trivial() { return GroupSpec(std::vector<int>{}); }
    static GroupSpec parse(std::string_view spec);  // "trivial", "z2", "z3xz2"

    const std::vector<int>& factors() const { return factors_; }
    int order() const { return order_; }
    int exponent() const;
    bool is_trivial() const { return order_ == 1; }
    std::string name() const;

    std::vector<int> components(int g) const;
    int from_components(const std::vector<int>& comps) const;
    int identity() const { return 0; }
    int multiply(int a, int b) const;
    int inverse(int a) const;
    std::string element_name(int g) const;  // "e" or "(1,0)"

    // one generator per factor of order > 1
    std::vector<int> generators() const;

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

private:
    std::vector<int> factors_;
    int order_ = 1;
};

}  // namespace coind::categories
