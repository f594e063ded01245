#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coind/categories/group.hpp"
#include "coind/categories/morphism.hpp"

namespace coind::categories {

enum class Kind { FIG, VI };

// alpha = g[word[0]] o g[word[1]] o ... o std^lifts, g the generators of the
// automorphism group of the target
struct Factorization {
    std::vector<std::size_t> word;
    int lifts = 0;
};

class Category {
public:
    static Category fi();
    static Category fig(GroupSpec g);
    static Category vi(int p);
    static Category parse(const std::string& kind, const std::string& group, int p);

    Kind kind() const { return kind_; }
    bool is_vi() const { return kind_ == Kind::VI; }
    const GroupSpec& group() const { return group_; }
    int prime() const { return p_; }
    std::string name() const;

    const std::vector<Morphism>& hom(int m, int n) const;
    std::size_t index_of(const Morphism& a) const;
    std::uint64_t hom_size(int m, int n) const;
    // |C(n,n)|
    std::uint64_t aut_size(int n) const { return hom_size(n, n); }

    Morphism compose(const Morphism& outer, const Morphism& inner) const;
    Morphism identity(int n) const;
    Morphism monoidal(const Morphism& a, const Morphism& b) const;
    Morphism iota(const Morphism& a) const;
    Morphism standard(int n) const;  // n -> n+1, iota(standard(n)) = standard(n+1)

    const std::vector<Morphism>& generators(int n) const;
    Factorization factor(const Morphism& a) const;
    Morphism evaluate(const Factorization& w, int source) const;

    bool operator==(const Category& o) const;

private:
    Category(Kind k, GroupSpec g, int p);
    Kind kind_ = Kind::FIG;
    GroupSpec group_;
    int p_ = 0;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

std::vector<Morphism> enumerate(const Category& c, int m, int n);
Morphism compose(const Category& c, const Morphism& outer, const Morphism& inner);

}  // namespace coind::categories
