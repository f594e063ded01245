#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coind/categories/fp.hpp"
#include "coind/categories/group.hpp"

namespace coind::categories {

// (f, c): f an injection [m] -> [n] stored 1-based, c(t) a group element
struct FIGMorphism {
    int m = 0;
    int n = 0;
    std::vector<int> f;
    std::vector<int> c;

    bool operator==(const FIGMorphism&) const = default;
};

// an injective linear map F_p^m -> F_p^n, i.e. an n x m matrix of rank m
struct VIMorphism {
    FpMatrix mat;

    int m() const { return mat.cols; }
    int n() const { return mat.rows; }
    bool operator==(const VIMorphism&) const = default;
};

using Morphism = std::variant<FIGMorphism, VIMorphism>;

int source(const Morphism& a);
int target(const Morphism& a);
std::vector<int> morphism_key(const Morphism& a);
std::string to_string(const Morphism& a, const GroupSpec& g = GroupSpec::trivial());

FIGMorphism make_fig(const GroupSpec& g, int n, std::vector<int> f, std::vector<int> c = {});
VIMorphism make_vi(FpMatrix m);

// normalized representative: first nonzero coordinate is 1
struct Line {
    int p = 2;
    FpVector rep;

    int dim() const { return static_cast<int>(rep.size()); }
    bool operator==(const Line&) const = default;
};

Line make_line(int p, const FpVector& v);
std::vector<Line> lines(int p, int n);  // lex order of representatives
bool line_contained(const Line& l, const FpMatrix& a);  // l inside the column space of a

// the (n-1) x n matrix with kernel l: reduced echelon basis of the annihilator of l
FpMatrix complement_map(const Line& l);
Line image_line(const VIMorphism& a, const Line& l);
VIMorphism alpha_wp(const VIMorphism& a, const Line& l);
// (u^t over I) in VI(n, n+1), or (u^t over varpi_l), n x n invertible
VIMorphism special_vi(int p, const FpVector& u, const std::optional<Line>& l);
// u^t(l) for a line
int pair_line(const FpVector& u, const Line& l);

FIGMorphism special_fig_base(const GroupSpec& g, int n);
FIGMorphism special_fig_swap(const GroupSpec& g, int n, int r, int h);
FIGMorphism del_r(const FIGMorphism& a, int r);
FIGMorphism alpha_s(const FIGMorphism& a, int s);
FIGMorphism fig_inverse(const GroupSpec& g, const FIGMorphism& a);
bool in_image(const FIGMorphism& a, int r);

}  // namespace coind::categories
