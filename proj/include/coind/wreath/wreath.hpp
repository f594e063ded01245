#pragma once

#include <map>
#include <string>
#include <vector>

#include "coind/categories/group.hpp"
#include "coind/linalg/field.hpp"
#include "coind/modcore/module.hpp"
#include "coind/partition.hpp"
#include "coind/report.hpp"

namespace coind::wreath {

using categories::GroupSpec;
using linalg::Scalar;

// Q(zeta_e) as polynomials in zeta reduced modulo the e-th cyclotomic polynomial
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int e, Scalar value = 0);
    static Cyclotomic root(int e, int k);  // zeta_e^k

    int order() const { return e_; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Scalar rational() const;  // throws unless is_rational()
    Cyclotomic conj() const;
    std::string to_string() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Scalar& s) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    bool operator==(const Cyclotomic& o) const { return e_ == o.e_ && c_ == o.c_; }

private:
    void reduce(std::vector<Scalar> raw);
    int e_;
    std::vector<Scalar> c_;
};

// integer coefficients, constant term first
const std::vector<long>& cyclotomic_polynomial(int e);

// indexed by irreducible characters of G (an irreducible label) or by elements (a class);
// for abelian G both index sets are identified with the elements of G
using PartitionFunction = std::vector<Partition>;
using WreathClass = std::vector<Partition>;

int total(const PartitionFunction& l);
PartitionFunction empty_function(const GroupSpec& g);
// "chi1:(2,1);chi2:(1)", empty values omitted, "()" for the empty function
std::string to_string(const PartitionFunction& l);
PartitionFunction parse_function(const GroupSpec& g, const std::string& s);
std::string class_string(const GroupSpec& g, const WreathClass& r);

// chi_a(g) for characters and elements of G
Cyclotomic group_character(const GroupSpec& g, int chi, int elem);

// canonical order: first index outermost, sizes descending, partitions reverse-lex
std::vector<PartitionFunction> labels(const GroupSpec& g, int n);
std::vector<WreathClass> classes(const GroupSpec& g, int n);
// centralizer order of the class
Scalar z_class(const GroupSpec& g, const WreathClass& r);

// first row of chi_1 becomes n - |l|
PartitionFunction pad(const PartitionFunction& l, int n);
PartitionFunction unpad(const PartitionFunction& l);

long long sym_char(const Partition& lambda, const Partition& mu);
Cyclotomic wreath_char(const GroupSpec& g, const PartitionFunction& l, const WreathClass& r);

struct CharacterVector {
    GroupSpec group;
    int n = 0;
    std::vector<Cyclotomic> values;  // in classes(group, n) order

    Cyclotomic degree() const;
    const Cyclotomic& at(const WreathClass& r) const;
};

CharacterVector character(const GroupSpec& g, const PartitionFunction& l);
CharacterVector zero_character(const GroupSpec& g, int n);
Scalar inner_product(const CharacterVector& a, const CharacterVector& b);
CharacterVector circledast(const CharacterVector& x, const CharacterVector& y);
// nonzero multiplicities; throws DomainError if v is not a character
std::map<std::string, long long> decompose(const CharacterVector& v);
std::vector<std::pair<PartitionFunction, long long>> decompose_labels(const CharacterVector& v);

std::vector<Partition> pieri_set(const Partition& lambda, int add);

struct HbarResult {
    std::vector<Partition> p_n, p_n1;
    bool bijective = false;
    std::vector<Partition> missed;  // elements of P(n+1) outside the image
    Report report;
};
// P(n) = pieri_set(nu, n - m) with nu = lambda[m](chi_1); hbar adds a box in the first row
HbarResult hbar_check(const Partition& nu, int m, int n);

// the class of an automorphism of [n] in FI_G, and a canonical representative
WreathClass class_of(const GroupSpec& g, const categories::FIGMorphism& a);
categories::FIGMorphism class_representative(const GroupSpec& g, const WreathClass& r);

CharacterVector module_character(const modcore::TruncatedModule& v, int n);

// multiplicities of kC(m,n) (x)_{kG_m} L(l)_m predicted by horizontal strips on the chi_1 part
std::map<std::string, long long> pieri_prediction(const GroupSpec& g, const PartitionFunction& l, int n);
Report free_module_pieri_check(const GroupSpec& g, int m, int n);

struct RS3Result {
    std::vector<int> ns;
    std::map<std::string, std::vector<long long>> multiplicities;  // keyed by unpadded label
    std::optional<int> stable_from;
    bool stable_within_window = false;
    Report report;
};
RS3Result rs3_check(const modcore::TruncatedModule& v, int n_lo, int n_hi);

}  // namespace coind::wreath
