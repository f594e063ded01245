#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coind/modcore/constructions.hpp"
#include "coind/modcore/hom.hpp"
#include "coind/partition.hpp"
#include "coind/report.hpp"

namespace coind::homological {

using categories::Category;
using linalg::Field;
using linalg::Matrix;
using linalg::Vector;
using modcore::HomSpace;
using modcore::ModuleHom;
using modcore::SubModule;
using modcore::TruncatedModule;

struct Generator {
    int degree;
    Vector vec;
};

// Generators are chosen greedily, degree by degree: a unit vector of V(i) is
// added only when it lies outside the submodule generated so far.
std::vector<Generator> minimal_generators(const TruncatedModule& v);
// -1 for the zero module
int generation_degree(const TruncatedModule& v);

struct Presentation {
    std::vector<Generator> generators;
    TruncatedModule p0;
    std::vector<int> p0_degrees;  // one free summand per generator
    std::vector<ModuleHom> p0_projections;
    ModuleHom epsilon;            // P0 -> V
    SubModule k;                  // kernel of epsilon
};
Presentation presentation(const TruncatedModule& v);

// degrees in which V is generated and related; -1 entries for zero parts
std::pair<int, int> presentation_degrees(const TruncatedModule& v);

struct Ext1Result {
    std::size_t dim = 0;
    std::size_t hom_k = 0;    // dim Hom(K, W)
    std::size_t hom_p0 = 0;   // dim Hom(P0, W)
    std::size_t rank = 0;     // rank of restriction Hom(P0, W) -> Hom(K, W)
    std::vector<ModuleHom> cocycles;  // K -> W, a basis modulo restrictions
};
Ext1Result ext1(const TruncatedModule& v, const TruncatedModule& w);
Ext1Result ext1(const Presentation& pv, const TruncatedModule& w);

// irreducible kG_i-module label. FI: one partition. FI_G with G = Z/2: a
// bipartition, first for the trivial character, second for the sign.
struct SimpleLabel {
    int degree = 0;
    std::vector<Partition> parts;
};
std::string to_string(const SimpleLabel& s);
std::vector<SimpleLabel> simple_labels(const Category& c, int degree);
TruncatedModule simple_module(const Category& c, const SimpleLabel& label, int trunc, const Field& f);

struct InjectiveReport {
    bool injective = true;
    std::vector<std::pair<SimpleLabel, std::size_t>> failures;  // (simple, dim Ext^1)
    Report report;
};
InjectiveReport injective_test(const TruncatedModule& v, int n);

struct CharPResult {
    std::vector<std::size_t> u_dims;
    std::size_t splittings_dim = 0;  // dim of the affine solution space, if nonempty
    bool splits = false;
    std::optional<std::size_t> ext1_dim;
    Report report;
};
CharPResult charp_counterexample(int p, int trunc, const Field& f, bool with_ext = true);

struct TorsionPair {
    SubModule t;
    modcore::QuotientModule f;
    Report report;
};
TorsionPair torsion_pair(const TruncatedModule& v);

std::size_t kappa(const TruncatedModule& v, int n);

struct ProjectiveWitness {
    std::optional<ModuleHom> first;  // nonzero F -> kCe_n
    int first_degree = -1;
    std::vector<int> degrees;        // targets of the greedy embedding
    std::optional<ModuleHom> embedding;
    Report report;
};
ProjectiveWitness hom_to_projective_witness(const TruncatedModule& f);

}  // namespace coind::homological
