#include "coind/modcore/serialize.hpp"

namespace coind::modcore {

Json scalar_json(const linalg::Scalar& x, const Field& f) {
    if (!f.is_rational()) return x.get_num().get_si();
    linalg::Scalar y = x;
    y.canonicalize();
    return y.get_num().get_str() + "/" + y.get_den().get_str();
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(scalar_json(m.at(i, j), m.field()));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json morphism_json(const Morphism& a, const Category& c) {
    Json j;
    j["source"] = categories::source(a);
    j["target"] = categories::target(a);
    if (const auto* x = std::get_if<categories::FIGMorphism>(&a)) {
        j["f"] = x->f;
        Json cs = Json::array();
        for (int g : x->c) cs.push_back(c.group().element_name(g));
        j["c"] = cs;
    } else {
        const auto& m = std::get<categories::VIMorphism>(a).mat;
        Json rows = Json::array();
        for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
        j["matrix"] = rows;
    }
    return j;
}

Json dims_json(const std::vector<std::size_t>& dims) {
    Json d = Json::array();
    for (auto x : dims) d.push_back(x);
    return d;
}

Json module_json(const TruncatedModule& v) {
    Json j;
    j["category"] = v.category().name();
    j["field"] = v.field().name();
    j["trunc"] = v.truncation();
    j["dims"] = dims_json(v.dims());
    Json gens = Json::array();
    const auto& c = v.category();
    for (int i = 0; i <= v.truncation(); ++i) {
        for (std::size_t k = 0; k < c.generators(i).size(); ++k) {
            Json g;
            g["kind"] = "automorphism";
            g["morphism"] = morphism_json(c.generators(i)[k], c);
            g["matrix"] = matrix_json(v.group_action(i, k));
            gens.push_back(std::move(g));
        }
        if (i < v.truncation()) {
            Json g;
            g["kind"] = "standard";
            g["morphism"] = morphism_json(c.standard(i), c);
            g["matrix"] = matrix_json(v.standard_action(i));
            gens.push_back(std::move(g));
        }
    }
    j["generators"] = gens;
    return j;
}

Json hom_json(const ModuleHom& h) {
    Json blocks = Json::array();
    for (const auto& b : h.blocks()) blocks.push_back(matrix_json(b));
    Json j;
    j["source_dims"] = dims_json(h.source().dims());
    j["target_dims"] = dims_json(h.target().dims());
    j["blocks"] = blocks;
    return j;
}

}  // namespace coind::modcore
