#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

#include "coind/acceptance/acceptance.hpp"
#include "coind/error.hpp"
#include "coind/homological/homological.hpp"
#include "coind/modcore/constructions.hpp"
#include "coind/modcore/serialize.hpp"
#include "coind/shiftcoind/shiftcoind.hpp"
#include "coind/wreath/wreath.hpp"

using namespace coind;
using categories::Category;
using linalg::Field;
using modcore::TruncatedModule;

namespace {

struct Config {
    std::string category = "fi";
    std::string group = "trivial";
    std::string field = "q";
    int p = 0;
    int trunc = 3;
    int m = 0;
    int n = -1;
    std::string v = "free(0)";
    std::string w = "free(0)";
    std::string lambda = "()";
    int add = 0;
    int from = -1;
    int to = -1;
    int count = 50;
    std::string format = "json";
    bool witnesses = false;
    std::uint64_t seed = 1;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    Json results = Json::object();
    Report report;
    std::vector<std::string> caveats;
};

Category make_category(const Config& c) {
    if (c.category == "vi" && c.p == 0) throw UsageError("--category vi requires --p");
    if (c.category == "fig" && c.group == "trivial") throw UsageError("--category fig requires --group");
    if (c.category != "fi" && c.category != "fig" && c.category != "vi") throw UsageError("unknown category '" + c.category + "'");
    return Category::parse(c.category, c.category == "fi" ? "trivial" : c.group, c.p);
}

Field make_field(const std::string& s) {
    if (s == "q") return Field::rationals();
    if (s.size() > 1 && s[0] == 'f') return Field::prime(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
    throw UsageError("field must be q or f<prime>, got '" + s + "'");
}

// free(m) | atom(m) | zero, joined by '+'
TruncatedModule make_module(const Category& c, const std::string& spec, int trunc, const Field& f) {
    static const std::regex term(R"(\s*(free|atom)\((\d+)\)\s*|\s*zero\s*)");
    std::optional<TruncatedModule> acc;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto end = spec.find('+', pos);
        if (end == std::string::npos) end = spec.size();
        std::string piece = spec.substr(pos, end - pos);
        std::smatch mt;
        if (!std::regex_match(piece, mt, term)) throw UsageError("cannot parse module term '" + piece + "'");
        TruncatedModule t = TruncatedModule::zero(c, f, trunc);
        if (mt[1].matched) {
            int m = std::stoi(mt[2]);
            if (m > trunc) throw UsageError("module degree " + std::to_string(m) + " exceeds --trunc");
            t = mt[1] == "free" ? modcore::free_module(c, m, trunc, f) : modcore::atom(c, m, trunc, f);
        }
        acc = acc ? modcore::direct_sum(*acc, t) : t;
        pos = end + 1;
    }
    return *acc;
}

Json dims(const TruncatedModule& v) { return modcore::dims_json(v.dims()); }

void cmd_morphisms(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    int n = cfg.n < 0 ? cfg.m : cfg.n;
    const auto& hs = c.hom(cfg.m, n);
    o.results["count"] = hs.size();
    o.results["closed_form"] = c.hom_size(cfg.m, n);
    o.report.add("enumeration matches closed form", hs.size() == c.hom_size(cfg.m, n));
    if (cfg.witnesses) {
        Json list = Json::array();
        for (const auto& a : hs) list.push_back(categories::to_string(a, c.group()));
        o.results["morphisms"] = list;
    }
}

void cmd_free_dims(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto v = modcore::free_module(c, cfg.m, cfg.trunc, make_field(cfg.field));
    o.results["dims"] = dims(v);
    auto audit = modcore::audit_functoriality(v, cfg.trunc);
    o.report.add("functoriality audit", audit.ok, std::to_string(audit.checks) + " composable pairs, " + std::to_string(audit.failures.size()) + " failures");
}

void cmd_shift_iso(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    int n = cfg.n < 0 ? cfg.m : cfg.n;
    auto phi = shiftcoind::phi_iso(c, n, cfg.trunc, make_field(cfg.field));
    Json slots = Json::array();
    for (const auto& s : phi.slots) slots.push_back(shiftcoind::to_string(s, c));
    o.results["summands"] = slots;
    o.results["dims_sum"] = dims(phi.map.source());
    o.results["dims_shift"] = dims(phi.map.target());
    o.report.add("Phi is an intertwiner", phi.map.is_intertwiner());
    o.report.add("Phi is bijective in every degree", phi.map.is_bijective());
    if (cfg.witnesses) o.results["phi"] = modcore::hom_json(phi.map);
}

void cmd_coind(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto f = make_field(cfg.field);
    auto q = shiftcoind::coind_free(c, cfg.m, cfg.trunc, f);
    o.results["dims"] = dims(q);
    auto audit = modcore::audit_functoriality(q, q.truncation());
    o.report.add("functoriality audit", audit.ok, std::to_string(audit.checks) + " composable pairs, " + std::to_string(audit.failures.size()) + " failures");
    if (q.truncation() >= 1) {
        auto qh = shiftcoind::coind_hom(modcore::free_module(c, cfg.m, q.truncation(), f));
        auto wit = shiftcoind::coind_witness(q, qh, cfg.m);
        o.report.add("closed form agrees with Hom(S(kCe_n), kCe_m)", q.dims() == qh.module.dims() && wit.is_intertwiner() && wit.is_bijective());
        if (cfg.witnesses) o.results["witness"] = modcore::hom_json(wit);
    }
    if (cfg.witnesses) o.results["module"] = modcore::module_json(q);
}

void cmd_verify_fig(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto r = shiftcoind::theta(c, cfg.m, cfg.trunc, make_field(cfg.field));
    o.report.merge(r.report);
    o.results = r.report.data;
    if (cfg.witnesses) o.results["witnesses"] = r.report.witnesses;
}

void cmd_verify_vi(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    if (!c.is_vi()) throw UsageError("verify-vi needs --category vi");
    auto r = shiftcoind::pi_map(c, cfg.m, cfg.trunc, make_field(cfg.field));
    o.report.merge(r.report);
    o.results = r.report.data;
    auto key = shiftcoind::key_identity_check(c.prime(), 3, cfg.count, cfg.seed);
    o.report.merge(key, "key identity: ");
    o.results["key_identity"] = key.data;
    if (cfg.witnesses) o.results["witnesses"] = r.report.witnesses;
}

void cmd_adjunction(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto f = make_field(cfg.field);
    auto v = make_module(c, cfg.v, cfg.trunc, f);
    auto w = modcore::restrict(make_module(c, cfg.w, cfg.trunc, f), cfg.trunc - 1);
    auto [g, r] = homological::presentation_degrees(v);
    bool reliable = g <= cfg.trunc - 1 && r <= cfg.trunc - 1;
    auto lhs = modcore::HomSpace(shiftcoind::shift(v), w).dim();
    auto rhs = modcore::HomSpace(modcore::restrict(v, cfg.trunc - 1), shiftcoind::coind_hom(w).module).dim();
    o.results["hom_SV_W"] = lhs;
    o.results["hom_V_QW"] = rhs;
    o.results["reliable"] = reliable;
    if (reliable) o.report.add("dim Hom(SV, W) = dim Hom(V, QW)", lhs == rhs);
    else o.caveats.push_back("V needs generators or relations above degree " + std::to_string(cfg.trunc - 1) + "; comparison not exact at this truncation");
}

void cmd_ext1(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto f = make_field(cfg.field);
    auto e = homological::ext1(make_module(c, cfg.v, cfg.trunc, f), make_module(c, cfg.w, cfg.trunc, f));
    o.results["dim"] = e.dim;
    o.results["dim_hom_K_W"] = e.hom_k;
    o.results["dim_hom_P0_W"] = e.hom_p0;
    o.results["rank_restriction"] = e.rank;
    if (cfg.witnesses) {
        Json cs = Json::array();
        for (const auto& h : e.cocycles) cs.push_back(modcore::hom_json(h));
        o.results["cocycles"] = cs;
    }
}

void cmd_injective(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto v = make_module(c, cfg.v, cfg.trunc, make_field(cfg.field));
    int n = cfg.n < 0 ? cfg.trunc : cfg.n;
    auto r = homological::injective_test(modcore::restrict(v, n), n);
    o.results = r.report.data;
    o.results["injective"] = r.injective;
    o.report.add("Ext1(S, V) = 0 for every simple S in degrees <= n", r.injective);
}

void cmd_charp(const Config& cfg, Output& o) {
    int p = cfg.p == 0 ? 2 : cfg.p;
    auto fp = homological::charp_counterexample(p, cfg.trunc, Field::prime(static_cast<std::uint32_t>(p)));
    auto q = homological::charp_counterexample(p, cfg.trunc, Field::rationals(), false);
    o.report.merge(fp.report, "f" + std::to_string(p) + ": ");
    o.report.add("no splitting over F_" + std::to_string(p), !fp.splits);
    o.report.add("splitting exists over Q", q.splits);
    o.results["fp"] = fp.report.data;
    o.results["fp"]["verdict"] = fp.splits ? "split" : "non-split";
    o.results["q"] = q.report.data;
    o.results["q"]["verdict"] = q.splits ? "split" : "non-split";
}

void cmd_torsion(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto tp = homological::torsion_pair(make_module(c, cfg.v, cfg.trunc, make_field(cfg.field)));
    o.results["dims_T"] = dims(tp.t.module);
    o.results["dims_F"] = dims(tp.f.module);
    o.report.add("T(F) = 0", homological::torsion_pair(tp.f.module).t.module.is_zero());
    o.caveats.push_back("torsion is detected up to degree " + std::to_string(cfg.trunc) + " only; elements killed only above the truncation are missed");
}

void cmd_kappa(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto v = make_module(c, cfg.v, cfg.trunc, make_field(cfg.field));
    Json k = Json::object();
    for (int n = cfg.n < 0 ? 0 : cfg.n; n <= (cfg.n < 0 ? cfg.trunc : cfg.n); ++n) k[std::to_string(n)] = homological::kappa(v, n);
    o.results["kappa"] = k;
}

void cmd_pieri(const Config& cfg, Output& o) {
    auto lam = parse_partition(cfg.lambda);
    Json set = Json::array();
    for (const auto& p : wreath::pieri_set(lam, cfg.add)) set.push_back(to_string(p));
    o.results["pieri_set"] = set;
    if (cfg.n >= 0) {
        auto h = wreath::hbar_check(lam, cfg.m, cfg.n);
        o.report.merge(h.report);
        o.results["hbar"] = h.report.data;
        if (cfg.n < 2 * cfg.m) o.caveats.push_back("n < 2m: bijectivity is reported, not required");
    }
}

void cmd_stability(const Config& cfg, Output& o) {
    auto c = make_category(cfg);
    auto v = make_module(c, cfg.v, cfg.trunc, Field::rationals());
    int lo = cfg.from < 0 ? 0 : cfg.from, hi = cfg.to < 0 ? cfg.trunc : cfg.to;
    auto r = wreath::rs3_check(v, lo, hi);
    o.report.merge(r.report);
    o.results = r.report.data;
    o.caveats.push_back("stability is asserted only within the window " + std::to_string(lo) + ".." + std::to_string(hi));
    static const std::regex single(R"(\s*free\((\d+)\)\s*)");
    std::smatch mt;
    if (std::regex_match(cfg.v, mt, single)) {
        int m = std::stoi(mt[1]);
        bool ok = true;
        for (int n = std::max(m, lo); n <= hi; ++n) ok = ok && wreath::free_module_pieri_check(c.group(), m, n).ok();
        o.report.add("decompositions match the horizontal strip prediction", ok);
    }
}

void cmd_selftest(const Config& cfg, Output& o) {
    auto doc = acceptance::run_all(cfg.seed, o.report);
    auto det = acceptance::determinism_check(cfg.seed, doc);
    o.report.merge(det, "11. ");
    o.results["criteria"] = doc;
}

Json config_json(const Config& c, const std::string& command) {
    Json j = {{"category", c.category}, {"group", c.group}, {"field", c.field}, {"p", c.p},
              {"trunc", c.trunc}, {"m", c.m}, {"n", c.n}, {"format", c.format},
              {"witnesses", c.witnesses}, {"seed", std::to_string(c.seed)}};
    if (command == "ext1" || command == "adjunction") j["W"] = c.w;
    if (command == "ext1" || command == "adjunction" || command == "injective" || command == "torsion" ||
        command == "kappa" || command == "stability")
        j["V"] = c.v;
    if (command == "pieri") {
        j["lambda"] = c.lambda;
        j["add"] = c.add;
    }
    if (command == "stability") {
        j["from"] = c.from;
        j["to"] = c.to;
    }
    if (command == "verify-vi") j["count"] = c.count;
    return j;
}

std::string render(const Json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    std::string s = "command: " + doc["command"].get<std::string>() + "\n";
    for (const auto& ch : doc["checks"]) {
        s += std::string(ch["pass"].get<bool>() ? "[pass] " : "[FAIL] ") + ch["name"].get<std::string>();
        if (ch.contains("detail")) s += " (" + ch["detail"].get<std::string>() + ")";
        s += "\n";
    }
    for (const auto& c : doc["caveats"]) s += "caveat: " + c.get<std::string>() + "\n";
    s += "results: " + doc["results"].dump(2) + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coind: coinduction functors on FI_G and VI modules"};
    app.require_subcommand(1);
    Config cfg;
    using Handler = void (*)(const Config&, Output&);
    const std::vector<std::tuple<std::string, std::string, Handler>> commands{
        {"morphisms", "count (and list) C(m, n)", cmd_morphisms},
        {"free-dims", "dimensions of kCe_m up to the truncation", cmd_free_dims},
        {"shift-iso", "Phi_n: direct sum of frees -> S(kCe_n)", cmd_shift_iso},
        {"coind", "closed-form Q(kCe_m) against the Hom construction", cmd_coind},
        {"verify-fig", "Q(kCe_m) = kCe_m + kCe_{m+1} for FI_G via Theta", cmd_verify_fig},
        {"verify-vi", "pi: Q(kCe_m) -> kCe_{m+1} splits for VI; key matrix identity", cmd_verify_vi},
        {"adjunction", "dim Hom(SV, W) against dim Hom(V, QW)", cmd_adjunction},
        {"ext1", "Ext^1(V, W) over the truncation", cmd_ext1},
        {"injective", "Ext^1 against all simples in degrees <= n", cmd_injective},
        {"charp", "the characteristic p non-splitting construction", cmd_charp},
        {"torsion", "torsion submodule and torsion-free quotient", cmd_torsion},
        {"kappa", "dim Hom(V, kCe_n)", cmd_kappa},
        {"pieri", "horizontal strips and the first-row map", cmd_pieri},
        {"stability", "multiplicity tables of V(n) over a window", cmd_stability},
        {"selftest", "run every acceptance criterion", cmd_selftest},
    };
    std::map<CLI::App*, std::pair<std::string, Handler>> dispatch;
    for (const auto& [name, help, fn] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--category", cfg.category, "fi | fig | vi")->check(CLI::IsMember({"fi", "fig", "vi"}));
        sub->add_option("--group", cfg.group, "abelian group for fig, e.g. z2, z3xz2");
        sub->add_option("--field", cfg.field, "q or f<prime>");
        sub->add_option("--p", cfg.p, "prime for vi, or for charp");
        sub->add_option("--trunc", cfg.trunc, "truncation N")->check(CLI::NonNegativeNumber);
        sub->add_option("--m", cfg.m, "degree m")->check(CLI::NonNegativeNumber);
        sub->add_option("--n", cfg.n, "degree n");
        sub->add_option("--V", cfg.v, "module, e.g. free(1)+atom(0)");
        sub->add_option("--W", cfg.w, "module, e.g. free(0)");
        sub->add_option("--lambda", cfg.lambda, "partition, e.g. (2,1)");
        sub->add_option("--add", cfg.add, "boxes to add")->check(CLI::NonNegativeNumber);
        sub->add_option("--from", cfg.from, "window start");
        sub->add_option("--to", cfg.to, "window end");
        sub->add_option("--count", cfg.count, "random tuples for the key identity");
        sub->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--witnesses", cfg.witnesses, "include explicit maps");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--out", cfg.out, "write the document to this file");
        dispatch[sub] = {name, fn};
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    auto* sub = app.get_subcommands().front();
    const auto& [name, fn] = dispatch.at(sub);
    Output out;
    try {
        if (cfg.category == "fi") cfg.group = "trivial";
        fn(cfg, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << sub->help();
        return 2;
    } catch (const ConsistencyFailure& e) {
        out.report.add("internal consistency", false, e.what());
    } catch (const NotACharacter& e) {
        out.report.add("input is a character", false, e.what());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n" << sub->help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << sub->help();
        return 2;
    }
    Json doc = {{"schema", "v1"},
                {"command", name},
                {"config", config_json(cfg, name)},
                {"results", out.results},
                {"checks", out.report.checks_json()},
                {"caveats", out.caveats}};
    std::string text = render(doc, cfg.format);
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return out.report.ok() ? 0 : 1;
}
