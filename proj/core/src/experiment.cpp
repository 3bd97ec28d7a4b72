#include "thetakit/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "thetakit/catalog.hpp"
#include "thetakit/guard.hpp"
#include "thetakit/localfield.hpp"

namespace thetakit {

const std::vector<ExperimentSpec>& experiment_registry() {
    static const std::vector<ExperimentSpec> registry = {
        {"cohomology-survey", {}, {"catalog"}},
        {"heisenberg-verify", {"n", "g"}, {}},
        {"obstruction-table", {}, {"instance", "chi"}},
        {"symbol-table", {"p", "n"}, {"pairs"}},
        {"prop28-search", {"p", "n", "g"}, {"hset"}},
        {"lang-tate-index", {"n", "g"}, {"k", "coords"}},
    };
    return registry;
}

namespace {

const ExperimentSpec* find_spec(const std::string& name) {
    for (const auto& s : experiment_registry())
        if (s.name == name) return &s;
    return nullptr;
}

struct SourcedValue {
    std::string value;
    std::string source; // "flag --x" or "config line N"
};

int parse_int(const std::string& key, const SourcedValue& sv) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(sv.value, &pos);
        if (pos != sv.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("parameter '" + key + "' (" + sv.source + "): expected integer, got '" +
                          sv.value + "'");
    }
}

std::string now_string() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    std::map<std::string, SourcedValue> values;
    std::optional<std::string> config_file;
    bool no_timestamp = false;

    auto set_flag = [&](const std::string& key, const std::string& value) {
        values[key] = {value, "flag --" + key};
    };

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--no-timestamp") {
            no_timestamp = true;
            continue;
        }
        if (a.rfind("--", 0) != 0) throw ConfigError("unexpected argument '" + a + "'");
        std::string key = a.substr(2);
        if (i + 1 >= args.size()) throw ConfigError("flag --" + key + " requires a value");
        std::string value = args[++i];
        if (key == "config") {
            config_file = value;
            continue;
        }
        set_flag(key, value);
    }

    if (config_file) {
        std::ifstream in(*config_file);
        if (!in) throw ConfigError("cannot open config file '" + *config_file + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string trimmed = line;
            if (auto hash = trimmed.find('#'); hash != std::string::npos)
                trimmed.resize(hash);
            while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
                trimmed.pop_back();
            std::size_t start = 0;
            while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
                ++start;
            trimmed = trimmed.substr(start);
            if (trimmed.empty()) continue;
            auto eq = trimmed.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": expected key=value, got '" + trimmed + "'");
            std::string key = trimmed.substr(0, eq);
            std::string value = trimmed.substr(eq + 1);
            if (key == "no-timestamp") {
                no_timestamp = value == "true" || value == "1";
                continue;
            }
            // Flags take precedence over file values.
            if (values.find(key) == values.end())
                values[key] = {value, "config line " + std::to_string(lineno)};
        }
    }

    ExperimentConfig out;
    out.no_timestamp = no_timestamp;
    if (auto it = values.find("experiment"); it != values.end()) {
        out.experiment = it->second.value;
        values.erase(it);
    } else {
        throw ConfigError("missing required parameter 'experiment'");
    }
    const ExperimentSpec* spec = find_spec(out.experiment);
    if (spec == nullptr) throw ConfigError("unknown experiment '" + out.experiment + "'");
    if (auto it = values.find("format"); it != values.end()) {
        out.format = it->second.value;
        if (out.format != "json" && out.format != "csv")
            throw ConfigError("parameter 'format' (" + it->second.source +
                              "): expected json or csv, got '" + it->second.value + "'");
        values.erase(it);
    }
    if (auto it = values.find("out"); it != values.end()) {
        out.out_path = it->second.value;
        values.erase(it);
    }
    for (const auto& [key, sv] : values) {
        bool known = std::find(spec->required.begin(), spec->required.end(), key) !=
                         spec->required.end() ||
                     std::find(spec->optional.begin(), spec->optional.end(), key) !=
                         spec->optional.end();
        if (!known)
            throw ConfigError("unknown parameter '" + key + "' (" + sv.source +
                              ") for experiment " + out.experiment);
        // Numeric keys are typed here so bad values fail before dispatch.
        if (key == "p" || key == "n" || key == "g" || key == "r" || key == "k")
            parse_int(key, sv);
        out.params[key] = sv.value;
    }
    for (const auto& req : spec->required)
        if (out.params.find(req) == out.params.end())
            throw ConfigError("experiment " + out.experiment + " requires parameter '" + req + "'");
    return out;
}

namespace {

int param_int(const ExperimentConfig& c, const std::string& key) {
    return parse_int(key, {c.params.at(key), "flag --" + key});
}

int param_int_or(const ExperimentConfig& c, const std::string& key, int fallback) {
    auto it = c.params.find(key);
    if (it == c.params.end()) return fallback;
    return parse_int(key, {it->second, "flag --" + key});
}

std::string param_or(const ExperimentConfig& c, const std::string& key, std::string fallback) {
    auto it = c.params.find(key);
    return it == c.params.end() ? fallback : it->second;
}

// ---------------------------------------------------------------- survey --

RunResult run_cohomology_survey(const ExperimentConfig& config) {
    ReportDocument doc;
    std::string selector = param_or(config, "catalog", "all");
    bool all_period_index = true, all_support = true, all_product = true, all_sum = true;
    bool all_vanishing = true, all_trivial_mindex = true, all_galois = true, all_abelian_eq = true;
    bool all_attained = true;
    int instances = 0, classes = 0;
    for (const auto& inst : catalog_modules()) {
        if (selector != "all" && inst.name.find(selector) == std::string::npos) continue;
        ++instances;
        for (const Cocycle1& xi : z1(inst.module)) {
            VanishingSubgroupResult van = vanishing_subgroup(xi);
            all_vanishing &= van.restriction_trivial &&
                             van.coset_count <= inst.module->module().size();
        }
        for (const CohClass& cls : h1(inst.module)) {
            ++classes;
            PeriodIndexReport rep = index_report(cls);
            PrimaryDecompositionCheck dec = primary_decomposition_check(cls);
            all_period_index &= dec.period_divides_index;
            all_support &= dec.same_prime_support;
            all_product &= dec.product_formula;
            all_sum &= dec.parts_sum_to_class;
            all_galois &= rep.galois_index % rep.index == 0;
            if (inst.module->group()->is_abelian()) all_abelian_eq &= rep.galois_index == rep.index;
            all_attained &= rep.index_attained;
            if (inst.module->trivial_action()) {
                std::set<int> image(cls.representative().begin(), cls.representative().end());
                all_trivial_mindex &= rep.mindex == rep.index &&
                                      rep.index == static_cast<int>(image.size());
            }
            Json row;
            row["instance"] = inst.name;
            row["class"] = cls.representative();
            row["period"] = rep.period;
            row["index"] = rep.index;
            row["mindex"] = rep.mindex;
            row["galois_index"] = rep.galois_index;
            row["index_attained"] = rep.index_attained;
            doc.rows.push_back(row);
        }
    }
    doc.verdict("period-divides-index", all_period_index);
    doc.verdict("period-index-same-prime-support", all_support);
    doc.verdict("primary-parts-sum-to-class", all_sum);
    doc.verdict("primary-index-product-formula", all_product);
    doc.verdict("vanishing-subgroup-splits-with-small-cosets", all_vanishing);
    doc.verdict("trivial-action-mindex-is-image-order", all_trivial_mindex);
    doc.verdict("galois-index-multiple-of-index", all_galois);
    doc.verdict("abelian-galois-index-equals-index", all_abelian_eq);
    // Whether the gcd of splitting indices is itself attained is reported,
    // not asserted; discrepancies would show up here and in the rows.
    doc.parameters["index_attained_everywhere"] = all_attained ? "true" : "false";
    doc.parameters["catalog"] = selector;
    doc.parameters["instances"] = std::to_string(instances);
    doc.parameters["classes"] = std::to_string(classes);
    return {std::move(doc), std::nullopt};
}

// -------------------------------------------------------------- heisenberg --

RunResult run_heisenberg_verify(const ExperimentConfig& config) {
    int n = param_int(config, "n");
    int g = param_int(config, "g");
    if (n < 2 || n > 16 || g < 1 || g > 2)
        throw ConfigError("heisenberg-verify supports 2 <= n <= 16, 1 <= g <= 2");
    ReportDocument doc;
    HeisenbergGroup h(std::vector<int>(g, n));
    long long expected = 1;
    for (int i = 0; i < 2 * g + 1; ++i) expected *= n;
    Json row;
    row["n"] = n;
    row["g"] = g;
    row["order"] = h.order();
    row["expected_order"] = expected;
    doc.verdict("order-n^(2g+1)", h.order() == expected);

    bool pairing_ok = true;
    try {
        SymplecticPairing e = h.commutator_pairing();
        pairing_ok = e.alternating() && e.nondegenerate() && e.induces_dual_isomorphism();
        row["pairing_nondegenerate"] = e.nondegenerate();
    } catch (const std::logic_error&) {
        pairing_ok = false;
    }
    doc.verdict("commutator-pairing-table-matches-lifts", pairing_ok);
    row["center_order"] = h.group().d() * static_cast<long long>(h.center_points().size());
    doc.verdict("center-exactly-mu_n", h.center_points().size() == 1);

    if (n % 2 == 1) {
        auto hp = std::make_shared<const HeisenbergGroup>(std::vector<int>(g, n));
        PhiYu phi(hp);
        const ThetaGroup& tg = hp->group();
        bool bij = true, center_fixed = true, quotient_fixed = true;
        std::vector<char> seen(tg.order(), 0);
        for (int i = 0; i < static_cast<int>(tg.order()); ++i) {
            ThetaGroup::Elem e = tg.elem_at(i);
            ThetaGroup::Elem f = phi.apply(e);
            quotient_fixed &= f.point == e.point;
            if (e.point == 0) center_fixed &= f == e;
            int idx = phi.target().elem_index(f);
            if (seen[idx]) bij = false;
            seen[idx] = 1;
        }
        row["phi_yu_shift"] = phi.shift_coefficient();
        doc.verdict("phi-yu-homomorphism", phi.verify_isomorphism());
        doc.verdict("phi-yu-bijective", bij);
        doc.verdict("phi-yu-trivial-on-center-and-quotient", center_fixed && quotient_fixed);
    } else {
        bool rejected = false;
        try {
            variant_group(h.commutator_pairing());
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        doc.verdict("companion-group-rejected-for-even-n", rejected);
    }

    bool g1_supported = true;
    try {
        G1Enumeration g1 = enumerate_g1(h);
        row["g1_order"] = g1.autos.size();
        row["g2_order"] = g1.g2_indices.size();
        row["quotient_image_order"] = g1.quotient_image.size();
        long long kstar = 1;
        for (int i = 0; i < 2 * g; ++i) kstar *= n;
        doc.verdict("g2-isomorphic-to-dual-of-K",
                    static_cast<long long>(g1.g2_indices.size()) == kstar);
        if (n % 2 == 1) {
            // Split check: conjugation through the companion group gives a
            // section of the quotient map, multiplicative on Sp.
            auto hp = std::make_shared<const HeisenbergGroup>(std::vector<int>(g, n));
            PhiYu phi(hp);
            const ThetaGroup& tg = hp->group();
            auto sp = sp_group(g, n);
            doc.verdict("quotient-image-is-full-sp",
                        g1.quotient_image.size() == sp.size());
            auto section_perm = [&](const std::vector<int>& mat) {
                std::vector<int> perm(tg.order());
                for (int i = 0; i < static_cast<int>(tg.order()); ++i) {
                    ThetaGroup::Elem e = phi.apply(tg.elem_at(i));
                    e.point = apply_matrix_point(tg, mat, e.point);
                    perm[i] = tg.elem_index(phi.apply_inverse(e));
                }
                return perm;
            };
            bool split_ok = true;
            std::map<std::vector<int>, std::vector<int>> section;
            for (const auto& mat : sp) section[mat] = section_perm(mat);
            std::set<std::vector<int>> enumerated;
            for (const auto& aut : g1.autos) enumerated.insert(aut.perm);
            for (const auto& [mat, perm] : section) split_ok &= enumerated.count(perm) > 0;
            int dim = 2 * g;
            auto matmul = [&](const std::vector<int>& A, const std::vector<int>& B) {
                std::vector<int> C(static_cast<std::size_t>(dim) * dim, 0);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) {
                        long long v = 0;
                        for (int m = 0; m < dim; ++m)
                            v += static_cast<long long>(A[static_cast<std::size_t>(r) * dim + m]) *
                                 B[static_cast<std::size_t>(m) * dim + c];
                        C[static_cast<std::size_t>(r) * dim + c] = static_cast<int>(v % n);
                    }
                return C;
            };
            for (const auto& a : sp)
                for (const auto& b : sp) {
                    const auto& pa = section.at(a);
                    const auto& pb = section.at(b);
                    std::vector<int> composite(tg.order());
                    for (int i = 0; i < static_cast<int>(tg.order()); ++i)
                        composite[i] = pa[pb[i]];
                    split_ok &= composite == section.at(matmul(a, b));
                }
            doc.verdict("g1-sequence-splits-via-companion-conjugation", split_ok);
        }
    } catch (const GuardExceeded&) {
        g1_supported = false;
        row["g1_order"] = nullptr;
    }
    row["g1_enumerated"] = g1_supported;
    doc.rows.push_back(row);
    doc.parameters["n"] = std::to_string(n);
    doc.parameters["g"] = std::to_string(g);
    return {std::move(doc), std::nullopt};
}

// ------------------------------------------------------------- obstruction --

RunResult run_obstruction_table(const ExperimentConfig& config) {
    std::string instance_sel = param_or(config, "instance", "all");
    std::string chi_sel = param_or(config, "chi", "all");
    if (chi_sel != "all" && chi_sel != "zero" && chi_sel != "nonzero")
        throw ConfigError("parameter 'chi': expected zero, nonzero or all");
    ReportDocument doc;
    bool all_connecting = true, all_torsion = true, all_quadratic = true, all_biadd = true;
    int matched = 0;
    for (const auto& inst : catalog_lagrangian()) {
        if (instance_sel != "all" && inst.name.find(instance_sel) == std::string::npos) continue;
        ++matched;
        std::vector<Cocycle1> etas = z1(inst.data->k());
        for (const Cocycle1& chi : inst.chis) {
            if (chi_sel == "zero" && !chi.is_zero()) continue;
            if (chi_sel == "nonzero" && chi.is_zero()) continue;
            for (const Cocycle1& eta : etas) {
                ObstructionRecord rec = obstruction_delta(*inst.data, chi, eta);
                Cocycle2 conn = obstruction_delta_via_connecting(*inst.data, chi, eta);
                bool conn_eq = rec.delta.values() == conn.values();
                bool torsion = torsion_check(rec, inst.data->n());
                all_connecting &= conn_eq;
                all_torsion &= torsion;
                Json row = obstruction_record_to_json(rec);
                row["instance"] = inst.name;
                row["chi"] = cocycle1_to_json(chi);
                row["connecting_pointwise_equal"] = conn_eq;
                row["n_torsion"] = torsion;
                doc.rows.push_back(row);
            }
            for (const Cocycle1& eta : etas)
                for (const Cocycle1& eta2 : etas) {
                    QuadraticityReport q = quadraticity_report(*inst.data, chi, eta, eta2);
                    all_quadratic &= q.ok();
                    // Bi-additivity of the cross term in the first slot,
                    // up to coboundary.
                    for (const Cocycle1& eta3 : etas) {
                        QuadraticityReport q13 =
                            quadraticity_report(*inst.data, chi, eta.add(eta3), eta2);
                        QuadraticityReport q3 = quadraticity_report(*inst.data, chi, eta3, eta2);
                        Cocycle2 diff = q13.cross_term.add(q.cross_term.negate())
                                            .add(q3.cross_term.negate());
                        all_biadd &= diff.is_coboundary();
                    }
                }
        }
    }
    if (matched == 0) throw ConfigError("no catalog instance matches '" + instance_sel + "'");
    doc.verdict("delta-equals-connecting-pointwise", all_connecting);
    doc.verdict("image-classes-n-torsion", all_torsion);
    doc.verdict("linear-additive-quadratic-square-scaling", all_quadratic);
    doc.verdict("cross-term-biadditive-up-to-coboundary", all_biadd);
    doc.parameters["instance"] = instance_sel;
    doc.parameters["chi"] = chi_sel;
    return {std::move(doc), std::nullopt};
}

// ------------------------------------------------------------ symbol table --

RunResult run_symbol_table(const ExperimentConfig& config) {
    int p = param_int(config, "p");
    int n = param_int(config, "n");
    TameLocalModel model(p, n);
    ReportDocument doc;
    std::vector<UnitClass> classes = all_classes(model);
    int m = static_cast<int>(classes.size());
    check_guard(static_cast<double>(m) * m * m, "symbol table sweep");
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = tame_symbol(classes[i], classes[j], model);

    bool bilinear = true, antisym = true, steinberg = true, nondeg = true;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            antisym &= (table[i][j] + table[j][i]) % n == 0;
            for (int k = 0; k < m; ++k) {
                UnitClass sum = class_add(classes[i], classes[k], model);
                int si = 0;
                for (int t = 0; t < m; ++t)
                    if (classes[t] == sum) si = t;
                bilinear &= table[si][j] == (table[i][j] + table[k][j]) % n;
            }
        }
        UnitClass minus_a = class_add(classes[i], reduce(-1, model), model);
        steinberg &= tame_symbol(classes[i], minus_a, model) == 0;
        if (i > 0) {
            bool hit = false;
            for (int j = 0; j < m; ++j) hit |= table[i][j] != 0;
            nondeg &= hit;
        }
    }
    doc.verdict("symbol-bilinear", bilinear);
    doc.verdict("symbol-antisymmetric", antisym);
    doc.verdict("symbol-steinberg-a-minus-a", steinberg);
    doc.verdict("symbol-nondegenerate", nondeg);

    Json labels = Json::array();
    for (const auto& c : classes) labels.push_back(class_representative(c, model));
    doc.rows.push_back(Json{{"representatives", labels}, {"table", table}});

    // Explicit evaluations on rationals given as numerator/denominator
    // pairs: "a,b;c/e,d;..." with each entry num or num/den.
    if (auto it = config.params.find("pairs"); it != config.params.end()) {
        auto parse_rational = [&](const std::string& text) {
            auto slash = text.find('/');
            std::string num = slash == std::string::npos ? text : text.substr(0, slash);
            std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
            long long nv = parse_int("pairs", {num, "flag --pairs"});
            long long dv = parse_int("pairs", {den, "flag --pairs"});
            if (nv == 0 || dv == 0) throw ConfigError("pairs entries must be nonzero rationals");
            return std::pair<long long, long long>{nv, dv};
        };
        std::stringstream ss(it->second);
        std::string pair_text;
        Json evals = Json::array();
        while (std::getline(ss, pair_text, ';')) {
            auto comma = pair_text.find(',');
            if (comma == std::string::npos)
                throw ConfigError("pairs must be 'a,b' entries separated by ';'");
            auto [an, ad] = parse_rational(pair_text.substr(0, comma));
            auto [bn, bd] = parse_rational(pair_text.substr(comma + 1));
            UnitClass ca = reduce(an, ad, model);
            UnitClass cb = reduce(bn, bd, model);
            evals.push_back(Json{{"a", pair_text.substr(0, comma)},
                                 {"b", pair_text.substr(comma + 1)},
                                 {"class_a", Json{{"v", ca.v}, {"w", ca.w}}},
                                 {"class_b", Json{{"v", cb.v}, {"w", cb.w}}},
                                 {"symbol", tame_symbol(ca, cb, model)}});
        }
        doc.rows.push_back(Json{{"pair_evaluations", evals}});
        doc.parameters["pairs"] = it->second;
    }
    doc.parameters["p"] = std::to_string(p);
    doc.parameters["n"] = std::to_string(n);

    std::ostringstream csv;
    csv << "class";
    for (const auto& c : classes) csv << "," << class_representative(c, model);
    csv << "\n";
    for (int i = 0; i < m; ++i) {
        csv << class_representative(classes[i], model);
        for (int j = 0; j < m; ++j) csv << "," << table[i][j];
        csv << "\n";
    }
    return {std::move(doc), csv.str()};
}

// ------------------------------------------------------------------ search --

std::vector<std::vector<UnitClass>> parse_hset(const std::string& text, int g, int n) {
    std::vector<std::vector<UnitClass>> H;
    if (text == "zero") {
        H.push_back(std::vector<UnitClass>(2 * g, UnitClass{0, 0}));
        return H;
    }
    if (text == "full") {
        int slots = 2 * g;
        std::vector<int> digits(static_cast<std::size_t>(slots) * 2, 0);
        bool more = true;
        while (more) {
            std::vector<UnitClass> h(slots);
            for (int i = 0; i < slots; ++i)
                h[i] = UnitClass{digits[static_cast<std::size_t>(i) * 2],
                                 digits[static_cast<std::size_t>(i) * 2 + 1]};
            H.push_back(std::move(h));
            more = false;
            for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
                if (++digits[i] < n) {
                    more = true;
                    break;
                }
                digits[i] = 0;
            }
        }
        return H;
    }
    // Explicit: tuples separated by ';', each 'v1,w1,v2,w2,...'.
    std::stringstream ss(text);
    std::string tuple;
    while (std::getline(ss, tuple, ';')) {
        std::vector<int> nums;
        std::stringstream ts(tuple);
        std::string item;
        while (std::getline(ts, item, ','))
            nums.push_back(parse_int("hset", {item, "flag --hset"}));
        if (static_cast<int>(nums.size()) != 4 * g)
            throw ConfigError("hset tuple must list 4g integers v1,w1,...,v2g,w2g");
        std::vector<UnitClass> h(2 * g);
        for (int i = 0; i < 2 * g; ++i)
            h[i] = UnitClass{((nums[2 * i] % n) + n) % n, ((nums[2 * i + 1] % n) + n) % n};
        H.push_back(std::move(h));
    }
    if (H.empty()) throw ConfigError("hset must be zero, full, or explicit tuples");
    return H;
}

RunResult run_prop28_search(const ExperimentConfig& config) {
    int p = param_int(config, "p");
    int n = param_int(config, "n");
    int g = param_int(config, "g");
    TameLocalModel model(p, n);
    std::string hset = param_or(config, "hset", "zero");
    std::vector<std::vector<UnitClass>> H = parse_hset(hset, g, n);
    auto found = nonvanishing_shift_search(H, g, model);

    // Confirm against the definition: nonzero, and the shifted functional
    // never vanishes on H; a full rescan confirms first-hit determinism.
    bool confirmed = true;
    std::vector<UnitClass> trivial(g, UnitClass{0, 0});
    auto functional = [&](const std::vector<UnitClass>& t) {
        std::vector<UnitClass> a(t.begin(), t.begin() + g);
        std::vector<UnitClass> b(t.begin() + g, t.end());
        return delta_symbols(a, b, trivial, trivial, model);
    };
    if (found) {
        bool nonzero = false;
        for (const auto& c : *found) nonzero |= c.v != 0 || c.w != 0;
        confirmed &= nonzero;
        for (const auto& h : H) {
            std::vector<UnitClass> sum(2 * g);
            for (int i = 0; i < 2 * g; ++i) sum[i] = class_add(h[i], (*found)[i], model);
            confirmed &= functional(sum) != 0;
        }
    } else {
        // Verify emptiness: taking h = -t forces the functional through zero.
        auto rescan = nonvanishing_shift_search(H, g, model);
        confirmed &= !rescan.has_value();
    }

    ReportDocument doc;
    Json row;
    row["hset"] = hset;
    row["hset_size"] = H.size();
    if (found) {
        Json t = Json::array();
        for (const auto& c : *found) t.push_back(Json{{"v", c.v}, {"w", c.w}});
        row["found"] = t;
    } else {
        row["found"] = nullptr;
    }
    doc.rows.push_back(row);
    doc.verdict("search-result-confirmed", confirmed);
    doc.parameters["p"] = std::to_string(p);
    doc.parameters["n"] = std::to_string(n);
    doc.parameters["g"] = std::to_string(g);
    doc.parameters["hset"] = hset;
    return {std::move(doc), std::nullopt};
}

// ------------------------------------------------------------------- index --

RunResult run_lang_tate_index(const ExperimentConfig& config) {
    int n = param_int(config, "n");
    int g = param_int(config, "g");
    LaurentModel model{n, g};
    std::vector<UnitClass> coords;
    int k = -1;
    if (auto it = config.params.find("coords"); it != config.params.end()) {
        std::stringstream ss(it->second);
        std::string item;
        while (std::getline(ss, item, ','))
            coords.push_back(UnitClass{((parse_int("coords", {item, "flag --coords"}) % n) + n) % n, 0});
        if (static_cast<int>(coords.size()) != 2 * g)
            throw ConfigError("coords must list 2g uniformizer exponents");
    } else {
        k = param_int_or(config, "k", 0);
        if (k < 0 || k > 2 * g) throw ConfigError("k must satisfy 0 <= k <= 2g");
        coords.assign(2 * g, UnitClass{0, 0});
        for (int i = 0; i < k; ++i) coords[i].v = 1;
    }
    long long index = lang_tate_index(coords, model);
    ReportDocument doc;
    Json row;
    Json cj = Json::array();
    for (const auto& c : coords) cj.push_back(c.v);
    row["coords"] = cj;
    row["index"] = index;
    if (k >= 0) {
        long long expected = 1;
        for (int i = 0; i < k; ++i) expected *= n;
        row["expected"] = expected;
        doc.verdict("index-equals-n^k", index == expected);
    } else {
        long long expected = 1;
        for (const auto& c : coords) expected *= n / std::gcd(c.v == 0 ? n : c.v, n);
        doc.verdict("index-matches-character-count", index == expected);
    }
    doc.rows.push_back(row);
    doc.parameters["n"] = std::to_string(n);
    doc.parameters["g"] = std::to_string(g);
    if (k >= 0) doc.parameters["k"] = std::to_string(k);
    return {std::move(doc), std::nullopt};
}

} // namespace

RunResult run_experiment(const ExperimentConfig& config) {
    RunResult result = [&] {
        if (config.experiment == "cohomology-survey") return run_cohomology_survey(config);
        if (config.experiment == "heisenberg-verify") return run_heisenberg_verify(config);
        if (config.experiment == "obstruction-table") return run_obstruction_table(config);
        if (config.experiment == "symbol-table") return run_symbol_table(config);
        if (config.experiment == "prop28-search") return run_prop28_search(config);
        if (config.experiment == "lang-tate-index") return run_lang_tate_index(config);
        throw ConfigError("unknown experiment '" + config.experiment + "'");
    }();
    result.report.experiment = config.experiment;
    result.report.version = kVersion;
    if (!config.no_timestamp) result.report.timestamp = now_string();
    return result;
}

std::string render_output(const RunResult& result, const std::string& format) {
    if (format == "json") return result.report.to_json_text();
    if (format == "csv") {
        if (!result.csv)
            throw ConfigError("experiment " + result.report.experiment + " has no CSV rendering");
        return *result.csv;
    }
    throw ConfigError("unknown format '" + format + "'");
}

int verdict_exit_status(const ReportDocument& doc) { return doc.all_pass() ? 0 : 1; }

} // namespace thetakit
