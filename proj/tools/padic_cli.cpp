// padic: command-line front end for the p-adic Mobius library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "padic/cfrac.hpp"
#include "padic/errors.hpp"
#include "padic/geometry.hpp"
#include "padic/groups.hpp"
#include "padic/io.hpp"
#include "padic/valuation.hpp"
#include "padic/verify.hpp"

using namespace padic;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kParse = 2;

struct Common {
    unsigned long p = 0;
    std::optional<long> disc;
    bool json_mode = false;
    std::optional<long> precision_cap;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "prime p")->required();
    cmd->add_option("--disc", c.disc, "squarefree D adjoining sqrt(D)");
    cmd->add_flag("--json", c.json_mode, "emit JSON");
    cmd->add_option("--precision-cap", c.precision_cap, "Hensel digit cap (default 64, env PADIC_PRECISION_CAP)");
}

long precision_cap(const Common& c) {
    if (c.precision_cap) return *c.precision_cap;
    if (const char* env = std::getenv("PADIC_PRECISION_CAP")) {
        try {
            std::size_t used = 0;
            long v = std::stol(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("PADIC_PRECISION_CAP is not an integer: ") + env);
        }
    }
    return PadicContext::kDefaultPrecisionCap;
}

// The discriminant a set of elements uses; --disc must agree when both are given.
std::optional<long> resolve_disc(const Common& c, const std::vector<FieldElem>& elems) {
    std::optional<long> used;
    for (const auto& x : elems) {
        if (x.disc() == 0) continue;
        if (used && *used != x.disc()) throw ParseError("input mixes sqrt(" + std::to_string(*used) + ") and sqrt(" + std::to_string(x.disc()) + ")");
        used = x.disc();
    }
    if (c.disc && used && *c.disc != *used) {
        throw ParseError("input uses sqrt(" + std::to_string(*used) + ") but --disc is " + std::to_string(*c.disc));
    }
    return c.disc ? c.disc : used;
}

std::vector<FieldElem> entries(const MobiusMap& g) { return {g.a(), g.b(), g.c(), g.d()}; }

std::vector<FieldElem> entries(const std::vector<MobiusMap>& gs) {
    std::vector<FieldElem> v;
    for (const auto& g : gs) {
        for (const auto& x : entries(g)) v.push_back(x);
    }
    return v;
}

std::vector<FieldElem> entries(const ProjPoint& z) { return z.is_inf() ? std::vector<FieldElem>{} : std::vector<FieldElem>{z.x()}; }

PadicContext make_ctx(const Common& c, const std::vector<FieldElem>& elems) {
    return PadicContext(c.p, resolve_disc(c, elems), precision_cap(c));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

// "a,b;c,d" or a JSON map object.
MobiusMap read_map(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\n");
    if (i != std::string::npos && text[i] == '{') return map_from_json(parse_json_text(text, "map"));
    return parse_map(text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string points_text(const std::vector<ProjPoint>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].str();
    return s;
}

// ------------------------------------------------------------------ commands

int cmd_classify(const Common& c, const std::string& map_text) {
    MobiusMap g = read_map(map_text);
    PadicContext ctx = make_ctx(c, entries(g));
    ElementClass cls = classify(ctx, g);
    FieldElem s = sigma(g);
    Magnitude gap = abs_elem(ctx, s - FieldElem(4));
    std::optional<FixedPoints> fp;
    std::string fp_reason;
    try {
        fp = fixed_points(ctx, g);
    } catch (const UnsupportedExtension& e) {
        fp_reason = e.what();
        if (e.needed_disc()) fp_reason += " (needs D = " + std::to_string(*e.needed_disc()) + ")";
    }
    if (c.json_mode) {
        json j{{"map", map_to_json(g)},
               {"class", to_string(cls)},
               {"sigma", s.str()},
               {"sigma_minus_4", magnitude_to_json(gap)},
               {"norm", magnitude_to_json(norm(ctx, g))},
               {"lipschitz", magnitude_to_json(lipschitz(ctx, g))},
               {"M", magnitude_to_json(M_norm(ctx, g))}};
        if (fp && fp->all) {
            j["fixed_points"] = "all";
        } else if (fp) {
            json arr = json::array();
            for (const auto& z : fp->points) arr.push_back(point_to_json(z));
            j["fixed_points"] = arr;
        } else {
            j["fixed_points"] = nullptr;
            j["fixed_points_reason"] = fp_reason;
        }
        print_json(j);
        return kOk;
    }
    std::cout << "map: " << g.str() << "\n"
              << "class: " << to_string(cls) << "\n"
              << "tr^2/det: " << s.str() << "\n"
              << "|tr^2/det - 4|: " << gap.str() << "\n"
              << "norm: " << norm(ctx, g).str() << "\n"
              << "lipschitz: " << lipschitz(ctx, g).str() << "\n"
              << "M: " << M_norm(ctx, g).str() << "\n";
    if (fp && fp->all) {
        std::cout << "fixed points: all\n";
    } else if (fp) {
        std::cout << "fixed points: " << points_text(fp->points) << "\n";
    } else {
        std::cout << "fixed points: unavailable: " << fp_reason << "\n";
    }
    return kOk;
}

int cmd_norms(const Common& c, const std::string& map_text, const std::optional<std::string>& other_text) {
    MobiusMap g = read_map(map_text);
    std::optional<MobiusMap> h;
    if (other_text) h = read_map(*other_text);
    std::vector<FieldElem> es = entries(g);
    if (h) {
        for (const auto& x : entries(*h)) es.push_back(x);
    }
    PadicContext ctx = make_ctx(c, es);
    json j{{"map", map_to_json(g)}};
    j["norm"] = magnitude_to_json(norm(ctx, g));
    j["unitary"] = is_unitary(ctx, g);
    j["lipschitz"] = magnitude_to_json(lipschitz(ctx, g));
    j["gauss_displacement"] = to_string(displacement_gauss(ctx, g));
    j["m"] = magnitude_to_json(m_norm(ctx, g));
    j["M"] = magnitude_to_json(M_norm(ctx, g));
    j["norm_minus_identity"] = magnitude_to_json(norm_minus_identity(ctx, g));
    Rho0 r = rho0_identity(ctx, g);
    auto rho_json = [](const Rho0& q) {
        json o{{"value", magnitude_to_json(q.value)}, {"exact", q.exact}, {"witness", point_to_json(q.witness)}};
        if (!q.exact) {
            o["lower"] = magnitude_to_json(q.lower);
            o["upper"] = magnitude_to_json(q.upper);
        }
        return o;
    };
    j["rho0_identity"] = rho_json(r);
    j["epsilon1"] = magnitude_to_json(epsilon1(ctx, g));
    try {
        j["epsilon"] = magnitude_to_json(epsilon(ctx, g));
    } catch (const UnsupportedExtension& e) {
        j["epsilon"] = nullptr;
        j["epsilon_reason"] = e.what();
    }
    if (classify(ctx, g) == ElementClass::PARABOLIC) j["epsilon2"] = magnitude_to_json(epsilon2(ctx, g));
    j["d_to_unitary"] = magnitude_to_json(d_to_unitary(ctx, g));
    if (h) {
        j["other"] = map_to_json(*h);
        j["rho0"] = rho_json(rho0(ctx, g, *h));
    }
    if (c.json_mode) {
        print_json(j);
        return kOk;
    }
    std::cout << "map: " << g.str() << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "map") continue;
        if (it.key() == "other") {
            std::cout << "other: " << h->str() << "\n";
            continue;
        }
        const json& v = it.value();
        if (v.is_object()) {
            std::cout << it.key() << ": " << v["value"].get<std::string>();
            std::cout << (v["exact"].get<bool>() ? " (exact)" : " (bracket " + v["lower"].get<std::string>() + " .. " + v["upper"].get<std::string>() + ")");
            std::cout << " witness " << v["witness"].get<std::string>() << "\n";
        } else if (v.is_boolean()) {
            std::cout << it.key() << ": " << yes_no(v.get<bool>()) << "\n";
        } else if (v.is_null()) {
            std::cout << it.key() << ": unavailable\n";
        } else {
            std::cout << it.key() << ": " << v.get<std::string>() << "\n";
        }
    }
    return kOk;
}

int cmd_act(const Common& c, const std::string& map_text, const std::string& point_text) {
    MobiusMap g = read_map(map_text);
    BerkPoint x = parse_berk(point_text, c.p);
    std::vector<FieldElem> es = entries(g);
    if (x.is_type1()) {
        for (const auto& e : entries(x.point())) es.push_back(e);
    } else if (!x.is_infinity()) {
        es.push_back(x.center());
    }
    PadicContext ctx = make_ctx(c, es);
    BerkPoint y = act(ctx, g, x);
    bool fixed = same_point(ctx, x, y);
    std::string dist = x.is_type1() ? "inf" : to_string(hyp_dist(ctx, x, y));
    if (fixed) dist = "0";
    if (c.json_mode) {
        print_json(json{{"map", map_to_json(g)}, {"point", berk_to_json(x)}, {"image", berk_to_json(y)},
                        {"fixed", fixed}, {"distance", dist}});
        return kOk;
    }
    std::cout << y.str() << "\n"
              << "fixed: " << yes_no(fixed) << "\n"
              << "distance: " << dist << "\n";
    return kOk;
}

int cmd_decompose(const Common& c, const std::string& map_text) {
    MobiusMap g = read_map(map_text);
    PadicContext ctx = make_ctx(c, entries(g));
    Decomposition d = decompose_unitary_loxodromic(ctx, g);
    bool u_ok = is_unitary(ctx, d.u);
    ElementClass fc = classify(ctx, d.f);
    bool f_ok = fc == ElementClass::IDENTITY;
    std::optional<FixedPoints> fp;
    if (fc == ElementClass::LOXODROMIC) {
        fp = fixed_points(ctx, d.f);
        auto w = antipodal_witness(ctx, fp->points.at(0), fp->points.at(1));
        f_ok = w.has_value();
    }
    bool prod_ok = d.u * d.f == g;
    if (c.json_mode) {
        json j{{"map", map_to_json(g)}, {"u", map_to_json(d.u)}, {"f", map_to_json(d.f)}, {"f_class", to_string(fc)},
               {"u_unitary", u_ok}, {"f_antipodal_loxodromic", f_ok}, {"product_ok", prod_ok}};
        if (fp) {
            json arr = json::array();
            for (const auto& z : fp->points) arr.push_back(point_to_json(z));
            j["f_fixed_points"] = arr;
        }
        print_json(j);
    } else {
        std::cout << "g: " << g.str() << "\n"
                  << "u: " << d.u.str() << "\n"
                  << "f: " << d.f.str() << " (" << to_string(fc) << ")\n";
        if (fp) std::cout << "f fixed points: " << points_text(fp->points) << "\n";
        std::cout << "u unitary: " << yes_no(u_ok) << "\n"
                  << "f antipodal loxodromic: " << yes_no(f_ok) << (fc == ElementClass::IDENTITY ? " (f = I)" : "") << "\n"
                  << "u∘f=g: " << yes_no(prod_ok) << "\n";
    }
    return u_ok && f_ok && prod_ok ? kOk : kDomain;
}

int cmd_cf(const Common& c, bool unit_ones, std::size_t n, const std::optional<std::string>& spec_file) {
    CFSpec spec;
    if (spec_file) {
        spec = cfspec_from_json(parse_json_text(read_file(*spec_file), *spec_file));
        if (n == 0 || n > spec.length()) n = spec.length();
    } else if (unit_ones) {
        if (n == 0) throw ParseError("--unit-ones needs --n >= 1");
        spec = CFSpec::unit_ones(n);
    } else {
        throw ParseError("cf needs --unit-ones or --spec FILE");
    }
    std::vector<FieldElem> es = spec.a;
    es.insert(es.end(), spec.b.begin(), spec.b.end());
    PadicContext ctx = make_ctx(c, es);
    std::vector<Magnitude> gaps = gap_sequence(ctx, spec, n);
    DivergenceCertificate cert = diverges_classically_unit_case(ctx, spec);
    json rows = json::array();
    for (std::size_t k = 1; k <= n; ++k) {
        MobiusMap T = convergent_map(spec, k);
        rows.push_back(json{{"n", k}, {"T", map_to_json(T)}, {"value", point_to_json(convergent_value(spec, k))},
                            {"gap", magnitude_to_json(gaps.at(k - 1))}});
    }
    std::string verdict = cert.diverges ? "diverges classically" : "no certificate";
    if (c.json_mode) {
        print_json(json{{"convergents", rows}, {"verdict", verdict}, {"reason", cert.reason}});
        return kOk;
    }
    std::cout << "n\tT_n\tvalue\tgap\n";
    for (const auto& r : rows) {
        std::cout << r["n"].get<std::size_t>() << "\t" << map_from_json(r["T"]).str() << "\t"
                  << r["value"].get<std::string>() << "\t" << r["gap"].get<std::string>() << "\n";
    }
    std::cout << "verdict: " << verdict;
    if (!cert.reason.empty()) std::cout << " (" << cert.reason << ")";
    std::cout << "\n";
    return kOk;
}

int cmd_group(const Common& c, const std::string& gens_file, int maxlen, std::size_t budget,
              const std::optional<std::string>& orbit_seed, bool common) {
    std::vector<MobiusMap> gens = maps_from_json(parse_json_text(read_file(gens_file), gens_file));
    if (gens.empty()) throw ParseError(gens_file + ": no generators");
    std::optional<ProjPoint> seed;
    if (orbit_seed) seed = parse_point(*orbit_seed);
    std::vector<FieldElem> es = entries(gens);
    if (seed) {
        for (const auto& e : entries(*seed)) es.push_back(e);
    }
    PadicContext ctx = make_ctx(c, es);
    GroupSpec spec{gens, maxlen, budget};
    DiscretenessReport rep = discreteness_report(ctx, spec);
    json j{{"verdict", to_string(rep.verdict)},
           {"elements", rep.elements},
           {"min_distance_to_identity", rep.min_distance_to_identity ? magnitude_to_json(*rep.min_distance_to_identity) : json(nullptr)},
           {"class_census", json::object()},
           {"unitary_words", rep.unitary_words},
           {"finite_ball_caveat", rep.finite_ball_caveat}};
    for (const auto& [cls, k] : rep.class_census) j["class_census"][to_string(cls)] = k;
    if (common) {
        try {
            auto x = common_fixed_point(ctx, gens);
            j["common_fixed_point"] = x ? berk_to_json(*x) : json(nullptr);
        } catch (const NotAllElliptic& e) {
            j["common_fixed_point"] = nullptr;
            j["not_all_elliptic"] = e.word();
        }
    }
    if (seed) {
        OrbitSample o = orbit_sample(ctx, spec, *seed);
        j["orbit"] = json{{"points", o.points.size()},
                          {"min_distance", magnitude_to_json(o.min_distance)},
                          {"min_distance_half_depth", magnitude_to_json(o.min_distance_half_depth)},
                          {"accumulation", o.accumulation}};
    }
    if (c.json_mode) {
        print_json(j);
        return kOk;
    }
    std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n"
              << "elements: " << rep.elements << "\n"
              << "min |g - I|: " << (rep.min_distance_to_identity ? rep.min_distance_to_identity->str() : "unavailable") << "\n";
    for (const auto& [cls, k] : rep.class_census) std::cout << "census " << to_string(cls) << ": " << k << "\n";
    for (const auto& w : rep.unitary_words) std::cout << "unitary word: " << w << "\n";
    if (rep.finite_ball_caveat) std::cout << "caveat: the certificate covers words of length <= " << maxlen << " only\n";
    if (common) {
        if (j.contains("not_all_elliptic")) {
            std::cout << "common fixed point: none, " << j["not_all_elliptic"].get<std::string>() << " is not elliptic\n";
        } else {
            std::cout << "common fixed point: " << (j["common_fixed_point"].is_null() ? "none" : j["common_fixed_point"].get<std::string>()) << "\n";
        }
    }
    if (seed) {
        const json& o = j["orbit"];
        std::cout << "orbit points: " << o["points"].get<std::size_t>() << "\n"
                  << "orbit min distance: " << o["min_distance"].get<std::string>() << "\n"
                  << "orbit min distance at half depth: " << o["min_distance_half_depth"].get<std::string>() << "\n"
                  << "accumulation: " << yes_no(o["accumulation"].get<bool>()) << "\n";
    }
    return kOk;
}

int cmd_verify(const Common& c, std::uint64_t seed, int trials, const std::optional<std::string>& only) {
    SuiteConfig cfg;
    cfg.p = c.p;
    cfg.disc = c.disc;
    cfg.seed = seed;
    cfg.trials = trials;
    PadicContext check(c.p, c.disc.value_or(default_disc(c.p)), precision_cap(c));
    (void)check;
    SuiteReport rep;
    rep.p = c.p;
    rep.disc = c.disc.value_or(default_disc(c.p));
    rep.seed = seed;
    rep.trials = trials;
    if (only) {
        rep.results.push_back(run_property(*only, cfg));
    } else {
        rep = run_suite(cfg);
    }
    if (c.json_mode) {
        print_json(rep.to_json());
    } else {
        std::cout << rep.text();
    }
    return rep.passed() ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact p-adic Mobius maps: classification, norms, tree geometry, decompositions, continued fractions and groups"};
    app.require_subcommand(1);

    Common common;
    std::string map_text, point_text, gens_file;
    std::optional<std::string> other_text, spec_file, orbit_seed, only;
    bool unit_ones = false, common_point = false;
    std::size_t n = 0, budget = GroupSpec{}.budget;
    int maxlen = 3, trials = 100;
    std::uint64_t seed = 0;

    auto* classify_cmd = app.add_subcommand("classify", "class, trace invariant, norms and fixed points");
    add_common(classify_cmd, common);
    classify_cmd->add_option("--map", map_text, "\"a,b;c,d\" or a JSON map object")->required();

    auto* norms_cmd = app.add_subcommand("norms", "norms, metrics and distances of a map");
    add_common(norms_cmd, common);
    norms_cmd->add_option("--map", map_text, "\"a,b;c,d\" or a JSON map object")->required();
    norms_cmd->add_option("--other", other_text, "second map h for rho0(g, h)");

    auto* act_cmd = app.add_subcommand("act", "image of a Berkovich point");
    add_common(act_cmd, common);
    act_cmd->add_option("--map", map_text, "\"a,b;c,d\" or a JSON map object")->required();
    act_cmd->add_option("--point", point_text, "gauss, D(a,p^s) or a point of P^1")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "g = u f with u unitary and f antipodal loxodromic");
    add_common(decompose_cmd, common);
    decompose_cmd->add_option("--map", map_text, "\"a,b;c,d\" or a JSON map object")->required();

    auto* cf_cmd = app.add_subcommand("cf", "continued-fraction convergents and gaps");
    add_common(cf_cmd, common);
    cf_cmd->add_flag("--unit-ones", unit_ones, "a_i = b_i = 1");
    cf_cmd->add_option("--n", n, "number of convergents");
    cf_cmd->add_option("--spec", spec_file, "JSON file {\"a\": [...], \"b\": [...]}");

    auto* group_cmd = app.add_subcommand("group", "discreteness report for a finitely generated group");
    add_common(group_cmd, common);
    group_cmd->add_option("--gens", gens_file, "JSON array of map objects")->required();
    group_cmd->add_option("--maxlen", maxlen, "maximum word length")->check(CLI::NonNegativeNumber);
    group_cmd->add_option("--budget", budget, "maximum number of enumerated elements");
    group_cmd->add_option("--orbit", orbit_seed, "seed point for an orbit sample");
    group_cmd->add_flag("--common-fixed-point", common_point, "look for a point fixed by every generator");

    auto* verify_cmd = app.add_subcommand("verify", "run the randomized property suite");
    add_common(verify_cmd, common);
    verify_cmd->add_option("--seed", seed, "suite seed");
    verify_cmd->add_option("--trials", trials, "trial counts in percent of the defaults")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--property", only, "run one property id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(common, map_text);
        if (norms_cmd->parsed()) return cmd_norms(common, map_text, other_text);
        if (act_cmd->parsed()) return cmd_act(common, map_text, point_text);
        if (decompose_cmd->parsed()) return cmd_decompose(common, map_text);
        if (cf_cmd->parsed()) return cmd_cf(common, unit_ones, n, spec_file);
        if (group_cmd->parsed()) return cmd_group(common, gens_file, maxlen, budget, orbit_seed, common_point);
        if (verify_cmd->parsed()) return cmd_verify(common, seed, trials, only);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const UnsupportedExtension& e) {
        std::cerr << "error: " << e.what();
        if (e.needed_disc()) std::cerr << " (rerun with --disc " << *e.needed_disc() << ")";
        std::cerr << "\n";
        return kDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kParse;
}
