// Command-line surface for the scroll-ulrich verification engine: cohomology
// queries, intersection products, Ulrich scans, tower checks, and claim
// reports. Exit codes: 0 clean, 1 unexpected failure, 2 usage error.

#include <scrollulrich/scrollulrich.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace scrollulrich;

namespace {

struct ParamFlags {
    int t = 0;
    int e = 0, b = 0, k = 0;
    bool unchecked = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    cmd->add_option("--t", pf.t, "sporadic parameter t (shorthand for e=0, b=2t, k=3t)");
    cmd->add_option("--e", pf.e, "Hirzebruch surface invariant e");
    cmd->add_option("--b", pf.b, "fiber-class coefficient b of c1 of the defining bundle");
    cmd->add_option("--k", pf.k, "c2 of the defining bundle");
}

ScrollParams resolve_params(const CLI::App* cmd, const ParamFlags& pf) {
    bool has_t = cmd->count("--t") > 0;
    bool has_e = cmd->count("--e") > 0, has_b = cmd->count("--b") > 0,
         has_k = cmd->count("--k") > 0;
    if (has_t && (has_e || has_b || has_k))
        throw std::invalid_argument("give either --t or the explicit --e/--b/--k triple");
    if (has_t) return ScrollParams::sporadic(pf.t);
    if (has_e && has_b && has_k)
        return pf.unchecked ? ScrollParams::unchecked(pf.e, pf.b, pf.k)
                            : ScrollParams::make(pf.e, pf.b, pf.k);
    throw std::invalid_argument("scroll parameters required: --t, or all of --e, --b, --k");
}

struct ClassFlags {
    int xi = 0, alpha = 0, beta = 0;
};

void add_class_flags(CLI::App* cmd, ClassFlags& cf) {
    cmd->add_option("--xi", cf.xi, "coefficient of the tautological class");
    cmd->add_option("--alpha", cf.alpha, "coefficient of the section pullback");
    cmd->add_option("--beta", cf.beta, "coefficient of the fiber pullback");
}

DivisorClass to_class(const ClassFlags& cf) {
    return DivisorClass{Int(cf.xi), {Int(cf.alpha), Int(cf.beta)}};
}

DivisorClass parse_class_triple(const std::string& s) {
    std::istringstream in(s);
    long long x = 0, a = 0, b = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> x >> c1 >> a >> c2 >> b) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
        throw std::invalid_argument("class must be x:alpha:beta, got \"" + s + "\"");
    return DivisorClass{Int(x), {Int(a), Int(b)}};
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    std::istringstream in(s);
    int lo = 0, hi = 0;
    char c = 0;
    if (!(in >> lo >> c >> hi) || c != ':' || !(in >> std::ws).eof() || lo > hi)
        throw std::invalid_argument(std::string(what) + " must be lo:hi with lo <= hi, got \"" +
                                    s + "\"");
    return {lo, hi};
}

void print_profile(std::ostream& os, const CohInterval4& c) {
    for (int i = 0; i < 4; ++i) os << "h^" << i << " = " << to_string(c.h[i]) << "\n";
    os << "chi = " << c.chi.str() << "\n";
}

// --- subcommand payloads -----------------------------------------------------

int run_coh(const CLI::App* cmd, const ParamFlags& pf, const ClassFlags& cf) {
    ScrollParams P = resolve_params(cmd, pf);
    DivisorClass D = to_class(cf);
    std::cout << "class: " << to_string(D) << "\n";
    print_profile(std::cout, coh_scroll_line(P, D));
    return 0;
}

int run_chi(const CLI::App* cmd, const ParamFlags& pf, const ClassFlags& cf) {
    ScrollParams P = resolve_params(cmd, pf);
    DivisorClass D = to_class(cf);
    std::cout << "chi(" << to_string(D) << ") = " << chi_line_hrr(P, D).str() << "\n";
    return 0;
}

int run_chow(const CLI::App* cmd, const ParamFlags& pf, const std::vector<std::string>& ds) {
    ScrollParams P = resolve_params(cmd, pf);
    std::vector<DivisorClass> cls;
    for (const std::string& s : ds) cls.push_back(parse_class_triple(s));
    if (cls.size() > 3) throw std::invalid_argument("at most three --d classes");

    if (cls.empty()) {
        std::cout << "scroll (e,b,k) = (" << P.e << "," << P.b << "," << P.k << ")\n";
        if (P.is_sporadic()) std::cout << "sporadic t = " << *P.sporadic_t << "\n";
        std::cout << "degree xi^3 = " << scroll_degree(P).str() << "\n";
        std::cout << "sectional genus = " << sectional_genus(P).str() << "\n";
        std::cout << "canonical class K = " << to_string(canonical_class(P)) << "\n";
        TangentChern tc = tangent_chern(P);
        std::cout << "tangent c1 = " << to_string(tc.c1) << "\n";
        std::cout << "tangent c2 = " << to_string(tc.c2) << "\n";
        std::cout << "tangent c3 = " << tc.c3.str() << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < cls.size(); ++i)
        std::cout << "D" << i + 1 << " = " << to_string(cls[i]) << "\n";
    if (cls.size() == 1) {
        std::cout << "D1.D1 = " << to_string(intersect(P, cls[0], cls[0])) << "\n";
        std::cout << "D1.D1.D1 = " << intersect(P, cls[0], cls[0], cls[0]).str() << "\n";
    } else if (cls.size() == 2) {
        std::cout << "D1.D2 = " << to_string(intersect(P, cls[0], cls[1])) << "\n";
    } else {
        std::cout << "D1.D2.D3 = " << intersect(P, cls[0], cls[1], cls[2]).str() << "\n";
    }
    return 0;
}

int run_ulrich_check(const CLI::App* cmd, const ParamFlags& pf, const ClassFlags& cf,
                     bool verbose) {
    ScrollParams P = resolve_params(cmd, pf);
    DivisorClass D = to_class(cf);
    UlrichVerdict v = is_ulrich_line(P, D);
    std::cout << to_string(D) << ": " << to_string(v.status) << "\n";
    if (verbose) {
        for (int j = 1; j <= 3; ++j) {
            const CohInterval4& c = v.twists[j - 1];
            std::cout << "  twist -" << j << "xi:";
            for (int i = 0; i < 4; ++i) std::cout << " h^" << i << "=" << to_string(c.h[i]);
            std::cout << " chi=" << c.chi.str() << "\n";
        }
    }
    return 0;
}

int run_ulrich_scan(const CLI::App* cmd, const ParamFlags& pf, const ScanBox& box,
                    bool show_all) {
    ScrollParams P = resolve_params(cmd, pf);
    std::vector<ScanHit> hits = ulrich_scan(P, box);
    std::size_t n_ulrich = 0, n_undecided = 0;
    for (const ScanHit& h : hits) {
        if (h.verdict.status == UlrichStatus::Ulrich) ++n_ulrich;
        if (h.verdict.status == UlrichStatus::Undecided) ++n_undecided;
        if (h.verdict.status != UlrichStatus::NotUlrich || show_all)
            std::cout << to_string(h.cls) << "\t" << to_string(h.verdict.status) << "\n";
    }
    std::cerr << "scanned " << hits.size() << " classes: " << n_ulrich << " ULRICH, "
              << n_undecided << " UNDECIDED, " << (hits.size() - n_ulrich - n_undecided)
              << " NOT_ULRICH\n";
    return 0;
}

TowerSpec resolve_tower(const CLI::App* cmd, const ParamFlags& pf, const std::string& family,
                        int rank, const std::string& layers_csv) {
    ScrollParams P = resolve_params(cmd, pf);
    bool has_family = cmd->count("--family") > 0;
    bool has_layers = cmd->count("--layers") > 0;
    if (has_family == has_layers)
        throw std::invalid_argument("give exactly one of --family/--rank or --layers");
    if (has_family) {
        if (cmd->count("--rank") == 0)
            throw std::invalid_argument("--family needs --rank");
        if (family == "sporadic") return sporadic_tower(P, rank);
        if (family == "mixed") return mixed_tower(P, rank);
        throw std::invalid_argument("unknown family \"" + family +
                                    "\" (expected sporadic or mixed)");
    }
    std::vector<Constituent> layers;
    std::string token;
    std::istringstream in(layers_csv);
    while (std::getline(in, token, ',')) {
        auto c = parse_constituent(token);
        if (!c) throw std::invalid_argument("unknown constituent \"" + token + "\"");
        layers.push_back(*c);
    }
    return TowerSpec::of(P, std::move(layers));
}

std::string layers_string(const TowerSpec& spec) {
    std::string s;
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        if (i) s += ",";
        s += to_string(spec.layers[i]);
    }
    return s;
}

int run_tower_build(const TowerSpec& spec) {
    TowerClass T = build_tower(spec);
    std::cout << "layers: " << layers_string(spec) << "\n";
    std::cout << "rank = " << T.rank.str() << "\n";
    std::cout << "c1 = " << to_string(T.c1) << "\n";
    std::cout << "c2 = " << to_string(T.c2) << "\n";
    std::cout << "c3 = " << T.c3.str() << "\n";
    std::cout << "slope = " << tower_slope(spec.params, T).str() << "\n";
    std::cout << "chi(End) = " << chi_end(spec).str() << "\n";
    std::cout << "moduli dim = " << moduli_dim(spec).str() << "\n";
    return 0;
}

int run_tower_verify(const TowerSpec& spec) {
    int failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    std::cout << "layers: " << layers_string(spec) << "\n";

    // 1. chi(End) via Todd pairing vs pushforward sums (throws on mismatch)
    bool routes_ok = true;
    Int chie = 0;
    try {
        chie = chi_end(spec);
    } catch (const OracleMismatch&) {
        routes_ok = false;
    }
    report(routes_ok, "chi(End) two independent routes agree" +
                          (routes_ok ? ": " + chie.str() : std::string{}));

    // 2. numerical class independent of constituent order
    TowerClass base = build_tower(spec);
    bool perm_ok = true;
    std::size_t orders = 1;
    std::vector<Constituent> layers = spec.layers;
    if (layers.size() <= 6) {
        std::sort(layers.begin(), layers.end());
        orders = 0;
        do {
            ++orders;
            TowerClass T = build_tower(TowerSpec::of(spec.params, layers));
            perm_ok = perm_ok && T.rank == base.rank && T.c1 == base.c1 && T.c2 == base.c2 &&
                      T.c3 == base.c3;
        } while (std::next_permutation(layers.begin(), layers.end()));
    } else {
        std::reverse(layers.begin(), layers.end());
        TowerClass T = build_tower(TowerSpec::of(spec.params, layers));
        perm_ok = T.rank == base.rank && T.c1 == base.c1 && T.c2 == base.c2 && T.c3 == base.c3;
        orders = 2;
    }
    report(perm_ok, "numerical class is order-invariant (" + std::to_string(orders) +
                        " orders checked)");

    // 3. every constituent individually Ulrich
    bool ulrich_ok = true;
    for (const DivisorClass& D : resolve(spec))
        ulrich_ok = ulrich_ok && is_ulrich_line(spec.params, D).status == UlrichStatus::Ulrich;
    report(ulrich_ok, "every constituent is an Ulrich line bundle");

    // 4. the tower class itself passes the Ulrich vanishing (twists by -j xi)
    bool twist_ok = true;
    for (int j = 1; j <= 3; ++j) {
        CohInterval4 c = tower_twist_coh(spec, Int(-j) * xi_class());
        twist_ok = twist_ok && c.all_exact() && c.all_zero();
    }
    report(twist_ok, "twists by -1xi, -2xi, -3xi have no cohomology");

    // 5. slope sits at the Ulrich value deg + g - 1
    Rat mu = tower_slope(spec.params, base);
    bool slope_ok = mu == Rat(ulrich_slope(spec.params));
    report(slope_ok, "slope equals deg + g - 1 = " + ulrich_slope(spec.params).str());

    if (failures == 0) {
        std::cout << "all checks passed\n";
        return 0;
    }
    std::cout << failures << " check(s) failed\n";
    return 1;
}

int run_report(const std::string& t_range, const std::string& r_range,
               const std::string& format, const std::string& out_path,
               const std::string& claims_csv, bool strict, const std::string& registry_path) {
    GridSpec grid;
    std::tie(grid.t_lo, grid.t_hi) = parse_range(t_range, "--t-range");
    std::tie(grid.r_lo, grid.r_hi) = parse_range(r_range, "--r-range");
    if (format != "tsv" && format != "json")
        throw std::invalid_argument("--format must be tsv or json");

    std::vector<std::string> filter;
    if (!claims_csv.empty()) {
        std::istringstream in(claims_csv);
        std::string token;
        while (std::getline(in, token, ','))
            if (!token.empty()) filter.push_back(token);
    }

    const Registry* reg = &builtin_registry();
    Registry file_reg;
    if (!registry_path.empty()) {
        std::ifstream in(registry_path);
        if (!in) throw std::invalid_argument("cannot open registry file: " + registry_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            file_reg = parse_registry(buf.str());
        } catch (const std::exception& e) {
            throw std::invalid_argument("bad registry file " + registry_path + ": " + e.what());
        }
        reg = &file_reg;
    }

    ReportDocument doc = make_report(*reg, grid, filter);
    std::string text = format == "tsv" ? to_tsv(doc) : to_json(doc);

    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write to " + out_path);
        out << text;
    }

    std::size_t unexpected = unexpected_failures(doc, strict);
    std::cerr << "pass=" << doc.pass << " fail=" << doc.fail << " undecided=" << doc.undecided
              << " (unexpected failures: " << unexpected << ")\n";
    return unexpected > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for Ulrich bundles on 3-fold scrolls"};
    app.require_subcommand(1);

    // coh
    ParamFlags coh_pf;
    ClassFlags coh_cf;
    CLI::App* coh = app.add_subcommand("coh", "cohomology of a line-bundle class");
    add_param_flags(coh, coh_pf);
    add_class_flags(coh, coh_cf);

    // chow
    ParamFlags chow_pf;
    std::vector<std::string> chow_ds;
    CLI::App* chow = app.add_subcommand("chow", "intersection products and scroll invariants");
    add_param_flags(chow, chow_pf);
    chow->add_option("--d", chow_ds, "divisor class x:alpha:beta (repeat up to three times)");

    // chi
    ParamFlags chi_pf;
    ClassFlags chi_cf;
    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic of a line-bundle class");
    add_param_flags(chi, chi_pf);
    add_class_flags(chi, chi_cf);

    // ulrich check | scan
    CLI::App* ulrich = app.add_subcommand("ulrich", "Ulrich classification");
    ulrich->require_subcommand(1);

    ParamFlags uc_pf;
    ClassFlags uc_cf;
    bool uc_verbose = false;
    CLI::App* ucheck = ulrich->add_subcommand("check", "classify a single class");
    add_param_flags(ucheck, uc_pf);
    add_class_flags(ucheck, uc_cf);
    ucheck->add_flag("--verbose", uc_verbose, "print the twelve-entry vanishing certificate");

    ParamFlags us_pf;
    ScanBox us_box;
    bool us_all = false;
    CLI::App* uscan = ulrich->add_subcommand("scan", "classify every class in a box");
    add_param_flags(uscan, us_pf);
    uscan->add_option("--x-min", us_box.x_lo, "lowest tautological coefficient (default -2)");
    uscan->add_option("--x-max", us_box.x_hi, "highest tautological coefficient (default 4)");
    uscan->add_option("--alpha-abs", us_box.alpha_abs, "bound on |alpha| (default 8)");
    uscan->add_option("--beta-abs", us_box.beta_abs, "bound on |beta| (default 8)");
    uscan->add_flag("--all", us_all, "also print NOT_ULRICH rows");
    uscan->add_flag("--unchecked", us_pf.unchecked,
                    "skip the parameter-range validation (boundary exploration)");

    // tower build | verify
    CLI::App* tower = app.add_subcommand("tower", "iterated-extension towers");
    tower->require_subcommand(1);

    ParamFlags tb_pf, tv_pf;
    std::string tb_family, tv_family, tb_layers, tv_layers;
    int tb_rank = 0, tv_rank = 0;
    CLI::App* tbuild = tower->add_subcommand("build", "numerical invariants of a tower");
    add_param_flags(tbuild, tb_pf);
    tbuild->add_option("--family", tb_family, "sporadic | mixed");
    tbuild->add_option("--rank", tb_rank, "tower rank for --family");
    tbuild->add_option("--layers", tb_layers, "explicit constituents, e.g. M1,M2,L2");
    CLI::App* tverify = tower->add_subcommand("verify", "internal consistency checks");
    add_param_flags(tverify, tv_pf);
    tverify->add_option("--family", tv_family, "sporadic | mixed");
    tverify->add_option("--rank", tv_rank, "tower rank for --family");
    tverify->add_option("--layers", tv_layers, "explicit constituents, e.g. M1,M2,L2");

    // report
    std::string rp_t = "1:10", rp_r = "2:12", rp_format = "tsv", rp_out, rp_claims, rp_registry;
    bool rp_strict = false;
    CLI::App* report = app.add_subcommand("report", "evaluate the claim registry over a grid");
    report->add_option("--t-range", rp_t, "t grid as lo:hi (default 1:10)");
    report->add_option("--r-range", rp_r, "r grid as lo:hi (default 2:12)");
    report->add_option("--format", rp_format, "tsv | json (default tsv)");
    report->add_option("--out", rp_out, "output path (default stdout)");
    report->add_option("--claims", rp_claims, "comma-separated claim ids or family prefixes");
    report->add_flag("--strict", rp_strict, "treat documented discrepancies as failures too");
    report->add_option("--registry", rp_registry, "claim manifest to use instead of the builtin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coh->parsed()) return run_coh(coh, coh_pf, coh_cf);
        if (chow->parsed()) return run_chow(chow, chow_pf, chow_ds);
        if (chi->parsed()) return run_chi(chi, chi_pf, chi_cf);
        if (ucheck->parsed()) return run_ulrich_check(ucheck, uc_pf, uc_cf, uc_verbose);
        if (uscan->parsed()) return run_ulrich_scan(uscan, us_pf, us_box, us_all);
        if (tbuild->parsed())
            return run_tower_build(resolve_tower(tbuild, tb_pf, tb_family, tb_rank, tb_layers));
        if (tverify->parsed())
            return run_tower_verify(resolve_tower(tverify, tv_pf, tv_family, tv_rank, tv_layers));
        if (report->parsed())
            return run_report(rp_t, rp_r, rp_format, rp_out, rp_claims, rp_strict, rp_registry);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
