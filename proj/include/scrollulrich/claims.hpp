#pragma once

#include <scrollulrich/classes.hpp>
#include <scrollulrich/formula.hpp>
#include <scrollulrich/parallel.hpp>
#include <scrollulrich/tower.hpp>
#include <scrollulrich/ulrich.hpp>

#include <json.hpp>

#include <scrollulrich/detail/default_registry.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scrollulrich {

enum class ClaimStatus { Pass, Fail, Undecided };

inline std::string_view to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "PASS";
        case ClaimStatus::Fail: return "FAIL";
        case ClaimStatus::Undecided: return "UNDECIDED";
    }
    return "?";
}

struct ClaimDomain {
    int t_min = 1;
    std::optional<int> t_max;
    std::optional<int> r_min;  // presence makes the claim r-dependent
    std::optional<int> r_min_odd;
    std::optional<int> r_min_even;

    bool uses_r() const { return r_min.has_value(); }
    bool admits_t(int t) const { return t >= t_min && (!t_max || t <= *t_max); }
    bool admits_r(int r) const {
        if (!r_min || r < *r_min) return false;
        if (r % 2 == 1 && r_min_odd && r < *r_min_odd) return false;
        if (r % 2 == 0 && r_min_even && r < *r_min_even) return false;
        return true;
    }
};

struct PolyTriple {
    std::string first, second, third;  // divisor: x/alpha/beta; codim2: p/q/s
    bool empty() const { return first.empty(); }
};

struct ExpectedSpec {
    enum class Kind { IntPoly, Divisor, Codim2, Engine, Positive, Set };
    Kind kind = Kind::Engine;
    // IntPoly branches ("all" or parity-split)
    std::string all, odd, even;
    // Divisor/Codim2 branches
    PolyTriple tri_all, tri_odd, tri_even;
    // Set
    std::vector<std::string> set_value;
};

struct EvaluatorSpec {
    std::string name;
    std::vector<std::string> base;  // constituent labels
    std::string from;               // constituent label
    std::string family;             // "SPORADIC" | "MIXED"
};

struct ClaimRecord {
    std::string id;
    std::string ref;
    EvaluatorSpec evaluator;
    ClaimDomain domain;
    ExpectedSpec expected;
};

struct Registry {
    std::vector<ClaimRecord> claims;

    const ClaimRecord* find(std::string_view id) const {
        for (const auto& c : claims)
            if (c.id == id) return &c;
        return nullptr;
    }
};

inline std::string claim_family(const std::string& id) {
    auto slash = id.find('/');
    return slash == std::string::npos ? id : id.substr(0, slash);
}

// --- manifest parsing --------------------------------------------------------

namespace detail {

inline PolyTriple parse_triple(const nlohmann::json& j, const char* a, const char* b,
                               const char* c) {
    return {j.at(a).get<std::string>(), j.at(b).get<std::string>(), j.at(c).get<std::string>()};
}

inline ExpectedSpec parse_expected(const nlohmann::json& j) {
    ExpectedSpec e;
    std::string kind = j.at("kind").get<std::string>();
    auto branch = [&](const char* name) {
        return j.contains(name) ? j.at(name).get<std::string>() : std::string{};
    };
    if (kind == "int") {
        e.kind = ExpectedSpec::Kind::IntPoly;
        e.all = branch("all");
        e.odd = branch("odd");
        e.even = branch("even");
        if (e.all.empty() && (e.odd.empty() || e.even.empty()))
            throw std::runtime_error("int claim needs 'all' or both parity branches");
    } else if (kind == "divisor" || kind == "codim2") {
        e.kind = kind == "divisor" ? ExpectedSpec::Kind::Divisor : ExpectedSpec::Kind::Codim2;
        const char *f1 = kind == "divisor" ? "x" : "p",
                   *f2 = kind == "divisor" ? "alpha" : "q",
                   *f3 = kind == "divisor" ? "beta" : "s";
        if (j.contains("all")) e.tri_all = parse_triple(j.at("all"), f1, f2, f3);
        if (j.contains("odd")) e.tri_odd = parse_triple(j.at("odd"), f1, f2, f3);
        if (j.contains("even")) e.tri_even = parse_triple(j.at("even"), f1, f2, f3);
        if (e.tri_all.empty() && (e.tri_odd.empty() || e.tri_even.empty()))
            throw std::runtime_error(kind + " claim needs 'all' or both parity branches");
    } else if (kind == "engine") {
        e.kind = ExpectedSpec::Kind::Engine;
    } else if (kind == "positive") {
        e.kind = ExpectedSpec::Kind::Positive;
    } else if (kind == "set") {
        e.kind = ExpectedSpec::Kind::Set;
        e.set_value = j.at("value").get<std::vector<std::string>>();
    } else {
        throw std::runtime_error("unknown expected kind: " + kind);
    }
    return e;
}

}  // namespace detail

inline Registry parse_registry(std::string_view json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    if (doc.at("format").get<int>() != 1)
        throw std::runtime_error("unsupported registry format version");
    Registry reg;
    for (const auto& jc : doc.at("claims")) {
        ClaimRecord c;
        c.id = jc.at("id").get<std::string>();
        c.ref = jc.value("ref", std::string{});
        const auto& je = jc.at("evaluator");
        c.evaluator.name = je.at("name").get<std::string>();
        if (je.contains("base")) c.evaluator.base = je.at("base").get<std::vector<std::string>>();
        c.evaluator.from = je.value("from", std::string{});
        c.evaluator.family = je.value("family", std::string{});
        if (jc.contains("domain")) {
            const auto& jd = jc.at("domain");
            c.domain.t_min = jd.value("t_min", 1);
            if (jd.contains("t_max")) c.domain.t_max = jd.at("t_max").get<int>();
            if (jd.contains("r_min")) c.domain.r_min = jd.at("r_min").get<int>();
            if (jd.contains("r_min_odd")) c.domain.r_min_odd = jd.at("r_min_odd").get<int>();
            if (jd.contains("r_min_even")) c.domain.r_min_even = jd.at("r_min_even").get<int>();
        }
        c.expected = detail::parse_expected(jc.at("expected"));
        reg.claims.push_back(std::move(c));
    }
    return reg;
}

inline const Registry& builtin_registry() {
    static const Registry reg = parse_registry(detail::kBuiltinRegistryJson);
    return reg;
}

// --- evaluation ----------------------------------------------------------------

struct ClaimResult {
    std::string claim_id;
    int t = 0;
    std::optional<int> r;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::Undecided;
};

namespace detail {

struct Computed {
    enum class Kind { Bound, Divisor, Codim2, Set, EnginePair, Rational } kind{};
    CohBound bound{};            // Bound: exact or interval integer
    DivisorClass divisor{};
    Codim2Class codim2{};
    std::vector<std::string> set;
    bool set_decided = true;
    std::string engine_expected, engine_computed;
    bool engine_pass = false;
    Rat rational{};
};

inline std::vector<Constituent> parse_layers(const std::vector<std::string>& labels) {
    std::vector<Constituent> out;
    for (const auto& s : labels) {
        auto c = parse_constituent(s);
        if (!c) throw std::runtime_error("unknown constituent label in registry: " + s);
        out.push_back(*c);
    }
    return out;
}

inline TowerSpec family_tower(const ScrollParams& P, const std::string& family, int r) {
    if (family == "SPORADIC") return sporadic_tower(P, r);
    if (family == "MIXED") return mixed_tower(P, r);
    throw std::runtime_error("unknown tower family in registry: " + family);
}

inline std::string scan_class_name(const ScrollParams& P, const DivisorClass& D) {
    if (D == ulrich_L1()) return "L1";
    if (D == ulrich_L2(P)) return "L2";
    if (P.is_sporadic()) {
        if (D == sporadic_M1(P)) return "M1";
        if (D == sporadic_M2(P)) return "M2";
    }
    return to_string(D);
}

inline Computed run_evaluator(const ClaimRecord& claim, int t, std::optional<int> r) {
    const ScrollParams P = ScrollParams::sporadic(t);
    const EvaluatorSpec& ev = claim.evaluator;
    Computed out;

    auto tower_for = [&]() { return family_tower(P, ev.family, r.value()); };

    if (ev.name == "ext1_pair") {
        auto from = parse_constituent(ev.from);
        if (!from) throw std::runtime_error("ext1_pair: bad 'from' label");
        TowerSpec base = TowerSpec::of(P, parse_layers(ev.base));
        out.kind = Computed::Kind::Bound;
        out.bound = ext1_dim(*from, base);
    } else if (ev.name == "moduli_dim") {
        TowerSpec spec = TowerSpec::of(P, parse_layers(ev.base));
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(moduli_dim(spec));
    } else if (ev.name == "special_c1") {
        TowerSpec spec = TowerSpec::of(P, parse_layers(ev.base));
        DivisorClass expected = canonical_class(P) + Int(4) * xi_class();
        DivisorClass computed = build_tower(spec).c1;
        out.kind = Computed::Kind::EnginePair;
        out.engine_expected = to_string(expected);
        out.engine_computed = to_string(computed);
        out.engine_pass = expected == computed;
    } else if (ev.name == "tower_c1") {
        out.kind = Computed::Kind::Divisor;
        out.divisor = build_tower(tower_for()).c1;
    } else if (ev.name == "tower_c2") {
        out.kind = Computed::Kind::Codim2;
        out.codim2 = build_tower(tower_for()).c2;
    } else if (ev.name == "tower_c3") {
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(build_tower(tower_for()).c3);
    } else if (ev.name == "chain_ext1") {
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(sporadic_chain_ext1(P, r.value()));
    } else if (ev.name == "chain_twist_chi") {
        DivisorClass next = constituent_class(P, sporadic_slot(r.value() + 1));
        Int chi = 0;
        for (const DivisorClass& D : resolve(tower_for()))
            chi += chi_scroll_line(P, D - next);
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(chi);
    } else if (ev.name == "cochain_twist_chi") {
        DivisorClass cur = constituent_class(P, sporadic_slot(r.value()));
        Int chi = 0;
        for (const DivisorClass& D : resolve(tower_for()))
            chi += chi_scroll_line(P, cur - D);
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(chi);
    } else if (ev.name == "chi_end_family") {
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(chi_end(tower_for()));
    } else if (ev.name == "moduli_dim_family") {
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(moduli_dim(tower_for()));
    } else if (ev.name == "ineq_lhs") {
        out.kind = Computed::Kind::Bound;
        out.bound = CohBound::exact(sporadic_chain_inequality(P, r.value()).lhs);
    } else if (ev.name == "tower_slope") {
        Rat mu = tower_slope(P, build_tower(tower_for()));
        if (is_integral(mu)) {
            out.kind = Computed::Kind::Bound;
            out.bound = CohBound::exact(boost::multiprecision::numerator(mu));
        } else {
            out.kind = Computed::Kind::Rational;
            out.rational = mu;
        }
    } else if (ev.name == "ulrich_scan_names") {
        out.kind = Computed::Kind::Set;
        for (const ScanHit& hit : ulrich_scan(P)) {
            if (hit.verdict.status == UlrichStatus::Ulrich)
                out.set.push_back(scan_class_name(P, hit.cls));
            else if (hit.verdict.status == UlrichStatus::Undecided)
                out.set_decided = false;
        }
        std::sort(out.set.begin(), out.set.end());
    } else {
        throw std::runtime_error("unknown evaluator in registry: " + ev.name);
    }
    return out;
}

inline std::string pick_branch(const std::string& all, const std::string& odd,
                               const std::string& even, std::optional<int> r) {
    if (!all.empty()) return all;
    if (!r) throw std::runtime_error("parity-branched formula needs r");
    return (*r % 2 == 1) ? odd : even;
}

inline const PolyTriple& pick_branch(const PolyTriple& all, const PolyTriple& odd,
                                     const PolyTriple& even, std::optional<int> r) {
    if (!all.empty()) return all;
    if (!r) throw std::runtime_error("parity-branched formula needs r");
    return (*r % 2 == 1) ? odd : even;
}

}  // namespace detail

inline ClaimResult evaluate_claim_cell(const ClaimRecord& claim, int t, std::optional<int> r) {
    ClaimResult res;
    res.claim_id = claim.id;
    res.t = t;
    res.r = r;

    detail::Computed got = detail::run_evaluator(claim, t, r);
    const ExpectedSpec& exp = claim.expected;

    switch (exp.kind) {
        case ExpectedSpec::Kind::IntPoly: {
            Int want = eval_int_formula(detail::pick_branch(exp.all, exp.odd, exp.even, r), t, r);
            res.expected = want.str();
            if (got.kind == detail::Computed::Kind::Rational) {
                res.computed = got.rational.str();
                res.status = ClaimStatus::Fail;
                break;
            }
            const CohBound& b = got.bound;
            res.computed = to_string(b);
            if (b.is_exact())
                res.status = b.lo == want ? ClaimStatus::Pass : ClaimStatus::Fail;
            else if (want < b.lo || want > b.hi)
                res.status = ClaimStatus::Fail;  // interval excludes the claimed value
            else
                res.status = ClaimStatus::Undecided;
            break;
        }
        case ExpectedSpec::Kind::Divisor: {
            const PolyTriple& tri =
                detail::pick_branch(exp.tri_all, exp.tri_odd, exp.tri_even, r);
            DivisorClass want{eval_int_formula(tri.first, t, r),
                              {eval_int_formula(tri.second, t, r),
                               eval_int_formula(tri.third, t, r)}};
            res.expected = to_string(want);
            res.computed = to_string(got.divisor);
            res.status = want == got.divisor ? ClaimStatus::Pass : ClaimStatus::Fail;
            break;
        }
        case ExpectedSpec::Kind::Codim2: {
            const PolyTriple& tri =
                detail::pick_branch(exp.tri_all, exp.tri_odd, exp.tri_even, r);
            Codim2Class want{eval_int_formula(tri.first, t, r),
                             eval_int_formula(tri.second, t, r),
                             eval_int_formula(tri.third, t, r)};
            res.expected = to_string(want);
            res.computed = to_string(got.codim2);
            res.status = want == got.codim2 ? ClaimStatus::Pass : ClaimStatus::Fail;
            break;
        }
        case ExpectedSpec::Kind::Engine: {
            res.expected = got.engine_expected;
            res.computed = got.engine_computed;
            res.status = got.engine_pass ? ClaimStatus::Pass : ClaimStatus::Fail;
            break;
        }
        case ExpectedSpec::Kind::Positive: {
            res.expected = ">0";
            res.computed = to_string(got.bound);
            res.status = got.bound.lo > 0
                             ? ClaimStatus::Pass
                             : (got.bound.hi > 0 ? ClaimStatus::Undecided : ClaimStatus::Fail);
            break;
        }
        case ExpectedSpec::Kind::Set: {
            std::vector<std::string> want = exp.set_value;
            std::sort(want.begin(), want.end());
            auto join = [](const std::vector<std::string>& v) {
                std::string s = "{";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) s += ",";
                    s += v[i];
                }
                return s + "}";
            };
            res.expected = join(want);
            res.computed = join(got.set);
            if (!got.set_decided) {
                res.computed += " (+undecided cells)";
                res.status = ClaimStatus::Undecided;
            } else {
                res.status = want == got.set ? ClaimStatus::Pass : ClaimStatus::Fail;
            }
            break;
        }
    }
    return res;
}

struct GridSpec {
    int t_lo = 1, t_hi = 10;
    int r_lo = 2, r_hi = 12;
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline bool claim_matches_filter(const std::string& id, const std::vector<std::string>& filter) {
    if (filter.empty()) return true;
    for (const auto& f : filter)
        if (id == f || claim_family(id) == f) return true;
    return false;
}

// Evaluate every registered claim over the grid; rows sorted by (id, t, r).
// Throws std::invalid_argument if an explicit filter entry matches nothing.
inline std::vector<ClaimResult> verify_claims(const Registry& reg, const GridSpec& grid,
                                              const std::vector<std::string>& filter = {}) {
    for (const auto& f : filter) {
        bool known = false;
        for (const auto& c : reg.claims)
            if (c.id == f || claim_family(c.id) == f) {
                known = true;
                break;
            }
        if (!known) throw std::invalid_argument("unknown claim id: " + f);
    }

    struct Cell {
        const ClaimRecord* claim;
        int t;
        std::optional<int> r;
    };
    std::vector<Cell> cells;
    for (const ClaimRecord& claim : reg.claims) {
        if (!claim_matches_filter(claim.id, filter)) continue;
        for (int t = grid.t_lo; t <= grid.t_hi; ++t) {
            if (!claim.domain.admits_t(t)) continue;
            if (claim.domain.uses_r()) {
                for (int r = grid.r_lo; r <= grid.r_hi; ++r)
                    if (claim.domain.admits_r(r)) cells.push_back({&claim, t, r});
            } else {
                cells.push_back({&claim, t, std::nullopt});
            }
        }
    }

    std::vector<ClaimResult> results(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        results[i] = evaluate_claim_cell(*cells[i].claim, cells[i].t, cells[i].r);
    });

    std::sort(results.begin(), results.end(), [](const ClaimResult& a, const ClaimResult& b) {
        if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
        if (a.t != b.t) return a.t < b.t;
        return a.r.value_or(-1) < b.r.value_or(-1);
    });
    return results;
}

}  // namespace scrollulrich
