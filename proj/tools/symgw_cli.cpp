// Command-line front end: exact Hurwitz numbers, 2-point invariants of
// [Sym^n(A_r)], orbifold pairings, 3-point generating series, the WDVV
// solver, and the consolidated consistency checks. All output is JSON on
// stdout; errors are machine-readable JSON objects with nonzero status.
// No environment variables, no network; identical inputs give bit-identical
// output.

#include "symgw/check_suites.hpp"
#include "symgw/frobenius_fixture.hpp"
#include "symgw/invariants.hpp"
#include "symgw/wdvv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;
using namespace symgw;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const std::string& type, const std::string& message) {
    emit(json{{"error", {{"type", type}, {"message", message}}}});
    return 1;
}

json series_to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (auto& [e, c] : s.coefficients()) {
        json entry;
        if (e.size() == 1) entry["s"] = e[0];
        else entry["exponents"] = e;
        entry["value"] = c.to_string();
        coeffs.push_back(entry);
    }
    return coeffs;
}

TruncatedSeries series_from_json(const json& arr, int s_order) {
    TruncatedSeries s({"s1"}, {s_order});
    for (auto& entry : arr) {
        int e = entry.at("s").get<int>();
        s.set_coefficient({e}, parse_eq_scalar(entry.at("value").get<std::string>()));
    }
    return s;
}

// --- hurwitz ---------------------------------------------------------------

struct HurwitzArgs {
    std::string lambda, rho, oracle = "both";
    int genus = 0;
};

int run_hurwitz(const HurwitzArgs& args) {
    Partition lambda = Partition::parse(args.lambda);
    Partition rho = Partition::parse(args.rho);
    if (lambda.size() != rho.size())
        throw std::invalid_argument("lambda and rho must partition the same n");
    int n = lambda.size();

    std::optional<Rational> gjv, brute;
    if (args.oracle == "gjv" || args.oracle == "both") {
        if (rho.length() != 1)
            throw std::invalid_argument("the gjv oracle requires rho = (n)");
        gjv = gjv_hurwitz(lambda, args.genus);
    }
    if (args.oracle == "brute" || args.oracle == "both")
        brute = brute_force_hurwitz({lambda, rho, args.genus});
    if (!gjv && !brute) throw std::invalid_argument("unknown oracle: " + args.oracle);

    json out{{"lambda", lambda.to_string()},
             {"rho", rho.to_string()},
             {"genus", args.genus},
             {"n", n}};
    if (gjv && brute) {
        bool agree = *gjv == *brute;
        out["agreement"] = agree;
        out["value"] = gjv->get_str();
        if (!agree) {
            out["gjv"] = gjv->get_str();
            out["brute"] = brute->get_str();
            out["error"] = json{{"type", "oracle_mismatch"},
                                {"message", "gjv and convolution oracles disagree"}};
            emit(out);
            return 1;
        }
    } else {
        out["value"] = (gjv ? *gjv : *brute).get_str();
    }
    emit(out);
    return 0;
}

// --- invariant ---------------------------------------------------------------

struct InvariantArgs {
    int n = 0, r = 1, a = 0;
    std::string mu1, mu2, beta, formula = "both";
};

json query_to_json(const InvariantQuery& q) {
    return json{{"n", q.n},   {"r", q.r},          {"mu1", q.mu1.to_string()},
                {"mu2", q.mu2.to_string()}, {"a", q.a}, {"beta", q.beta.to_string()}};
}

json t_sum_multiplicity(const EqScalar& v) {
    if (v.is_zero()) return nullptr;
    int m = split_off_t_sum(v.num()).multiplicity - split_off_t_sum(v.den()).multiplicity;
    return m;
}

int run_invariant(const InvariantArgs& args) {
    InvariantQuery q{args.n, args.r, WeightedPartition::parse(args.mu1),
                     WeightedPartition::parse(args.mu2), args.a,
                     CurveClass::parse(args.beta, args.r)};
    json out{{"query", query_to_json(q)}};
    if (args.formula == "theorem") {
        EqScalar v = two_point_theorem(q);
        out["value"] = v.to_string();
        out["t_sum_multiplicity"] = t_sum_multiplicity(v);
    } else if (args.formula == "corollary") {
        EqScalar v = two_point_corollary(q);
        out["value"] = v.to_string();
        out["t_sum_multiplicity"] = t_sum_multiplicity(v);
    } else if (args.formula == "both") {
        AuditReport rep = theorem_corollary_audit(q);
        out["value"] = rep.theorem_value.to_string();
        out["t_sum_multiplicity"] = t_sum_multiplicity(rep.theorem_value);
        out["audit"] = rep.equal ? "EQUAL" : "DISCREPANT";
        if (!rep.equal) {
            out["theorem"] = rep.theorem_value.to_string();
            out["corollary"] = rep.corollary_value.to_string();
        }
    } else if (args.formula == "disconnected") {
        EqScalar v = two_point_disconnected(q.mu1, q.mu2, q.a, q.beta, q.r);
        out["value"] = v.to_string();
        out["t_sum_multiplicity"] = t_sum_multiplicity(v);
    } else {
        throw std::invalid_argument("unknown formula: " + args.formula);
    }
    emit(out);
    return 0;
}

// --- pairing -----------------------------------------------------------------

int run_pairing(int n, int r, const std::string& w1s, const std::string& w2s) {
    WeightedPartition w1 = WeightedPartition::parse(w1s);
    WeightedPartition w2 = WeightedPartition::parse(w2s);
    if (w1.size() != n || w2.size() != n)
        throw std::invalid_argument("weighted partitions must have size n");
    EqScalar v = orb_pairing(w1, w2, ArSurface::get(r));
    emit(json{{"n", n},
              {"r", r},
              {"w1", w1.to_string()},
              {"w2", w2.to_string()},
              {"value", v.to_string()}});
    return 0;
}

// --- series ------------------------------------------------------------------

struct SeriesArgs {
    int n = 0, r = 1, u_order = 2, s_order = 2;
    std::string mu1, mu2, theta = "two";
};

int run_series(const SeriesArgs& args) {
    OrbClass a1(WeightedPartition::parse(args.mu1));
    OrbClass a2(WeightedPartition::parse(args.mu2));
    if (a1.n != args.n || a2.n != args.n)
        throw std::invalid_argument("insertions must have size n");

    DivisorInsertion theta;
    int k = 0;
    if (args.theta == "identity") theta = DivisorInsertion::identity;
    else if (args.theta == "two") theta = DivisorInsertion::two_sector;
    else if (args.theta.size() >= 2 && args.theta[0] == 'D') {
        theta = DivisorInsertion::d_k;
        k = std::stoi(args.theta.substr(1));
    } else {
        throw std::invalid_argument("unknown theta: " + args.theta +
                                    " (expected identity, two, or D<k>)");
    }

    ThreePointSeries s = three_point_series(a1, theta, k, a2, args.u_order,
                                            std::vector<int>(args.r, args.s_order), args.r);
    json coeffs = json::array();
    for (auto& [e, c] : s.series.coefficients()) {
        std::vector<int> beta(e.begin() + 1, e.end());
        coeffs.push_back(json{{"u", e[0]}, {"beta", beta}, {"value", c.to_string()}});
    }
    emit(json{{"n", args.n},
              {"r", args.r},
              {"mu1", a1.terms.begin()->first.to_string()},
              {"mu2", a2.terms.begin()->first.to_string()},
              {"theta", args.theta},
              {"u_order", args.u_order},
              {"s_order", args.s_order},
              {"partial", s.partial},
              {"coefficients", coeffs}});
    return 0;
}

// --- wdvv --------------------------------------------------------------------

struct WdvvArgs {
    std::string input;
    std::string emit_seed;
    int s_order = 4;
    bool synthetic = false;
    bool verify = false;
};

json seed_to_json(const wdvv::SeedInput& seed) {
    const auto& names = wdvv::Sym3Basis::names();
    json pairs = json::array();
    for (int i = 0; i < wdvv::Sym3Basis::size; ++i)
        for (int j = i; j < wdvv::Sym3Basis::size; ++j)
            if (!seed.gram[i][j].is_zero())
                pairs.push_back(json{{"pair", {names[i], names[j]}},
                                     {"series", series_to_json(seed.gram[i][j])}});
    json entries = json::array();
    for (auto& [key, series] : seed.entries)
        entries.push_back(json{{"triple", {names[key[0]], names[key[1]], names[key[2]]}},
                               {"series", series_to_json(series)}});
    return json{{"s_order", seed.s_order}, {"pairs", pairs}, {"entries", entries}};
}

wdvv::SeedInput seed_from_json(const json& j, int s_order) {
    wdvv::SeedInput seed;
    seed.s_order = j.contains("s_order") ? j.at("s_order").get<int>() : s_order;
    auto zero = TruncatedSeries({"s1"}, {seed.s_order});
    seed.gram.assign(wdvv::Sym3Basis::size,
                     std::vector<TruncatedSeries>(wdvv::Sym3Basis::size, zero));
    for (auto& p : j.at("pairs")) {
        int a = wdvv::Sym3Basis::index_of(p.at("pair").at(0).get<std::string>());
        int b = wdvv::Sym3Basis::index_of(p.at("pair").at(1).get<std::string>());
        TruncatedSeries s = series_from_json(p.at("series"), seed.s_order);
        seed.gram[a][b] = s;
        seed.gram[b][a] = s;
    }
    for (auto& e : j.at("entries")) {
        auto t = e.at("triple");
        wdvv::TripleKey key = wdvv::make_triple(
            wdvv::Sym3Basis::index_of(t.at(0).get<std::string>()),
            wdvv::Sym3Basis::index_of(t.at(1).get<std::string>()),
            wdvv::Sym3Basis::index_of(t.at(2).get<std::string>()));
        seed.entries[key] = series_from_json(e.at("series"), seed.s_order);
    }
    return seed;
}

int run_wdvv(const WdvvArgs& args) {
    wdvv::SeedInput seed;
    if (args.synthetic) {
        seed = wdvv::make_synthetic_fixture(args.s_order).seed;
    } else if (!args.input.empty()) {
        std::ifstream in(args.input);
        if (!in) throw std::invalid_argument("cannot open input file: " + args.input);
        json j;
        in >> j;
        seed = seed_from_json(j, args.s_order);
    } else {
        throw std::invalid_argument("wdvv requires --input FILE or --synthetic");
    }

    if (!args.emit_seed.empty()) {
        std::ofstream out(args.emit_seed);
        if (!out) throw std::invalid_argument("cannot write: " + args.emit_seed);
        out << seed_to_json(seed).dump(2) << "\n";
    }

    wdvv::WdvvSystem sys(seed);
    wdvv::ThreePtTable table = wdvv::seed_table(sys, seed);
    wdvv::solve_procedure(sys, table);

    const auto& names = wdvv::Sym3Basis::names();
    json entries = json::array();
    for (auto& [key, entry] : table.all()) {
        const char* status = entry.status == wdvv::EntryStatus::known_input ? "known-input"
                             : entry.status == wdvv::EntryStatus::derived   ? "derived"
                                                                            : "structurally-zero";
        entries.push_back(json{{"triple", {names[key[0]], names[key[1]], names[key[2]]}},
                               {"status", status},
                               {"series", series_to_json(entry.series)}});
    }
    json out{{"s_order", seed.s_order}, {"entries", entries}};
    if (args.verify) {
        auto violations = wdvv::verify_all_relations(sys, table);
        out["verified"] = violations.empty();
        json vjson = json::array();
        for (auto& v : violations) vjson.push_back(v.to_string());
        out["violations"] = vjson;
        emit(out);
        return violations.empty() ? 0 : 1;
    }
    emit(out);
    return 0;
}

// --- check ---------------------------------------------------------------------

int run_check(const std::string& suite) {
    json suites = json::array();
    bool all_pass = true;
    for (auto& result : check::run_suites(suite)) {
        json assertions = json::array();
        for (auto& a : result.assertions)
            assertions.push_back(json{{"id", a.id},
                                      {"expected", a.expected},
                                      {"got", a.got},
                                      {"pass", a.pass}});
        suites.push_back(json{{"suite", result.name},
                              {"pass", result.pass},
                              {"assertions", assertions}});
        all_pass = all_pass && result.pass;
    }
    emit(json{{"pass", all_pass}, {"suites", suites}});
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact connected Gromov-Witten invariants of symmetric product stacks of A_r"};
    app.require_subcommand(1);

    HurwitzArgs hargs;
    auto* hur = app.add_subcommand("hurwitz", "double Hurwitz numbers H^g_{lambda,rho}");
    hur->add_option("--lambda", hargs.lambda, "partition, e.g. 2,1")->required();
    hur->add_option("--rho", hargs.rho, "partition, e.g. 3")->required();
    hur->add_option("--genus", hargs.genus, "genus g >= 0")->required();
    hur->add_option("--oracle", hargs.oracle, "gjv | brute | both (default both)");

    InvariantArgs iargs;
    auto* inv = app.add_subcommand("invariant", "2-point extended invariants of nonzero degree");
    inv->add_option("--n", iargs.n)->required();
    inv->add_option("--r", iargs.r)->required();
    inv->add_option("--mu1", iargs.mu1, "weighted partition, e.g. \"2(E1),1(1)\"")->required();
    inv->add_option("--mu2", iargs.mu2)->required();
    inv->add_option("--a", iargs.a, "extended degree (simple markings)")->required();
    inv->add_option("--beta", iargs.beta, "curve class d1,...,dr")->required();
    inv->add_option("--formula", iargs.formula, "theorem | corollary | both | disconnected");

    int pn = 0, pr = 1;
    std::string pw1, pw2;
    auto* pair = app.add_subcommand("pairing", "orbifold Poincare pairing of basis classes");
    pair->add_option("--n", pn)->required();
    pair->add_option("--r", pr)->required();
    pair->add_option("--w1", pw1)->required();
    pair->add_option("--w2", pw2)->required();

    SeriesArgs sargs;
    auto* ser = app.add_subcommand("series", "3-point generating function with a divisor insertion");
    ser->add_option("--n", sargs.n)->required();
    ser->add_option("--r", sargs.r)->required();
    ser->add_option("--mu1", sargs.mu1)->required();
    ser->add_option("--mu2", sargs.mu2)->required();
    ser->add_option("--theta", sargs.theta, "identity | two | D<k>");
    ser->add_option("--u-order", sargs.u_order);
    ser->add_option("--s-order", sargs.s_order);

    WdvvArgs wargs;
    auto* wd = app.add_subcommand("wdvv", "seed, solve and verify the Sym^3(A_1) 3-point table");
    wd->add_option("--input", wargs.input, "known.json with pairs and step-(1) entries");
    wd->add_flag("--synthetic", wargs.synthetic, "use the built-in consistent fixture");
    wd->add_option("--s-order", wargs.s_order, "series truncation order (default 4)");
    wd->add_flag("--verify", wargs.verify, "check every WDVV relation after solving");
    wd->add_option("--emit-seed", wargs.emit_seed, "write the seed back out as known.json");

    std::string suite = "all";
    auto* chk = app.add_subcommand("check", "consolidated consistency suites");
    chk->add_option("--suite", suite, "all | hurwitz | cartan | theorem | wdvv | pairing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        return emit_error("usage", e.what());
    }

    try {
        if (hur->parsed()) return run_hurwitz(hargs);
        if (inv->parsed()) return run_invariant(iargs);
        if (pair->parsed()) return run_pairing(pn, pr, pw1, pw2);
        if (ser->parsed()) return run_series(sargs);
        if (wd->parsed()) return run_wdvv(wargs);
        if (chk->parsed()) return run_check(suite);
        return emit_error("usage", "unknown subcommand");
    } catch (const truncation_error& e) {
        return emit_error("truncation_error", e.what());
    } catch (const wdvv::pivot_error& e) {
        return emit_error("pivot_error", e.what());
    } catch (const wdvv::out_of_order_error& e) {
        return emit_error("out_of_order_error", e.what());
    } catch (const wdvv::seed_error& e) {
        return emit_error("seed_error", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("invalid_argument", e.what());
    } catch (const std::domain_error& e) {
        return emit_error("domain_error", e.what());
    } catch (const std::exception& e) {
        return emit_error("runtime_error", e.what());
    }
}
