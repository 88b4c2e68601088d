// Command-line verification harness: runs the library's checks and prints
// auditable text or JSON reports.  Exit codes: 0 = all asserted identities
// pass, 1 = a verification failed, 2 = usage or parse error.
#include <CLI11.hpp>
#include <json.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>
#include "pdg/klr.hpp"
#include "pdg/nilhecke.hpp"
#include "pdg/oring.hpp"
#include "pdg/pcomplex.hpp"
#include "pdg/uqgroup.hpp"

using namespace pdg;
using nlohmann::json;

namespace {

struct Options {
    int p = 3;
    int n = 2;
    int a = 1;
    bool a_set = false;
    std::string params; // preset name or path
    std::string quiver; // preset name or path
    std::string window; // "LO:HI"
    std::string format = "text";
    std::string input;  // input file (cohomology)
    std::string seq;    // comma-separated vertex names (klr symbol)
    int jobs = 1;       // parallelism hint; the library is single-threaded
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_window(const std::string& w, int def_lo, int def_hi) {
    if (w.empty()) return {def_lo, def_hi};
    auto colon = w.find(':');
    if (colon == std::string::npos) throw UsageError("--window expects LO:HI");
    try {
        int lo = std::stoi(w.substr(0, colon));
        int hi = std::stoi(w.substr(colon + 1));
        if (lo > hi) throw UsageError("--window expects LO <= HI");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("--window expects integer bounds LO:HI");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Quiver load_quiver(const Options& opt) {
    if (opt.quiver.empty() || opt.quiver == "A2") return Quiver::A2();
    if (opt.quiver == "A1xA1") return Quiver::A1xA1();
    return quiver_from_json(read_file(opt.quiver));
}

int vertex_index(const Quiver& q, const std::string& name) {
    for (int i = 0; i < q.size(); ++i)
        if (q.names[i] == name) return i;
    throw UsageError("unknown vertex name: " + name);
}

// Params file mirrors DiffParams: {"p": int, "a": {"i": 1, ...},
// "r": [["i","j",1], ...], "u": [["i","k",0], ...]} with vertex names as keys.
DiffParams load_params(const Options& opt, const Quiver& q) {
    if (opt.params.empty() || opt.params == "d_plus") return DiffParams::d_plus(q, opt.p);
    if (opt.params == "d_minus") return DiffParams::d_minus(q, opt.p);
    json j;
    try {
        j = json::parse(read_file(opt.params));
    } catch (const json::exception& e) {
        throw UsageError(std::string("params file: ") + e.what());
    }
    DiffParams dp;
    dp.p = j.value("p", opt.p);
    for (auto& [name, val] : j.at("a").items())
        dp.a[vertex_index(q, name)] = val.get<int>();
    for (const char* field : {"r", "u"}) {
        if (!j.contains(field)) continue;
        for (auto& entry : j.at(field)) {
            int i = vertex_index(q, entry.at(0).get<std::string>());
            int k = vertex_index(q, entry.at(1).get<std::string>());
            auto& slot = (field[0] == 'r') ? dp.r : dp.u;
            slot[{i, k}] = entry.at(2).get<int>();
        }
    }
    for (int i = 0; i < q.size(); ++i)
        if (!dp.a.count(i)) throw UsageError("params file: missing a for vertex " + q.names[i]);
    return dp;
}

std::vector<int> parse_seq(const Options& opt, const Quiver& q) {
    if (opt.seq.empty()) throw UsageError("klr symbol requires --seq v1,v2,...");
    std::vector<int> out;
    std::stringstream ss(opt.seq);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(vertex_index(q, tok));
    if (out.empty() || out.size() > 3)
        throw UsageError("--seq expects between 1 and 3 vertices");
    return out;
}

json symbol_json(const SymbolResult& s, int lo, int hi) {
    json j;
    j["value"] = json::parse(oring_to_json(s.value));
    j["display"] = s.value.str();
    j["verified"] = s.verified;
    j["window"] = {lo, hi};
    return j;
}

// Every command fills a JSON report and a pass/fail verdict; text mode
// renders the same content line by line.
struct Report {
    json body;
    std::vector<std::string> lines;
    bool pass = true;

    void line(const std::string& s) { lines.push_back(s); }
    void emit(const std::string& format) const {
        if (format == "json") {
            json out = body;
            out["pass"] = pass;
            std::cout << out.dump(2) << "\n";
        } else {
            for (auto& s : lines) std::cout << s << "\n";
            std::cout << (pass ? "PASS" : "FAIL") << "\n";
        }
    }
};

json dims_json(const std::map<int, int>& dims) {
    json j = json::object();
    for (auto& [deg, d] : dims) j[std::to_string(deg)] = d;
    return j;
}

std::string dims_str(const std::map<int, int>& dims) {
    std::ostringstream ss;
    for (auto& [j, d] : dims) ss << " " << j << ":" << d;
    return ss.str();
}

Report run_cohomology(const Options& opt) {
    if (opt.input.empty()) throw UsageError("cohomology requires --input FILE");
    PComplex u;
    try {
        u = pcomplex_from_json(read_file(opt.input));
    } catch (const json::exception& e) {
        throw UsageError(std::string("complex file: ") + e.what());
    }
    Report rep;
    bool nilp = u.check_pnilpotent();
    rep.body["p"] = u.p;
    rep.body["window"] = {u.lo, u.hi};
    rep.body["p_nilpotent"] = nilp;
    rep.line("p = " + std::to_string(u.p) + ", window [" + std::to_string(u.lo) + ", " +
             std::to_string(u.hi) + "]");
    rep.line(std::string("d^p = 0: ") + (nilp ? "yes" : "NO"));
    if (!nilp) {
        rep.pass = false;
        return rep;
    }
    Decomposition dec = u.decompose();
    auto blocks = json::array();
    std::ostringstream bs;
    for (auto& b : dec.blocks) {
        blocks.push_back({{"len", b.len},
                          {"start", b.start},
                          {"mult", b.mult},
                          {"truncated", b.truncated}});
        bs << " " << b.mult << "x(len " << b.len << ", start " << b.start << ")"
           << (b.truncated ? "T" : "");
    }
    rep.body["decomposition"] = blocks;
    rep.line("decomposition:" + bs.str());
    json slash = json::array(), backslash = json::array(), mayer = json::array();
    for (int k = 0; k <= u.p - 2; ++k) {
        auto h = u.slash(k);
        slash.push_back(dims_json(h));
        rep.line("H_slash[" + std::to_string(k) + "]:" + dims_str(h));
    }
    for (int k = 0; k <= u.p - 1; ++k) {
        auto h = u.backslash(k);
        backslash.push_back(dims_json(h));
        rep.line("H_backslash[" + std::to_string(k) + "]:" + dims_str(h));
    }
    for (int k = 1; k <= u.p - 1; ++k) {
        auto h = u.mayer(k);
        mayer.push_back(dims_json(h));
        rep.line("H_mayer[" + std::to_string(k) + "]:" + dims_str(h));
    }
    rep.body["slash"] = slash;
    rep.body["backslash"] = backslash;
    rep.body["mayer"] = mayer;
    bool exact = u.four_term_exact();
    rep.body["four_term_exact"] = exact;
    rep.line(std::string("four-term exactness: ") + (exact ? "yes" : "NO"));
    bool contr = u.is_contractible();
    rep.body["contractible"] = contr;
    rep.line(std::string("contractible: ") + (contr ? "true" : "false"));
    auto s = u.symbol();
    rep.body["symbol"] = symbol_json(s, u.lo, u.hi);
    rep.line("symbol: " + s.value.str() + (s.verified ? " (certified)" : " (NOT certified)"));
    rep.pass = exact && s.verified;
    return rep;
}

Report run_nh_acyclic(const Options& opt) {
    Report rep;
    auto res = nh_find_contraction(opt.n, opt.a, opt.p);
    rep.body["n"] = opt.n;
    rep.body["a"] = opt.a;
    rep.body["p"] = opt.p;
    if (res.witness) {
        rep.body["witness"] = nh_str(*res.witness);
        rep.body["witness_json"] = json::parse(nh_to_json(*res.witness));
        rep.line("contraction witness: d(" + nh_str(*res.witness) + ") = 1");
        rep.pass = true;
    } else {
        rep.body["witness"] = nullptr;
        rep.body["exhaustive"] = res.exhaustive;
        rep.line(std::string("none") + (res.exhaustive ? " (certified exhaustively)" : ""));
        rep.pass = res.exhaustive;
    }
    return rep;
}

Report run_nh_symbol(const Options& opt) {
    int def_lo = opt.n * (1 - opt.n);
    auto [lo, hi] = parse_window(opt.window, def_lo, def_lo + 6 * opt.p);
    Report rep;
    auto s = nh_symbol(opt.n, opt.a, opt.p, lo, hi);
    rep.body["n"] = opt.n;
    rep.body["a"] = opt.a;
    rep.body["p"] = opt.p;
    rep.body["symbol"] = symbol_json(s, lo, hi);
    rep.line("[NH_" + std::to_string(opt.n) + ", d_" + std::to_string(opt.a) +
             "] = " + s.value.str() + (s.verified ? " (certified)" : " (NOT certified)"));
    rep.pass = s.verified;
    return rep;
}

Report run_nh_derive_check(const Options& opt) {
    Report rep;
    rep.body["n"] = opt.n;
    rep.body["p"] = opt.p;
    std::vector<int> avals;
    if (opt.a_set)
        avals.push_back(opt.a);
    else
        for (int a = 0; a < opt.p; ++a) avals.push_back(a);
    bool ok = true;
    for (int a : avals) {
        std::vector<NHElem> gens;
        for (int t = 1; t <= opt.n; ++t) gens.push_back(nh_dot(opt.n, opt.p, t));
        for (int t = 1; t < opt.n; ++t) gens.push_back(nh_delta(opt.n, opt.p, t));
        bool a_ok = true;
        for (auto& g : gens) {
            NHElem it = g;
            for (int s = 0; s < opt.p; ++s) it = nh_derive(it, a);
            if (!it.is_zero()) a_ok = false;
        }
        rep.line("a = " + std::to_string(a) + ": d_a^p on generators " +
                 (a_ok ? "vanishes" : "does NOT vanish"));
        ok = ok && a_ok;
    }
    rep.body["nilpotent"] = ok;
    rep.pass = ok;
    return rep;
}

Report run_klr_qsr(const Options& opt) {
    Report rep;
    auto sols = qsr_parameter_solve(opt.p);
    rep.body["p"] = opt.p;
    auto arr = json::array();
    for (auto& s : sols) {
        arr.push_back({s[0], s[1], s[2], s[3]});
        rep.line("(a_i, a_j, r_ij, r_ji) = (" + std::to_string(s[0]) + ", " +
                 std::to_string(s[1]) + ", " + std::to_string(s[2]) + ", " +
                 std::to_string(s[3]) + ")");
    }
    rep.body["solutions"] = arr;
    rep.line(std::to_string(sols.size()) + " solution(s)");
    rep.pass = !sols.empty();
    return rep;
}

Report run_klr_cartan(const Options& opt) {
    Quiver q = load_quiver(opt);
    DiffParams dp = load_params(opt, q);
    auto [lo, hi] = parse_window(opt.window, -12, 12 * opt.p);
    Report rep;
    auto m = cartan_matrix_A2(dp, opt.p, lo, hi);
    bool all_verified = true;
    auto arr = json::array();
    static const char* names[3] = {"iij", "iji", "jii"};
    for (int row = 0; row < 3; ++row) {
        auto jrow = json::array();
        std::ostringstream ss;
        ss << names[row] << ":";
        for (int col = 0; col < 3; ++col) {
            jrow.push_back(symbol_json(m[row][col], lo, hi));
            ss << "  [" << m[row][col].value.str() << "]";
            all_verified = all_verified && m[row][col].verified;
        }
        arr.push_back(jrow);
        rep.line(ss.str());
    }
    bool row_identity = true;
    for (int col = 0; col < 3; ++col)
        if (quantum_int(2, opt.p) * m[1][col].value != m[0][col].value + m[2][col].value)
            row_identity = false;
    rep.body["p"] = opt.p;
    rep.body["window"] = {lo, hi};
    rep.body["matrix"] = arr;
    rep.body["all_certified"] = all_verified;
    rep.body["row_identity"] = row_identity;
    rep.line(std::string("all entries certified: ") + (all_verified ? "yes" : "NO"));
    rep.line(std::string("[2] * row_2 = row_1 + row_3: ") + (row_identity ? "yes" : "NO"));
    rep.pass = all_verified && row_identity;
    return rep;
}

Report run_klr_serre(const Options& opt) {
    Quiver q = Quiver::A2();
    DiffParams dp = load_params(opt, q);
    Report rep;
    auto quad = serre_quadruple(opt.p);
    SerreReport sr = serre_idempotent_check(quad[0], quad[1], quad[2], quad[3], dp);
    static const char* names[10] = {"xyx = x",          "yxy = y",
                                    "x'y'x' = x'",      "y'x'y' = y'",
                                    "y'x = 0",          "yx' = 0",
                                    "x d(y) in Rx'y'",  "y d(x) = 0",
                                    "y' d(x') = 0",     "x' d(y') in Rxy"};
    auto arr = json::array();
    for (int c = 0; c < 10; ++c) {
        arr.push_back({{"condition", names[c]}, {"holds", sr.conditions[c]}});
        rep.line(std::string(names[c]) + ": " + (sr.conditions[c] ? "yes" : "NO"));
    }
    rep.body["p"] = opt.p;
    rep.body["conditions"] = arr;
    rep.pass = sr.all_pass();
    return rep;
}

Report run_klr_symbol(const Options& opt) {
    Quiver q = load_quiver(opt);
    DiffParams dp = load_params(opt, q);
    auto seq = parse_seq(opt, q);
    int n = static_cast<int>(seq.size());
    auto [lo, hi] = parse_window(opt.window, -2 * n * n, 8 * opt.p);
    Report rep;
    auto s = klr_symbol(q, opt.p, dp, klr_one(q, opt.p, seq), lo, hi);
    rep.body["p"] = opt.p;
    rep.body["sequence"] = opt.seq;
    rep.body["symbol"] = symbol_json(s, lo, hi);
    rep.line("[P_" + opt.seq + "] = " + s.value.str() +
             (s.verified ? " (certified)" : " (NOT certified)"));
    rep.pass = s.verified;
    return rep;
}

Report run_qgroup(const Options& opt) {
    Report rep;
    rep.body["p"] = opt.p;
    if (opt.p == 2) rep.line("warning: several checks assume p >= 3");
    BialgebraReport br = verify_bialgebra(opt.p);
    rep.body["bialgebra"] = {{"associative", br.associative},
                             {"comul_multiplicative", br.comul_multiplicative},
                             {"coassociative", br.coassociative},
                             {"counit_left", br.counit_left},
                             {"counit_right", br.counit_right}};
    rep.line(std::string("twisted bialgebra axioms: ") + (br.all_pass() ? "pass" : "FAIL"));
    bool cross_ok = true;
    auto arr = json::array();
    for (int n = 0; n <= opt.p - 1; ++n)
        for (int m = 0; n + m <= opt.p - 1; ++m) {
            CrosscheckReport cr = categorification_crosscheck(opt.p, n, m);
            arr.push_back({{"n", n},
                           {"m", m},
                           {"restriction_ok", cr.restriction_ok},
                           {"induction_ok", cr.induction_ok},
                           {"certified", cr.restriction.verified && cr.induction.verified}});
            if (!cr.all_pass()) {
                cross_ok = false;
                rep.line("crosscheck (" + std::to_string(n) + ", " + std::to_string(m) +
                         "): FAIL");
            }
        }
    rep.body["crosschecks"] = arr;
    rep.line(std::string("categorification crosschecks: ") + (cross_ok ? "pass" : "FAIL"));
    rep.pass = br.all_pass() && cross_ok;
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-DG algebra verification toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "parallelism hint (reserved)");

    auto add_common = [&](CLI::App* cmd, bool with_np = true) {
        cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--jobs", opt.jobs);
        if (with_np) cmd->add_option("--p", opt.p, "prime")->check(CLI::Range(2, 19));
    };

    Report (*handler)(const Options&) = nullptr;

    auto* coh = app.add_subcommand("cohomology", "analyze a p-complex file");
    add_common(coh, false);
    coh->add_option("--input", opt.input, "p-complex JSON file")->required();
    coh->callback([&] { handler = run_cohomology; });

    auto* nh = app.add_subcommand("nh", "nilHecke algebra checks");
    nh->require_subcommand(1);
    auto* nha = nh->add_subcommand("acyclic", "search for a contraction witness");
    auto* nhs = nh->add_subcommand("symbol", "windowed Grothendieck symbol of NH_n");
    auto* nhd = nh->add_subcommand("derive-check", "p-nilpotency of d_a on generators");
    for (auto* cmd : {nha, nhs, nhd}) {
        add_common(cmd);
        cmd->add_option("--n", opt.n, "number of strands")->check(CLI::Range(0, 6));
        auto* ao = cmd->add_option("--a", opt.a, "differential parameter");
        cmd->callback([&opt, ao] { opt.a_set = ao->count() > 0; });
    }
    nhs->add_option("--window", opt.window, "LO:HI");
    nha->callback([&] { handler = run_nh_acyclic; });
    nhs->callback([&] { handler = run_nh_symbol; });
    nhd->callback([&] { handler = run_nh_derive_check; });

    auto* klr = app.add_subcommand("klr", "KLR algebra checks");
    klr->require_subcommand(1);
    auto* kq = klr->add_subcommand("qsr-solve", "solve the mod-p Serre parameter systems");
    auto* kc = klr->add_subcommand("cartan", "symbols of the 3x3 Cartan block on A2");
    auto* ks = klr->add_subcommand("serre-check", "the ten idempotent conditions");
    auto* ky = klr->add_subcommand("symbol", "symbol of R * 1_seq");
    for (auto* cmd : {kq, kc, ks, ky}) add_common(cmd);
    for (auto* cmd : {kc, ks, ky})
        cmd->add_option("--params", opt.params, "preset d_plus/d_minus or JSON file");
    for (auto* cmd : {kc, ky}) {
        cmd->add_option("--quiver", opt.quiver, "preset A2/A1xA1 or JSON file");
        cmd->add_option("--window", opt.window, "LO:HI");
    }
    ky->add_option("--seq", opt.seq, "comma-separated vertex names");
    kq->callback([&] { handler = run_klr_qsr; });
    kc->callback([&] { handler = run_klr_cartan; });
    ks->callback([&] { handler = run_klr_serre; });
    ky->callback([&] { handler = run_klr_symbol; });

    auto* qg = app.add_subcommand("qgroup", "twisted bialgebra and categorification checks");
    add_common(qg);
    qg->callback([&] { handler = run_qgroup; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report rep = handler(opt);
        rep.emit(opt.format);
        return rep.pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
