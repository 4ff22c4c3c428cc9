// tcodes: construct ternary cyclic codes from zero sets, search for low
// weight codewords, and verify the optimal-family constructions.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ternary/codes.hpp"
#include "ternary/cosets.hpp"
#include "ternary/distance.hpp"
#include "ternary/errors.hpp"
#include "ternary/factor.hpp"
#include "ternary/json_io.hpp"
#include "ternary/registry.hpp"
#include "ternary/theorems.hpp"

using namespace ternary;

namespace {

struct Globals {
    bool json = false;
    bool force_large = false;
    u64 seed = kDefaultFactorSeed;
    unsigned jobs = 0;  // 0: hardware concurrency
    std::string out;
};

// "m=4,mod=x^4+2x^3+2" or "m=4". The modulus may be in either polynomial
// text form, so everything after "mod=" belongs to it (machine form has
// commas of its own).
FieldCtx parse_field_spec(const std::string& spec) {
    if (spec.rfind("m=", 0) != 0)
        throw CLI::ValidationError("--field", "expected \"m=M\" or \"m=M,mod=POLY\"");
    std::size_t pos = 2;
    unsigned m = 0;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos])))
        m = m * 10 + (spec[pos++] - '0');
    if (m == 0) throw CLI::ValidationError("--field", "bad m in field spec");
    if (pos == spec.size()) return ctx_default(m);
    if (spec.compare(pos, 5, ",mod=") != 0)
        throw CLI::ValidationError("--field", "expected \",mod=POLY\" after m");
    FieldCtx ctx = ctx_new(TritPoly::parse(spec.substr(pos + 5)));
    if (ctx.m() != m)
        throw CLI::ValidationError("--field", "modulus degree does not match m");
    return ctx;
}

std::vector<u64> parse_zeros(const std::string& s) {
    std::vector<u64> zeros;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        zeros.push_back(std::stoull(item));
    }
    if (zeros.empty()) throw CLI::ValidationError("--zeros", "empty zero set");
    return zeros;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string poly_both(const TritPoly& p) {
    return p.str() + "   [" + p.machine_str() + "]";
}

int cmd_coset(const Globals& g, unsigned m, u64 jv) {
    Coset c = coset(jv, m);
    auto pred = coset_size_predicted(jv, m);
    std::ostringstream txt;
    txt << "C_" << jv << " mod 3^" << m << "-1: leader " << c.leader << ", size "
        << c.size() << "\nmembers:";
    for (u64 v : c.members) txt << " " << v;
    txt << "\npredicted size: ";
    if (pred.size)
        txt << *pred.size << " (criterion " << pred.lemma << ")";
    else
        txt << "none of the closed-form criteria apply";
    txt << "\n";
    json j{{"m", m}, {"j", jv}, {"coset", c}};
    if (pred.size) j["predicted"] = {{"size", *pred.size}, {"criterion", pred.lemma}};
    emit(g, j, txt.str());
    return 0;
}

int cmd_minpoly(const Globals& g, const std::string& field, u64 i) {
    FieldCtx ctx = parse_field_spec(field);
    TritPoly mp = minimal_poly(ctx, i);
    std::ostringstream txt;
    txt << "minpoly of alpha^" << i << " over F_3: " << poly_both(mp) << "\n";
    emit(g, json{{"m", ctx.m()}, {"i", i}, {"minpoly", mp}}, txt.str());
    return 0;
}

int cmd_gencode(const Globals& g, const std::string& field, const std::string& zeros_s) {
    FieldCtx ctx = parse_field_spec(field);
    CyclicCode code = build_code(ctx, parse_zeros(zeros_s));
    std::ostringstream txt;
    txt << "[" << code.n << ", " << code.k << "] ternary cyclic code\n"
        << "generator: " << poly_both(code.generator) << "\ncosets:";
    json jc = json::array();
    for (u64 z : code.zeros) {
        Coset c = coset(z, ctx.m());
        txt << " C_" << c.leader << "(size " << c.size() << ")";
        jc.push_back(c);
    }
    txt << "\n";
    if (code.duplicate_cosets)
        txt << "note: some requested zeros shared a coset and were merged\n";
    json j{{"n", code.n},     {"k", code.k},
           {"zeros", code.zeros}, {"generator", code.generator},
           {"cosets", jc},    {"duplicate_cosets", code.duplicate_cosets}};
    emit(g, j, txt.str());
    return 0;
}

int cmd_mindist(const Globals& g, const std::string& field, const std::string& zeros_s,
                bool reduced, bool exact, int max_weight) {
    FieldCtx ctx = parse_field_spec(field);
    CyclicCode code = build_code(ctx, parse_zeros(zeros_s));
    json j{{"n", code.n}, {"k", code.k}, {"zeros", code.zeros}};
    std::ostringstream txt;
    if (exact) {
        u64 d = exact_min_distance(code);
        j["exact_min_distance"] = d;
        txt << "exact minimum distance: " << d << "\n";
    } else if (reduced) {
        const u64 n = ctx.n();
        const auto& z = code.zeros;
        ReducedResult r;
        std::string shape;
        if (z.size() == 3 && z[0] == 0 && z[1] == 1) {
            shape = "{0,1,e}";
            r = weight3_reduced_c01e(ctx, z[2], g.force_large);
        } else if (z.size() == 3 && z[0] == 1 && n % 2 == 0 &&
                   (z[1] == n / 2 || z[2] == n / 2)) {
            shape = "{1,e,s}";
            r = weight3_reduced_1es(ctx, z[1] == n / 2 ? z[2] : z[1], g.force_large);
        } else if (z.size() == 2 && z[0] == 1) {
            shape = "{1,e}";
            r = weight3_reduced_1e(ctx, z[1], g.force_large);
        } else if (z.size() == 2 && z[0] == 2) {
            shape = "{2,e}";
            r = weight3_reduced_2e(ctx, z[1], g.force_large);
        } else {
            throw CLI::ValidationError(
                "--reduced", "zero set has no reduced weight-3 equation; use --oracle");
        }
        j["shape"] = shape;
        j["reduced_status"] = reduced_status_name(r.status);
        txt << "reduced weight-3 equation for " << shape << ": "
            << reduced_status_name(r.status) << "\n";
        if (r.witness) {
            auto coords = ctx.coords(*r.witness);
            j["witness_coords"] = coords;
            txt << "witness x coords:";
            for (int c : coords) txt << " " << c;
            txt << "\n";
        }
    } else {
        auto w = find_low_weight(code, max_weight, g.force_large);
        if (w) {
            j["witness"] = *w;
            txt << "weight " << w->weight << " codeword found\nsupports:";
            for (std::size_t idx = 0; idx < w->support_exponents.size(); ++idx)
                txt << " " << w->coefficients[idx] << "*x^" << w->support_exponents[idx];
            txt << "\n";
        } else {
            j["witness"] = nullptr;
            txt << "no codeword of weight <= " << max_weight << "\n";
        }
    }
    emit(g, j, txt.str());
    return 0;
}

int cmd_bound(const Globals& g, u64 n, u64 d, u64 k) {
    BoundReport b = optimality_bound(n, d, k);
    std::ostringstream txt;
    txt << "n=" << b.n << " d=" << b.d << " k=" << b.k << ": "
        << (b.excluded ? "Excluded" : "NotExcluded") << "\n"
        << "t=" << b.t << " r=" << b.r << " denominator=" << b.denominator << "\n";
    if (b.bound) txt << "bound=" << *b.bound << "\n";
    if (b.code_size) txt << "code_size=" << *b.code_size << "\n";
    emit(g, json(b), txt.str());
    return 0;
}

int cmd_factor(const Globals& g, const std::string& poly_s) {
    TritPoly p = TritPoly::parse(poly_s);
    Factorization f = factor(p, g.seed);
    std::ostringstream txt;
    if (f.unit != 1) txt << f.unit << "*";
    for (const auto& part : f.factors) {
        txt << "(" << part.poly.str() << ")";
        if (part.mult > 1) txt << "^" << part.mult;
    }
    txt << "\n";
    emit(g, json(f), txt.str());
    return 0;
}

int cmd_table(const Globals& g) {
    struct Row {
        const char* name;
        unsigned m;
        const char* mod;
        std::vector<u64> zeros;
        u64 n, k;
        const char* gen;
    };
    const Row rows[] = {
        {"example-1", 4, "x^4+2x^3+2", {0, 1, 50}, 80, 73,
         "x^7+2x^6+x^5+x^3+2x+2"},
        {"example-2", 6, "x^6+2x^4+x^2+2x+2", {1, 336, 364}, 728, 718,
         "x^10+2x^9+2x^6+2x^5+2x^4+2x^3+2x^2+2x+1"},
        {"example-3", 8, "x^8+2x^5+x^4+2x^2+2x+2", {0, 1, 3362}, 6560, 6547,
         "x^13+2x^11+2x^10+2x^8+x^7+x^5+2x^4+2x^3+2"},
        {"example-4", 8, "x^8+2x^5+x^4+2x^2+2x+2", {1, 82, 3280}, 6560, 6547,
         "x^13+2x^11+2x^10+x^7+2x^3+2x^2+2x+1"},
        {"example-5", 6, "x^6+2x^4+x^2+2x+2", {2, 29}, 728, 716,
         "x^12+2x^11+x^10+2x^6+2x^3+2"},
    };
    bool all_ok = true;
    json jrows = json::array();
    std::ostringstream txt;
    for (const Row& row : rows) {
        FieldCtx ctx = ctx_new(TritPoly::parse(row.mod));
        CyclicCode code = build_code(ctx, row.zeros);
        bool ok = code.n == row.n && code.k == row.k &&
                  code.generator.str() == row.gen;
        all_ok &= ok;
        txt << row.name << ": [" << code.n << "," << code.k << ",4] g = "
            << code.generator.str() << "  " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) txt << "  expected [" << row.n << "," << row.k << ",4] g = "
                     << row.gen << "\n";
        jrows.push_back({{"name", row.name}, {"n", code.n}, {"k", code.k},
                         {"generator", code.generator}, {"pass", ok}});
    }
    emit(g, json{{"rows", jrows}, {"all_pass", all_ok}}, txt.str());
    return all_ok ? 0 : 1;
}

struct Instance {
    TheoremId id;
    unsigned m;
    std::optional<unsigned> h;
};

// The admissible instances of each construction up to max_m.
std::vector<Instance> sweep_instances(unsigned max_m) {
    std::vector<Instance> out;
    for (unsigned m = 3; m <= max_m; ++m) {
        if (m % 2 == 0 && m >= 4) {
            out.push_back({TheoremId::T1, m, {}});
            out.push_back({TheoremId::C1, m, {}});
        }
        if (m % 4 == 0) {
            out.push_back({TheoremId::T2, m, {}});
            out.push_back({TheoremId::C2, m, {}});
        }
        if (m % 4 == 2 && m >= 6) out.push_back({TheoremId::T3, m, {}});
        // the congruence family spawns one instance per h; past m=11 that is
        // a dozen more full-field scans with no new structure
        if (m % 2 == 1 && m <= 11)
            for (unsigned h : t4_valid_h(m)) out.push_back({TheoremId::T4, m, h});
        if (m % 4 == 3 && m % 2 == 1 && m % 3 != 0 && m >= 7)
            out.push_back({TheoremId::T5, m, {}});
        if (m % 6 == 1 && m >= 7) out.push_back({TheoremId::T6, m, {}});
    }
    return out;
}

std::string instance_tag(const Instance& ins) {
    std::string tag = theorem_name(ins.id) + "_m" + std::to_string(ins.m);
    if (ins.h) tag += "_h" + std::to_string(*ins.h);
    return tag;
}

void print_report_line(std::ostream& os, const TheoremReport& r) {
    os << theorem_name(r.id) << " m=" << r.m;
    if (r.h) os << " h=" << *r.h;
    os << ": e=" << r.e << " [" << r.n << "," << r.k << "] "
       << verdict_name(r.verdict);
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << "\n";
    for (const auto& c : r.checks)
        if (!c.pass) os << "  check failed: " << c.name << " - " << c.detail << "\n";
}

void write_report_file(const Globals& g, const Instance& ins, const TheoremReport& r) {
    if (g.out.empty()) return;
    std::filesystem::create_directories(g.out);
    std::ofstream f(std::filesystem::path(g.out) / (instance_tag(ins) + ".json"));
    f << json(r).dump(2) << "\n";
}

int cmd_verify(const Globals& g, const std::string& theorem, unsigned m, int h_in,
               bool all, unsigned max_m, bool relaxed, const std::string& field) {
    VerifyOptions opts;
    opts.force_large = g.force_large;
    opts.relaxed = relaxed;

    if (!all) {
        auto id = theorem_from_name(theorem);
        if (!id) throw CLI::ValidationError("--theorem", "unknown name: " + theorem);
        std::optional<FieldCtx> ctx;
        if (!field.empty()) {
            ctx = parse_field_spec(field);
            opts.ctx = &*ctx;
        }
        std::optional<unsigned> h;
        if (h_in >= 0) h = static_cast<unsigned>(h_in);
        TheoremReport r = verify(*id, m, h, opts);
        std::ostringstream txt;
        print_report_line(txt, r);
        emit(g, json(r), txt.str());
        write_report_file(g, {*id, m, h}, r);
        bool ok = r.verdict == Verdict::Verified ||
                  (relaxed && r.verdict != Verdict::Refuted);
        return ok ? 0 : 1;
    }

    auto instances = sweep_instances(max_m);
    std::vector<TheoremReport> reports(instances.size());
    std::vector<std::string> errors(instances.size());
    std::atomic<std::size_t> next{0};
    unsigned jobs = g.jobs ? g.jobs : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            try {
                reports[i] = verify(instances[i].id, instances[i].m, instances[i].h, opts);
            } catch (const std::exception& ex) {
                errors[i] = ex.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_ok = true;
    json jlist = json::array();
    std::ostringstream txt;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!errors[i].empty()) {
            all_ok = false;
            txt << instance_tag(instances[i]) << ": error: " << errors[i] << "\n";
            continue;
        }
        print_report_line(txt, reports[i]);
        jlist.push_back(reports[i]);
        write_report_file(g, instances[i], reports[i]);
        all_ok &= reports[i].verdict == Verdict::Verified;
    }
    txt << (all_ok ? "all instances Verified" : "FAIL: some instances not Verified")
        << " (" << instances.size() << " total)\n";
    emit(g, json{{"reports", jlist}, {"all_verified", all_ok}}, txt.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary cyclic code construction and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_flag("--force-large", g.force_large,
                 "lift the m <= 13 exhaustive-iteration cap");
    app.add_option("--seed", g.seed, "factorization RNG seed");
    app.add_option("--jobs", g.jobs, "worker threads for verify --all");
    app.add_option("--out", g.out, "directory for per-instance JSON reports");

    unsigned opt_m = 0, opt_max_m = 13;
    u64 opt_j = 0, opt_i = 0, opt_n = 0, opt_d = 0, opt_k = 0;
    std::string opt_field = "m=4", opt_zeros, opt_poly, opt_theorem;
    int opt_h = -1, opt_max_weight = 3;
    bool opt_reduced = false, opt_exact = false, opt_oracle = false;
    bool opt_all = false, opt_relaxed = false;

    auto* sc_coset = app.add_subcommand("coset", "cyclotomic coset of j mod 3^m-1");
    sc_coset->add_option("--m", opt_m)->required();
    sc_coset->add_option("--j", opt_j)->required();

    auto* sc_minpoly = app.add_subcommand("minpoly", "minimal polynomial of alpha^i");
    sc_minpoly->add_option("--field", opt_field)->required();
    sc_minpoly->add_option("--i", opt_i)->required();

    auto* sc_gencode = app.add_subcommand("gencode", "build a code from a zero set");
    sc_gencode->add_option("--field", opt_field)->required();
    sc_gencode->add_option("--zeros", opt_zeros)->required();

    auto* sc_mindist = app.add_subcommand("mindist", "low-weight codeword search");
    sc_mindist->add_option("--field", opt_field)->required();
    sc_mindist->add_option("--zeros", opt_zeros)->required();
    sc_mindist->add_flag("--oracle", opt_oracle, "generic search (default)");
    sc_mindist->add_flag("--reduced", opt_reduced, "shape-specific weight-3 equation");
    sc_mindist->add_flag("--exact", opt_exact, "enumerate the whole code (k <= 12)");
    sc_mindist->add_option("--max-weight", opt_max_weight)->check(CLI::Range(1, 3));

    auto* sc_bound = app.add_subcommand("bound", "distance-d exclusion bound");
    sc_bound->add_option("--n", opt_n)->required();
    sc_bound->add_option("--d", opt_d)->required();
    sc_bound->add_option("--k", opt_k)->required();

    auto* sc_factor = app.add_subcommand("factor", "factor a polynomial over F_3");
    sc_factor->add_option("--poly", opt_poly)->required();

    auto* sc_verify = app.add_subcommand("verify", "run a construction's full pipeline");
    sc_verify->set_help_flag("--help");  // frees -h so --h can be the T4 parameter
    sc_verify->add_option("--theorem", opt_theorem, "T1 C1 T2 C2 T3 T4 T5 T6");
    sc_verify->add_option("--m", opt_m);
    sc_verify->add_option("--h", opt_h, "free parameter for T4");
    sc_verify->add_flag("--all", opt_all, "sweep every admissible instance");
    sc_verify->add_option("--max-m", opt_max_m);
    sc_verify->add_flag("--relaxed", opt_relaxed, "allow T3 outside its stated scope");
    sc_verify->add_option("--field", opt_field, "override the default modulus");

    auto* sc_table = app.add_subcommand("table", "rebuild the five worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_coset->parsed()) return cmd_coset(g, opt_m, opt_j);
        if (sc_minpoly->parsed()) return cmd_minpoly(g, opt_field, opt_i);
        if (sc_gencode->parsed()) return cmd_gencode(g, opt_field, opt_zeros);
        if (sc_mindist->parsed())
            return cmd_mindist(g, opt_field, opt_zeros, opt_reduced, opt_exact,
                               opt_max_weight);
        if (sc_bound->parsed()) return cmd_bound(g, opt_n, opt_d, opt_k);
        if (sc_factor->parsed()) return cmd_factor(g, opt_poly);
        if (sc_table->parsed()) return cmd_table(g);
        if (sc_verify->parsed()) {
            if (!opt_all && opt_theorem.empty())
                throw CLI::ValidationError("verify", "need --theorem NAME --m M or --all");
            if (!opt_all && opt_m == 0)
                throw CLI::ValidationError("verify", "--m is required with --theorem");
            return cmd_verify(g, opt_theorem, opt_m, opt_h, opt_all, opt_max_m,
                              opt_relaxed, sc_verify->count("--field") ? opt_field : "");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
