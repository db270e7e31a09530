// legendre: command-line front end for the least-number, census and
// quadratic-form routines.
//
// Exit codes: 0 success, 1 validation error, 2 suite failure,
// 3 result undecided because a search cap was hit.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "legendre/census.hpp"
#include "legendre/quadratic_forms.hpp"
#include "legendre/smooth_numbers.hpp"
#include "legendre/verify.hpp"

using namespace legendre;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kSuiteFailed = 2;
constexpr int kCapInconclusive = 3;

struct RunConfig {
    u64 cap = kDefaultCap;
    double a = 3.0;
    double epsilon = 0.5;
    u64 y = 0;
    unsigned workers = 1;
    std::string format = "text";
    std::string out;
    bool no_mod8 = false;
    u64 seed = 42;

    [[nodiscard]] SearchOptions search() const {
        SearchOptions s;
        s.cap = cap;
        if (no_mod8) s.residue = ResidueClass::any();
        return s;
    }
};

unsigned default_workers() {
    if (const char* env = std::getenv("LEGENDRE_CENSUS_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring LEGENDRE_CENSUS_WORKERS=" << env << '\n';
    }
    return 1;
}

// Output sink honouring --out.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

const auto kPositive = CLI::Range(u64{1}, kMaxInput);

void add_cap(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--cap", cfg.cap, "search cap for least-number scans")->check(kPositive);
    sub->add_flag("--no-mod8", cfg.no_mod8, "drop the n = 1 (mod 8) congruence");
}

void add_format(CLI::App* sub, RunConfig& cfg, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(allowed)));
    sub->add_option("--out", cfg.out, "write output to PATH instead of stdout");
}

std::string value_or_cap(const std::optional<u64>& v, u64 cap) { return v ? std::to_string(*v) : "> " + std::to_string(cap); }

json opt_json(const std::optional<u64>& v) { return v ? json(*v) : json(nullptr); }

// nq / gq ---------------------------------------------------------------

int cmd_nq(u64 q, const RunConfig& cfg) {
    const SquarefreeModulus mod(q);
    const auto r = compute_n_q(mod, cfg.search());
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        os << to_json(r, mod).dump() << '\n';
    } else {
        os << "n_" << q << " = " << value_or_cap(r.value, cfg.cap) << '\n';
        std::vector<u64> found;
        for (const auto& w : r.sign_witnesses)
            if (w) found.push_back(*w);
        std::sort(found.begin(), found.end());
        os << "witnesses";
        for (std::size_t i = 0; i < found.size(); ++i) os << (i ? ", " : " ") << found[i];
        os << '\n';
        for (u64 t = 0; t < r.sign_witnesses.size(); ++t)
            os << "  " << to_string(SignVector{t, mod.k()}) << "  " << value_or_cap(r.sign_witnesses[t], cfg.cap)
               << '\n';
    }
    return r.exceeded() ? kCapInconclusive : kOk;
}

int cmd_gq(u64 q, u64 extra, const RunConfig& cfg) {
    const SquarefreeModulus mod(q);
    const auto r = compute_g(mod, extra, cfg.search());
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        json j = to_json(r, mod);
        j["extra"] = extra;
        os << j.dump() << '\n';
    } else {
        os << "g_" << q;
        if (extra != 1) os << ',' << extra;
        os << " = " << value_or_cap(r.value, cfg.cap) << '\n';
        os << "basis witnesses";
        for (u64 w : r.basis_witnesses) os << ' ' << w;
        os << '\n';
    }
    return r.exceeded() ? kCapInconclusive : kOk;
}

// classify ----------------------------------------------------------------

int cmd_classify(u64 q, bool y_given, const RunConfig& cfg) {
    const SquarefreeModulus mod(q);
    const u64 y = y_given ? cfg.y : log_power_threshold(q, cfg.a);
    const auto s = classify(mod, y, cfg.search());
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        json j = to_json(s, cfg.cap);
        j["q"] = q;
        if (!y_given) j["a"] = cfg.a;
        os << j.dump() << '\n';
    } else {
        os << "q = " << q << ", y = " << y << ": " << to_string(s.status) << '\n';
        os << "g_q = " << value_or_cap(s.g_q, cfg.cap) << '\n';
        for (const auto& dg : s.divisor_g) os << "  g_" << dg.divisor << ',' << q << " = " << value_or_cap(dg.g, cfg.cap) << '\n';
        if (s.offending_divisor) os << "offending divisor " << *s.offending_divisor << '\n';
    }
    return s.status == Status::Inconclusive ? kCapInconclusive : kOk;
}

// census ------------------------------------------------------------------

int cmd_census(u64 lo, u64 hi, const RunConfig& cfg) {
    CensusOptions opts;
    opts.a = cfg.a;
    opts.search = cfg.search();
    opts.workers = cfg.workers;
    const auto result = exceptional_census(lo, hi, opts);
    {
        Sink sink(cfg.out);
        if (cfg.format == "json")
            write_census_jsonl(sink.os(), result, opts);
        else  // "text" and "csv" both give CSV
            write_census_csv(sink.os(), result, opts);
    }
    const auto& s = result.summary;
    std::cerr << "summary: good=" << s.good << " exceptional=" << s.exceptional << " ineligible=" << s.ineligible
              << " inconclusive=" << s.inconclusive << " skipped=" << s.skipped << '\n';
    return s.inconclusive ? kCapInconclusive : kOk;
}

// interval-search ---------------------------------------------------------

int cmd_interval(u64 Q, const RunConfig& cfg) {
    const auto r = interval_search(Q, cfg.epsilon, cfg.a, cfg.search());
    Sink sink(cfg.out);
    auto& os = sink.os();
    auto hit_json = [](const IntervalHit& h) {
        return json{{"q", h.q}, {"r", h.radical}, {"g_r", opt_json(h.g_r)}, {"threshold", h.threshold}};
    };
    if (cfg.format == "json") {
        json j{{"window", {r.window.lo, r.window.hi}}, {"a", r.a}, {"cap", cfg.cap}, {"failing", r.failing},
               {"skipped", r.skipped}};
        j["qualifying"] = json::array();
        for (const auto& h : r.qualifying) j["qualifying"].push_back(hit_json(h));
        j["inconclusive"] = json::array();
        for (const auto& h : r.inconclusive) j["inconclusive"].push_back(hit_json(h));
        os << j.dump() << '\n';
    } else {
        os << "window [" << r.window.lo << ", " << r.window.hi << "], a = " << r.a << '\n';
        os << "qualifying " << r.qualifying.size() << ", inconclusive " << r.inconclusive.size() << ", failing "
           << r.failing << ", skipped " << r.skipped.size() << '\n';
        os << "q,r,g_r,threshold\n";
        for (const auto& h : r.qualifying) os << h.q << ',' << h.radical << ',' << *h.g_r << ',' << h.threshold << '\n';
        for (const auto& h : r.inconclusive)
            os << h.q << ',' << h.radical << ",>" << cfg.cap << ',' << h.threshold << " inconclusive\n";
    }
    return r.inconclusive.empty() ? kOk : kCapInconclusive;
}

// smooth / scaling-table --------------------------------------------------

int cmd_smooth(u64 x, u64 y, u64 q, bool list, const RunConfig& cfg) {
    const SmoothSetSpec spec{x, y, q};
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        const auto elems = enumerate_smooth(spec);
        os << json{{"x", x}, {"y", y}, {"q", q}, {"count", elems.size()}, {"elements", elems}}.dump() << '\n';
        return kOk;
    }
    if (list) {
        const auto elems = enumerate_smooth(spec);
        os << "count " << elems.size() << '\n';
        for (u64 n : elems) os << n << '\n';
    } else {
        os << "count " << count_smooth(spec) << '\n';
    }
    return kOk;
}

int cmd_scaling(const std::vector<u64>& xs, const std::vector<double>& as, const RunConfig& cfg) {
    const auto rows = smoothness_scaling_table(xs, as);
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        for (const auto& r : rows)
            os << json{{"x", r.x}, {"y", r.y}, {"a", r.a}, {"count", r.count},
                       {"observed_exponent", r.observed_exponent},
                       {"theorem_exponent_lower", r.theorem_exponent}, {"theorem_exponent_upper", r.theorem_exponent}}
                      .dump()
               << '\n';
        return kOk;
    }
    // Both exponent bounds are 1 - 1/a; the implicit constants are not modelled.
    os << "x,y,a,count,observed_exponent,theorem_exponent_lower,theorem_exponent_upper\n";
    os << std::setprecision(6);
    for (const auto& r : rows)
        os << r.x << ',' << r.y << ',' << r.a << ',' << r.count << ',' << r.observed_exponent << ','
           << r.theorem_exponent << ',' << r.theorem_exponent << '\n';
    return kOk;
}

// forms -------------------------------------------------------------------

int cmd_discriminant(u64 q, u64 bound, const RunConfig& cfg) {
    const auto r = least_discriminant(q, bound, cfg.cap);
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        json j{{"q", q}, {"bound", bound}, {"least", opt_json(r.least)}};
        if (r.constructive)
            j["constructive"] = {{"p0", r.constructive->p0}, {"d0", r.constructive->d0}, {"d", r.constructive->d}};
        else
            j["constructive"] = {{"failure", r.constructive_failure}};
        os << j.dump() << '\n';
    } else {
        if (r.least)
            os << "least d = " << *r.least << '\n';
        else
            os << "no d <= " << bound << '\n';
        if (r.constructive)
            os << "constructive d = " << r.constructive->d << " = " << r.constructive->d0 << " * " << r.constructive->p0
               << '\n';
        else
            os << "constructive: " << r.constructive_failure << '\n';
    }
    return r.least ? kOk : kCapInconclusive;
}

json representation_json(const AlmostSquare& s) {
    const auto& r = s.source;
    return json{{"q", r.q},   {"d", r.d},   {"form", {r.form.A, r.form.B, r.form.C}},
                {"x", r.x},   {"y", r.y},   {"u", s.u},
                {"v", s.v},   {"X", s.X},   {"Y", s.Y}};
}

int cmd_represent(u64 q, u64 d, const RunConfig& cfg) {
    const auto s = almost_square_decomposition(q, d);
    const auto& r = s.source;
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        os << representation_json(s).dump() << '\n';
    } else {
        os << q << " = f(" << r.x << ", " << r.y << ") with f = (" << r.form.A << ", " << r.form.B << ", "
           << r.form.C << "), discriminant -" << d << '\n';
    }
    return kOk;
}

int cmd_almost_square(u64 q, u64 d, const RunConfig& cfg) {
    const auto s = almost_square_decomposition(q, d);
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json")
        os << representation_json(s).dump() << '\n';
    else
        os << s.u << " * " << q << " = " << s.X << "^2 + " << s.v << " * " << s.Y << "^2\n";
    return kOk;
}

// window statistics -------------------------------------------------------

int cmd_omega(u64 Q, unsigned threshold, double K, const RunConfig& cfg) {
    const auto s = omega_stats(Q, cfg.epsilon, threshold, K);
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        os << json{{"window", {s.window.lo, s.window.hi}}, {"threshold", s.threshold}, {"count", s.count},
                   {"fraction", s.fraction}, {"K", s.K}, {"comparison", s.comparison}}
                  .dump()
           << '\n';
    } else {
        os << "window [" << s.window.lo << ", " << s.window.hi << "]\n";
        os << "count " << s.count << " with omega >= " << threshold << '\n';
        os << "fraction " << s.fraction << '\n';
        os << "Q^eps (log log Q)^-K = " << s.comparison << " (K = " << K << ")\n";
    }
    return kOk;
}

int cmd_rough(u64 Q, u64 z, const RunConfig& cfg) {
    const auto r = rough_count(Q, cfg.epsilon, z, cfg.a);
    if (!r.in_range) std::cerr << "warning: z exceeds (log Q)^a\n";
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        json j{{"window", {r.window.lo, r.window.hi}},
               {"z", z},
               {"count", r.count},
               {"mertens", static_cast<double>(r.mertens)},
               {"expected", static_cast<double>(r.expected)},
               {"ratio", static_cast<double>(r.ratio)},
               {"in_range", r.in_range}};
        if (r.mertens_exact) j["mertens_exact"] = {r.mertens_exact->first, r.mertens_exact->second};
        os << j.dump() << '\n';
    } else {
        os << "window [" << r.window.lo << ", " << r.window.hi << "]\n";
        os << "count " << r.count << " with no prime factor < " << z << '\n';
        os << std::setprecision(10) << "V(z) = ";
        if (r.mertens_exact) os << r.mertens_exact->first << '/' << r.mertens_exact->second << " ~ ";
        os << static_cast<double>(r.mertens) << '\n';
        os << "width * V(z) = " << static_cast<double>(r.expected) << '\n';
        os << "ratio " << static_cast<double>(r.ratio) << '\n';
    }
    return kOk;
}

// verify ------------------------------------------------------------------

int cmd_verify(const std::string& suite, u64 limit, const RunConfig& cfg) {
    SuiteOptions opts;
    opts.seed = cfg.seed;
    opts.limit = limit;
    opts.workers = cfg.workers;
    const auto rep = run_suite(suite, opts);
    Sink sink(cfg.out);
    auto& os = sink.os();
    if (cfg.format == "json") {
        os << json{{"suite", rep.suite}, {"cases", rep.cases}, {"passed", rep.passed()}, {"vacuous", rep.vacuous},
                   {"notes", rep.notes}, {"counterexamples", rep.counterexamples}}
                  .dump()
           << '\n';
    } else {
        os << rep.suite << ": " << (rep.passed() ? (rep.vacuous ? "vacuous pass" : "pass") : "FAIL") << " ("
           << rep.cases << " cases)\n";
        for (const auto& n : rep.notes) os << "  " << n << '\n';
        for (const auto& c : rep.counterexamples) os << "  counterexample: " << c << '\n';
    }
    return rep.passed() ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Least quadratic non-residue quantities, exceptional censuses and binary quadratic forms"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    RunConfig cfg;
    cfg.workers = default_workers();
    std::function<int()> run;

    u64 q = 0, d = 0, lo = 0, hi = 0, extra = 1, bound = 1000, z = 30, x = 0, limit = 0;
    unsigned threshold = 3;
    double K = 1.0;
    bool list = false;
    std::string suite;
    std::vector<u64> xs{1000, 10'000, 100'000, 1'000'000};
    std::vector<double> as{2.0, 3.0};
    CLI::Option* y_opt = nullptr;

    auto* nq = app.add_subcommand("nq", "least n_q realising every sign pattern");
    nq->add_option("q", q, "odd square-free modulus")->required()->check(kPositive);
    add_cap(nq, cfg);
    add_format(nq, cfg, {"text", "json"});
    nq->callback([&] { run = [&] { return cmd_nq(q, cfg); }; });

    auto* gq = app.add_subcommand("gq", "least g with admissible n <= g spanning the sign space");
    gq->add_option("q", q, "odd square-free modulus")->required()->check(kPositive);
    gq->add_option("--extra", extra, "additional coprimality modulus r for g_{q,r}")->check(kPositive);
    add_cap(gq, cfg);
    add_format(gq, cfg, {"text", "json"});
    gq->callback([&] { run = [&] { return cmd_gq(q, extra, cfg); }; });

    auto* cl = app.add_subcommand("classify", "good / exceptional / ineligible at threshold y");
    cl->add_option("q", q, "odd square-free modulus")->required()->check(kPositive);
    y_opt = cl->add_option("--y", cfg.y, "threshold; defaults to floor((log q)^a)")->check(kPositive);
    cl->add_option("--a", cfg.a, "exponent used when --y is absent")->check(CLI::PositiveNumber);
    add_cap(cl, cfg);
    add_format(cl, cfg, {"text", "json"});
    cl->callback([&] { run = [&] { return cmd_classify(q, y_opt->count() > 0, cfg); }; });

    auto* ce = app.add_subcommand("census", "classify every odd square-free q in [lo, hi]");
    ce->add_option("lo", lo)->required()->check(kPositive);
    ce->add_option("hi", hi)->required()->check(kPositive);
    ce->add_option("--a", cfg.a, "threshold exponent, y = floor((log q)^a)")->check(CLI::PositiveNumber);
    ce->add_option("--workers", cfg.workers, "worker threads (env LEGENDRE_CENSUS_WORKERS)")
        ->check(CLI::Range(1u, 1024u));
    add_cap(ce, cfg);
    add_format(ce, cfg, {"text", "csv", "json"});
    ce->callback([&] { run = [&] { return cmd_census(lo, hi, cfg); }; });

    auto* is = app.add_subcommand("interval-search", "q in [Q, Q + Q^eps] with g_r <= (log r)^a");
    is->add_option("Q", q)->required()->check(kPositive);
    is->add_option("--epsilon", cfg.epsilon, "window exponent")->check(CLI::Range(0.0, 1.0));
    is->add_option("--a", cfg.a, "threshold exponent")->check(CLI::PositiveNumber);
    add_cap(is, cfg);
    add_format(is, cfg, {"text", "json"});
    is->callback([&] { run = [&] { return cmd_interval(q, cfg); }; });

    auto* sm = app.add_subcommand("smooth", "y-smooth n <= x built from primes = 1 (mod 8) not dividing q");
    sm->add_option("x", x)->required()->check(kPositive);
    sm->add_option("y", d)->required()->check(kPositive);
    sm->add_option("--q", extra, "excluded modulus")->check(kPositive);
    sm->add_flag("--list", list, "print the elements");
    add_format(sm, cfg, {"text", "json"});
    sm->callback([&] { run = [&] { return cmd_smooth(x, d, extra, list, cfg); }; });

    auto* st = app.add_subcommand("scaling-table", "|S(x, (log x)^a)| against x^(1 - 1/a)");
    st->add_option("--x", xs, "x values")->check(CLI::Range(u64{2}, kMaxInput));
    st->add_option("--a", as, "exponents")->check(CLI::PositiveNumber);
    add_format(st, cfg, {"text", "json"});
    st->callback([&] { run = [&] { return cmd_scaling(xs, as, cfg); }; });

    auto* di = app.add_subcommand("discriminant", "least d with -d a square modulo 4q");
    di->add_option("q", q)->required()->check(CLI::Range(u64{2}, kMaxInput));
    di->add_option("--bound", bound, "largest d scanned")->check(kPositive);
    di->add_option("--cap", cfg.cap, "cap for the constructive search")->check(kPositive);
    add_format(di, cfg, {"text", "json"});
    di->callback([&] { run = [&] { return cmd_discriminant(q, bound, cfg); }; });

    auto* re = app.add_subcommand("represent", "proper representation of q by a reduced form of discriminant -d");
    re->add_option("q", q)->required()->check(kPositive);
    re->add_option("d", d)->required()->check(kPositive);
    add_format(re, cfg, {"text", "json"});
    re->callback([&] { run = [&] { return cmd_represent(q, d, cfg); }; });

    auto* as_cmd = app.add_subcommand("almost-square", "u q = X^2 + v Y^2 from a representation");
    as_cmd->add_option("q", q)->required()->check(kPositive);
    as_cmd->add_option("d", d)->required()->check(kPositive);
    add_format(as_cmd, cfg, {"text", "json"});
    as_cmd->callback([&] { run = [&] { return cmd_almost_square(q, d, cfg); }; });

    auto* om = app.add_subcommand("omega-stats", "count q in the window with omega(q) >= threshold");
    om->add_option("Q", q)->required()->check(kPositive);
    om->add_option("--epsilon", cfg.epsilon, "window exponent")->check(CLI::Range(0.0, 1.0));
    om->add_option("--threshold", threshold, "omega threshold");
    om->add_option("--K", K, "exponent in the comparison quantity");
    add_format(om, cfg, {"text", "json"});
    om->callback([&] { run = [&] { return cmd_omega(q, threshold, K, cfg); }; });

    auto* rc = app.add_subcommand("rough-count", "count q in the window free of primes below z");
    rc->add_option("Q", q)->required()->check(CLI::Range(u64{2}, kMaxInput));
    rc->add_option("--epsilon", cfg.epsilon, "window exponent")->check(CLI::Range(0.0, 1.0));
    rc->add_option("--z", z, "sieve bound")->check(kPositive);
    rc->add_option("--a", cfg.a, "range exponent for the z <= (log Q)^a warning")->check(CLI::PositiveNumber);
    add_format(rc, cfg, {"text", "json"});
    rc->callback([&] { run = [&] { return cmd_rough(q, z, cfg); }; });

    auto* ve = app.add_subcommand("verify", "run a self-check suite");
    ve->add_option("suite", suite, "generation, subspace, descent, forms or oracle-equivalence")->required();
    ve->add_option("--seed", cfg.seed, "seed for sampled suites");
    ve->add_option("--limit", limit, "range override; 0 keeps the suite default");
    ve->add_option("--workers", cfg.workers, "worker threads (env LEGENDRE_CENSUS_WORKERS)")
        ->check(CLI::Range(1u, 1024u));
    add_format(ve, cfg, {"text", "json"});
    ve->callback([&] { run = [&] { return cmd_verify(suite, limit, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kInvalid;
}
