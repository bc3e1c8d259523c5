#include "superhom/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace superhom::cli {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

void build_app(CLI::App& app, JobSpec& spec) {
    app.description("Homological invariants of small Lie superalgebras: minimal resolutions, relative Ext, "
                    "rank varieties, Cartan windows.");
    app.set_config("--config", "", "TOML job file; keys mirror the flags");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--algebra", spec.algebra, "gl(m|n), sl(m|n), psl(n|n), q(1), osp(2|2n), p(n), ptilde(n)");
    app.add_option("--module", spec.module_expr,
                   "trivial | kac:W | dualkac:W | simple:W | proj:W | ind:W | dual(E) | tau(E) | pi(E) | tensor(E,E)")
        ->capture_default_str();
    app.add_option("--target", spec.target, "second module for ext");
    app.add_option("--steps", spec.n_max, "resolution length")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--degree", spec.d_max, "top Ext degree")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--side", spec.side, "1, -1 or both")->check(CLI::IsMember({"1", "+1", "-1", "both"}))->capture_default_str();
    app.add_option("--dims", spec.dims, "superspace dimension a|b for koszul-check")->capture_default_str();
    app.add_option("--s", spec.s, "Koszul total degree")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--weights", spec.weights, "cartan weights separated by ';'");
    app.add_option("--window", spec.window, "cartan: gl(1|1) block (a|-a), |a| <= window")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", spec.seed, "sampling seed (SUPERHOM_SEED overrides)")->capture_default_str();
    app.add_option("--output", spec.output, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    app.add_option("--out", spec.out_path, "write output to FILE");
    app.add_option("--only", spec.only, "replicate: comma-separated tags or criterion numbers");
    app.add_flag("!--no-timings", spec.timings, "replicate: omit runtimes for byte-stable JSON");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"resolve", "minimal projective resolution of --module"},
        {"complexity", "complexity estimate from the resolution dims"},
        {"ext", "relative Ext^d(--module, --target) for d <= --degree"},
        {"support", "rank-variety stratum of --module on g_1 and g_-1"},
        {"tilting", "Kac and dual Kac filtrations via rank varieties"},
        {"projective", "projectivity by syzygy and by rank varieties"},
        {"koszul-check", "exactness of the super Koszul complex of --dims in degree --s"},
        {"cartan", "Cartan matrix on a weight window"},
        {"orbits", "orbit representatives on g_1 or g_-1"},
        {"replicate", "run the worked-example suite"},
    };
    for (const auto& [name, desc] : commands) app.add_subcommand(name, desc)->fallthrough();
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

// ---------------------------------------------------------------- expressions

class ExprParser {
public:
    ExprParser(const AlgebraPtr& g, std::string_view text) : g_(g), text_(text) {}

    SuperModule parse() {
        SuperModule m = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("module expression '" + std::string(text_) + "': " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string word() {
        skip_space();
        std::size_t b = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        return std::string(text_.substr(b, pos_ - b));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "' at position " + std::to_string(pos_));
        ++pos_;
    }

    // Reads exactly as many integers as the algebra's weights have, so commas
    // inside tensor(...) stay unambiguous.
    std::vector<int> weight() {
        const int count = g_->family() == Family::q ? 1 : g_->matrix_size();
        std::size_t b = pos_;
        std::vector<int> w;
        for (int k = 0; k < count; ++k) {
            if (k) {
                // the even/odd boundary may be written with '|' or ','
                bool boundary = k == g_->matrix_even_rows();
                bool ok = pos_ < text_.size() && (text_[pos_] == ',' || (boundary && text_[pos_] == '|'));
                if (!ok)
                    fail("weight '" + std::string(text_.substr(b, pos_ - b)) + "' needs " + std::to_string(count) +
                         " entries written like " + g_->format_coords(std::vector<int>(static_cast<std::size_t>(count), 0)));
                ++pos_;
            }
            std::size_t s = pos_;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string num(text_.substr(s, pos_ - s));
            if (num.empty() || num == "-" || num == "+") fail("bad weight entry at position " + std::to_string(s));
            w.push_back(std::stoi(num));
        }
        return w;
    }

    SuperModule expr() {
        std::size_t start = pos_;
        std::string head = word();
        skip_space();
        auto guarded = [&](auto&& build) -> SuperModule {
            try {
                return build();
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                fail("'" + trim(text_.substr(start, pos_ - start)) + "': " + e.what());
            }
        };
        if (head == "trivial") return trivial_module(g_);
        if (head == "kac" || head == "dualkac" || head == "simple" || head == "proj" || head == "ind") {
            expect(':');
            auto w = weight();
            return guarded([&] {
                if (head == "kac") return induce_kac(g_, w);
                if (head == "dualkac") return coinduce_kac(g_, w);
                if (head == "simple") return simple_module(g_, w);
                if (head == "proj") return projective_indecomposable(g_, w);
                return induce_from_g0(simple_g0(g_, w));
            });
        }
        if (head == "dual" || head == "tau" || head == "pi") {
            expect('(');
            SuperModule inner = expr();
            expect(')');
            return guarded([&] {
                if (head == "dual") return dual(inner);
                if (head == "tau") return transpose_dual(inner);
                return parity_shift(inner);
            });
        }
        if (head == "tensor") {
            expect('(');
            SuperModule a = expr();
            expect(',');
            SuperModule b = expr();
            expect(')');
            return guarded([&] { return tensor(a, b); });
        }
        fail(head.empty() ? "expected a module at position " + std::to_string(start) : "unknown module '" + head + "'");
    }

    AlgebraPtr g_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- commands

std::vector<int> sides(const JobSpec& spec) {
    if (spec.side == "both") return {1, -1};
    return {spec.side == "-1" ? -1 : 1};
}

Json module_info(const SuperModule& m) {
    return {{"dim", m.dim()}, {"even", m.space().even_dim()}, {"odd", m.space().odd_dim()}};
}

Json support_certificate(const LieSuperalgebra& g, int side) {
    Json reps = Json::array();
    for (const auto& s : orbit_representatives(g, side).strata) {
        std::vector<std::string> terms;
        for (const auto& [i, x] : s.representative) terms.push_back((x == 1 ? "" : x.get_str() + "*") + g.label(i));
        reps.push_back({{"rank", s.rank}, {"representative", terms.empty() ? "0" : join(terms, "+")}});
    }
    return reps;
}

std::string side_name(int side) { return side > 0 ? "g_1" : "g_-1"; }

void run_resolve(const JobSpec& spec, const SuperModule& m, Report& r, bool complexity_only) {
    const auto& g = m.algebra();
    auto rep = minimal_resolution(m, spec.n_max);
    const int odd_dim = static_cast<int>(g.odd_basis().size());
    Json bound = Json::array();
    bool within = true;
    for (int n = 0; n <= spec.n_max; ++n) {
        long b = relative_term_dim(g, n, m.dim());
        int d = rep.steps[static_cast<std::size_t>(n)].dim;
        within = within && d <= b;
        bound.push_back({{"n", n}, {"dim", d}, {"relative_term_dim", b}});
    }
    r.certificates["summand_bound"] = bound;
    r.certificates["complexity_window"] = {rep.complexity.window_begin, rep.complexity.window_end};
    r.certificates["complexity_evidence"] = rep.complexity.evidence;
    r.certificates["complexity_upper_bound"] = odd_dim;
    if (!within) r.failures.push_back("a resolution term exceeds the relative term dimension");
    if (rep.complexity.c > odd_dim) r.failures.push_back("complexity exceeds dim g_1bar");

    std::ostringstream os;
    if (complexity_only) {
        r.result = to_json(rep.complexity);
        r.result["dims"] = rep.dims();
        r.result["module"] = rep.module;
        r.result["algebra"] = rep.algebra;
        os << "complexity of " << rep.module << " over " << rep.algebra << "\n"
           << "  dims  " << join(rep.dims(), " ") << "\n"
           << "  c = " << rep.complexity.c << "  (bound dim g_1bar = " << odd_dim << ")\n"
           << "  window t = " << rep.complexity.window_begin << ".." << rep.complexity.window_end << ", constant "
           << rep.complexity.constant.get_str() << (rep.complexity.low_confidence ? ", low confidence" : "") << "\n"
           << "  " << rep.complexity.evidence << "\n";
    } else {
        r.result = to_json(rep);
        os << "minimal resolution of " << rep.module << " over " << rep.algebra << "\n";
        os << std::setw(4) << "n" << std::setw(7) << "dim" << std::setw(6) << "even" << std::setw(6) << "odd"
           << std::setw(9) << "bound" << "  summands\n";
        for (int n = 0; n <= spec.n_max; ++n) {
            const auto& s = rep.steps[static_cast<std::size_t>(n)];
            std::vector<std::string> labels;
            for (const auto& l : s.summands) labels.push_back(spaced_weight(l));
            os << std::setw(4) << n << std::setw(7) << s.dim << std::setw(6) << s.parity_dims.even << std::setw(6)
               << s.parity_dims.odd << std::setw(9) << relative_term_dim(g, n, m.dim()) << "  " << join(labels, " + ") << "\n";
        }
        os << "complexity c = " << rep.complexity.c << (rep.complexity.low_confidence ? " (low confidence)" : "") << "\n";
    }
    r.table = os.str();
}

void run_ext(const JobSpec& spec, const AlgebraPtr& g, const SuperModule& m, Report& r) {
    if (spec.target.empty()) throw UsageError("ext needs --target");
    SuperModule n = relabel(parse_module_expr(g, spec.target), spec.target);
    auto t = relative_ext(m, n, spec.d_max);
    r.result = to_json(t);
    r.result["module"] = spec.module_expr;
    r.result["target"] = spec.target;
    r.certificates["cochains"] = "Hom_{g_0}(S^p(g_1bar) (x) M, N), p = 0.." + std::to_string(spec.d_max + 1);
    r.certificates["module"] = module_info(m);
    r.certificates["target"] = module_info(n);
    std::ostringstream os;
    os << "Ext^d(" << spec.module_expr << ", " << spec.target << ") relative to g_0 over " << g->name() << "\n";
    os << std::setw(4) << "d" << std::setw(7) << "even" << std::setw(6) << "odd" << "\n";
    for (std::size_t d = 0; d < t.degrees.size(); ++d)
        os << std::setw(4) << d << std::setw(7) << t.degrees[d].even << std::setw(6) << t.degrees[d].odd << "\n";
    r.table = os.str();
}

void run_support(const JobSpec& spec, const SuperModule& m, Report& r) {
    const auto& g = m.algebra();
    r.result = Json::array();
    std::ostringstream os;
    os << "support of " << spec.module_expr << " over " << g.name() << "\n";
    for (int side : sides(spec)) {
        auto s = support_rank(m, side);
        r.result.push_back(to_json(s));
        r.certificates["representatives_" + std::string(side > 0 ? "plus" : "minus")] = support_certificate(g, side);
        os << "  " << side_name(side) << ": stratum rank " << s.stratum_rank << "   [" << s.certificate << "]\n";
    }
    r.table = os.str();
}

void run_tilting(const JobSpec& spec, const SuperModule& m, Report& r) {
    auto plus = support_rank(m, 1), minus = support_rank(m, -1);
    bool kac = minus.stratum_rank == 0, dual = plus.stratum_rank == 0;
    r.result = {{"kac_filtration", kac}, {"dual_kac_filtration", dual}, {"tilting", kac && dual}};
    r.certificates["support_plus"] = to_json(plus);
    r.certificates["support_minus"] = to_json(minus);
    std::ostringstream os;
    os << spec.module_expr << " over " << m.algebra().name() << "\n"
       << "  Kac filtration       " << (kac ? "yes" : "no") << "   (rank V_g_-1 = " << minus.stratum_rank << ")\n"
       << "  dual Kac filtration  " << (dual ? "yes" : "no") << "   (rank V_g_1 = " << plus.stratum_rank << ")\n"
       << "  tilting              " << (kac && dual ? "yes" : "no") << "\n";
    r.table = os.str();
}

void run_projective(const JobSpec& spec, const SuperModule& m, Report& r) {
    const auto& g = m.algebra();
    bool by_syzygy = is_projective(m);
    r.result = {{"projective_syzygy", by_syzygy}};
    r.certificates["syzygy"] = "dim Omega(M) = " + std::to_string(syzygy(m).dim());
    std::ostringstream os;
    os << spec.module_expr << " over " << g.name() << "\n"
       << "  projective (syzygy test)   " << (by_syzygy ? "yes" : "no") << "\n";
    if (g.type_one()) {
        auto v = is_projective_via_varieties(m);
        auto samples = square_zero_cone_sample(g, 16, spec.seed);
        auto av = associated_variety_verdicts(m, samples);
        r.result["projective_varieties"] = v.projective;
        r.result["one_sided"] = v.one_sided;
        r.result["associated_variety_empty"] = av.empty;
        r.certificates["varieties"] = v.certificate;
        r.certificates["associated_variety_samples"] = static_cast<int>(av.verdicts.size());
        if (v.projective != by_syzygy) r.failures.push_back("rank-variety verdict disagrees with the syzygy test");
        if (av.empty != by_syzygy) r.failures.push_back("associated variety disagrees with the syzygy test");
        os << "  projective (rank varieties) " << (v.projective ? "yes" : "no") << (v.one_sided ? "  (one-sided, M = M^tau)" : "")
           << "\n"
           << "  associated variety         " << (av.empty ? "empty" : "nonzero") << " on " << av.verdicts.size()
           << " samples\n";
    }
    r.table = os.str();
}

void run_koszul(const JobSpec& spec, Report& r) {
    auto bar = spec.dims.find('|');
    int a = -1, b = -1;
    try {
        if (bar == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        a = std::stoi(spec.dims.substr(0, bar), &used);
        if (used != bar) throw std::invalid_argument("");
        b = std::stoi(spec.dims.substr(bar + 1), &used);
        if (used != spec.dims.size() - bar - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("--dims '" + spec.dims + "' must look like 2|2");
    }
    if (a < 0 || b < 0 || a + b == 0) throw UsageError("--dims '" + spec.dims + "' must be nonnegative and nonzero");
    auto c = super_koszul(SuperSpace::of_dims(a, b), spec.s);
    auto cert = check_exactness(c, 0, spec.s);
    Json hom = Json::object();
    for (const auto& [p, h] : cert.homology) hom[std::to_string(p)] = {{"even", h.even}, {"odd", h.odd}};
    std::vector<int> terms;
    for (int p = 0; p <= spec.s; ++p) terms.push_back(super_symmetric_dim(a, b, spec.s - p) * super_exterior_dim(a, b, p));
    r.result = {{"dims", "(" + std::to_string(a) + "|" + std::to_string(b) + ")"}, {"s", spec.s}, {"exact", cert.exact}};
    r.certificates["homology"] = hom;
    r.certificates["term_dims"] = terms;
    r.certificates["verdict"] = cert.exact ? "exact" : "not exact";
    if (!cert.exact) r.failures.push_back("Koszul complex has homology");
    std::ostringstream os;
    os << "super Koszul complex of (" << a << " | " << b << "), s = " << spec.s << "\n"
       << "  terms " << join(terms, " ") << "\n"
       << "  " << (cert.exact ? "exact" : "NOT exact") << "\n";
    r.table = os.str();
}

void run_cartan(const JobSpec& spec, const AlgebraPtr& g, Report& r) {
    std::vector<std::vector<int>> weights;
    if (!spec.weights.empty()) {
        std::stringstream ss(spec.weights);
        std::string tok;
        while (std::getline(ss, tok, ';')) weights.push_back(parse_weight(*g, trim(tok)));
    } else {
        if (g->name() != "gl(1|1)") throw UsageError("--window needs gl(1|1); pass --weights for " + g->name());
        weights = battery::gl11_block(spec.window);
    }
    auto w = cartan_window(g, weights);
    r.result = to_json(w);
    std::vector<std::string> names;
    for (const auto& x : w.weights) names.push_back(g->format_coords(x));
    r.result["weight_labels"] = names;
    r.certificates["counting"] = "composition factors counted up to parity via radical layers";
    r.certificates["complete_rows"] = w.interior;
    if (!w.symmetric) r.failures.push_back("interior Cartan matrix is not symmetric");
    std::ostringstream os;
    os << "Cartan matrix [P(row) : L(col)] over " << g->name() << "\n";
    std::size_t width = 6;
    for (const auto& n : names) width = std::max(width, spaced_weight(n).size() + 2);
    os << std::setw(static_cast<int>(width)) << "";
    for (const auto& n : names) os << std::setw(static_cast<int>(width)) << spaced_weight(n);
    os << "\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
        os << std::setw(static_cast<int>(width)) << spaced_weight(names[i]);
        for (int x : w.matrix[i]) os << std::setw(static_cast<int>(width)) << x;
        os << (w.complete[i] ? "" : "   (truncated)") << "\n";
    }
    os << "interior " << (w.symmetric ? "symmetric" : "NOT symmetric") << "\n";
    r.table = os.str();
}

void run_orbits(const JobSpec& spec, const AlgebraPtr& g, Report& r) {
    r.result = Json::array();
    std::ostringstream os;
    os << "orbits of G_0 on the odd degrees of " << g->name() << "\n";
    for (int side : sides(spec)) {
        auto c = orbit_representatives(*g, side);
        r.result.push_back(to_json(c, *g));
        r.certificates["rank_function"] = "rank of the odd block of the matrix realization";
        os << "  " << side_name(side) << ": " << c.strata.size() << " strata" << (c.chain ? ", chain" : "") << "\n";
        for (const auto& s : c.strata) {
            std::vector<std::string> terms;
            for (const auto& [i, x] : s.representative) terms.push_back(g->label(i));
            os << "    rank " << s.rank << "  " << (terms.empty() ? "0" : join(terms, " + ")) << "\n";
        }
        if (!c.note.empty()) os << "    note: " << c.note << "\n";
    }
    r.table = os.str();
}

void run_replicate(const JobSpec& spec, Report& r) {
    auto results = replicate_suite(spec.only, spec.seed);
    if (results.empty()) throw UsageError("--only '" + spec.only + "' selects no criterion");
    Json list = Json::array();
    int passed = 0;
    double total = 0;
    std::ostringstream os;
    for (const auto& c : results) {
        list.push_back(to_json(c, spec.timings));
        passed += c.pass;
        total += c.seconds;
        if (!c.pass) r.failures.push_back("criterion " + std::to_string(c.id) + " (" + c.name + ")");
        os << (c.pass ? "PASS " : "FAIL ") << std::setw(2) << c.id << "  " << c.name;
        if (spec.timings) os << "  (" << std::fixed << std::setprecision(2) << c.seconds << " s)";
        os << "\n      expected: " << c.expected << "\n      computed: " << c.computed << "\n";
    }
    os << passed << "/" << results.size() << " criteria passed\n";
    r.result = {{"criteria", list}, {"passed", passed}, {"total", static_cast<int>(results.size())}};
    if (spec.timings) r.result["seconds"] = total;
    r.certificates["oracles"] = "each criterion reports its expected value next to the computed one";
    r.table = os.str();
}

}  // namespace

std::string spaced_weight(std::string s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '|') {
            s.replace(i, 1, " | ");
            i += 2;
        }
    return s;
}

AlgebraPtr parse_algebra(std::string_view text) {
    try {
        return LieSuperalgebra::parse(trim(text));
    } catch (const AlgebraError& e) {
        throw UsageError("unknown algebra '" + std::string(text) + "': " + e.what());
    }
}

std::vector<int> parse_weight(const LieSuperalgebra& g, std::string_view text) {
    const int count = g.family() == Family::q ? 1 : g.matrix_size();
    std::vector<int> w;
    std::string cur;
    int bars = 0, pos_bar = -1;
    auto push = [&] {
        try {
            std::size_t used = 0;
            w.push_back(std::stoi(cur, &used));
            if (used != cur.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("weight '" + std::string(text) + "': bad entry '" + cur + "'");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == '|') {
            push();
            if (ch == '|') ++bars, pos_bar = static_cast<int>(w.size());
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    push();
    bool shape = static_cast<int>(w.size()) == count &&
                 (bars == 0 || (bars == 1 && pos_bar == g.matrix_even_rows()));
    if (!shape)
        throw UsageError("weight '" + std::string(text) + "' does not fit " + g.name() + "; write it like " +
                         g.format_coords(std::vector<int>(static_cast<std::size_t>(count), 0)));
    return w;
}

SuperModule parse_module_expr(const AlgebraPtr& g, std::string_view text) {
    if (!g->has_modules()) throw UsageError("algebra '" + g->name() + "' has no module constructions here");
    return ExprParser(g, text).parse();
}

std::string help_text() {
    JobSpec spec;
    CLI::App app{"", "superhom"};
    build_app(app, spec);
    return app.help();
}

JobSpec parse_job(const std::vector<std::string>& args) {
    JobSpec spec;
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
        std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end())
        throw UsageError("unknown command '" + args[0] + "'");
    CLI::App app{"", "superhom"};
    build_app(app, spec);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    spec.command = app.get_subcommands().front()->get_name();
    if (const char* env = std::getenv("SUPERHOM_SEED")) {
        try {
            std::size_t used = 0;
            spec.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError(std::string("SUPERHOM_SEED '") + env + "' is not an unsigned integer");
        }
    }
    bool needs_algebra = spec.command != "koszul-check" && spec.command != "replicate";
    if (needs_algebra && spec.algebra.empty()) throw UsageError(spec.command + " needs --algebra");
    if (needs_algebra) parse_algebra(spec.algebra);
    return spec;
}

Json Report::to_json() const {
    return {{"schema", kSchema}, {"job", job}, {"result", result}, {"certificates", certificates}, {"mismatch", mismatch},
            {"failures", failures}};
}

Report run_job(const JobSpec& spec) {
    Report r;
    r.job = {{"command", spec.command}, {"algebra", spec.algebra}, {"module", spec.module_expr},
             {"target", spec.target},   {"n_max", spec.n_max},     {"d_max", spec.d_max},
             {"side", spec.side},       {"dims", spec.dims},       {"s", spec.s},
             {"weights", spec.weights}, {"window", spec.window},   {"seed", spec.seed},
             {"only", spec.only}};
    r.certificates = Json::object();
    const std::string& cmd = spec.command;
    if (cmd == "koszul-check") {
        run_koszul(spec, r);
    } else if (cmd == "replicate") {
        run_replicate(spec, r);
    } else {
        AlgebraPtr g = parse_algebra(spec.algebra);
        if (cmd == "orbits") {
            run_orbits(spec, g, r);
        } else if (cmd == "cartan") {
            run_cartan(spec, g, r);
        } else {
            SuperModule m = relabel(parse_module_expr(g, spec.module_expr), spec.module_expr);
            if (cmd == "resolve" || cmd == "complexity") run_resolve(spec, m, r, cmd == "complexity");
            else if (cmd == "ext") run_ext(spec, g, m, r);
            else if (cmd == "support") run_support(spec, m, r);
            else if (cmd == "tilting") run_tilting(spec, m, r);
            else if (cmd == "projective") run_projective(spec, m, r);
            else throw UsageError("unknown command '" + cmd + "'");
        }
    }
    r.mismatch = !r.failures.empty();
    return r;
}

std::string render(const Report& r, const JobSpec& spec) {
    if (spec.output == "json") return r.to_json().dump(2) + "\n";
    std::string out = r.table;
    for (const auto& f : r.failures) out += "mismatch: " + f + "\n";
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    JobSpec spec;
    try {
        spec = parse_job(args);
    } catch (const CLI::CallForHelp&) {
        out << help_text();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "superhom: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "superhom: " << e.what() << "\n";
        return 2;
    }
    Report r;
    try {
        r = run_job(spec);
    } catch (const UsageError& e) {
        err << "superhom: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "superhom: " << spec.command << " failed: " << e.what() << "\n";
        return 1;
    }
    std::string text = render(r, spec);
    if (spec.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(spec.out_path, std::ios::binary);
        if (!f) {
            err << "superhom: cannot write '" << spec.out_path << "'\n";
            return 2;
        }
        f << text;
    }
    for (const auto& f : r.failures) err << "superhom: mismatch: " << f << "\n";
    return r.mismatch ? 1 : 0;
}

}  // namespace superhom::cli
