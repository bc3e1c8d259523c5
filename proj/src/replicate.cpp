#include "superhom/replicate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>

namespace superhom {

namespace battery {

std::vector<SuperModule> gl11() {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    std::vector<SuperModule> b;
    for (int a : {-1, 0, 1}) b.push_back(simple_module(g, {a, -a}));
    b.push_back(simple_module(g, {1, 1}));
    b.push_back(simple_module(g, {2, 0}));
    b.push_back(induce_kac(g, {0, 0}));
    b.push_back(induce_kac(g, {1, -1}));
    b.push_back(coinduce_kac(g, {0, 0}));
    b.push_back(projective_indecomposable(g, {0, 0}));
    b.push_back(projective_indecomposable(g, {1, -1}));
    b.push_back(tensor(induce_kac(g, {0, 0}), induce_kac(g, {0, 0})));
    b.push_back(tensor(induce_kac(g, {0, 0}), coinduce_kac(g, {0, 0})));
    b.push_back(tensor(simple_module(g, {1, -1}), projective_indecomposable(g, {0, 0})));
    b.push_back(dual(induce_kac(g, {0, 0})));
    b.push_back(parity_shift(induce_kac(g, {2, -2})));
    return b;
}

std::vector<SuperModule> gl21() {
    auto g = LieSuperalgebra::parse("gl(2|1)");
    std::vector<SuperModule> b;
    b.push_back(trivial_module(g));
    b.push_back(simple_module(g, {1, 0, 0}));
    b.push_back(simple_module(g, {1, 0, 5}));
    b.push_back(induce_kac(g, {0, 0, 0}));
    b.push_back(induce_kac(g, {1, 0, 0}));
    b.push_back(coinduce_kac(g, {0, 0, 0}));
    b.push_back(projective_indecomposable(g, {0, 0, 0}));
    b.push_back(tensor(simple_module(g, {1, 0, 0}), induce_kac(g, {0, 0, 0})));
    b.push_back(tensor(simple_module(g, {1, 0, 0}), dual(simple_module(g, {1, 0, 0}))));
    b.push_back(tensor(induce_kac(g, {0, 0, 0}), coinduce_kac(g, {0, 0, 0})));
    b.push_back(dual(induce_kac(g, {1, 0, 0})));
    return b;
}

std::vector<SuperModule> q1() {
    auto g = LieSuperalgebra::parse("q(1)");
    std::vector<SuperModule> b;
    b.push_back(trivial_module(g));
    b.push_back(simple_module(g, {1}));
    b.push_back(simple_module(g, {2}));
    b.push_back(projective_indecomposable(g, {0}));
    b.push_back(induce_from_g0(simple_g0(g, {1})));
    b.push_back(tensor(simple_module(g, {1}), simple_module(g, {1})));
    return b;
}

std::vector<std::vector<int>> gl11_block(int r) {
    std::vector<std::vector<int>> w;
    for (int a = -r; a <= r; ++a) w.push_back({a, -a});
    return w;
}

}  // namespace battery

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string bracketed(const std::vector<int>& v) { return "[" + join(v) + "]"; }

// Strips a leading "Pi" so summand labels compare up to parity.
std::string unshifted(const std::string& s) { return s.rfind("Pi", 0) == 0 ? s.substr(2) : s; }

std::vector<std::vector<int>> g0_battery_weights(const LieSuperalgebra& g) {
    if (g.name() == "gl(1|1)") return {{0, 0}, {1, -1}, {2, 0}, {3, -1}, {-1, 2}};
    if (g.name() == "gl(2|1)") return {{0, 0, 0}, {1, 0, 0}, {1, 0, 5}, {2, 0, -1}, {2, 1, 0}};
    return {{0}, {1}, {2}};
}

CriterionResult koszul() {
    CriterionResult r;
    int bad = 0, checked = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            SuperSpace v = SuperSpace::of_dims(a, b);
            for (int s = 1; s <= 5; ++s) {
                if (a + b == 0) continue;
                auto c = super_koszul(v, s);
                auto cert = check_exactness(c, 0, s);
                ++checked;
                if (!cert.exact) {
                    ++bad;
                    r.computed += "(" + std::to_string(a) + "|" + std::to_string(b) + ") s=" + std::to_string(s) + " not exact; ";
                }
            }
        }
    r.expected = "all homology zero for (a|b), a,b <= 3, 1 <= s <= 5";
    r.computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact" + (bad ? "; " + r.computed : "");
    r.pass = bad == 0;
    return r;
}

CriterionResult relative_exactness() {
    CriterionResult r;
    r.pass = true;
    struct Case {
        const char* alg;
        bool kac;
        int n_max;
    };
    for (const auto& c : {Case{"gl(1|1)", false, 8}, Case{"gl(1|1)", true, 8}, Case{"gl(2|1)", false, 6},
                          Case{"gl(2|1)", true, 6}, Case{"q(1)", false, 8}}) {
        auto g = LieSuperalgebra::parse(c.alg);
        SuperModule m = c.kac ? induce_kac(g, std::vector<int>(static_cast<std::size_t>(g->matrix_size()), 0)) : trivial_module(g);
        auto res = relative_resolution(m, c.n_max);
        auto ex = check_exactness(res, m.dim());
        r.pass = r.pass && ex.exact;
        r.computed += std::string(c.alg) + " " + (c.kac ? "K(0)" : "C") + ": " + (ex.exact ? "exact" : "NOT exact") +
                      " through " + std::to_string(c.n_max - 1) + ", coker " + std::to_string(ex.cokernel_dim) + "/" +
                      std::to_string(m.dim()) + "; ";
    }
    r.computed.resize(r.computed.size() - 2);
    r.expected = "exact through n_max-1 with cokernel dim = dim M";
    return r;
}

CriterionResult gl11_trivial() {
    CriterionResult r;
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto rep = minimal_resolution(trivial_module(g), 8);
    std::vector<int> want;
    for (int n = 0; n <= 8; ++n) want.push_back(4 * (n + 1));
    r.expected = "dims " + bracketed(want) + ", c=2";
    r.computed = "dims " + bracketed(rep.dims()) + ", c=" + std::to_string(rep.complexity.c);
    r.pass = rep.dims() == want && rep.complexity.c == 2;
    return r;
}

CriterionResult gl11_kac() {
    CriterionResult r;
    auto g = LieSuperalgebra::parse("gl(1|1)");
    const int n_max = 8;
    auto rep = minimal_resolution(induce_kac(g, {0, 0}), n_max);
    bool steps_ok = true;
    std::vector<std::string> seen;
    for (int n = 0; n <= n_max; ++n) {
        const auto& s = rep.steps[static_cast<std::size_t>(n)].summands;
        std::string want = "P(" + std::to_string(n) + "|" + std::to_string(-n) + ")";
        steps_ok = steps_ok && s.size() == 1 && unshifted(s[0]) == want;
        seen.push_back(s.size() == 1 ? s[0] : "{" + join(s, "+") + "}");
    }
    bool periodic = is_periodic(induce_kac(g, {0, 0}), n_max);
    r.expected = "dims all 4, P_n = P(n|-n) up to parity, c=1, not periodic";
    r.computed = "dims " + bracketed(rep.dims()) + ", steps " + join(seen, " ") + ", c=" + std::to_string(rep.complexity.c) +
                 (periodic ? ", periodic" : ", not periodic");
    r.pass = rep.dims() == std::vector<int>(n_max + 1, 4) && steps_ok && rep.complexity.c == 1 && !periodic;
    return r;
}

CriterionResult q1_trivial() {
    CriterionResult r;
    auto g = LieSuperalgebra::parse("q(1)");
    auto c = trivial_module(g);
    int p = projective_cover(c).cover.dim();
    auto rep = minimal_resolution(c, 8);
    auto d = rep.dims();
    bool constant = std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
    r.expected = "dim P(C)=2, constant dims, c=1";
    r.computed = "dim P(C)=" + std::to_string(p) + ", dims " + bracketed(d) + ", c=" + std::to_string(rep.complexity.c);
    r.pass = p == 2 && constant && rep.complexity.c == 1;
    return r;
}

CriterionResult summand_bound() {
    CriterionResult r;
    int checked = 0, bad = 0;
    auto run = [&](const std::vector<SuperModule>& mods, int n_max) {
        for (const auto& m : mods) {
            auto rep = minimal_resolution(m, n_max);
            for (int n = 0; n <= n_max; ++n) {
                ++checked;
                if (rep.steps[static_cast<std::size_t>(n)].dim > relative_term_dim(m.algebra(), n, m.dim())) {
                    ++bad;
                    r.computed += m.label() + " n=" + std::to_string(n) + " exceeds; ";
                }
            }
        }
    };
    run(battery::gl11(), 6);
    run(battery::gl21(), 3);
    run(battery::q1(), 6);
    r.expected = "dim P_n <= dim D(M)_n at every step";
    r.computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " steps within bound" + (bad ? "; " + r.computed : "");
    r.pass = bad == 0;
    return r;
}

CriterionResult self_injectivity() {
    CriterionResult r;
    int checked = 0, bad = 0;
    for (const char* name : {"gl(1|1)", "gl(2|1)", "q(1)"}) {
        auto g = LieSuperalgebra::parse(name);
        for (const auto& w : g0_battery_weights(*g)) {
            auto s = simple_g0(g, w);
            ++checked;
            if (character(induce_from_g0(s)) != character(coinduce_from_g0(tensor(s, delta_module(g))))) {
                ++bad;
                r.computed += std::string(name) + " " + g->format_coords(w) + " differs; ";
            }
        }
    }
    r.expected = "char Ind(S) = char Coind(S (x) delta)";
    r.computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " simples agree" + (bad ? "; " + r.computed : "");
    r.pass = bad == 0;
    return r;
}

CriterionResult ext_identity() {
    CriterionResult r;
    auto g = LieSuperalgebra::parse("gl(1|1)");
    const int n_max = 6, reach = 7;
    auto c = trivial_module(g);
    auto rep = minimal_resolution(c, n_max);
    auto window = battery::gl11_block(reach);
    std::vector<int> lhs(n_max + 1, 0), rhs(n_max + 1, 0);
    for (const auto& w : window) {
        const auto& l = simple_module(g, w);
        int dim_p = projective_indecomposable(g, w).dim();
        int kappa = simple_info(g, w).kappa;
        auto ext = relative_ext(c, l, n_max);
        std::string label = "P" + g->format_coords(w);
        for (int n = 0; n <= n_max; ++n) {
            lhs[static_cast<std::size_t>(n)] += dim_p * ext.total(n);
            for (const auto& s : rep.steps[static_cast<std::size_t>(n)].summands)
                if (unshifted(s) == label) rhs[static_cast<std::size_t>(n)] += kappa * dim_p;
        }
    }
    r.expected = "sum_S kappa dim P(S) [P_n:P(S)] = " + bracketed(rhs);
    r.computed = "dim Ext^n(C, sum S^dim P(S)) = " + bracketed(lhs);
    r.pass = lhs == rhs && rhs == rep.dims();
    if (rhs != rep.dims()) r.computed += "; summands outside the window, dims " + bracketed(rep.dims());
    return r;
}

CriterionResult support_atypicality() {
    CriterionResult r;
    r.pass = true;
    std::vector<std::pair<std::string, std::vector<int>>> cases;
    for (const auto& w : battery::gl11_block(3)) cases.emplace_back("gl(1|1)", w);
    for (const auto& w : std::vector<std::vector<int>>{{1, 1}, {2, 0}, {0, 2}, {3, -1}, {-2, 1}}) cases.emplace_back("gl(1|1)", w);
    for (const auto& w : std::vector<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {1, 0, 5}}) cases.emplace_back("gl(2|1)", w);
    std::vector<std::string> exp, got;
    for (const auto& [name, w] : cases) {
        auto g = LieSuperalgebra::parse(name);
        const auto& l = simple_module(g, w);
        int at = atypicality(*g, w);
        int plus = support_rank(l, 1).stratum_rank, minus = support_rank(l, -1).stratum_rank;
        r.pass = r.pass && plus == at && minus == at;
        exp.push_back(g->format_coords(w) + ":" + std::to_string(at));
        got.push_back(g->format_coords(w) + ":" + std::to_string(plus) + "/" + std::to_string(minus));
    }
    r.expected = "atyp " + join(exp, " ");
    r.computed = "support +/- " + join(got, " ");
    return r;
}

CriterionResult equivalence_chain(std::uint64_t seed) {
    CriterionResult r;
    int checked = 0, bad = 0;
    for (const auto& mods : {battery::gl11(), battery::gl21()}) {
        const auto& g = mods.front().algebra();
        auto samples = square_zero_cone_sample(g, 16, seed);
        for (const auto& m : mods) {
            bool a = is_projective(m);
            bool b = is_projective_via_varieties(m).projective;
            bool c = is_tilting(m);
            bool d = associated_variety_verdicts(m, samples).empty;
            ++checked;
            if (!(a == b && b == c && c == d)) {
                ++bad;
                r.computed += g.name() + " " + m.label() + " " + std::to_string(a) + std::to_string(b) + std::to_string(c) +
                              std::to_string(d) + "; ";
            }
        }
    }
    r.expected = "syzygy test = variety test = tilting = empty associated variety";
    r.computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " modules agree" + (bad ? "; " + r.computed : "");
    r.pass = bad == 0 && checked >= 20;
    return r;
}

CriterionResult filtration_criteria() {
    CriterionResult r;
    auto g = LieSuperalgebra::parse("gl(1|1)");
    int checked = 0, bad = 0;
    for (const auto& m : battery::gl11()) {
        bool rank_test = has_kac_filtration(m);
        bool ext_test = true;
        for (int a = -4; a <= 4 && ext_test; ++a)
            for (int b = -4; b <= 4 && ext_test; ++b)
                if (relative_ext(m, coinduce_kac(g, {a, b}), 1).total(1) != 0) ext_test = false;
        ++checked;
        if (rank_test != ext_test) {
            ++bad;
            r.computed += m.label() + " rank=" + std::to_string(rank_test) + " ext=" + std::to_string(ext_test) + "; ";
        }
    }
    r.expected = "Kac filtration by rank test iff Ext^1(M, K-(mu)) = 0 for |a|,|b| <= 4";
    r.computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " modules agree" + (bad ? "; " + r.computed : "");
    r.pass = bad == 0;
    return r;
}

CriterionResult duality() {
    CriterionResult r;
    int checked = 0, bad = 0;
    for (const auto& mods : {battery::gl11(), battery::gl21()})
        for (const auto& m : mods) {
            auto d = support_duality_check(m);
            ++checked;
            if (!d.ok) {
                ++bad;
                r.computed += m.label() + "; ";
            }
        }
    r.expected = "rank V+(M^tau) = rank V-(M) and rank V-(M^tau) = rank V+(M)";
    r.computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " modules agree" + (bad ? "; " + r.computed : "");
    r.pass = bad == 0;
    return r;
}

CriterionResult cartan() {
    CriterionResult r;
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto w = cartan_window(g, battery::gl11_block(3));
    bool shape = !w.interior.empty();
    for (int i : w.interior)
        for (std::size_t j = 0; j < w.weights.size(); ++j) {
            int want = static_cast<std::size_t>(i) == j ? 2 : (std::abs(i - static_cast<int>(j)) == 1 ? 1 : 0);
            shape = shape && w.matrix[static_cast<std::size_t>(i)][j] == want;
        }
    std::vector<std::string> rows;
    for (int i : w.interior) rows.push_back(bracketed(w.matrix[static_cast<std::size_t>(i)]));
    r.expected = "interior rows tridiagonal (1,2,1), symmetric";
    r.computed = "interior " + bracketed(w.interior) + " rows " + join(rows, " ") + (w.symmetric ? ", symmetric" : ", NOT symmetric");
    r.pass = shape && w.symmetric;
    return r;
}

CriterionResult orbits() {
    CriterionResult r;
    auto gl = orbit_representatives(*LieSuperalgebra::parse("gl(2|2)"), 1);
    std::vector<int> ranks;
    for (const auto& s : gl.strata) ranks.push_back(s.rank);
    auto osp = LieSuperalgebra::parse("osp(2|4)");
    auto op = orbit_representatives(*osp, 1), om = orbit_representatives(*osp, -1);
    r.expected = "gl(2|2)+ ranks [0,1,2] chain; osp(2|4) 2 strata per side";
    r.computed = "gl(2|2)+ ranks " + bracketed(ranks) + (gl.chain ? " chain" : " not a chain") + "; osp(2|4) " +
                 std::to_string(op.strata.size()) + "/" + std::to_string(om.strata.size()) + " strata";
    r.pass = ranks == std::vector<int>{0, 1, 2} && gl.chain && op.strata.size() == 2 && om.strata.size() == 2;
    return r;
}

std::uint64_t suite_seed = 1;

}  // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "super Koszul exactness", {"koszul"}, koszul},
        {2, "relative resolution exactness", {"gl11", "gl21", "q1", "resolution"}, relative_exactness},
        {3, "gl(1|1) trivial module dims and complexity", {"gl11", "resolution"}, gl11_trivial},
        {4, "gl(1|1) Kac module resolution", {"gl11", "resolution"}, gl11_kac},
        {5, "q(1) trivial module", {"q1", "resolution"}, q1_trivial},
        {6, "summand bound dim P_n <= dim D(M)_n", {"gl11", "gl21", "q1", "resolution"}, summand_bound},
        {7, "self-injectivity characters", {"gl11", "gl21", "q1"}, self_injectivity},
        {8, "Ext against resolution multiplicities", {"gl11", "ext"}, ext_identity},
        {9, "support rank = atypicality", {"gl11", "gl21", "support"}, support_atypicality},
        {10, "projectivity equivalence chain", {"gl11", "gl21", "support"}, [] { return equivalence_chain(suite_seed); }},
        {11, "Kac filtration criteria", {"gl11", "support", "ext"}, filtration_criteria},
        {12, "duality of supports", {"gl11", "gl21", "support"}, duality},
        {13, "Cartan symmetry", {"gl11", "cartan"}, cartan},
        {14, "orbit catalogs", {"orbits"}, orbits},
    };
    return all;
}

bool criterion_selected(const Criterion& c, const std::string& only) {
    if (only.empty()) return true;
    std::stringstream ss(only);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == std::to_string(c.id)) return true;
        if (std::find(c.tags.begin(), c.tags.end(), tok) != c.tags.end()) return true;
    }
    return false;
}

std::vector<CriterionResult> replicate_suite(const std::string& only, std::uint64_t seed) {
    suite_seed = seed;
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (!criterion_selected(c, only)) continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.computed = std::string("error: ") + e.what();
        }
        r.id = c.id;
        r.name = c.name;
        r.tags = c.tags;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

Json to_json(const CriterionResult& r, bool with_runtime) {
    Json j = {{"id", r.id}, {"name", r.name}, {"tags", r.tags}, {"pass", r.pass}, {"expected", r.expected}, {"computed", r.computed}};
    if (with_runtime) j["seconds"] = r.seconds;
    return j;
}

}  // namespace superhom
