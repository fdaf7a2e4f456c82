#include "qsc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace qsc {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

Json key_json(QuantumContext& ctx, const BasisKey& key) {
    Json j;
    j["word"] = reduced_word(ctx.system(), ctx.table().element(key.w));
    for (auto& v : j["word"]) v = v.get<int>() + 1;
    j["q"] = key.q;
    return j;
}

std::vector<int> one_based(const std::vector<int>& word) {
    std::vector<int> w;
    for (int i : word) w.push_back(i + 1);
    return w;
}

} // namespace

// wall time stays out of the JSON form so identical configurations produce
// byte-identical reports
Json CheckReport::to_json() const {
    Json j;
    j["id"] = id;
    j["setup"] = setup;
    j["pass"] = pass;
    j["skipped"] = skipped;
    j["instances"] = instances;
    j["detail"] = detail;
    if (!counterexample.is_null()) j["counterexample"] = counterexample;
    return j;
}

void CheckReport::fail(const std::string& why, Json example) {
    if (pass) {
        detail = why;
        counterexample = std::move(example);
    }
    pass = false;
}

const RootSystem& VerifyEnv::system(DynkinType t, int rank) {
    std::string label = to_string(t) + std::to_string(rank);
    auto it = systems_.find(label);
    if (it == systems_.end())
        it = systems_.emplace(label, std::make_unique<RootSystem>(RootSystem::build(t, rank))).first;
    return *it->second;
}

const RootSystem& VerifyEnv::system(const std::string& label) {
    if (label.size() < 2) throw ConfigError("bad system label " + label);
    return system(dynkin_type_from_char(label[0]), std::stoi(label.substr(1)));
}

QuantumContext& VerifyEnv::context(const RootSystem& rs) {
    auto it = contexts_.find(&rs);
    if (it == contexts_.end())
        it = contexts_
                 .emplace(&rs, std::make_unique<QuantumContext>(rs, opt_.degree_cap, opt_.group_cap))
                 .first;
    return *it->second;
}

const VerifyEnv::Bundle& VerifyEnv::bundle(const std::string& system_label, const std::string& spec) {
    std::string key = system_label + "/" + spec;
    auto it = bundles_.find(key);
    if (it != bundles_.end()) return *it->second;

    const RootSystem& rs = system(system_label);
    std::unique_ptr<ParabolicSetup> setup;
    if (!spec.empty() && (std::isdigit(static_cast<unsigned char>(spec[0])))) {
        std::vector<int> idx;
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) idx.push_back(std::stoi(tok) - 1);
        setup = std::make_unique<ParabolicSetup>(rs, idx);
    } else {
        setup = std::make_unique<ParabolicSetup>(ParabolicSetup::preset(rs, spec));
    }
    auto grading = std::make_unique<Grading>(*setup);
    auto b = std::make_unique<Bundle>();
    b->rs = &rs;
    b->setup = setup.get();
    b->grading = grading.get();
    b->label = key;
    setups_.push_back(std::move(setup));
    gradings_.push_back(std::move(grading));
    return *bundles_.emplace(key, std::move(b)).first->second;
}

Coroot VerifyEnv::paper_coroot(const ParabolicSetup& setup,
                               const std::vector<std::pair<int, int>>& terms) const {
    Coroot out(setup.n(), 0);
    for (auto [pos, coeff] : terms) out[setup.ambient_of(pos)] += coeff;
    return out;
}

WeylElement VerifyEnv::paper_word(const ParabolicSetup& setup, const std::vector<int>& word) const {
    std::vector<int> ambient;
    for (int p : word) ambient.push_back(setup.ambient_of(p));
    return from_word(setup.system(), ambient);
}

void ProductAudit::audit(QuantumContext& ctx, const WeylElement& u, const WeylElement& v,
                         const QHClass& prod) {
    const RootSystem& rs = ctx.system();
    ++products;
    long long du = length(rs, u), dv = length(rs, v);
    std::vector<int> sgn_bound(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) sgn_bound[i] = sgn_alpha(rs, u, i) + sgn_alpha(rs, v, i);
    for (const auto& [key, coeff] : prod.terms()) {
        ++term_checks;
        const WeylElement& w = ctx.table().element(key.w);
        bool bad = false;
        std::string why;
        if (coeff < 0) {
            bad = true;
            why = "negative structure constant";
        } else if (ctx.degree_of(key) != du + dv) {
            bad = true;
            why = "degree inhomogeneity";
        } else {
            for (int i = 0; i < rs.rank() && !bad; ++i) {
                Root alpha(rs.rank(), 0);
                alpha[i] = 1;
                long long lhs = sgn_alpha(rs, w, i) + rs.pairing(alpha, key.q);
                if (lhs > sgn_bound[i]) {
                    bad = true;
                    why = "descent inequality violated";
                }
            }
        }
        if (bad) {
            ++violations;
            if (first_violation.is_null()) {
                first_violation["why"] = why;
                first_violation["u"] = one_based(reduced_word(rs, u));
                first_violation["v"] = one_based(reduced_word(rs, v));
                first_violation["term"] = key_json(ctx, key);
                first_violation["coeff"] = to_string(coeff);
            }
        }
    }
    if (check_commutativity) {
        QHClass swapped = ctx.qmul_basis(v, u);
        if (!(swapped == prod)) {
            ++violations;
            if (first_violation.is_null()) {
                first_violation["why"] = "commutativity violated";
                first_violation["u"] = one_based(reduced_word(rs, u));
                first_violation["v"] = one_based(reduced_word(rs, v));
            }
        }
    }
}

CheckReport check_root_counts(VerifyEnv& env) {
    Timer t;
    CheckReport rep;
    rep.id = "root-counts";
    rep.setup = "A1..A5 B2..B4 C2..C4 D4 D5 E6 E7 E8 F4 G2";
    const std::vector<std::pair<std::string, int>> expect = {
        {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"A5", 15}, {"B2", 4},
        {"B3", 9},  {"B4", 16}, {"C2", 4},  {"C3", 9},  {"C4", 16}, {"D4", 12},
        {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
    for (const auto& [label, count] : expect) {
        const RootSystem& rs = env.system(label);
        ++rep.instances;
        if (rs.num_positive_roots() != count)
            rep.fail("positive root count mismatch for " + label,
                     Json{{"expected", count}, {"got", rs.num_positive_roots()}});
        // closure sanity: reflecting any positive root lands in R^+ or -R^+
        for (int idx = 0; idx < rs.num_positive_roots() && rep.pass; ++idx)
            for (int i = 0; i < rs.rank(); ++i) {
                Root img = rs.reflect_root(i, rs.positive_roots()[idx]);
                if (!rs.is_root(img)) rep.fail("reflection left the root system", Json{{"system", label}});
            }
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_filtration(VerifyEnv& env, const std::string& system, const std::string& setup,
                             ProductAudit* audit) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    QuantumContext& ctx = env.context(*b.rs);
    const Grading& G = *b.grading;
    CheckReport rep;
    rep.id = "filtration";
    rep.setup = b.label;
    const bool corrupt = env.options().corruption == Corruption::GradingOffByOne;

    std::vector<int> full(b.rs->rank());
    std::iota(full.begin(), full.end(), 0);
    auto elems = enumerate_parabolic(*b.rs, full, env.options().group_cap);
    for (const WeylElement& u : elems) {
        GradeVector gu = G.gr_w(u);
        for (const WeylElement& v : elems) {
            GradeVector bound = gu + G.gr_w(v);
            QHClass prod = ctx.qmul_basis(u, v);
            if (audit) audit->audit(ctx, u, v, prod);
            ++rep.instances;
            for (const auto& [key, coeff] : prod.terms()) {
                GradeVector g = G.gr(ctx.table().element(key.w), key.q);
                if (corrupt && !ctx.table().element(key.w).is_identity()) g[0] += 1;
                if (!lex_leq(g, bound)) {
                    Json ex;
                    ex["u"] = one_based(reduced_word(*b.rs, u));
                    ex["v"] = one_based(reduced_word(*b.rs, v));
                    ex["term"] = key_json(ctx, key);
                    ex["gr"] = g.a;
                    ex["bound"] = bound.a;
                    rep.fail("term exceeds the filtration bound", ex);
                }
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_grading_coincidence(VerifyEnv& env, const std::string& system,
                                      const std::string& setup, int sample) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const Grading& G = *b.grading;
    CheckReport rep;
    rep.id = "grading-coincidence";
    rep.setup = b.label;

    std::vector<WeylElement> elems;
    if (sample <= 0) {
        std::vector<int> full(rs.rank());
        std::iota(full.begin(), full.end(), 0);
        elems = enumerate_parabolic(rs, full, env.options().group_cap);
    } else {
        std::mt19937 rng(env.options().seed);
        std::uniform_int_distribution<int> letter(0, rs.rank() - 1);
        std::uniform_int_distribution<int> len(0, 3 * rs.num_positive_roots());
        for (int k = 0; k < sample; ++k) {
            std::vector<int> word(len(rng));
            for (int& c : word) c = letter(rng);
            elems.push_back(from_word(rs, word));
        }
    }
    for (const WeylElement& w : elems) {
        GradeVector direct_w = G.gr_w(w);
        GradeVector recursive_w = G.gr_prime_w(w);
        for (int k = 0; k < rs.rank(); ++k) {
            ++rep.instances;
            GradeVector direct = direct_w + G.coroot_grades()[k];
            GradeVector recursive = recursive_w + G.coroot_grades_prime()[k];
            if (direct != recursive) {
                Json ex;
                ex["w"] = one_based(reduced_word(rs, w));
                ex["alpha"] = k + 1;
                ex["gr"] = direct.a;
                ex["gr_prime"] = recursive.a;
                rep.fail("gr and gr' disagree", ex);
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_psi_welldefined(VerifyEnv& env, const std::string& system,
                                  const std::string& setup) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const ParabolicSetup& S = *b.setup;
    const Grading& G = *b.grading;
    CheckReport rep;
    rep.id = "psi-welldefined";
    rep.setup = b.label;

    std::vector<int> full(rs.rank());
    std::iota(full.begin(), full.end(), 0);
    auto reps = min_coset_reps(rs, full, S.delta_p(), env.options().group_cap);

    // enumerate coset classes: exponents on the simple coroots outside Delta_P
    std::vector<int> outside;
    for (int a = 0; a < rs.rank(); ++a)
        if (!S.paper_pos_of(a)) outside.push_back(a);
    int width = 1;
    long long need = env.options().box;
    while (std::pow(static_cast<double>(width + 1), outside.size()) < static_cast<double>(need))
        ++width;
    std::vector<Coroot> classes;
    std::vector<int> exps(outside.size(), 0);
    while (true) {
        Coroot rep_c(rs.rank(), 0);
        for (size_t i = 0; i < outside.size(); ++i) rep_c[outside[i]] = exps[i];
        classes.push_back(rep_c);
        size_t p = 0;
        while (p < exps.size() && ++exps[p] > width) exps[p++] = 0;
        if (p == exps.size()) break;
    }

    for (const Coroot& cls : classes) {
        for (const WeylElement& w : reps) {
            auto [img_w, lambda_b] = S.psi(cls, w);
            GradeVector g = G.gr(img_w, lambda_b).truncated(1, S.r());
            ++rep.instances;
            if (!g.is_zero()) {
                Json ex;
                ex["class"] = cls;
                ex["w"] = one_based(reduced_word(rs, w));
                ex["lambda_B"] = lambda_b;
                ex["gr_1_r"] = g.a;
                rep.fail("psi image has nonzero low grade", ex);
            }
        }
    }
    rep.detail = std::to_string(classes.size()) + " classes x " + std::to_string(reps.size()) +
                 " representatives";
    rep.wall_ms = t.ms();
    return rep;
}

namespace {

// is q_lambda sigma^w the psi image of a basis element of QH*(G/P)?
bool is_psi_image(const ParabolicSetup& S, const WeylElement& w, const Coroot& lambda) {
    ParabolicSetup::Lift lift = S.pw_lift(lambda);
    if (lift.lambda_b != lambda) return false;
    WeylElement w1 = min_coset_rep(S.system(), w, S.delta_p());
    return w1 * lift.wp_wpprime == w;
}

} // namespace

CheckReport check_psi_injective_surjective(VerifyEnv& env, const std::string& system,
                                           const std::string& setup, bool expect_surjective) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const ParabolicSetup& S = *b.setup;
    const Grading& G = *b.grading;
    CheckReport rep;
    rep.id = "psi-surjectivity";
    rep.setup = b.label;

    // injectivity on a sample of basis elements: distinct inputs, distinct images
    {
        std::vector<int> full(rs.rank());
        std::iota(full.begin(), full.end(), 0);
        auto reps = min_coset_reps(rs, full, S.delta_p(), env.options().group_cap);
        std::map<std::pair<std::vector<int>, Coroot>, int> seen;
        std::vector<int> outside;
        for (int a = 0; a < rs.rank(); ++a)
            if (!S.paper_pos_of(a)) outside.push_back(a);
        for (int c0 = 0; c0 <= 2; ++c0)
            for (const WeylElement& w : reps) {
                Coroot cls(rs.rank(), 0);
                if (!outside.empty()) cls[outside[0]] = c0;
                auto [iw, il] = S.psi(cls, w);
                auto key = std::make_pair(iw.matrix(), il);
                if (!seen.emplace(key, 1).second)
                    rep.fail("psi image collision", Json{{"w", one_based(reduced_word(rs, w))}});
                ++rep.instances;
            }
    }

    // surjectivity sweep up to the q-degree bound
    const int bound = env.options().surj_qsum_bound;
    std::vector<int> full(rs.rank());
    std::iota(full.begin(), full.end(), 0);
    auto elems = enumerate_parabolic(rs, full, env.options().group_cap);
    std::optional<Json> witness;
    long long image_count = 0, graded_count = 0;

    std::vector<Coroot> lambdas;
    Coroot cur(rs.rank(), 0);
    std::function<void(int, int)> enum_lambda = [&](int pos, int rem) {
        if (pos == rs.rank()) {
            lambdas.push_back(cur);
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            cur[pos] = c;
            enum_lambda(pos + 1, rem - c);
        }
        cur[pos] = 0;
    };
    enum_lambda(0, bound);

    for (const WeylElement& w : elems) {
        GradeVector gw = G.gr_w(w);
        for (const Coroot& lam : lambdas) {
            GradeVector g = gw + G.gr_q(lam);
            bool low_zero = true;
            for (int i = 0; i < S.r(); ++i)
                if (g[i] != 0) { low_zero = false; break; }
            if (!low_zero) continue;
            ++graded_count;
            ++rep.instances;
            if (is_psi_image(S, w, lam)) {
                ++image_count;
            } else if (!witness) {
                Json ex;
                ex["w"] = one_based(reduced_word(rs, w));
                ex["q"] = lam;
                ex["grade"] = g.a;
                witness = ex;
            }
        }
    }

    bool surjective = !witness.has_value();
    std::ostringstream os;
    os << graded_count << " graded elements, " << image_count << " in the image (q-sum bound "
       << bound << ")";
    rep.detail = os.str();
    if (surjective != expect_surjective) {
        rep.fail(expect_surjective ? "expected surjective up to bound, found witness"
                                   : "expected a non-surjectivity witness, found none",
                 witness ? *witness : Json());
    } else if (!surjective) {
        rep.counterexample = *witness; // informational: the witness element
        rep.detail += "; witness recorded";
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_psi_morphism(VerifyEnv& env, const std::string& system, const std::string& setup,
                               int length_bound, ProductAudit* audit) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const ParabolicSetup& S = *b.setup;
    const Grading& G = *b.grading;
    QuantumContext& ctx = env.context(rs);
    CheckReport rep;
    rep.id = "psi-morphism";
    rep.setup = b.label;

    std::vector<int> full(rs.rank());
    std::iota(full.begin(), full.end(), 0);
    auto reps = min_coset_reps(rs, full, S.delta_p(), env.options().group_cap);

    // part 1: the top-grade part of a product of Schubert classes equals the
    // re-embedded comparison product, term by term
    for (const WeylElement& u : reps) {
        long long lu = length(rs, u);
        for (const WeylElement& v : reps) {
            long long lv = length(rs, v);
            if (length_bound >= 0 && lu + lv > length_bound) continue;
            QHClass prod = ctx.qmul_basis(u, v);
            if (audit) audit->audit(ctx, u, v, prod);
            GradeVector top(S.r() + 1);
            top[S.r()] = lu + lv;
            QHClass graded;
            for (const auto& [key, coeff] : prod.terms())
                if (G.gr(ctx.table().element(key.w), key.q) == top) graded.add(key, coeff);
            QHClass embedded;
            QHClass p_side = ctx.qhp_mul(S, u, v);
            for (const auto& [key, coeff] : p_side.terms()) {
                auto [iw, il] = S.psi(key.q, ctx.table().element(key.w));
                embedded.add(BasisKey{ctx.table().id(iw), il}, coeff);
            }
            ++rep.instances;
            if (!(graded == embedded)) {
                Json ex;
                ex["part"] = 1;
                ex["u"] = one_based(reduced_word(rs, u));
                ex["v"] = one_based(reduced_word(rs, v));
                ex["top_terms"] = graded.size();
                ex["embedded_terms"] = embedded.size();
                rep.fail("top-grade part differs from the comparison product", ex);
            }
            if (graded.empty())
                rep.fail("product has no top-grade part",
                         Json{{"u", one_based(reduced_word(rs, u))},
                              {"v", one_based(reduced_word(rs, v))}});
        }
    }

    // parts 2 and 3 run over the nontrivial quantum classes of the lifting table
    auto rows = S.lifting_table();

    for (const auto& row : rows) {
        GradeVector grow = G.gr(row.u, row.lambda_b);
        for (const WeylElement& v : reps) {
            long long lv = length(rs, v);
            QHClass prod = ctx.qmul_basis(row.u, v);
            if (audit) audit->audit(ctx, row.u, v, prod);
            QHClass shifted = prod.q_shifted(row.lambda_b);
            GradeVector expect_grade = grow;
            expect_grade[S.r()] += lv;
            WeylElement expect_w = v * row.u;
            ++rep.instances;
            for (const auto& [key, coeff] : shifted.terms()) {
                GradeVector g = G.gr(ctx.table().element(key.w), key.q);
                if (compare(g, expect_grade) != 0) continue;
                bool right = ctx.table().element(key.w) == expect_w && key.q == row.lambda_b &&
                             coeff == 1;
                if (!right) {
                    Json ex;
                    ex["part"] = 2;
                    ex["class"] = row.class_rep;
                    ex["v"] = one_based(reduced_word(rs, v));
                    ex["term"] = key_json(ctx, key);
                    ex["coeff"] = to_string(coeff);
                    rep.fail("quantum-class times Schubert class has a wrong leading term", ex);
                }
            }
            // the expected leading term must actually occur
            if (shifted.coefficient(BasisKey{ctx.table().id(expect_w), row.lambda_b}) != 1)
                rep.fail("expected leading term missing (part 2)",
                         Json{{"class", row.class_rep}, {"v", one_based(reduced_word(rs, v))}});
        }
    }

    // part 3: products of two quantum classes, including the squared classes
    std::vector<std::pair<Coroot, Coroot>> class_pairs;
    for (const auto& x : rows)
        for (const auto& y : rows) class_pairs.emplace_back(x.class_rep, y.class_rep);
    for (const auto& [cx, cy] : class_pairs) {
        ParabolicSetup::Lift lx = S.pw_lift(cx), ly = S.pw_lift(cy);
        Coroot sum(rs.rank(), 0);
        for (int c = 0; c < rs.rank(); ++c) sum[c] = cx[c] + cy[c];
        ParabolicSetup::Lift lsum = S.pw_lift(sum);
        QHClass prod = ctx.qmul_basis(lx.wp_wpprime, ly.wp_wpprime);
        if (audit) audit->audit(ctx, lx.wp_wpprime, ly.wp_wpprime, prod);
        Coroot shift(rs.rank(), 0);
        for (int c = 0; c < rs.rank(); ++c) shift[c] = lx.lambda_b[c] + ly.lambda_b[c];
        QHClass shifted = prod.q_shifted(shift);
        GradeVector expect_grade = G.gr(lx.wp_wpprime, lx.lambda_b) + G.gr(ly.wp_wpprime, ly.lambda_b);
        ++rep.instances;
        bool found_expected = false;
        for (const auto& [key, coeff] : shifted.terms()) {
            GradeVector g = G.gr(ctx.table().element(key.w), key.q);
            if (compare(g, expect_grade) != 0) continue;
            bool right = ctx.table().element(key.w) == lsum.wp_wpprime && key.q == lsum.lambda_b &&
                         coeff == 1;
            if (right)
                found_expected = true;
            else {
                Json ex;
                ex["part"] = 3;
                ex["class_x"] = cx;
                ex["class_y"] = cy;
                ex["term"] = key_json(ctx, key);
                ex["coeff"] = to_string(coeff);
                rep.fail("product of quantum classes has a wrong leading term", ex);
            }
        }
        if (!found_expected)
            rep.fail("expected leading term missing (part 3)", Json{{"class_x", cx}, {"class_y", cy}});
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_prop_vu(VerifyEnv& env, const std::string& system, const std::string& setup,
                          ProductAudit* audit) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const ParabolicSetup& S = *b.setup;
    const Grading& G = *b.grading;
    QuantumContext& ctx = env.context(rs);
    CheckReport rep;
    rep.id = "leading-term-vu";
    rep.setup = b.label;

    std::vector<int> full(rs.rank());
    std::iota(full.begin(), full.end(), 0);
    auto reps = min_coset_reps(rs, full, S.delta_p(), env.options().group_cap);
    auto levi = enumerate_parabolic(rs, S.delta_p(), env.options().group_cap);

    for (const WeylElement& v : reps)
        for (const WeylElement& u : levi) {
            QHClass prod = ctx.qmul_basis(v, u);
            if (audit) audit->audit(ctx, v, u, prod);
            WeylElement vu = v * u;
            GradeVector lead = G.gr_w(vu);
            Coroot zero(rs.rank(), 0);
            ++rep.instances;
            if (prod.coefficient(BasisKey{ctx.table().id(vu), zero}) != 1)
                rep.fail("leading coefficient of sigma^{vu} is not 1",
                         Json{{"v", one_based(reduced_word(rs, v))},
                              {"u", one_based(reduced_word(rs, u))}});
            for (const auto& [key, coeff] : prod.terms()) {
                if (ctx.table().element(key.w) == vu && key.q == zero) continue;
                GradeVector g = G.gr(ctx.table().element(key.w), key.q);
                if (!lex_less(g, lead)) {
                    Json ex;
                    ex["v"] = one_based(reduced_word(rs, v));
                    ex["u"] = one_based(reduced_word(rs, u));
                    ex["term"] = key_json(ctx, key);
                    rep.fail("non-leading term is not strictly lower", ex);
                }
            }
        }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_virtual_null_product(VerifyEnv& env, const std::string& system,
                                       const std::string& setup, ProductAudit* audit) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const ParabolicSetup& S = *b.setup;
    const Grading& G = *b.grading;
    QuantumContext& ctx = env.context(rs);
    CheckReport rep;
    rep.id = "virtual-null-product";
    rep.setup = b.label;

    std::vector<int> full(rs.rank());
    std::iota(full.begin(), full.end(), 0);
    auto reps = min_coset_reps(rs, full, S.delta_p(), env.options().group_cap);
    auto levi = enumerate_parabolic(rs, S.delta_p(), env.options().group_cap);
    long long inapplicable = 0;

    for (const WeylElement& v : reps)
        for (const WeylElement& u : levi) {
            QHClass prod = ctx.qmul_basis(v, u);
            if (audit) audit->audit(ctx, v, u, prod);
            WeylElement vu = v * u;
            GradeVector lead = G.gr_w(v) + G.gr_w(u);
            Coroot zero(rs.rank(), 0);
            for (const auto& [key, coeff] : prod.terms()) {
                if (!S.is_virtual_null(key.q)) {
                    ++inapplicable;
                    continue;
                }
                GradeVector g = G.gr(ctx.table().element(key.w), key.q);
                if (compare(g, lead) != 0) continue;
                ++rep.instances;
                bool is_vu = ctx.table().element(key.w) == vu && key.q == zero;
                if (!is_vu || coeff != 1) {
                    Json ex;
                    ex["v"] = one_based(reduced_word(rs, v));
                    ex["u"] = one_based(reduced_word(rs, u));
                    ex["term"] = key_json(ctx, key);
                    rep.fail("virtual-null coefficient at critical grade is not delta_{vu}", ex);
                }
            }
        }
    rep.detail = std::to_string(inapplicable) + " non-null terms outside the lemma's branch";
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_associativity(VerifyEnv& env, const std::string& system, int triples,
                                int max_word_len) {
    Timer t;
    const RootSystem& rs = env.system(system);
    QuantumContext& ctx = env.context(rs);
    CheckReport rep;
    rep.id = "associativity";
    rep.setup = system + " (" + std::to_string(triples) + " triples, seed " +
                std::to_string(env.options().seed) + ")";

    std::mt19937 rng(env.options().seed);
    std::uniform_int_distribution<int> letter(0, rs.rank() - 1);
    std::uniform_int_distribution<int> len(0, max_word_len);
    auto random_elem = [&] {
        std::vector<int> word(len(rng));
        for (int& c : word) c = letter(rng);
        return from_word(rs, word);
    };
    for (int k = 0; k < triples; ++k) {
        WeylElement a = random_elem(), bb = random_elem(), c = random_elem();
        QHClass ab_c = ctx.qmul(ctx.qmul_basis(a, bb), ctx.basis(c));
        QHClass a_bc = ctx.qmul(ctx.basis(a), ctx.qmul_basis(bb, c));
        ++rep.instances;
        if (!(ab_c == a_bc)) {
            Json ex;
            ex["a"] = one_based(reduced_word(rs, a));
            ex["b"] = one_based(reduced_word(rs, bb));
            ex["c"] = one_based(reduced_word(rs, c));
            rep.fail("associativity violated", ex);
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_grade_uniqueness(VerifyEnv& env, const std::string& system,
                                   const std::string& setup) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const ParabolicSetup& S = *b.setup;
    const Grading& G = *b.grading;
    CheckReport rep;
    rep.id = "grade-uniqueness";
    rep.setup = b.label;
    const int rr = S.r();
    if (rr < 2) {
        rep.skipped = true;
        rep.detail = "needs r >= 2";
        return rep;
    }

    // over W_{P~} x effective box in Q_{P~}: gradings lie in Z^{r-1} x {0,0}
    // and are pairwise distinct
    std::vector<int> sub(S.delta_p().begin(), S.delta_p().end() - 1);
    auto levi = enumerate_parabolic(rs, sub, env.options().group_cap);
    std::map<std::vector<long long>, Json> seen;
    std::vector<Coroot> etas;
    Coroot cur(rs.rank(), 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int rem) {
        if (pos == sub.size()) {
            etas.push_back(cur);
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            cur[sub[pos]] = c;
            rec(pos + 1, rem - c);
        }
        cur[sub[pos]] = 0;
    };
    rec(0, 4);
    for (const WeylElement& w : levi) {
        GradeVector gw = G.gr_w(w);
        for (const Coroot& eta : etas) {
            GradeVector g = gw + G.gr_q(eta);
            ++rep.instances;
            if (g[rr - 1] != 0 || g[rr] != 0)
                rep.fail("grade leaks outside the first r-1 slots",
                         Json{{"w", one_based(reduced_word(rs, w))}, {"eta", eta}});
            Json id;
            id["w"] = one_based(reduced_word(rs, w));
            id["eta"] = eta;
            auto ins = seen.emplace(g.a, id);
            if (!ins.second)
                rep.fail("two basis elements share a grade",
                         Json{{"first", ins.first->second}, {"second", id}, {"grade", g.a}});
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

CheckReport check_semigroup(VerifyEnv& env, const std::string& system, const std::string& setup,
                            int bound) {
    Timer t;
    const auto& b = env.bundle(system, setup);
    const RootSystem& rs = *b.rs;
    const Grading& G = *b.grading;
    CheckReport rep;
    rep.id = "grade-semigroup";
    rep.setup = b.label;

    // all grades of basis elements with l(w) + <2rho,lambda> <= bound; the set
    // is addition-closed inside that ball
    std::vector<int> full(rs.rank());
    std::iota(full.begin(), full.end(), 0);
    auto elems = enumerate_parabolic(rs, full, env.options().group_cap);
    std::set<std::vector<long long>> grades;
    std::vector<Coroot> lambdas;
    Coroot cur(rs.rank(), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == rs.rank()) {
            lambdas.push_back(cur);
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            cur[pos] = c;
            rec(pos + 1, rem - c);
        }
        cur[pos] = 0;
    };
    rec(0, bound / 2);
    for (const WeylElement& w : elems) {
        if (length(rs, w) > bound) continue;
        GradeVector gw = G.gr_w(w);
        for (const Coroot& lam : lambdas) {
            long long deg = length(rs, w) + 2 * std::accumulate(lam.begin(), lam.end(), 0LL);
            if (deg > bound) continue;
            grades.insert((gw + G.gr_q(lam)).a);
        }
    }
    for (const auto& x : grades)
        for (const auto& y : grades) {
            long long tot = 0;
            for (size_t i = 0; i < x.size(); ++i) tot += x[i] + y[i];
            if (tot > bound) continue;
            std::vector<long long> sum(x.size());
            for (size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
            ++rep.instances;
            if (!grades.count(sum))
                rep.fail("grade semigroup is not closed under addition",
                         Json{{"x", x}, {"y", y}, {"sum", sum}});
        }
    rep.wall_ms = t.ms();
    return rep;
}

} // namespace qsc
