// Command-line front end: root system queries, quantum products, comparison
// lifts, grade tables, and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// configuration error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qsc/verify.hpp"

namespace {

using qsc::Json;

struct CommonArgs {
    std::string type = "A";
    int rank = 2;
    std::string parabolic; // preset name or comma list of 1-based indices
    std::string format = "text";
    std::string out_path;
    long long cap_degree = 48;
    size_t cap_group = 1000000;
    int box = 50;
    unsigned seed = 20240611;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_parabolic) {
    cmd->add_option("--type", a.type, "Dynkin type A..G");
    cmd->add_option("--rank", a.rank, "rank of the ambient system");
    if (with_parabolic)
        cmd->add_option("--parabolic", a.parabolic,
                        "preset name (e.g. C1B:2) or ordered 1-based simple indices (e.g. 2,3)");
    cmd->add_option("--format", a.format, "text or json")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", a.out_path, "write output to a file instead of stdout");
    cmd->add_option("--cap-degree", a.cap_degree, "product degree cap");
    cmd->add_option("--cap-group", a.cap_group, "group enumeration cap");
    cmd->add_option("--box", a.box, "minimum number of coset classes in box sweeps");
    cmd->add_option("--seed", a.seed, "seed for sampled checks");
}

void emit(const CommonArgs& a, const std::string& text, const Json& json) {
    std::ostringstream os;
    if (a.format == "json")
        os << json.dump(2) << "\n";
    else
        os << text;
    if (a.out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(a.out_path);
        f << os.str();
    }
}

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok) - 1);
    }
    return out;
}

qsc::Coroot parse_coroot(const std::string& s, int n) {
    qsc::Coroot out(n, 0);
    std::stringstream ss(s);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= n) throw qsc::UsageError("too many coroot coordinates");
        out[i++] = std::stoi(tok);
    }
    return out;
}

Json class_to_json(qsc::QuantumContext& ctx, const qsc::Grading* grading, const qsc::QHClass& x) {
    // deterministic order: by grade when a setup is given, else by
    // (degree, q, reduced word)
    std::vector<std::pair<std::vector<long long>, const std::pair<const qsc::BasisKey, qsc::Rational>*>>
        order;
    for (const auto& term : x.terms()) {
        std::vector<long long> key;
        if (grading) {
            key = grading->gr(ctx.table().element(term.first.w), term.first.q).a;
        } else {
            key.push_back(ctx.degree_of(term.first));
            for (int c : term.first.q) key.push_back(c);
        }
        for (int c : reduced_word(ctx.system(), ctx.table().element(term.first.w)))
            key.push_back(c);
        order.emplace_back(std::move(key), &term);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    Json terms = Json::array();
    for (const auto& [k, term] : order) {
        Json t;
        auto word = reduced_word(ctx.system(), ctx.table().element(term->first.w));
        for (int& c : word) ++c;
        t["word"] = word;
        t["q"] = term->first.q;
        t["coeff"] = qsc::to_string(term->second);
        terms.push_back(t);
    }
    return Json{{"terms", terms}};
}

std::string class_to_text(qsc::QuantumContext& ctx, const qsc::QHClass& x) {
    if (x.empty()) return "0\n";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        if (!(coeff == 1)) os << qsc::to_string(coeff) << "*";
        bool has_q = false;
        for (size_t i = 0; i < key.q.size(); ++i)
            if (key.q[i] != 0) {
                os << "q" << (i + 1);
                if (key.q[i] != 1) os << "^" << key.q[i];
                has_q = true;
            }
        auto word = reduced_word(ctx.system(), ctx.table().element(key.w));
        if (word.empty()) {
            if (!has_q) os << "1";
            else os << "";
        } else {
            os << "s[";
            for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i] + 1;
            os << "]";
        }
    }
    os << "\n";
    return os.str();
}

int cmd_roots(const CommonArgs& a) {
    qsc::VerifyEnv env;
    const qsc::RootSystem& rs = env.system(a.type + std::to_string(a.rank));
    Json j;
    j["system"] = rs.label();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    j["positive_roots"] = Json::array();
    for (int i = 0; i < rs.num_positive_roots(); ++i) {
        Json row;
        row["coords"] = rs.positive_roots()[i];
        row["coroot"] = rs.positive_coroot(i);
        row["height"] = rs.root_height(i);
        j["positive_roots"].push_back(row);
    }
    std::ostringstream os;
    os << rs.label() << ": " << rs.num_positive_roots() << " positive roots\n";
    for (const auto& beta : rs.positive_roots()) {
        for (size_t i = 0; i < beta.size(); ++i) os << (i ? " " : "  ") << beta[i];
        os << "\n";
    }
    emit(a, os.str(), j);
    return 0;
}

int cmd_weyl(const CommonArgs& a, const std::string& word_str) {
    qsc::VerifyEnv env;
    const qsc::RootSystem& rs = env.system(a.type + std::to_string(a.rank));
    qsc::WeylElement w = qsc::from_word(rs, parse_word(word_str));
    auto rword = reduced_word(rs, w);
    Json j;
    j["length"] = length(rs, w);
    j["reduced_word"] = rword;
    for (auto& v : j["reduced_word"]) v = v.get<int>() + 1;
    Json inv = Json::array();
    for (int idx : inversion_set(rs, w)) inv.push_back(rs.positive_roots()[idx]);
    j["inversions"] = inv;
    std::ostringstream os;
    os << "length " << length(rs, w) << ", reduced word";
    for (int i : rword) os << " " << i + 1;
    os << "\n";
    emit(a, os.str(), j);
    return 0;
}

int cmd_qmul(const CommonArgs& a, const std::string& u_str, const std::string& v_str) {
    qsc::VerifyOptions opt;
    opt.degree_cap = a.cap_degree;
    opt.group_cap = a.cap_group;
    qsc::VerifyEnv env(opt);
    const qsc::RootSystem& rs = env.system(a.type + std::to_string(a.rank));
    qsc::QuantumContext& ctx = env.context(rs);
    qsc::WeylElement u = qsc::from_word(rs, parse_word(u_str));
    qsc::WeylElement v = qsc::from_word(rs, parse_word(v_str));
    if (length(rs, u) + length(rs, v) > a.cap_degree)
        throw qsc::ResourceError("product degree exceeds --cap-degree");
    qsc::QHClass prod = ctx.qmul_basis(u, v);
    const qsc::Grading* grading = nullptr;
    if (!a.parabolic.empty())
        grading = env.bundle(a.type + std::to_string(a.rank), a.parabolic).grading;
    emit(a, class_to_text(ctx, prod), class_to_json(ctx, grading, prod));
    return 0;
}

int cmd_qpmul(const CommonArgs& a, const std::string& u_str, const std::string& v_str) {
    qsc::VerifyOptions opt;
    opt.degree_cap = a.cap_degree;
    opt.group_cap = a.cap_group;
    qsc::VerifyEnv env(opt);
    const auto& b = env.bundle(a.type + std::to_string(a.rank), a.parabolic.empty() ? "A:1" : a.parabolic);
    qsc::QuantumContext& ctx = env.context(*b.rs);
    qsc::WeylElement u = qsc::from_word(*b.rs, parse_word(u_str));
    qsc::WeylElement v = qsc::from_word(*b.rs, parse_word(v_str));
    qsc::QHClass prod = ctx.qhp_mul(*b.setup, u, v);
    emit(a, class_to_text(ctx, prod), class_to_json(ctx, b.grading, prod));
    return 0;
}

int cmd_pwlift(const CommonArgs& a, const std::string& lambda_str) {
    qsc::VerifyEnv env;
    const auto& b = env.bundle(a.type + std::to_string(a.rank), a.parabolic);
    const qsc::ParabolicSetup& S = *b.setup;
    if (lambda_str.empty()) {
        // no class given: dump the whole lifting table (one row per nontrivial
        // class of the quantum-parameter quotient)
        Json rows = Json::array();
        std::ostringstream os;
        os << b.label << " lifting table, quotient order "
           << S.virtual_null_lattice().quotient_order.get_str() << "\n";
        for (const auto& row : S.lifting_table()) {
            Json j;
            j["class"] = row.class_rep;
            j["lambda_B"] = row.lambda_b;
            auto word = row.u_word;
            for (int& c : word) ++c;
            j["u_word"] = word;
            j["k"] = row.k;
            rows.push_back(j);
            os << "  class";
            for (int c : row.class_rep) os << " " << c;
            os << " -> lambda_B";
            for (int c : row.lambda_b) os << " " << c;
            os << ", k = " << row.k << "\n";
        }
        emit(a, os.str(), Json{{"setup", b.label}, {"rows", rows}});
        return 0;
    }
    qsc::Coroot rep = parse_coroot(lambda_str, S.n());
    auto lift = S.pw_lift(rep);
    auto [img_w, lam] = S.psi(rep, qsc::WeylElement::identity(S.n()));
    Json j;
    j["lambda_B"] = lift.lambda_b;
    Json zero = Json::array(), minus = Json::array();
    for (int p : lift.zero_paper) zero.push_back(p);
    for (int p : lift.minus_paper) minus.push_back(p);
    j["delta_p_prime_positions"] = zero;
    j["minus_one_positions"] = minus;
    auto word = reduced_word(*b.rs, lift.wp_wpprime);
    for (int& c : word) ++c;
    j["u_word"] = word;
    j["psi_image_word"] = [&] {
        auto w2 = reduced_word(*b.rs, img_w);
        for (int& c : w2) ++c;
        return w2;
    }();
    std::ostringstream os;
    os << "lambda_B =";
    for (int c : lift.lambda_b) os << " " << c;
    os << "\nu = w_P w_{P'} word:";
    for (int c : word) os << " " << c;
    os << "\n";
    emit(a, os.str(), j);
    return 0;
}

int cmd_grade(const CommonArgs& a) {
    qsc::VerifyEnv env;
    const auto& b = env.bundle(a.type + std::to_string(a.rank), a.parabolic);
    const qsc::Grading& G = *b.grading;
    Json j;
    j["setup"] = b.label;
    j["case"] = to_string(b.setup->tag());
    Json cols = Json::array();
    std::ostringstream os, csv;
    os << b.label << " (case " << to_string(b.setup->tag()) << ")\n";
    csv << "alpha";
    for (int t = 0; t < G.width(); ++t) csv << ",e" << (t + 1);
    csv << "\n";
    for (int k = 0; k < b.rs->rank(); ++k) {
        Json col;
        col["alpha"] = k + 1;
        col["gr"] = G.coroot_grades()[k].a;
        col["gr_prime"] = G.coroot_grades_prime()[k].a;
        cols.push_back(col);
        os << "  gr(alpha_" << (k + 1) << "^vee) = " << G.coroot_grades()[k].str() << "\n";
        csv << (k + 1);
        for (int t = 0; t < G.width(); ++t) csv << "," << G.coroot_grades()[k][t];
        csv << "\n";
    }
    j["coroot_grades"] = cols;
    emit(a, a.format == "csv" ? csv.str() : os.str(), j);
    return 0;
}

int run_reports(const CommonArgs& a, const std::vector<qsc::CheckReport>& reports) {
    Json j = Json::array();
    std::ostringstream os;
    bool all_pass = true;
    for (const auto& r : reports) {
        j.push_back(r.to_json());
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (" << r.setup << ") "
           << r.instances << " instances";
        if (!r.detail.empty()) os << " - " << r.detail;
        os << "\n";
        if (!r.pass) all_pass = false;
    }
    emit(a, os.str(), j);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum Schubert calculus on flag varieties"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string u_str, v_str, lambda_str, suite = "all";
    int which = 0;

    CLI::App* roots = app.add_subcommand("roots", "positive roots of a root system");
    add_common(roots, a, false);
    CLI::App* weyl = app.add_subcommand("weyl", "length, reduced word and inversions");
    add_common(weyl, a, false);
    weyl->add_option("--u", u_str, "word of 1-based simple indices")->required();
    CLI::App* qmul = app.add_subcommand("qmul", "quantum product of two Schubert classes");
    add_common(qmul, a, true);
    qmul->add_option("--u", u_str, "left factor word");
    qmul->add_option("--v", v_str, "right factor word");
    CLI::App* qpmul = app.add_subcommand("qpmul", "quantum product on G/P via the comparison lift");
    add_common(qpmul, a, true);
    qpmul->add_option("--u", u_str, "left factor word (minimal representative)");
    qpmul->add_option("--v", v_str, "right factor word (minimal representative)");
    CLI::App* pwlift = app.add_subcommand("pwlift", "comparison lift of a quantum class");
    add_common(pwlift, a, true);
    pwlift->add_option("--lambda", lambda_str,
                       "coroot coordinates, comma separated; omit to dump the lifting table");
    CLI::App* grade = app.add_subcommand("grade", "grades of the simple coroots");
    add_common(grade, a, true);
    CLI::App* tables = app.add_subcommand("tables", "reproduce the built-in reference tables");
    add_common(tables, a, false);
    tables->add_option("--which", which, "table number 2..7 (0 = all)");
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, a, false);
    verify->add_option("--suite", suite,
                       "all, acceptance, example12, tables, filtration, coincidence, welldefined, "
                       "surjectivity, morphism, propvu, virtualnull, theorem, cup, invariants, "
                       "negative");
    verify->add_option("--which", which, "table selector for --suite tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(a);
        if (weyl->parsed()) return cmd_weyl(a, u_str);
        if (qmul->parsed()) return cmd_qmul(a, u_str, v_str);
        if (qpmul->parsed()) return cmd_qpmul(a, u_str, v_str);
        if (pwlift->parsed()) return cmd_pwlift(a, lambda_str);
        if (grade->parsed()) return cmd_grade(a);
        if (tables->parsed()) {
            qsc::VerifyOptions opt;
            opt.degree_cap = a.cap_degree;
            opt.group_cap = a.cap_group;
            opt.seed = a.seed;
            opt.box = a.box;
            qsc::VerifyEnv env(opt);
            return run_reports(a, qsc::reproduce_tables(env, which));
        }
        if (verify->parsed()) {
            qsc::VerifyOptions opt;
            opt.degree_cap = a.cap_degree;
            opt.group_cap = a.cap_group;
            opt.seed = a.seed;
            opt.box = a.box;
            qsc::VerifyEnv env(opt);
            if (suite == "acceptance") return run_reports(a, qsc::run_acceptance(env));
            return run_reports(a, qsc::run_suite(env, suite, which));
        }
    } catch (const qsc::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const qsc::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const qsc::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
