#include "qsc/grading.hpp"

#include <algorithm>
#include <sstream>

namespace qsc {

GradeVector GradeVector::operator+(const GradeVector& o) const {
    GradeVector out(*this);
    for (int i = 0; i < size(); ++i) out.a[i] += o.a[i];
    return out;
}

GradeVector GradeVector::operator-(const GradeVector& o) const {
    GradeVector out(*this);
    for (int i = 0; i < size(); ++i) out.a[i] -= o.a[i];
    return out;
}

GradeVector GradeVector::truncated(int lo, int hi) const {
    GradeVector out(size());
    for (int i = lo; i <= hi && i <= size(); ++i) out.a[i - 1] = a[i - 1];
    return out;
}

bool GradeVector::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

long long GradeVector::total() const {
    long long s = 0;
    for (long long v : a) s += v;
    return s;
}

std::string GradeVector::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

int compare(const GradeVector& x, const GradeVector& y) {
    if (x.size() != y.size()) throw UsageError("comparing grade vectors of different widths");
    for (int i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return -1;
        if (x[i] > y[i]) return 1;
    }
    return 0;
}

bool is_effective(const Coroot& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](int c) { return c >= 0; });
}

Grading::Grading(const ParabolicSetup& setup) : setup_(&setup) {
    const RootSystem& rs = setup.system();
    const int n = rs.rank(), rr = setup.r();

    q_grades_.assign(n, GradeVector(rr + 1));
    for (int k = 0; k < n; ++k)
        for (int j = 1; j <= rr + 1; ++j) q_grades_[k][j - 1] = setup.layer_pairing()[j - 1][k];

    // recursive route, one chain level at a time (paper positions first, then
    // the rest through the full lift)
    q_grades_prime_.assign(n, GradeVector(rr + 1));
    std::vector<bool> done(n, false);
    auto recurse = [&](int ambient, int level, int slot) {
        Coroot alpha_vee(n, 0);
        alpha_vee[ambient] = 1;
        ParabolicSetup::Lift lift = setup.pw_lift(alpha_vee, level);
        long long correction = 0;
        GradeVector acc(rr + 1);
        for (int i = 1; i <= level; ++i) {
            int amb_i = setup.delta_p()[i - 1];
            int a_i = lift.lambda_b[amb_i];
            if (a_i == 0) continue;
            correction += 2LL * a_i;
            for (int t = 0; t < rr + 1; ++t) acc[t] += a_i * q_grades_prime_[amb_i][t];
        }
        GradeVector u_part = gr_prime_w(lift.wp_wpprime);
        GradeVector out(rr + 1);
        out[slot] = u_part.total() + 2 + correction;
        for (int t = 0; t < rr + 1; ++t) out[t] -= u_part[t] + acc[t];
        q_grades_prime_[ambient] = out;
        done[ambient] = true;
    };
    for (int j = 1; j <= rr; ++j) recurse(setup.delta_p()[j - 1], j - 1, j - 1);
    for (int k = 0; k < n; ++k)
        if (!done[k]) recurse(k, rr, rr);
}

GradeVector Grading::gr_w(const WeylElement& w) const {
    const RootSystem& rs = setup_->system();
    GradeVector out(width());
    for (int idx : inversion_set(rs, w)) out[setup_->root_level(idx) - 1] += 1;
    return out;
}

GradeVector Grading::gr_q(const Coroot& lambda) const {
    GradeVector out(width());
    for (int k = 0; k < setup_->n(); ++k) {
        if (lambda[k] == 0) continue;
        for (int t = 0; t < width(); ++t) out[t] += lambda[k] * q_grades_[k][t];
    }
    return out;
}

GradeVector Grading::gr(const WeylElement& w, const Coroot& lambda) const {
    return gr_w(w) + gr_q(lambda);
}

GradeVector Grading::gr_prime_w(const WeylElement& w) const {
    const ParabolicSetup& s = *setup_;
    std::vector<std::vector<int>> chain;
    for (int j = 1; j <= s.r() + 1; ++j) chain.push_back(s.chain_subset(j));
    std::vector<WeylElement> factors = parabolic_decompose(s.system(), w, chain);
    GradeVector out(width());
    for (int j = 0; j < width(); ++j) out[j] = length(s.system(), factors[j]);
    return out;
}

GradeVector Grading::gr_prime(const WeylElement& w, const Coroot& lambda) const {
    GradeVector out = gr_prime_w(w);
    for (int k = 0; k < setup_->n(); ++k) {
        if (lambda[k] == 0) continue;
        for (int t = 0; t < width(); ++t) out[t] += lambda[k] * q_grades_prime_[k][t];
    }
    return out;
}

bool Grading::filtration_leq(const WeylElement& w, const Coroot& lambda,
                             const GradeVector& bound) const {
    return lex_leq(gr(w, lambda), bound);
}

} // namespace qsc
