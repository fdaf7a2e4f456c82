#pragma once

#include "qsc/parabolic.hpp"

namespace qsc {

/// Element of Z^{r+1} under the lexicographical order.
struct GradeVector {
    std::vector<long long> a;

    GradeVector() = default;
    explicit GradeVector(int len) : a(len, 0) {}

    long long& operator[](int i) { return a[i]; }
    long long operator[](int i) const { return a[i]; }
    int size() const { return static_cast<int>(a.size()); }

    bool operator==(const GradeVector& o) const { return a == o.a; }
    bool operator!=(const GradeVector& o) const { return a != o.a; }

    GradeVector operator+(const GradeVector& o) const;
    GradeVector operator-(const GradeVector& o) const;

    /// Coordinates outside [lo, hi] (1-based, inclusive) zeroed.
    GradeVector truncated(int lo, int hi) const;
    bool is_zero() const;
    long long total() const;
    std::string str() const;
};

/// Lexicographic comparison: -1, 0, +1.
int compare(const GradeVector& x, const GradeVector& y);
inline bool lex_less(const GradeVector& x, const GradeVector& y) { return compare(x, y) < 0; }
inline bool lex_leq(const GradeVector& x, const GradeVector& y) { return compare(x, y) <= 0; }

/// Grading machinery for one parabolic setup. Precomputes the gradings of all
/// simple coroots for both the direct map (layer sums over the chain) and the
/// recursive map (lift-by-lift along the chain); the two must agree, but the
/// recursive one is kept as an independent route for the coincidence check.
class Grading {
  public:
    explicit Grading(const ParabolicSetup& setup);

    const ParabolicSetup& setup() const { return *setup_; }
    int width() const { return setup_->r() + 1; }

    GradeVector gr(const WeylElement& w, const Coroot& lambda) const;
    GradeVector gr_w(const WeylElement& w) const;
    GradeVector gr_q(const Coroot& lambda) const;

    GradeVector gr_prime(const WeylElement& w, const Coroot& lambda) const;
    /// Chain decomposition route for gr'(w, 0).
    GradeVector gr_prime_w(const WeylElement& w) const;

    /// gr(id, alpha_k^vee) per ambient simple index k.
    const std::vector<GradeVector>& coroot_grades() const { return q_grades_; }
    const std::vector<GradeVector>& coroot_grades_prime() const { return q_grades_prime_; }

    bool filtration_leq(const WeylElement& w, const Coroot& lambda, const GradeVector& bound) const;

  private:
    const ParabolicSetup* setup_;
    std::vector<GradeVector> q_grades_;
    std::vector<GradeVector> q_grades_prime_;
};

/// True when q_lambda is a polynomial (no negative exponent).
bool is_effective(const Coroot& lambda);

} // namespace qsc
