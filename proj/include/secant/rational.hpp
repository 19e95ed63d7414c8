#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace secant {

// Exact rational scalar. All geometry in this project is done over Q;
// floating point is confined to the annealer's acceptance test and SVG layout.
using Rat = mpq_class;

// Column vector / point in Q^m.
using QVec = std::vector<Rat>;

// Dense rational matrix, row major.
using QMat = std::vector<QVec>;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Problem/data mismatch (e.g. VoronoiPartition on non-singleton sets).
struct mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sphere-lift certification failed at the given height; retry with suggested_height.
struct lift_error : std::runtime_error {
    Rat suggested_height;
    lift_error(const std::string& msg, Rat suggested)
        : std::runtime_error(msg), suggested_height(std::move(suggested)) {}
};

// Prime unusable for the requested model; retry with a different prime.
struct prime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration budget exceeded; required reports the evaluation count needed.
struct budget_error : std::runtime_error {
    long long required;
    budget_error(const std::string& msg, long long req)
        : std::runtime_error(msg), required(req) {}
};

// mpq_class(num, den) does not canonicalize; comparisons require canonical
// form, so every fraction built from parts must go through here.
inline Rat frac(long num, long den) {
    if (den == 0) throw input_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat frac(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw input_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Lowest terms, positive denominator; bare integer when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string qvec_to_string(const QVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Binomial clamped to long long; throws if it does not fit.
inline long long binomial_ll(unsigned n, unsigned k) {
    mpz_class b = binomial(n, k);
    if (!b.fits_slong_p()) throw input_error("binomial coefficient overflows");
    return b.get_si();
}

}  // namespace secant
