#include "secant/geometry.hpp"

#include <utility>

namespace secant::geometry {

namespace {

void check_same_length(const std::vector<QVec>& rows) {
    if (rows.empty()) return;
    const size_t m = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m) throw input_error("mixed row lengths");
}

// Clear denominators row by row; rank is invariant under row scaling.
std::vector<std::vector<mpz_class>> to_integer_rows(const QMat& rows) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        mpz_class lcm = 1;
        for (const auto& x : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<mpz_class> row;
        row.reserve(r.size());
        for (const auto& x : r) row.push_back(x.get_num() * (lcm / x.get_den()));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

int rank(const QMat& rows) {
    check_same_length(rows);
    auto m = to_integer_rows(rows);
    const size_t nr = m.size();
    const size_t nc = nr ? m.front().size() : 0;

    size_t r = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t pivot = r;
        while (pivot < nr && m[pivot][c] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(m[pivot], m[r]);
        // Bareiss step: entries stay minors of the input, divisions are exact.
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = c + 1; j < nc; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int affine_dim(const std::vector<QVec>& points) {
    if (points.empty()) return -1;
    check_same_length(points);
    QMat diffs;
    diffs.reserve(points.size() - 1);
    const QVec& base = points.front();
    for (size_t i = 1; i < points.size(); ++i) {
        QVec d(base.size());
        for (size_t j = 0; j < base.size(); ++j) d[j] = points[i][j] - base[j];
        diffs.push_back(std::move(d));
    }
    return rank(diffs);
}

Rat dot(const QVec& u, const QVec& w) {
    if (u.size() != w.size()) throw input_error("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
    return s;
}

Rat det(QMat m) {
    const size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw input_error("det: matrix not square");
    Rat result = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            result = -result;
        }
        result *= m[c][c];
        const Rat inv = 1 / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return result;
}

GramForm::GramForm(QMat matrix) : mat_(std::move(matrix)) {
    const size_t n = mat_.size();
    for (const auto& r : mat_)
        if (r.size() != n) throw input_error("Gram form must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (mat_[i][j] != mat_[j][i]) throw input_error("Gram form must be symmetric");
    // Sylvester criterion, checked eagerly.
    for (size_t t = 1; t <= n; ++t) {
        QMat minor(t, QVec(t));
        for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j) minor[i][j] = mat_[i][j];
        if (det(std::move(minor)) <= 0)
            throw input_error("Gram form is not positive definite");
    }
}

GramForm GramForm::standard(int m) {
    if (m < 1) throw input_error("Gram dimension must be positive");
    QMat id(m, QVec(m, Rat(0)));
    for (int i = 0; i < m; ++i) id[i][i] = 1;
    return GramForm(std::move(id));
}

Rat GramForm::inner(const QVec& u, const QVec& w) const {
    if (static_cast<int>(u.size()) != dim() || static_cast<int>(w.size()) != dim())
        throw input_error("Gram inner: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Rat row = 0;
        for (size_t j = 0; j < w.size(); ++j) row += mat_[i][j] * w[j];
        s += u[i] * row;
    }
    return s;
}

Rat dist_sq(const QVec& u, const QVec& w, const GramForm& g) {
    if (u.size() != w.size()) throw input_error("dist_sq: dimension mismatch");
    QVec d(u.size());
    for (size_t i = 0; i < u.size(); ++i) d[i] = u[i] - w[i];
    return g.inner(d, d);
}

}  // namespace secant::geometry
