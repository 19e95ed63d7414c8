#pragma once

#include "secant/rational.hpp"

namespace secant::geometry {

// Rank over Q of the matrix whose rows are the given points.
// Fraction-free (Bareiss) elimination on a denominator-cleared integer copy.
int rank(const QMat& rows);

// Dimension of the affine span; -1 for the empty set, 0 for a singleton.
int affine_dim(const std::vector<QVec>& points);

// Standard pairing <v, a> = sum v_i a_i.
Rat dot(const QVec& u, const QVec& w);

// Positive definite symmetric bilinear form on Q^m.
// Definiteness is checked on construction via leading principal minors.
class GramForm {
  public:
    explicit GramForm(QMat matrix);
    static GramForm standard(int m);

    int dim() const { return static_cast<int>(mat_.size()); }
    const QMat& matrix() const { return mat_; }

    // u^T G w
    Rat inner(const QVec& u, const QVec& w) const;

  private:
    QMat mat_;
};

// Squared distance (u-w)^T G (u-w). Order-isomorphic to the G-norm distance.
Rat dist_sq(const QVec& u, const QVec& w, const GramForm& g);

// Exact determinant, Gaussian elimination over Q. Matrix must be square.
Rat det(QMat m);

}  // namespace secant::geometry
