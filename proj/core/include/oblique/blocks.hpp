#pragma once

#include "oblique/subspace.hpp"

namespace oblique {

/// 2x2 block coordinates induced by a subspace S: the unitary
/// W = [basis(S) | basis(S^perp)] turns every operator on C^n into the
/// block form (a b; b' c) with a acting on S and c on S^perp. Every block
/// formula in the library is a conjugation through this one unitary.
class SplitBasis {
public:
    explicit SplitBasis(const Subspace& s);

    Index ambient_dim() const { return w_.rows(); }
    Index k() const { return k_; }  // dim S

    const Matrix& unitary() const { return w_; }
    Matrix s_basis() const { return w_.leftCols(k_); }
    Matrix s_perp_basis() const { return w_.rightCols(w_.cols() - k_); }

    /// W* M W : standard coordinates -> block coordinates.
    Matrix to_block(const Matrix& m) const;
    /// W M W* : block coordinates -> standard coordinates.
    Matrix from_block(const Matrix& m) const;

    /// Block accessors on a matrix already in block coordinates.
    Matrix block_a(const Matrix& m) const { return m.topLeftCorner(k_, k_); }
    Matrix block_b(const Matrix& m) const { return m.topRightCorner(k_, m.cols() - k_); }
    Matrix block_c(const Matrix& m) const {
        return m.bottomRightCorner(m.rows() - k_, m.cols() - k_);
    }

    /// Assemble (a b; d c) in block coordinates.
    Matrix assemble(const Matrix& a, const Matrix& b, const Matrix& d, const Matrix& c) const;

private:
    Matrix w_;
    Index k_;
};

}  // namespace oblique
