#include "oblique/blocks.hpp"

#include "oblique/errors.hpp"

namespace oblique {

SplitBasis::SplitBasis(const Subspace& s) : k_(s.dim()) {
    const Subspace perp = complement(s);
    w_.resize(s.ambient_dim(), s.ambient_dim());
    w_ << s.basis(), perp.basis();
}

Matrix SplitBasis::to_block(const Matrix& m) const {
    if (m.rows() != w_.rows() || m.cols() != w_.rows()) {
        throw ShapeMismatch("SplitBasis::to_block: operator has wrong size");
    }
    return w_.adjoint() * m * w_;
}

Matrix SplitBasis::from_block(const Matrix& m) const {
    if (m.rows() != w_.rows() || m.cols() != w_.rows()) {
        throw ShapeMismatch("SplitBasis::from_block: operator has wrong size");
    }
    return w_ * m * w_.adjoint();
}

Matrix SplitBasis::assemble(const Matrix& a, const Matrix& b, const Matrix& d,
                            const Matrix& c) const {
    const Index n = w_.rows();
    Matrix out(n, n);
    out.topLeftCorner(k_, k_) = a;
    out.topRightCorner(k_, n - k_) = b;
    out.bottomLeftCorner(n - k_, k_) = d;
    out.bottomRightCorner(n - k_, n - k_) = c;
    return out;
}

}  // namespace oblique
