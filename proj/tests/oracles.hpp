#pragma once

// Test-only reference computations written independently of the library
// algorithms they check.

#include <vector>

#include "acphase/matrix.hpp"

namespace oracle {

using acphase::ExactMatrix;
using acphase::ExactScalar;

/// Textbook triple loop, no zero skipping.
inline ExactMatrix naive_product(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            ExactScalar s(0);
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

/// Rank by exact Gaussian elimination.
inline std::size_t rank(ExactMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(piv, k));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const ExactScalar f = a(i, c) / a(r, c);
            for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
        }
        ++r;
    }
    return r;
}

inline std::size_t nullity(const ExactMatrix& a) { return a.cols() - rank(a); }

/// Multiplicity of eigenvalue `lambda` as the dimension of the generalized
/// eigenspace, i.e. nullity of (A - lambda)^n.
inline std::size_t algebraic_multiplicity(const ExactMatrix& a, const ExactScalar& lambda) {
    ExactMatrix shifted = a - ExactMatrix::identity(a.rows()) * lambda;
    ExactMatrix power = ExactMatrix::identity(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k) power = naive_product(power, shifted);
    return nullity(power);
}

}  // namespace oracle
