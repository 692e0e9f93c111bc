#include "acphase/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace acphase {

ExactMatrix bch_conjugate(const ExactMatrix& x, const ExactMatrix& g, unsigned order) {
    detail::require_square_pair(x, g, "bch_conjugate");
    ExactMatrix sum = g;
    ExactMatrix nested = g;
    ExactScalar coeff(1);
    const ExactScalar minus_i = -ExactScalar::i();
    for (unsigned k = 1; k <= order; ++k) {
        nested = commutator(x, nested);
        if (nested.is_zero()) break;
        coeff = coeff * minus_i / ExactScalar(static_cast<long long>(k));
        sum += nested * coeff;
    }
    return sum;
}

NumericMatrix to_numeric(const ExactMatrix& m) {
    std::vector<Complex> data;
    data.reserve(m.rows() * m.cols());
    for (const auto& v : m.entries()) data.push_back(v.to_complex());
    return NumericMatrix(m.rows(), m.cols(), std::move(data));
}

NumericVector to_numeric(const ExactVector& v) {
    NumericVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z.to_complex());
    return out;
}

std::vector<ExactScalar> characteristic_polynomial(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("characteristic_polynomial: matrix not square");
    const std::size_t n = a.rows();
    std::vector<ExactScalar> c(n + 1);
    c[n] = ExactScalar(1);
    // M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I
    ExactMatrix m = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        ExactMatrix am = a * m;
        ExactScalar trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / ExactScalar(static_cast<long long>(k));
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
    }
    return c;
}

std::size_t root_multiplicity(std::vector<ExactScalar> poly, const ExactScalar& root) {
    std::size_t mult = 0;
    while (poly.size() > 1) {
        // Horner division by (lambda - root); remainder ends up in front.
        const std::size_t deg = poly.size() - 1;
        std::vector<ExactScalar> quotient(deg);
        ExactScalar carry = poly[deg];
        for (std::size_t k = deg; k-- > 0;) {
            quotient[k] = carry;
            carry = poly[k] + carry * root;
        }
        if (!carry.is_zero()) break;
        poly = std::move(quotient);
        ++mult;
    }
    return mult;
}

double max_abs(const NumericMatrix& m) { return max_abs(m.entries()); }

double max_abs(std::span<const Complex> v) {
    double best = 0.0;
    for (const auto& z : v) best = std::max(best, std::abs(z));
    return best;
}

std::string to_string(const ExactMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << "]\n";
    }
    return os.str();
}

}  // namespace acphase
