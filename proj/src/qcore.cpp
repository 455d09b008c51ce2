#include "seqbell/qcore.hpp"

#include <cmath>

namespace seqbell::qcore {

namespace {

bool all_finite(const Vec4& v) {
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
    }
    return true;
}

// Rescale column k of u (and matching column of v) so the largest-modulus
// component of u.col(k) is real and nonnegative.
void fix_column_phase(Mat2& u, Mat2& v, int k) {
    int piv = std::abs(u(0, k)) >= std::abs(u(1, k)) ? 0 : 1;
    double mod = std::abs(u(piv, k));
    if (mod == 0.0) return;
    Cx phase = std::conj(u(piv, k)) / mod;
    u.col(k) *= phase;
    v.col(k) *= phase;
}

// Unit vector orthogonal to col, chosen deterministically starting from |0>.
Eigen::Vector2cd orthogonal_complement(const Eigen::Vector2cd& col) {
    Eigen::Vector2cd seed = Eigen::Vector2cd::Zero();
    seed(std::abs(col(0)) >= std::abs(col(1)) ? 1 : 0) = Cx(1.0, 0.0);
    Eigen::Vector2cd out = seed - col * (col.adjoint() * seed)(0);
    out.normalize();
    int piv = std::abs(out(0)) >= std::abs(out(1)) ? 0 : 1;
    double mod = std::abs(out(piv));
    if (mod > 0.0) out *= std::conj(out(piv)) / mod;
    return out;
}

}  // namespace

Mat2 pauli_x() {
    Mat2 m;
    m << Cx(0), Cx(1), Cx(1), Cx(0);
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m << Cx(0), Cx(0, -1), Cx(0, 1), Cx(0);
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << Cx(1), Cx(0), Cx(0), Cx(-1);
    return m;
}

bool is_hermitian(const Mat2& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat2& m, double tol) {
    return (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

PureBipartiteState::PureBipartiteState(const Vec4& amps, double tol) : amps_(amps) {
    if (!all_finite(amps_)) throw DomainError("state amplitudes must be finite");
    double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol)
        throw NormalizationError("state norm^2 deviates from 1 by " +
                                 std::to_string(std::abs(norm2 - 1.0)));
}

Mat4 tensor_product(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Mat2 bob_marginal(const PureBipartiteState& s) {
    const Vec4& v = s.vec();
    Mat2 rho;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            rho(j, k) = v(j) * std::conj(v(k)) + v(2 + j) * std::conj(v(2 + k));
    return rho;
}

double expectation(const PureBipartiteState& s, const Mat2& a, const Mat2& b) {
    if (!is_hermitian(a)) throw NotHermitianError("expectation: first observable not Hermitian");
    if (!is_hermitian(b)) throw NotHermitianError("expectation: second observable not Hermitian");
    const Vec4& v = s.vec();
    Cx val = v.adjoint() * (tensor_product(a, b) * v);
    return val.real();
}

SchmidtForm schmidt_canonicalize(const PureBipartiteState& s, double degeneracy_tol) {
    Mat2 coeff;
    coeff << s.amp(0), s.amp(1), s.amp(2), s.amp(3);

    Eigen::JacobiSVD<Mat2> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Vector2d sv = svd.singularValues();  // descending
    double theta = std::atan2(sv(1), sv(0));

    Mat2 u = svd.matrixU();
    Mat2 v = svd.matrixV();

    if (sv(0) - sv(1) <= degeneracy_tol) {
        // Degenerate spectrum: coeff coeff^† ≈ σ²·1, so u = 1 is an exact
        // minimizer of ‖u - 1‖ and v follows from the identity v† = Σ⁻¹ coeff.
        double sigma = 0.5 * (sv(0) + sv(1));
        u = Mat2::Identity();
        v = coeff.adjoint() / sigma;
    } else {
        fix_column_phase(u, v, 0);
        if (sv(1) <= 1e-14 * sv(0)) {
            // Product state: both second columns are free; complete deterministically.
            u.col(1) = orthogonal_complement(u.col(0));
            v.col(1) = orthogonal_complement(v.col(0));
        } else {
            fix_column_phase(u, v, 1);
        }
    }
    return {theta, u, v.conjugate()};
}

std::pair<Vec4, double> apply_bob_operator(const PureBipartiteState& s, const Mat2& m) {
    const Vec4& v = s.vec();
    Vec4 out;
    for (int i = 0; i < 2; ++i) {
        out(2 * i) = m(0, 0) * v(2 * i) + m(0, 1) * v(2 * i + 1);
        out(2 * i + 1) = m(1, 0) * v(2 * i) + m(1, 1) * v(2 * i + 1);
    }
    return {out, out.squaredNorm()};
}

Mat2 outcome_projector(const Mat2& obs, int sign) {
    return 0.5 * (Mat2::Identity() + static_cast<double>(sign) * obs);
}

}  // namespace seqbell::qcore
