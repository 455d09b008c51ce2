#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "seqbell/errors.hpp"

namespace seqbell::qcore {

using Cx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Default tolerances: algebraic identities / decompositions.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kDecompTol = 1e-10;

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

bool is_hermitian(const Mat2& m, double tol = kAlgebraTol);
bool is_unitary(const Mat2& m, double tol = kAlgebraTol);

/// Normalized two-qubit pure state; amplitudes ordered |00>, |01>, |10>, |11>.
class PureBipartiteState {
  public:
    explicit PureBipartiteState(const Vec4& amps, double tol = kAlgebraTol);

    const Vec4& vec() const { return amps_; }
    Cx amp(int i) const { return amps_(i); }

  private:
    Vec4 amps_;
};

/// Canonical form (u_alice ⊗ v_bob)(cosθ|00> + sinθ|11>), θ ∈ [0, π/4].
struct SchmidtForm {
    double theta;
    Mat2 u_alice;
    Mat2 v_bob;
};

/// Kronecker product, row-major block layout: out(2i+k, 2j+l) = a(i,j) b(k,l).
Mat4 tensor_product(const Mat2& a, const Mat2& b);

/// Reduced density matrix of the second qubit.
Mat2 bob_marginal(const PureBipartiteState& s);

/// <s| a ⊗ b |s> for Hermitian a, b. Throws NotHermitianError otherwise.
double expectation(const PureBipartiteState& s, const Mat2& a, const Mat2& b);

/// Schmidt decomposition with a deterministic phase convention:
/// singular values descending; each left singular vector scaled so that its
/// largest-modulus component is real and nonnegative; right vectors from the
/// decomposition identity, with zero-singular-value columns completed by
/// Gram-Schmidt seeded with |0>. An exactly degenerate spectrum picks the
/// left basis closest to the identity.
SchmidtForm schmidt_canonicalize(const PureBipartiteState& s,
                                 double degeneracy_tol = kAlgebraTol);

/// (1 ⊗ m)|s> unnormalized, plus its squared norm.
std::pair<Vec4, double> apply_bob_operator(const PureBipartiteState& s, const Mat2& m);

/// Eigenprojector (1 + sign*obs)/2 of a ±1-valued observable.
Mat2 outcome_projector(const Mat2& obs, int sign);

}  // namespace seqbell::qcore
