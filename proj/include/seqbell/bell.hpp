#pragma once

#include <vector>

#include "seqbell/errors.hpp"

namespace seqbell::bell {

/// Parameters of the two-parameter Bell family
///   I = β<B0> + α(<A0B0> + <A1B0>) + <A0B1> - <A1B1>,
/// restricted to α ≥ 1, β ≥ 0, αβ < 2.
struct BellParams {
    double alpha;
    double beta;

    BellParams(double alpha_, double beta_);
};

struct CorrelatorSet {
    double b0 = 0.0;   // <B0>
    double b1 = 0.0;   // <B1>
    double e00 = 0.0;  // <A0B0>
    double e01 = 0.0;  // <A0B1>
    double e10 = 0.0;  // <A1B0>
    double e11 = 0.0;  // <A1B1>
};

/// Upper bound on the guessing probability and the matching min-entropy.
struct CertifiedBits {
    double g_upper;  // in [1/2, 1]
    double bits;     // -log2(g_upper), in [0, 1]
};

/// Conditional distribution p(a,b|x,y) with dichotomic outcomes a,b ∈ {+1,-1}
/// (outcome index 0 ↔ +1, 1 ↔ -1). Shared wire type between the protocol
/// simulation, correlator extraction and the moment-matrix relaxation.
struct BipartiteDistribution {
    int alice_settings = 0;
    int bob_settings = 0;
    std::vector<double> p;

    BipartiteDistribution() = default;
    BipartiteDistribution(int na, int nb)
        : alice_settings(na), bob_settings(nb), p(static_cast<size_t>(4 * na * nb), 0.0) {}

    double& at(int a, int b, int x, int y) {
        return p[static_cast<size_t>(((x * bob_settings + y) * 2 + a) * 2 + b)];
    }
    double at(int a, int b, int x, int y) const {
        return p[static_cast<size_t>(((x * bob_settings + y) * 2 + a) * 2 + b)];
    }

    /// Alice +1-marginal p(a=+1|x,y) and Bob +1-marginal p(b=+1|x,y).
    double alice_plus(int x, int y) const { return at(0, 0, x, y) + at(0, 1, x, y); }
    double bob_plus(int x, int y) const { return at(0, 0, x, y) + at(1, 0, x, y); }

    /// Max absolute signaling residue across both directions.
    double signaling_residue() const;
};

/// β(θ) = 2cos(2θ)/sqrt(1 + sin²(2θ)), θ ∈ (0, π/2).
double beta_of_theta(double theta);

/// μ(θ) = atan(sin 2θ).
double mu_of_theta(double theta);

double eval_inequality(const CorrelatorSet& c, const BellParams& p);

/// Local-hidden-variable bound β + 2α.
double classical_bound(const BellParams& p);

/// Quantum maximum sqrt((1 + α²)(4 + β²)).
double quantum_max(const BellParams& p);

/// Analytic bound g ≤ 1/2 + sqrt(I_max² - I²)/(2(2 - αβ)), clamped to [1/2, 1].
/// Throws DomainError when i_value exceeds the quantum maximum beyond 1e-9.
CertifiedBits guessing_bound_f(double i_value, const BellParams& p);

/// Same bound evaluated from the violation defect d = I_max - I ≥ 0. Avoids
/// the catastrophic cancellation of I_max² - I² when I is within a few ulps
/// of I_max, which the sequential certificate hits at small ξ.
CertifiedBits guessing_bound_from_defect(double defect, const BellParams& p);

/// |<B1>| ≤ sqrt(I_max² - I²)/(2 - αβ), clamped to [0, 1].
double b1_bound(double i_value, const BellParams& p);

/// One step of a sequence: Bell value and state angle of that step.
struct StepValue {
    double i_value;
    double theta;
};

/// Product-form min-entropy -Σ log2 f(I_i) over the steps, with α = 1 and
/// β = β(θ_i) per step. ASYMPTOTIC CERTIFICATE: exact only in the limit of
/// each I_i at its maximum; at finite violation it is the Theorem-2 limit
/// expression, not a finite-ε bound.
double sequence_certificate(const std::vector<StepValue>& steps);

/// Correlators of a 2x2-setting distribution. Throws NormalizationError if
/// any (x,y) slice is not normalized within tol.
CorrelatorSet correlators_from_distribution(const BipartiteDistribution& dist,
                                            double tol = 1e-9);

/// Exact Bell-value defect I_max(θ) - I(θ,ξ) of the canonical step behavior
/// (state angle θ, weak-measurement strength ξ): 4 sinμ sin2θ sin²ξ.
double step_value_defect(double theta, double xi);

}  // namespace seqbell::bell
