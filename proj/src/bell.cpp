#include "seqbell/bell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace seqbell::bell {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kViolationSlack = 1e-9;
}  // namespace

BellParams::BellParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha >= 1.0) || !(beta >= 0.0) || !(alpha * beta < 2.0))
        throw DomainError("BellParams requires alpha >= 1, beta >= 0, alpha*beta < 2");
}

double BipartiteDistribution::signaling_residue() const {
    double worst = 0.0;
    // Alice marginal must not depend on y, Bob marginal not on x.
    for (int x = 0; x < alice_settings; ++x)
        for (int y = 1; y < bob_settings; ++y)
            worst = std::max(worst, std::abs(alice_plus(x, y) - alice_plus(x, 0)));
    for (int y = 0; y < bob_settings; ++y)
        for (int x = 1; x < alice_settings; ++x)
            worst = std::max(worst, std::abs(bob_plus(x, y) - bob_plus(0, y)));
    return worst;
}

double beta_of_theta(double theta) {
    if (!(theta > 0.0) || !(theta < kPi / 2))
        throw DomainError("beta_of_theta: theta must lie in (0, pi/2)");
    double s = std::sin(2.0 * theta);
    return 2.0 * std::cos(2.0 * theta) / std::sqrt(1.0 + s * s);
}

double mu_of_theta(double theta) {
    if (!(theta > 0.0) || !(theta < kPi / 2))
        throw DomainError("mu_of_theta: theta must lie in (0, pi/2)");
    return std::atan(std::sin(2.0 * theta));
}

double eval_inequality(const CorrelatorSet& c, const BellParams& p) {
    return p.beta * c.b0 + p.alpha * (c.e00 + c.e10) + c.e01 - c.e11;
}

double classical_bound(const BellParams& p) { return p.beta + 2.0 * p.alpha; }

double quantum_max(const BellParams& p) {
    return std::sqrt((1.0 + p.alpha * p.alpha) * (4.0 + p.beta * p.beta));
}

CertifiedBits guessing_bound_f(double i_value, const BellParams& p) {
    double imax = quantum_max(p);
    if (i_value > imax + kViolationSlack)
        throw DomainError("guessing_bound_f: Bell value " + std::to_string(i_value) +
                          " exceeds the quantum maximum " + std::to_string(imax));
    double gap2 = std::max(0.0, imax * imax - i_value * i_value);
    double g = 0.5 + std::sqrt(gap2) / (2.0 * (2.0 - p.alpha * p.beta));
    g = std::clamp(g, 0.5, 1.0);
    return {g, -std::log2(g)};
}

CertifiedBits guessing_bound_from_defect(double defect, const BellParams& p) {
    if (defect < -kViolationSlack)
        throw DomainError("guessing_bound_from_defect: negative defect (impossible violation)");
    defect = std::max(0.0, defect);
    double imax = quantum_max(p);
    // I_max² - I² = d (2 I_max - d); well conditioned for d down to ~1e-300.
    double g = 0.5 + std::sqrt(defect * (2.0 * imax - defect)) / (2.0 * (2.0 - p.alpha * p.beta));
    g = std::clamp(g, 0.5, 1.0);
    return {g, -std::log2(g)};
}

double b1_bound(double i_value, const BellParams& p) {
    double imax = quantum_max(p);
    if (i_value > imax + kViolationSlack)
        throw DomainError("b1_bound: Bell value exceeds the quantum maximum");
    double gap2 = std::max(0.0, imax * imax - i_value * i_value);
    return std::clamp(std::sqrt(gap2) / (2.0 - p.alpha * p.beta), 0.0, 1.0);
}

double sequence_certificate(const std::vector<StepValue>& steps) {
    double bits = 0.0;
    for (const StepValue& s : steps) {
        BellParams params(1.0, beta_of_theta(s.theta));
        bits += guessing_bound_f(s.i_value, params).bits;
    }
    return bits;
}

CorrelatorSet correlators_from_distribution(const BipartiteDistribution& dist, double tol) {
    if (dist.alice_settings != 2 || dist.bob_settings != 2)
        throw DomainError("correlators_from_distribution expects a 2x2-setting distribution");
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) sum += dist.at(a, b, x, y);
            if (std::abs(sum - 1.0) > tol)
                throw NormalizationError("distribution slice (x=" + std::to_string(x) +
                                         ",y=" + std::to_string(y) + ") sums to " +
                                         std::to_string(sum));
        }
    auto corr = [&](int x, int y) {
        return dist.at(0, 0, x, y) - dist.at(0, 1, x, y) - dist.at(1, 0, x, y) +
               dist.at(1, 1, x, y);
    };
    // Bob marginals averaged over x (identical up to the signaling residue).
    auto bmarg = [&](int y) {
        double v = 0.0;
        for (int x = 0; x < 2; ++x) v += 2.0 * dist.bob_plus(x, y) - 1.0;
        return v / 2.0;
    };
    CorrelatorSet c;
    c.b0 = bmarg(0);
    c.b1 = bmarg(1);
    c.e00 = corr(0, 0);
    c.e01 = corr(0, 1);
    c.e10 = corr(1, 0);
    c.e11 = corr(1, 1);
    return c;
}

double step_value_defect(double theta, double xi) {
    double sin2t = std::sin(2.0 * theta);
    double sinmu = sin2t / std::sqrt(1.0 + sin2t * sin2t);
    double sx = std::sin(xi);
    // I_max - I = 2 sinμ sin2θ (1 - cos2ξ) with 1 - cos2ξ = 2 sin²ξ.
    return 4.0 * sinmu * sin2t * sx * sx;
}

}  // namespace seqbell::bell
