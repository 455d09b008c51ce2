#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqbell/bell.hpp"
#include "seqbell/qcore.hpp"

namespace seqbell::protocol {

using qcore::Mat2;
using qcore::PureBipartiteState;

/// |ψ(θ)> = cosθ|00> + sinθ|11>, θ ∈ [0, π/2].
PureBipartiteState psi_theta(double theta);

/// Two-outcome weak measurement of strength ξ ∈ [0, π/4]:
///   M_{±1} = cosξ|±><±| + sinξ|∓><∓|.
/// Completeness M₊†M₊ + M₋†M₋ = 1 and effective observable
/// M₊†M₊ - M₋†M₋ = cos(2ξ)σ_x hold by construction.
struct KrausPair {
    double xi;
    Mat2 m_plus;
    Mat2 m_minus;
};

KrausPair kraus_pair(double xi);

struct MeasureRecord {
    int outcome;               // +1 or -1
    double prob;               // Born probability
    PureBipartiteState post;   // normalized post-measurement state
    bool negligible = false;   // prob below 1e-14: post is the input, untouched
};

/// Apply the weak measurement on Bob's side; both outcome branches.
std::array<MeasureRecord, 2> measure_bob(const PureBipartiteState& s, const KrausPair& kp);

struct BranchStep {
    double theta_new;
    Mat2 u_step;
    Mat2 v_correction;
};

/// Canonicalize a post-measurement state: (1 ⊗ v_correction†)|post> equals
/// (u_step ⊗ 1)(cosθ'|00> + sinθ'|11>).
BranchStep canonicalize_branch(const PureBipartiteState& post);

/// Alice's adaptive observable U[cosμ σ_z + (-1)^k sinμ σ_x]U† with
/// tanμ = sin(2θ_branch).
Mat2 alice_observable(double theta_branch, const Mat2& u_accum, int k);

/// One node of the weak-measurement branch tree (all inputs y = 1).
/// History bits are most-significant-first: outcome of step 1 first.
struct BranchRecord {
    std::vector<int> history;          // outcomes ±1, step order
    double theta = 0.0;                // canonical angle, [0, π/4]
    Mat2 u_alice = Mat2::Identity();   // accumulated Alice unitary
    double branch_prob = 1.0;          // along the all-y=1 path
    Mat2 v_correction = Mat2::Identity();  // applied by Bob after reaching here
    Eigen::Matrix2cd coeff = Eigen::Matrix2cd::Zero();  // exact state coefficients
};

struct BranchTree {
    int n = 0;
    double theta1 = 0.0;
    std::vector<double> xis;
    std::vector<BranchRecord> nodes;  // level order, 2^{n+1}-1 records

    static int node_index(int depth, std::uint32_t hist_bits) {
        return (1 << depth) - 1 + static_cast<int>(hist_bits);
    }
    const BranchRecord& node(int depth, std::uint32_t hist_bits) const {
        return nodes[static_cast<size_t>(node_index(depth, hist_bits))];
    }
};

/// Alice's input labels: one pair (k = 0, 1) per (step, history) branch.
struct AliceSetting {
    int step;                  // 1-based
    std::vector<int> history;  // outcomes before this step
    int k;                     // 0 or 1
};

int alice_setting_count(int n);

/// Lexicographic (step, history-as-bits, k) index of a setting.
int alice_setting_index(int n, const AliceSetting& s);

std::vector<AliceSetting> enumerate_alice_settings(int n);

/// Exact table p(a, b_vec | x, y_vec). Bit encodings are MSB-first in step
/// order: bit for step 1 is the most significant of the n-bit word. Outcome
/// bit 0 ↔ +1, 1 ↔ -1; y bit 1 means the weak σ_x measurement.
struct SequenceDistribution {
    int n = 0;
    int num_settings = 0;
    std::vector<double> table;

    double p(int x, std::uint32_t y_bits, int a_idx, std::uint32_t b_bits) const {
        size_t rows = size_t{1} << n;
        return table[((static_cast<size_t>(x) * rows + y_bits) * 2 + a_idx) * rows + b_bits];
    }
    double& p(int x, std::uint32_t y_bits, int a_idx, std::uint32_t b_bits) {
        size_t rows = size_t{1} << n;
        return table[((static_cast<size_t>(x) * rows + y_bits) * 2 + a_idx) * rows + b_bits];
    }
};

/// Run the n-step scheme exactly: weak-path branch tree plus the full table
/// over every (x, y_vec). Throws CapacityError for n > cap.
std::pair<BranchTree, SequenceDistribution> run_sequence(double theta1,
                                                         const std::vector<double>& xis,
                                                         int cap = 8);

/// Step-i conditional distribution between Alice's two step-i settings for
/// `history` and Bob's step-i inputs, conditioned on the all-y=1 past.
bell::BipartiteDistribution conditional_step_distribution(const BranchTree& tree, int step,
                                                          const std::vector<int>& history);

/// Single-step behavior of state ψ(θ) under the canonical settings with the
/// weak σ_x of strength ξ as Bob's second input.
bell::BipartiteDistribution standard_behavior(double theta, double xi);

struct StepReport {
    double theta;
    double xi;
    double i_value;      // from the exact conditional correlators
    double i_max;
    double defect;       // I_max - I, closed form (cancellation-free)
    double bits;         // -log2 f via the defect
};

struct SequenceReport {
    std::vector<StepReport> steps;
    double certificate_bits;  // asymptotic certificate: sum of step bits
};

/// Per-step report along the all-(+1) weak path. Requires theta1 ∈ (0, π/4].
SequenceReport sequence_report(const BranchTree& tree);

struct SampleConfig {
    double theta1 = 0.0;
    std::vector<double> xis;
    std::vector<double> gammas;  // per-step probability of choosing σ_z
    long long shots = 0;
    std::uint64_t seed = 0;
};

/// Empirical conditional frequencies from Monte-Carlo sampling of the scheme.
struct EmpiricalTable {
    int n = 0;
    int num_settings = 0;
    long long shots = 0;
    std::vector<double> freq;            // same layout as SequenceDistribution
    std::vector<long long> input_count;  // per (x, y_bits)

    double frequency(int x, std::uint32_t y_bits, int a_idx, std::uint32_t b_bits) const {
        size_t rows = size_t{1} << n;
        return freq[((static_cast<size_t>(x) * rows + y_bits) * 2 + a_idx) * rows + b_bits];
    }
    long long inputs(int x, std::uint32_t y_bits) const {
        return input_count[static_cast<size_t>(x) * (size_t{1} << n) + y_bits];
    }
};

EmpiricalTable sample_mode(const SampleConfig& config);

std::string history_to_string(const std::vector<int>& history);

/// Branch tree as JSON: nodes carry history, theta, branch_prob and u_alice
/// as row-major re/im pairs.
std::string branch_tree_json(const BranchTree& tree);

/// CSV with columns x,y_vec,a,b_vec,p.
void write_distribution_csv(std::ostream& os, const SequenceDistribution& dist);

}  // namespace seqbell::protocol
