#pragma once

#include <span>
#include <string>
#include <vector>

// Mamdani fuzzy inference: min for AND, clipping implication, max
// aggregation, centroid defuzzification over a sampled output universe.
namespace rigsim::control {

enum class MembershipShape { triangle, trapezoid };

struct MembershipFunction {
    MembershipShape shape = MembershipShape::triangle;
    std::vector<double> breakpoints;  // 3 for triangle, 4 for trapezoid; non-decreasing

    double operator()(double x) const;
    void validate() const;
};

struct FuzzyTerm {
    std::string label;
    MembershipFunction membership;
};

struct FuzzyVariable {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    std::vector<FuzzyTerm> terms;

    double span() const { return max - min; }
    double center() const { return 0.5 * (min + max); }
    int term_index(const std::string& label) const;  // -1 when absent
    /// Checks term shapes and that every universe point has a term with
    /// positive membership.
    void validate() const;
};

struct TermDegree {
    std::string term;
    double degree = 0.0;
};

struct Fuzzified {
    std::vector<TermDegree> degrees;  // one entry per term, in term order
    bool clamped = false;             // input was outside the universe
};

Fuzzified fuzzify(double value, const FuzzyVariable& variable);

struct FuzzyRule {
    std::vector<std::string> antecedent;  // one term label per input variable
    std::string consequent;
};

struct RuleBase {
    std::vector<FuzzyRule> rules;
};

struct FuzzySystem {
    std::vector<FuzzyVariable> inputs;
    FuzzyVariable output;
    RuleBase rulebase;
    int resolution = 512;  // output universe samples

    void validate() const;
};

/// Aggregated output membership sampled on a uniform grid over the output universe.
struct SampledSet {
    std::vector<double> x;
    std::vector<double> mu;
};

std::vector<double> output_grid(const FuzzyVariable& output, int resolution);

SampledSet infer(const FuzzySystem& system, std::span<const double> inputs);
SampledSet infer(const FuzzySystem& system, std::span<const double> inputs, int resolution);

double defuzzify_centroid(const SampledSet& set);

/// Desired grasp force (N) for the gripper's target position (m), the
/// remaining z depth to the target (m), and the test operation speed (m/s).
double fuzzy_desired_force(double target_position, double relative_depth, double speed,
                           const FuzzySystem& system);

}  // namespace rigsim::control
