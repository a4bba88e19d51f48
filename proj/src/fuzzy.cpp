#include "rigsim/fuzzy.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rigsim/errors.hpp"

namespace rigsim::control {

double MembershipFunction::operator()(double x) const {
    const auto& b = breakpoints;
    if (shape == MembershipShape::triangle) {
        if (x < b[0] || x > b[2]) return 0.0;
        if (x == b[1]) return 1.0;
        if (x < b[1]) return (x - b[0]) / (b[1] - b[0]);
        return (b[2] - x) / (b[2] - b[1]);
    }
    if (x < b[0] || x > b[3]) return 0.0;
    if (x >= b[1] && x <= b[2]) return 1.0;
    if (x < b[1]) return (x - b[0]) / (b[1] - b[0]);
    return (b[3] - x) / (b[3] - b[2]);
}

void MembershipFunction::validate() const {
    const std::size_t expected = shape == MembershipShape::triangle ? 3 : 4;
    if (breakpoints.size() != expected)
        throw ConfigError("membership function has the wrong number of breakpoints");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw ConfigError("membership breakpoints must be non-decreasing");
}

int FuzzyVariable::term_index(const std::string& label) const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].label == label) return static_cast<int>(i);
    }
    return -1;
}

void FuzzyVariable::validate() const {
    if (!(min < max)) throw ConfigError("fuzzy variable '" + name + "' has an empty universe");
    if (terms.empty()) throw ConfigError("fuzzy variable '" + name + "' has no terms");
    for (const auto& t : terms) t.membership.validate();
    constexpr int kSamples = 1000;
    for (int i = 0; i <= kSamples; ++i) {
        const double x = min + span() * i / kSamples;
        const bool covered = std::any_of(terms.begin(), terms.end(),
                                         [x](const FuzzyTerm& t) { return t.membership(x) > 0.0; });
        if (!covered)
            throw ConfigError("fuzzy variable '" + name + "' leaves part of its universe uncovered");
    }
}

Fuzzified fuzzify(double value, const FuzzyVariable& variable) {
    if (variable.terms.empty())
        throw ConfigError("fuzzy variable '" + variable.name + "' has no terms");
    Fuzzified out;
    const double x = std::clamp(value, variable.min, variable.max);
    out.clamped = x != value;
    out.degrees.reserve(variable.terms.size());
    for (const auto& t : variable.terms) out.degrees.push_back({t.label, t.membership(x)});
    return out;
}

void FuzzySystem::validate() const {
    if (inputs.empty()) throw ConfigError("fuzzy system has no inputs");
    for (const auto& v : inputs) v.validate();
    output.validate();
    if (resolution < 2) throw ConfigError("fuzzy output resolution must be >= 2");
    if (rulebase.rules.empty()) throw ConfigError("fuzzy rulebase is empty");
    for (const auto& r : rulebase.rules) {
        if (r.antecedent.size() != inputs.size())
            throw ConfigError("fuzzy rule antecedent does not match the input count");
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (inputs[i].term_index(r.antecedent[i]) < 0)
                throw ConfigError("fuzzy rule references unknown term '" + r.antecedent[i] +
                                  "' of input '" + inputs[i].name + "'");
        }
        if (output.term_index(r.consequent) < 0)
            throw ConfigError("fuzzy rule references unknown output term '" + r.consequent + "'");
    }
}

std::vector<double> output_grid(const FuzzyVariable& output, int resolution) {
    if (resolution < 2) throw ConfigError("fuzzy output resolution must be >= 2");
    std::vector<double> x(resolution);
    const double h = output.span() / (resolution - 1);
    for (int i = 0; i < resolution; ++i) x[i] = output.min + h * i;
    x.back() = output.max;
    return x;
}

SampledSet infer(const FuzzySystem& system, std::span<const double> inputs) {
    return infer(system, inputs, system.resolution);
}

SampledSet infer(const FuzzySystem& system, std::span<const double> inputs, int resolution) {
    if (inputs.size() != system.inputs.size())
        throw ConfigError("fuzzy input count does not match the system");

    std::vector<std::vector<double>> degrees(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (const auto& td : fuzzify(inputs[i], system.inputs[i]).degrees)
            degrees[i].push_back(td.degree);
    }

    // max over rules of min(firing, mu_term) equals min(max firing, mu_term)
    // per consequent term, so rules sharing a consequent collapse to one clip level.
    std::vector<double> clip(system.output.terms.size(), 0.0);
    bool fired = false;
    for (const auto& rule : system.rulebase.rules) {
        double firing = 1.0;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const int t = system.inputs[i].term_index(rule.antecedent[i]);
            if (t < 0) throw ConfigError("fuzzy rule references unknown term '" + rule.antecedent[i] + "'");
            firing = std::min(firing, degrees[i][t]);
        }
        const int c = system.output.term_index(rule.consequent);
        if (c < 0) throw ConfigError("fuzzy rule references unknown output term '" + rule.consequent + "'");
        if (firing > 0.0) fired = true;
        clip[c] = std::max(clip[c], firing);
    }
    if (!fired) throw NumericalError("no fuzzy rule fires for the given inputs (rulebase incomplete)");

    SampledSet set;
    set.x = output_grid(system.output, resolution);
    set.mu.resize(set.x.size());
    for (std::size_t j = 0; j < set.x.size(); ++j) {
        double mu = 0.0;
        for (std::size_t c = 0; c < clip.size(); ++c) {
            if (clip[c] > 0.0)
                mu = std::max(mu, std::min(clip[c], system.output.terms[c].membership(set.x[j])));
        }
        set.mu[j] = mu;
    }
    return set;
}

double defuzzify_centroid(const SampledSet& set) {
    if (set.x.size() != set.mu.size()) throw ConfigError("sampled set size mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < set.x.size(); ++i) {
        num += set.x[i] * set.mu[i];
        den += set.mu[i];
    }
    if (!(den > 0.0)) throw NumericalError("cannot defuzzify an all-zero membership set");
    return num / den;
}

double fuzzy_desired_force(double target_position, double relative_depth, double speed,
                           const FuzzySystem& system) {
    const std::array<double, 3> in{target_position, relative_depth, speed};
    const double y = defuzzify_centroid(infer(system, in));
    return std::clamp(y, system.output.min, system.output.max);
}

}  // namespace rigsim::control
