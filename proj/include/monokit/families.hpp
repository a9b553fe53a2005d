#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "monokit/matrix.hpp"

namespace monokit {

// Thrown when a Jacobian is requested at a point where the coefficient
// family is not differentiable (e.g. a vanishing sub-vector raised to a
// negative power). Coefficient values themselves extend continuously.
class nondifferentiable_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A point xi = (xi_0, ..., xi_n), standing for (u, D_1 u, ..., D_n u).
using PointXi = std::vector<double>;

enum class FamilyVariant {
    Example1,     // a_i = xi_i |xi_i|^{p-2}
    Example2,     // p-Laplacian weak form: gradient coupled through |(xi_1..xi_n)|
    Example3,     // full-norm coupling plus a small product perturbation g
    Example4,     // block split at k, 2 <= p <= 4
    Example4HighP,// block split, p > 4, secondary exponent r in [2,4]
    Example5      // decoupled odd powers plus a compactly supported bump term
};

const char* variant_name(FamilyVariant v);
FamilyVariant variant_from_name(const std::string& name);

// Which coefficient family to evaluate, with all of its parameters.
struct FamilySpec {
    FamilyVariant variant = FamilyVariant::Example1;
    double p = 2.0;                    // growth exponent, p >= 2
    int n = 1;                         // spatial dimension count, point size n+1
    int k = 0;                         // block split index (Example4 variants)
    double r = 2.0;                    // secondary exponent (Example4HighP)
    double epsilon = 1.0;              // margin for Example3
    std::vector<double> exponents;     // alpha_0..alpha_n, sum = p-1 (Example3)
    double bump_radius = 1.0;          // support radius R (Example5)
    std::vector<double> bump_scales;   // beta_0..beta_n (Example5)
    double alpha = 0.0;                // derived smallness constant (Example5, cached)

    int point_size() const { return n + 1; }

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    // Example3 sample-g bound constant: 1 / ((n+1+eps) * max alpha_j).
    double example3_growth_constant() const;

    static FamilySpec example1(double p, int n);
    static FamilySpec example2(double p, int n);
    static FamilySpec example3(double p, int n, double epsilon, std::vector<double> exponents);
    static FamilySpec example4(double p, int n, int k);
    static FamilySpec example4_high_p(double p, int n, int k, double r);
    static FamilySpec example5(double p, int n, double bump_radius, std::vector<double> bump_scales);
};

void to_json(nlohmann::json& j, const FamilySpec& spec);
void from_json(const nlohmann::json& j, FamilySpec& spec);

// (a_0(xi), ..., a_n(xi)). Zero-base powers follow the continuous extension.
std::vector<double> eval_coefficients(const FamilySpec& spec, const PointXi& xi);

// Analytic Jacobian, entry (i,j) = D_j a_i(xi). Throws nondifferentiable_error
// on the variant's flagged singular set.
SquareMatrix eval_jacobian(const FamilySpec& spec, const PointXi& xi);

// Central-difference Jacobian, the independent cross-check for eval_jacobian.
SquareMatrix fd_jacobian(const FamilySpec& spec, const PointXi& xi, double h);

// Upper estimate of Example5's alpha by grid maximization over the support
// box, inflated by a 1.05 safety factor; caches the result in spec.alpha.
double estimate_alpha(FamilySpec& spec, int grid_per_axis);

// Sets all bump scales equal so that estimate_alpha lands just under
// (p-1)/(2(2n+1)), i.e. the margin p-1-(2n+1)alpha is at least (p-1)/2.
void calibrate_bump_scales(FamilySpec& spec, int grid_per_axis);

} // namespace monokit
