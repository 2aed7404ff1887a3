#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace orthoproof::hilbert {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kRankTolerance = 1e-9;        // singular values at or below count as zero
inline constexpr double kContainmentTolerance = 1e-8;  // Frobenius residual for subspace inclusion
inline constexpr double kAnnihilated = 1e-12;          // probability treated as zero
inline constexpr double kUnitTolerance = 1e-10;

// Closed subspace of C^n stored as an orthonormal basis (n x k).
class Subspace {
public:
    explicit Subspace(Eigen::Index n = 0) : basis_(n, 0) {}
    static Subspace full(Eigen::Index n);
    // Column space of the given vectors.
    static Subspace span(const Matrix& vectors);

    Eigen::Index ambient() const { return basis_.rows(); }
    Eigen::Index dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

private:
    Matrix basis_;
};

Matrix projector(const Subspace& a);
Subspace join(const Subspace& a, const Subspace& b);
Subspace ortho(const Subspace& a);
Subspace meet(const Subspace& a, const Subspace& b);

// (A v B') ^ B through the lattice operations.
Subspace sasaki_lattice(const Subspace& a, const Subspace& b);
// Column space of [B] applied to a basis of A.
Subspace sasaki_closure(const Subspace& a, const Subspace& b);

double projector_distance(const Subspace& a, const Subspace& b);
// ||(I - P_B) U_A||_F below the containment tolerance.
bool contained(const Subspace& a, const Subspace& b);

struct MeasurementStep {
    double probability = 0;      // cumulative probability of passing steps 1..i
    std::optional<Vector> state;  // empty when annihilated
};

struct MeasurementTrace {
    Vector initial;
    std::vector<MeasurementStep> steps;
    bool annihilated() const { return !steps.empty() && !steps.back().state; }
};

MeasurementTrace sequential_measure(const Vector& xi0, const std::vector<Subspace>& chain);

struct FoldCriterion {
    bool lattice_side = false;  // Sasaki fold of the chain lies in B
    bool range_side = false;    // range of [An]...[A1] lies in B
    double residual = 0;        // ||(I - P_B) [An]...[A1]||_F
};

FoldCriterion check_fold_criterion(const std::vector<Subspace>& chain, const Subspace& b);

// Product [An]...[A1], identity for the empty chain.
Matrix chain_product(const std::vector<Subspace>& chain, Eigen::Index n);

Subspace random_subspace(Eigen::Index n, Eigen::Index k, std::mt19937_64& rng);
Vector random_unit(Eigen::Index n, std::mt19937_64& rng);

struct PropertyRow {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    double worst = 0;  // largest observed error (0 for boolean checks)
    double tolerance = 0;
};

// Seeded random sweep of the subspace-lattice properties: projector algebra,
// Sasaki projection versus closure of the projected subspace, fold versus
// range of the projector product, and sequential measurement. With dim
// unset, ambient dimensions are drawn from 2..6 (projection) and 2..4
// (chains).
std::vector<PropertyRow> property_sweep(std::optional<Eigen::Index> dim, std::size_t trials, std::uint64_t seed);

// Whitespace-separated matrix, one row per line; entries re, re+imi or re-imi.
// Rows are ambient coordinates, columns spanning vectors.
Matrix parse_matrix(const std::string& text);
std::complex<double> parse_scalar(const std::string& token);

}  // namespace orthoproof::hilbert
