#include "orthoproof/hilbert.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace orthoproof::hilbert {

namespace {

void same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.ambient()) + " vs " +
                                    std::to_string(b.ambient()));
}

}  // namespace

Subspace Subspace::full(Eigen::Index n) {
    Subspace s;
    s.basis_ = Matrix::Identity(n, n);
    return s;
}

Subspace Subspace::span(const Matrix& vectors) {
    const Eigen::Index n = vectors.rows();
    Matrix cols(n, vectors.cols());
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
        double norm = vectors.col(j).norm();
        if (norm > kRankTolerance) cols.col(k++) = vectors.col(j) / norm;
    }
    Subspace s(n);
    if (k == 0) return s;
    Eigen::JacobiSVD<Matrix> svd(cols.leftCols(k), Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > kRankTolerance) ++rank;
    s.basis_ = svd.matrixU().leftCols(rank);
    return s;
}

Matrix projector(const Subspace& a) { return a.basis() * a.basis().adjoint(); }

Subspace join(const Subspace& a, const Subspace& b) {
    same_ambient(a, b);
    Matrix cat(a.ambient(), a.dim() + b.dim());
    cat << a.basis(), b.basis();
    return Subspace::span(cat);
}

Subspace ortho(const Subspace& a) {
    const Eigen::Index n = a.ambient();
    if (a.dim() == 0) return Subspace::full(n);
    Eigen::JacobiSVD<Matrix> svd(a.basis(), Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > kRankTolerance) ++rank;
    return Subspace::span(svd.matrixU().rightCols(n - rank));
}

Subspace meet(const Subspace& a, const Subspace& b) { return ortho(join(ortho(a), ortho(b))); }

Subspace sasaki_lattice(const Subspace& a, const Subspace& b) { return meet(join(a, ortho(b)), b); }

Subspace sasaki_closure(const Subspace& a, const Subspace& b) {
    same_ambient(a, b);
    return Subspace::span(projector(b) * a.basis());
}

double projector_distance(const Subspace& a, const Subspace& b) {
    same_ambient(a, b);
    return (projector(a) - projector(b)).norm();
}

bool contained(const Subspace& a, const Subspace& b) {
    same_ambient(a, b);
    Matrix rest = a.basis() - projector(b) * a.basis();
    return rest.norm() < kContainmentTolerance;
}

MeasurementTrace sequential_measure(const Vector& xi0, const std::vector<Subspace>& chain) {
    if (std::abs(xi0.norm() - 1.0) > kUnitTolerance) throw std::invalid_argument("initial state is not a unit vector");
    MeasurementTrace trace;
    trace.initial = xi0;
    Vector xi = xi0;
    double p = 1.0;
    for (const auto& a : chain) {
        if (a.ambient() != xi.size()) throw std::invalid_argument("dimension mismatch in measurement chain");
        Vector next = projector(a) * xi;
        double q = next.squaredNorm();
        p *= q;
        MeasurementStep step;
        step.probability = p;
        if (p < kAnnihilated) {
            step.probability = 0;
            trace.steps.push_back(step);
            break;
        }
        xi = next / std::sqrt(q);
        step.state = xi;
        trace.steps.push_back(step);
    }
    return trace;
}

Matrix chain_product(const std::vector<Subspace>& chain, Eigen::Index n) {
    Matrix m = Matrix::Identity(n, n);
    for (const auto& a : chain) {
        if (a.ambient() != n) throw std::invalid_argument("dimension mismatch in chain");
        m = projector(a) * m;
    }
    return m;
}

FoldCriterion check_fold_criterion(const std::vector<Subspace>& chain, const Subspace& b) {
    const Eigen::Index n = b.ambient();
    Subspace fold = Subspace::full(n);
    for (const auto& a : chain) fold = sasaki_lattice(fold, a);
    FoldCriterion out;
    out.lattice_side = contained(fold, b);
    Matrix m = chain_product(chain, n);
    out.residual = (m - projector(b) * m).norm();
    out.range_side = out.residual < kContainmentTolerance;
    return out;
}

Subspace random_subspace(Eigen::Index n, Eigen::Index k, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(n, k);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            double re = g(rng);
            double im = g(rng);
            m(i, j) = {re, im};
        }
    return Subspace::span(m);
}

Vector random_unit(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double re = g(rng);
        double im = g(rng);
        v(i) = {re, im};
    }
    return v / v.norm();
}

std::vector<PropertyRow> property_sweep(std::optional<Eigen::Index> dim, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](Eigen::Index lo, Eigen::Index hi) {
        return std::uniform_int_distribution<Eigen::Index>(lo, hi)(rng);
    };
    auto ambient = [&](Eigen::Index hi) { return dim ? *dim : pick(2, hi); };

    PropertyRow algebra{"projector-algebra", 0, 0, 0, kUnitTolerance};
    PropertyRow closure{"sasaki-closure", 0, 0, 0, kContainmentTolerance};
    auto note_projector = [&](const Subspace& s) {
        Matrix p = projector(s);
        double e = std::max((p * p - p).norm(), (p - p.adjoint()).norm());
        ++algebra.instances;
        algebra.worst = std::max(algebra.worst, e);
        if (e >= algebra.tolerance) ++algebra.failures;
    };
    for (std::size_t i = 0; i < trials; ++i) {
        Eigen::Index n = ambient(6);
        Subspace a = random_subspace(n, pick(0, n), rng);
        Subspace b = random_subspace(n, pick(0, n), rng);
        Subspace l = sasaki_lattice(a, b);
        Subspace c = sasaki_closure(a, b);
        for (const auto* s : {&a, &b, &l, &c}) note_projector(*s);
        double d = projector_distance(l, c);
        ++closure.instances;
        closure.worst = std::max(closure.worst, d);
        if (d >= closure.tolerance) ++closure.failures;
    }

    auto random_chain = [&](Eigen::Index n, Eigen::Index max_len) {
        std::vector<Subspace> chain;
        for (Eigen::Index j = pick(0, max_len); j > 0; --j) chain.push_back(random_subspace(n, pick(0, n), rng));
        return chain;
    };

    PropertyRow fold{"fold-range", 0, 0, 0, kContainmentTolerance};
    for (std::size_t i = 0; i < trials; ++i) {
        Eigen::Index n = ambient(4);
        auto chain = random_chain(n, 3);
        Subspace b = random_subspace(n, pick(0, n), rng);
        // Half of the targets contain the fold so both verdicts occur.
        if (i % 2 == 0) {
            Subspace f = Subspace::full(n);
            for (const auto& a : chain) f = sasaki_lattice(f, a);
            b = join(f, random_subspace(n, pick(0, n - f.dim()), rng));
        }
        auto r = check_fold_criterion(chain, b);
        ++fold.instances;
        if (r.lattice_side != r.range_side) ++fold.failures;
    }

    PropertyRow state{"measurement-final-state", 0, 0, 0, kContainmentTolerance};
    PropertyRow prob{"measurement-probability", 0, 0, 0, kAnnihilated};
    for (std::size_t i = 0; i < trials; ++i) {
        Eigen::Index n = ambient(4);
        std::vector<Subspace> chain;
        for (Eigen::Index j = pick(1, 3); j > 0; --j) chain.push_back(random_subspace(n, pick(1, n), rng));
        Subspace f = Subspace::full(n);
        for (const auto& a : chain) f = sasaki_lattice(f, a);
        Subspace b = join(f, random_subspace(n, pick(0, n - f.dim()), rng));
        Vector xi = random_unit(n, rng);
        auto r = check_fold_criterion(chain, b);
        auto trace = sequential_measure(xi, chain);
        ++state.instances;
        ++prob.instances;
        if (!r.lattice_side || !r.range_side) {
            ++state.failures;
            continue;
        }
        double expected = (chain_product(chain, n) * xi).squaredNorm();
        double dp = std::abs(trace.steps.back().probability - expected);
        prob.worst = std::max(prob.worst, dp);
        if (dp >= prob.tolerance) ++prob.failures;
        if (!trace.annihilated()) {
            const Vector& last = *trace.steps.back().state;
            double res = (last - projector(b) * last).norm();
            state.worst = std::max(state.worst, res);
            if (res >= state.tolerance) ++state.failures;
        }
    }
    return {algebra, closure, fold, state, prob};
}

std::complex<double> parse_scalar(const std::string& token) {
    static const std::regex full(R"(^([+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)(?:([+-](?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)i)?$)");
    std::smatch m;
    if (!std::regex_match(token, m, full)) throw std::invalid_argument("bad matrix entry '" + token + "'");
    double re = std::stod(m[1].str());
    double im = m[2].matched ? std::stod(m[2].str()) : 0.0;
    return {re, im};
}

Matrix parse_matrix(const std::string& text) {
    std::vector<std::vector<std::complex<double>>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ws(line);
        std::vector<std::complex<double>> row;
        for (std::string tok; ws >> tok;) row.push_back(parse_scalar(tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

}  // namespace orthoproof::hilbert
