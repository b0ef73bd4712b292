#include <algorithm>
#include <cmath>
#include <numeric>

#include "ptile/error.hpp"
#include "ptile/homology.hpp"
#include "ptile/system_index.hpp"

namespace ptile {

IntersectionMatrix::IntersectionMatrix(IntMatrix m) : c_(std::move(m)) {
    if (c_.rows() != c_.cols()) throw Error(ErrorCode::bad_input, "intersection matrix must be square");
    for (std::size_t i = 0; i < c_.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (c_(i, j) != -c_(j, i)) throw Error(ErrorCode::bad_input, "intersection matrix must be skew-symmetric");
}

double IntersectionMatrix::frobenius_squared() const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) s += static_cast<double>(c_(i, j)) * static_cast<double>(c_(i, j));
    return s;
}

std::int64_t IntersectionMatrix::max_abs_entry() const noexcept {
    std::int64_t best = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) best = std::max(best, c_(i, j) < 0 ? -c_(i, j) : c_(i, j));
    return best;
}

ComplexVector IntersectionMatrix::apply(const ComplexVector& v) const {
    if (v.size() != size())
        throw Error(ErrorCode::length_mismatch,
                    "vector of length " + std::to_string(v.size()) + " against " + std::to_string(size()) + " curves");
    ComplexVector out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < size(); ++j)
            if (c_(i, j) != 0) acc += static_cast<double>(c_(i, j)) * v[j];
        out[i] = acc;
    }
    return out;
}

IntersectionMatrix intersection_matrix(const CurveSystem& system) {
    const SystemIndex index(system);
    IntMatrix c(index.curve_count(), index.curve_count());
    for (std::size_t k = 0; k < index.label_count(); ++k) {
        const std::size_t i = index.plus_curve(k);
        const std::size_t j = index.minus_curve(k);
        c(i, j) += 1;
        c(j, i) -= 1;
    }
    return IntersectionMatrix(std::move(c));
}

std::size_t matrix_rank(const IntersectionMatrix& c) { return exact_rank(c.matrix()); }

IntMatrix HomologyCoordinates::commutator() const {
    const std::size_t m = a.size();
    IntMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = a[i] * b[j] - b[i] * a[j];
    return out;
}

HomologyCoordinates homology_coordinates(const CurveSystem& system) {
    const SurfaceReport surface = surface_report(system);
    if (!surface.connected || surface.genus.front() != 1)
        throw Error(ErrorCode::not_genus_one, "homology coordinates need a connected genus-1 system");

    const SystemIndex index(system);
    const std::size_t n = index.label_count();
    const std::size_t edges = index.slot_count();

    // Fundamental cycles of a spanning tree give a basis of the cycle space;
    // a cycle's coordinates are its coefficients on the non-tree edges.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<long> cycle_coord(edges, -1);
    std::size_t cycle_rank = 0;
    for (std::size_t s = 0; s < edges; ++s) {
        const std::size_t u = find(index.slot_label(s));
        const std::size_t v = find(index.slot_label(index.next_slot(s)));
        if (u != v)
            parent[u] = v;
        else
            cycle_coord[s] = static_cast<long>(cycle_rank++);
    }

    const auto orbits = index.face_orbits();
    IntMatrix boundary(cycle_rank, orbits.size());
    for (std::size_t f = 0; f < orbits.size(); ++f)
        for (std::size_t border : orbits[f]) {
            const long row = cycle_coord[SystemIndex::border_slot(border)];
            if (row >= 0) boundary(static_cast<std::size_t>(row), f) += SystemIndex::border_negated(border) ? -1 : 1;
        }

    const std::size_t m = index.curve_count();
    IntMatrix curves(cycle_rank, m);
    for (std::size_t s = 0; s < edges; ++s)
        if (cycle_coord[s] >= 0) curves(static_cast<std::size_t>(cycle_coord[s]), index.slot_curve(s)) += 1;

    const SmithForm form = smith_normal_form(boundary, &curves);
    if (std::any_of(form.invariants.begin(), form.invariants.end(), [](std::int64_t d) { return d != 1; }))
        throw Error(ErrorCode::basis_orientation_failure, "first homology has torsion; the face complex is inconsistent");
    if (cycle_rank - form.rank() != 2)
        throw Error(ErrorCode::basis_orientation_failure,
                    "expected free rank 2, got " + std::to_string(cycle_rank - form.rank()));

    HomologyCoordinates hc;
    hc.a.resize(m);
    hc.b.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        hc.a[i] = curves(form.rank(), i);
        hc.b[i] = curves(form.rank() + 1, i);
    }

    const IntersectionMatrix c = intersection_matrix(system);
    IntMatrix comm = hc.commutator();
    if (comm == c.matrix()) return hc;
    std::swap(hc.a, hc.b);
    if (hc.commutator() == c.matrix()) return hc;
    throw Error(ErrorCode::basis_orientation_failure, "neither basis ordering reproduces the intersection matrix");
}

SpectralPair spectral_pair(const IntersectionMatrix& c) {
    const std::size_t rank = matrix_rank(c);
    if (rank != 2) throw Error(ErrorCode::rank_not_two, "spectral pair needs rank 2, got rank " + std::to_string(rank));
    const std::size_t m = c.size();

    // The columns of C span its image, on which C^2 = -lambda^2.
    std::size_t best_col = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += static_cast<double>(c(i, j)) * static_cast<double>(c(i, j));
        if (s > best_norm) {
            best_norm = s;
            best_col = j;
        }
    }
    std::vector<double> x(m), y(m, 0.0);
    const double col_norm = std::sqrt(best_norm);
    for (std::size_t i = 0; i < m; ++i) x[i] = static_cast<double>(c(i, best_col)) / col_norm;

    double lambda_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += static_cast<double>(c(i, j)) * x[j];
        y[i] = -acc;
        lambda_sq += acc * acc;
    }
    const double lambda = std::sqrt(lambda_sq);
    for (double& v : y) v /= lambda;

    SpectralPair sp;
    sp.lambda = lambda;
    sp.e0.resize(m);
    for (std::size_t i = 0; i < m; ++i) sp.e0[i] = Complex(x[i], y[i]);

    double norm_sq = 0.0, max_abs = 0.0;
    for (const Complex& z : sp.e0) {
        norm_sq += std::norm(z);
        max_abs = std::max(max_abs, std::abs(z));
    }
    Complex phase = 1.0;
    for (const Complex& z : sp.e0)
        if (std::abs(z) > 1e-12 * max_abs) {
            phase = std::conj(z) / std::abs(z);
            break;
        }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (Complex& z : sp.e0) z *= phase * scale;

    const ComplexVector ce = c.apply(sp.e0);
    double res_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) res_sq += std::norm(ce[i] - Complex(0.0, lambda) * sp.e0[i]);
    sp.residual = std::sqrt(res_sq);
    if (!(sp.residual <= 1e-9 * lambda))
        throw Error(ErrorCode::residual_exceeded, "eigen residual " + std::to_string(sp.residual) + " exceeds tolerance");
    return sp;
}

std::string to_string(const EssentialityReason& reason) {
    switch (reason.kind) {
    case EssentialityFailure::not_connected: return "not-connected";
    case EssentialityFailure::genus_not_one: return "genus-not-1";
    case EssentialityFailure::rank_not_two: return "rank-not-2";
    case EssentialityFailure::null_homologous_curve:
        return "null-homologous-curve(" + std::to_string(reason.i + 1) + ")";
    case EssentialityFailure::opposite_sign_pair:
        return "opposite-sign-pair(" + std::to_string(reason.i + 1) + "," + std::to_string(reason.j + 1) + ")";
    }
    return "unknown";
}

EssentialityReport essentiality(const CurveSystem& system) {
    const SurfaceReport surface = surface_report(system);
    const SystemIndex index(system);
    const IntersectionMatrix c = intersection_matrix(system);
    EssentialityReport report;

    if (!surface.connected) report.reasons.push_back({EssentialityFailure::not_connected});
    if (std::any_of(surface.genus.begin(), surface.genus.end(), [](int g) { return g != 1; }))
        report.reasons.push_back({EssentialityFailure::genus_not_one});
    if (matrix_rank(c) != 2) report.reasons.push_back({EssentialityFailure::rank_not_two});

    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < m && zero; ++j) zero = c(i, j) == 0;
        if (zero) report.reasons.push_back({EssentialityFailure::null_homologous_curve, i});
    }

    // positive[i * m + j]: some label has +k on curve i and -k on curve j.
    std::vector<char> positive(m * m, 0);
    for (std::size_t k = 0; k < index.label_count(); ++k) positive[index.plus_curve(k) * m + index.minus_curve(k)] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (positive[i * m + j] && positive[j * m + i])
                report.reasons.push_back({EssentialityFailure::opposite_sign_pair, i, j});

    report.essential = report.reasons.empty();
    return report;
}

}  // namespace ptile
