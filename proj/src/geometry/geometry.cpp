#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ptile/error.hpp"
#include "ptile/geometry.hpp"

namespace ptile {

namespace {

void check_length(const IntersectionMatrix& c, const EdgeData& e) {
    if (e.size() != c.size())
        throw Error(ErrorCode::length_mismatch, "edge data has " + std::to_string(e.size()) + " vectors for " +
                                                    std::to_string(c.size()) + " curves");
}

}  // namespace

double norm(const EdgeData& e) {
    double s = 0.0;
    for (const Complex& z : e) s += std::norm(z);
    return std::sqrt(s);
}

AdmissibilityReport admissible(const IntersectionMatrix& c, const EdgeData& e) {
    check_length(c, e);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == Complex(0.0, 0.0))
            throw Error(ErrorCode::zero_edge_vector, "edge vector " + std::to_string(i + 1) + " is zero");

    AdmissibilityReport report;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (c(i, j) == 0) continue;
            const double v = static_cast<double>(c(i, j)) * det_r(e[i], e[j]);
            report.margin = std::min(report.margin, v);
            if (!(v > 0.0)) report.violations.emplace_back(i, j);
        }
    report.admissible = report.violations.empty();
    return report;
}

ZoneVectors zone_vectors(const IntersectionMatrix& c, const EdgeData& e) {
    check_length(c, e);
    return c.apply(e);
}

LatticeBasis lattice_basis(const HomologyCoordinates& hc, const IntersectionMatrix& c, const EdgeData& e) {
    check_length(c, e);
    if (hc.a.size() != e.size() || hc.b.size() != e.size())
        throw Error(ErrorCode::length_mismatch, "homology coordinates do not match the edge data");
    const ZoneVectors z = c.apply(e);
    const std::size_t m = e.size();

    std::size_t r = 0, s = 0;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::int64_t minor = hc.a[i] * hc.b[j] - hc.a[j] * hc.b[i];
            if (std::llabs(minor) > std::llabs(best)) {
                best = minor;
                r = i;
                s = j;
            }
        }
    if (best == 0) throw Error(ErrorCode::no_invertible_minor, "homology coordinates A and B are dependent");

    const double d = static_cast<double>(best);
    LatticeBasis lb;
    lb.a = (z[r] * static_cast<double>(hc.b[s]) - z[s] * static_cast<double>(hc.b[r])) / d;
    lb.b = (z[s] * static_cast<double>(hc.a[r]) - z[r] * static_cast<double>(hc.a[s])) / d;

    double res = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        res += std::norm(lb.a * static_cast<double>(hc.a[i]) + lb.b * static_cast<double>(hc.b[i]) - z[i]);
    res = std::sqrt(res);
    if (!(res <= 1e-9 * norm(z)))
        throw Error(ErrorCode::residual_exceeded,
                    "a A + b B = C e holds only to " + std::to_string(res) + "; inputs are inconsistent");
    return lb;
}

double area(const IntersectionMatrix& c, const EdgeData& e) {
    check_length(c, e);
    double s = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (c(i, j) != 0) s += static_cast<double>(c(i, j)) * det_r(e[i], e[j]);
    return s;
}

EdgeData canonical_edge_data(const CurveSystem& system) {
    const EssentialityReport ess = essentiality(system);
    if (!ess.essential)
        throw Error(ErrorCode::not_essential, "curve system is not essential: " + to_string(ess.reasons.front()));
    const IntersectionMatrix c = intersection_matrix(system);
    EdgeData e = spectral_pair(c).e0;
    const AdmissibilityReport rep = admissible(c, e);
    if (!rep.admissible)
        throw Error(ErrorCode::admissibility_assertion,
                    "canonical edge data failed admissibility; sign conventions are inconsistent");
    return e;
}

RealLinearMap RealLinearMap::rotation(double theta) {
    const double co = std::cos(theta), si = std::sin(theta);
    return {co, -si, si, co};
}

EdgeData apply_real_linear(const RealLinearMap& m, const EdgeData& e) {
    if (m.det() == 0.0) throw Error(ErrorCode::singular_map, "real-linear map is singular");
    EdgeData out(e.size());
    std::transform(e.begin(), e.end(), out.begin(), m);
    return out;
}

EdgeData normalize_to_standard_lattice(const HomologyCoordinates& hc, const IntersectionMatrix& c,
                                       const EdgeData& e) {
    LatticeBasis lb = lattice_basis(hc, c, e);
    double d = det_r(lb.a, lb.b);
    if (d < 0) {
        std::swap(lb.a, lb.b);
        d = -d;
    }
    if (!(d > 1e-300) || !std::isfinite(d)) throw Error(ErrorCode::degenerate_lattice, "lattice basis is degenerate");
    // Inverse of the matrix with columns a, b.
    const RealLinearMap m{lb.b.imag() / d, -lb.b.real() / d, -lb.a.imag() / d, lb.a.real() / d};
    return apply_real_linear(m, e);
}

std::vector<DeformationSample> deformation_path(const IntersectionMatrix& c, const EdgeData& e_start,
                                                const EdgeData& e_end, int steps) {
    check_length(c, e_start);
    check_length(c, e_end);
    if (steps < 1) throw Error(ErrorCode::bad_input, "steps must be at least 1");
    EdgeData diff(e_start.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = e_end[i] - e_start[i];
    const double drift = norm(c.apply(diff));
    if (!(drift <= 1e-9 * norm(c.apply(e_start))))
        throw Error(ErrorCode::kernel_condition_violated,
                    "endpoints have different zone vectors (||C(e1 - e0)|| = " + std::to_string(drift) + ")");

    std::vector<DeformationSample> out;
    EdgeData et(e_start.size());
    for (int k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) / steps;
        for (std::size_t i = 0; i < et.size(); ++i) et[i] = (1.0 - t) * e_start[i] + t * e_end[i];
        AdmissibilityReport rep;
        try {
            rep = admissible(c, et);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::zero_edge_vector) throw;
            // A vanishing edge vector cannot be admissible.
            rep.margin = 0.0;
        }
        out.push_back({t, std::move(rep)});
    }
    return out;
}

std::vector<BoundaryHit> classify_boundary(const IntersectionMatrix& c, const EdgeData& e, double tol) {
    check_length(c, e);
    std::vector<BoundaryHit> hits;
    const std::size_t m = e.size();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = r + 1; s < m; ++s) {
            if (c(r, s) == 0 || std::abs(det_r(e[r], e[s])) > tol) continue;
            bool others = true;
            for (std::size_t i = 0; i < m && others; ++i)
                for (std::size_t j = i + 1; j < m && others; ++j) {
                    if (c(i, j) == 0 || (i == r && j == s)) continue;
                    // A pair within tol of its wall is not strictly admissible.
                    const double d = det_r(e[i], e[j]);
                    others = std::abs(d) > tol && static_cast<double>(c(i, j)) * d > 0.0;
                }
            hits.push_back({r, s, others});
        }
    return hits;
}

double openness_radius(const IntersectionMatrix& c, const EdgeData& e) {
    const AdmissibilityReport rep = admissible(c, e);
    if (!rep.admissible) return 0.0;
    if (c.max_abs_entry() == 0) return std::numeric_limits<double>::infinity();
    double big = 0.0;
    for (const Complex& z : e) big = std::max(big, std::abs(z));
    const double mu = rep.margin / static_cast<double>(c.max_abs_entry());
    return mu / (big + std::sqrt(big * big + mu));
}

std::vector<EdgeData> kernel_basis(const IntersectionMatrix& c) {
    const std::size_t m = c.size();
    const std::size_t rank = matrix_rank(c);
    Eigen::MatrixXd dense(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) dense(i, j) = static_cast<double>(c(i, j));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeFullV);
    std::vector<EdgeData> basis;
    for (std::size_t col = rank; col < m; ++col) {
        EdgeData re(m), im(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double v = svd.matrixV()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col));
            re[i] = Complex(v, 0.0);
            im[i] = Complex(0.0, v);
        }
        basis.push_back(std::move(re));
        basis.push_back(std::move(im));
    }
    return basis;
}

EdgeData sample_kernel_slice(const IntersectionMatrix& c, const EdgeData& e, Rng& rng) {
    if (!admissible(c, e).admissible) throw Error(ErrorCode::not_admissible, "slice center must be admissible");
    const auto basis = kernel_basis(c);
    if (basis.empty()) return e;

    std::uniform_real_distribution<double> coef(-1.0, 1.0), keep(0.5, 1.0);
    EdgeData k(e.size(), Complex(0.0, 0.0));
    for (const auto& v : basis) {
        const double w = coef(rng);
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += w * v[i];
    }
    const double kn = norm(k);
    if (kn == 0.0) return e;
    for (Complex& z : k) z *= norm(e) / kn;

    auto at = [&](double s) {
        EdgeData out(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i] + s * k[i];
        return out;
    };
    auto ok = [&](double s) {
        const EdgeData p = at(s);
        for (const Complex& z : p)
            if (z == Complex(0.0, 0.0)) return false;
        return admissible(c, p).admissible;
    };

    double s = 1.0;
    if (!ok(s)) {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? lo : hi) = mid;
        }
        s = lo * keep(rng);
        while (!ok(s)) s *= 0.5;
    }
    return at(s);
}

}  // namespace ptile
