#pragma once

// Algebraic intersection data of a curve system: the generalized intersection
// matrix C, its exact rank, homology coordinates (A, B) with C = A B^t - B A^t,
// the spectral pair (lambda, e0) with C e0 = i lambda e0, and the essentiality
// predicate for genus-1 systems.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ptile/ccs.hpp"
#include "ptile/int_matrix.hpp"

namespace ptile {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Square skew-symmetric integer matrix, c_ij = gamma_i . gamma_j.
class IntersectionMatrix {
public:
    IntersectionMatrix() = default;
    /// Throws Error(bad_input) unless `m` is square and skew-symmetric.
    explicit IntersectionMatrix(IntMatrix m);
    IntersectionMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : IntersectionMatrix(IntMatrix(rows)) {}

    std::size_t size() const noexcept { return c_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return c_(i, j); }
    const IntMatrix& matrix() const noexcept { return c_; }

    /// Sum of squares of all entries.
    double frobenius_squared() const noexcept;
    std::int64_t max_abs_entry() const noexcept;
    /// Real matrix times complex vector.
    ComplexVector apply(const ComplexVector& v) const;

    friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

private:
    IntMatrix c_;
};

IntersectionMatrix intersection_matrix(const CurveSystem& system);

std::size_t matrix_rank(const IntersectionMatrix& c);

/// gamma_i = a_i alpha + b_i beta in a basis of H_1 of the reconstructed torus.
struct HomologyCoordinates {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;

    /// A B^t - B A^t.
    IntMatrix commutator() const;
};

HomologyCoordinates homology_coordinates(const CurveSystem& system);

struct SpectralPair {
    double lambda = 0.0;
    ComplexVector e0;
    /// || C e0 - i lambda e0 ||, the certified residual.
    double residual = 0.0;
};

/// Eigenpair for the positive imaginary eigenvalue of a rank-2 skew matrix.
/// e0 has unit norm and its first nonzero component is real and positive.
SpectralPair spectral_pair(const IntersectionMatrix& c);

enum class EssentialityFailure {
    not_connected,
    genus_not_one,
    rank_not_two,
    null_homologous_curve,
    opposite_sign_pair,
};

struct EssentialityReason {
    EssentialityFailure kind;
    std::size_t i = 0;
    std::size_t j = 0;
};

std::string to_string(const EssentialityReason& reason);

struct EssentialityReport {
    bool essential = false;
    std::vector<EssentialityReason> reasons;
};

EssentialityReport essentiality(const CurveSystem& system);

}  // namespace ptile
