#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "dosym/error.hpp"

namespace dosym {

using complex = std::complex<double>;
using cmatrix = Eigen::MatrixXcd;
using cvector = Eigen::VectorXcd;

// Hard cap on dense dimensions: 12 spins (2^12) or a Fock cutoff of 4096.
inline constexpr Eigen::Index kDimCap = 4096;
inline constexpr int kMaxSites = 12;
inline constexpr double kHermitianTol = 1e-12;

enum class PauliAxis { x, y, z };

/// Dense complex square operator. The `hermitian` flag is asserted at
/// construction (max entry of |A - A^dag| <= kHermitianTol) and can be
/// re-checked at any time. All entries must be finite.
class Operator {
public:
    explicit Operator(cmatrix entries, bool hermitian = false);

    static Operator identity(Eigen::Index dim);

    Eigen::Index dim() const { return mat_.rows(); }
    const cmatrix& matrix() const { return mat_; }
    bool hermitian() const { return hermitian_; }
    bool check_hermitian(double tol = kHermitianTol) const;

    complex trace() const { return mat_.trace(); }
    Operator adjoint() const;

private:
    cmatrix mat_;
    bool hermitian_ = false;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(double c, const Operator& a);
Operator operator*(complex c, const Operator& a);

/// I (x) ... (x) sigma_axis (x) ... (x) I acting at `site` of `n_sites` spins.
/// Site 0 is the leftmost (most significant) tensor factor.
Operator pauli(PauliAxis axis, int site, int n_sites);

/// Kronecker product; dim(a) * dim(b) must stay within kDimCap.
Operator tensor(const Operator& a, const Operator& b);

/// |A| = sqrt(Tr A^dag A)
double frobenius_norm(const Operator& a);

/// H - (Tr H / d) I: same spectrum up to a uniform shift, exactly traceless.
Operator rebias(const Operator& h);

/// exp(s*h) for Hermitian h via full eigendecomposition. Result is Hermitian
/// positive-definite; exp(0*h) = I.
Operator hermitian_exp(const Operator& h, double s);

/// A density matrix or a pure state vector. Density matrices are validated
/// (Hermitian, unit trace, eigenvalues >= -1e-10); pure vectors must have
/// unit norm. Pure states keep their amplitudes; the projector is formed on
/// demand.
class State {
public:
    static State density(cmatrix rho);
    static State pure(cvector psi);

    bool is_pure() const { return psi_.has_value(); }
    Eigen::Index dim() const;

    const cvector& amplitudes() const; // pure states only
    cmatrix density_matrix() const;
    Eigen::VectorXd diagonal() const;  // z-basis populations
    double purity() const;             // Tr rho^2; exactly 1 for pure states

private:
    State() = default;
    std::optional<cvector> psi_;
    cmatrix rho_;
};

/// exp(-beta h) / Tr exp(-beta h). The spectrum is shifted by its minimum
/// before exponentiating so large beta cannot overflow; beta = 0 gives I/d.
State thermal_state(const Operator& h, double beta);

} // namespace dosym
