#include "dosym/operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace dosym {

namespace {

void require_square(const cmatrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

double hermiticity_defect(const cmatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace

Operator::Operator(cmatrix entries, bool hermitian) : mat_(std::move(entries)), hermitian_(hermitian) {
    require_square(mat_, "Operator");
    if (mat_.rows() > kDimCap) {
        throw std::invalid_argument("Operator: dimension " + std::to_string(mat_.rows()) +
                                    " exceeds cap " + std::to_string(kDimCap));
    }
    if (!mat_.allFinite()) throw std::invalid_argument("Operator: entries must be finite");
    if (hermitian_ && hermiticity_defect(mat_) > kHermitianTol) {
        throw std::invalid_argument("Operator: hermitian flag asserted but |A - A^dag| exceeds tolerance");
    }
}

Operator Operator::identity(Eigen::Index dim) {
    return Operator(cmatrix::Identity(dim, dim), true);
}

bool Operator::check_hermitian(double tol) const {
    return hermiticity_defect(mat_) <= tol;
}

Operator Operator::adjoint() const {
    return Operator(mat_.adjoint(), hermitian_);
}

Operator operator+(const Operator& a, const Operator& b) {
    return Operator(a.matrix() + b.matrix(), a.hermitian() && b.hermitian());
}

Operator operator-(const Operator& a, const Operator& b) {
    return Operator(a.matrix() - b.matrix(), a.hermitian() && b.hermitian());
}

Operator operator*(const Operator& a, const Operator& b) {
    return Operator(a.matrix() * b.matrix(), false);
}

Operator operator*(double c, const Operator& a) {
    return Operator(c * a.matrix(), a.hermitian());
}

Operator operator*(complex c, const Operator& a) {
    return Operator(c * a.matrix(), a.hermitian() && c.imag() == 0.0);
}

Operator pauli(PauliAxis axis, int site, int n_sites) {
    if (n_sites < 1 || n_sites > kMaxSites) {
        throw std::invalid_argument("pauli: n_sites must be in [1, " + std::to_string(kMaxSites) + "]");
    }
    if (site < 0 || site >= n_sites) throw std::invalid_argument("pauli: site out of range");

    cmatrix sigma(2, 2);
    const complex i{0.0, 1.0};
    switch (axis) {
    case PauliAxis::x: sigma << 0, 1, 1, 0; break;
    case PauliAxis::y: sigma << 0, -i, i, 0; break;
    case PauliAxis::z: sigma << 1, 0, 0, -1; break;
    }

    const Eigen::Index left = Eigen::Index(1) << site;
    const Eigen::Index right = Eigen::Index(1) << (n_sites - site - 1);
    cmatrix out = Eigen::kroneckerProduct(cmatrix::Identity(left, left), sigma);
    out = Eigen::kroneckerProduct(out, cmatrix::Identity(right, right)).eval();
    return Operator(std::move(out), true);
}

Operator tensor(const Operator& a, const Operator& b) {
    if (a.dim() * b.dim() > kDimCap) {
        throw std::invalid_argument("tensor: product dimension exceeds cap " + std::to_string(kDimCap));
    }
    cmatrix out = Eigen::kroneckerProduct(a.matrix(), b.matrix());
    return Operator(std::move(out), a.hermitian() && b.hermitian());
}

double frobenius_norm(const Operator& a) {
    return a.matrix().norm();
}

Operator rebias(const Operator& h) {
    if (!h.hermitian()) throw std::invalid_argument("rebias: input must be Hermitian");
    const double mean = h.trace().real() / static_cast<double>(h.dim());
    cmatrix out = h.matrix();
    out.diagonal().array() -= mean;
    return Operator(std::move(out), true);
}

Operator hermitian_exp(const Operator& h, double s) {
    if (!h.hermitian()) throw std::invalid_argument("hermitian_exp: input must be Hermitian");
    Eigen::SelfAdjointEigenSolver<cmatrix> es(h.matrix());
    if (es.info() != Eigen::Success) throw convergence_error("hermitian_exp: eigendecomposition failed");
    const Eigen::VectorXd w = (s * es.eigenvalues().array()).exp();
    cmatrix out = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
    out = 0.5 * (out + out.adjoint().eval());
    return Operator(std::move(out), true);
}

State State::density(cmatrix rho) {
    require_square(rho, "State::density");
    if (!rho.allFinite()) throw std::invalid_argument("State::density: entries must be finite");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw std::invalid_argument("State::density: density matrix must be Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12) {
        throw std::invalid_argument("State::density: trace must be 1");
    }
    Eigen::SelfAdjointEigenSolver<cmatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw convergence_error("State::density: eigendecomposition failed");
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("State::density: negative eigenvalue beyond tolerance");
    }
    State st;
    st.rho_ = std::move(rho);
    return st;
}

State State::pure(cvector psi) {
    if (psi.size() == 0) throw std::invalid_argument("State::pure: empty vector");
    if (!psi.allFinite()) throw std::invalid_argument("State::pure: amplitudes must be finite");
    if (std::abs(psi.norm() - 1.0) > 1e-12) throw std::invalid_argument("State::pure: vector must be normalized");
    State st;
    st.psi_ = std::move(psi);
    return st;
}

Eigen::Index State::dim() const {
    return psi_ ? psi_->size() : rho_.rows();
}

const cvector& State::amplitudes() const {
    if (!psi_) throw std::invalid_argument("State::amplitudes: state is not pure");
    return *psi_;
}

cmatrix State::density_matrix() const {
    if (psi_) return (*psi_) * psi_->adjoint();
    return rho_;
}

Eigen::VectorXd State::diagonal() const {
    if (psi_) return psi_->cwiseAbs2();
    return rho_.diagonal().real();
}

double State::purity() const {
    if (psi_) return 1.0;
    return rho_.squaredNorm();
}

State thermal_state(const Operator& h, double beta) {
    if (!h.hermitian()) throw std::invalid_argument("thermal_state: Hamiltonian must be Hermitian");
    if (!(beta >= 0.0)) throw std::invalid_argument("thermal_state: beta must be >= 0");
    Eigen::SelfAdjointEigenSolver<cmatrix> es(h.matrix());
    if (es.info() != Eigen::Success) throw convergence_error("thermal_state: eigendecomposition failed");
    // shift by the ground energy so all Boltzmann exponents are <= 0
    const Eigen::VectorXd shifted = es.eigenvalues().array() - es.eigenvalues().minCoeff();
    Eigen::VectorXd w = (-beta * shifted.array()).exp();
    w /= w.sum();
    cmatrix rho = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace().real();
    return State::density(std::move(rho));
}

} // namespace dosym
