#include "tlsho/measures.hpp"

#include "tlsho/errors.hpp"

namespace tlsho {

Matrix partial_transpose(const DensityMatrix& rho) {
    if (rho.basis() != Basis::composite) {
        throw BasisError("partial_transpose: expected a composite density matrix");
    }
    const Index n = rho.n_max();
    Matrix pt = rho.matrix();
    pt.topRightCorner(n, n).swap(pt.bottomLeftCorner(n, n));
    return pt;
}

double negativity(const DensityMatrix& rho) {
    const Matrix pt = partial_transpose(rho);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
    double sum = 0.0;
    for (const double ev : solver.eigenvalues()) {
        if (ev < -kNegativityZeroCutoff) {
            sum -= ev;
        }
    }
    return sum;
}

double purity(const DensityMatrix& rho) {
    // Tr ρ² = Σ |ρ_ij|² for Hermitian ρ.
    return rho.matrix().squaredNorm();
}

double participation_ratio(const DensityMatrix& reduced) {
    if (reduced.basis() == Basis::composite) {
        throw BasisError("participation_ratio: expected a reduced density matrix");
    }
    return 1.0 / purity(reduced);
}

MeasureSet measure_set(const DensityMatrix& rho) {
    MeasureSet m;
    m.negativity = negativity(rho);
    m.k_sigma = participation_ratio(partial_trace(rho, Subsystem::qubit));
    m.k_r = participation_ratio(partial_trace(rho, Subsystem::oscillator));
    m.purity = purity(rho);
    return m;
}

double min_eigenvalue(const Matrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim()) {
        throw DimensionError("fidelity: dimension mismatch");
    }
    const Vector& v = psi.amplitudes();
    return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double fidelity(const PureState& psi, const PureState& phi) {
    if (psi.dim() != phi.dim()) {
        throw DimensionError("fidelity: dimension mismatch");
    }
    return std::norm(psi.amplitudes().dot(phi.amplitudes()));
}

} // namespace tlsho
