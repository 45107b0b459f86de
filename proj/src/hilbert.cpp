#include "tlsho/hilbert.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "tlsho/errors.hpp"

namespace tlsho {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

FockSpace::FockSpace(Index n_max) : n_max_(n_max) {
    if (n_max < 2) {
        throw InvalidParameter("FockSpace: n_max must be >= 2, got " + std::to_string(n_max));
    }
}

PureState::PureState(Vector amplitudes, Basis basis)
    : amplitudes_(std::move(amplitudes)), basis_(basis) {
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw InvalidParameter("PureState: norm " + num(norm) + " is not 1");
    }
    if (basis_ == Basis::qubit && amplitudes_.size() != 2) {
        throw DimensionError("PureState: qubit state must have 2 amplitudes");
    }
    if (basis_ == Basis::composite && amplitudes_.size() % 2 != 0) {
        throw DimensionError("PureState: composite dimension must be even");
    }
}

DensityMatrix::DensityMatrix(Matrix entries, Basis basis)
    : entries_(std::move(entries)), basis_(basis) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw DimensionError("DensityMatrix: matrix must be square and non-empty");
    }
    if (basis_ == Basis::qubit && entries_.rows() != 2) {
        throw DimensionError("DensityMatrix: qubit matrix must be 2x2");
    }
    if (basis_ == Basis::composite && (entries_.rows() % 2 != 0 || entries_.rows() < 4)) {
        throw DimensionError("DensityMatrix: composite dimension must be 2*n_max with n_max >= 2");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const Vector& v = psi.amplitudes();
    return DensityMatrix(v * v.adjoint(), psi.basis());
}

Index DensityMatrix::n_max() const {
    switch (basis_) {
    case Basis::composite:
        return dim() / 2;
    case Basis::oscillator:
        return dim();
    case Basis::qubit:
        break;
    }
    throw BasisError("DensityMatrix: qubit matrix has no oscillator cutoff");
}

InvariantReport DensityMatrix::invariants() const {
    InvariantReport report;
    report.hermiticity_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    report.trace_error = std::abs(entries_.trace() - Complex(1.0, 0.0));
    const Matrix hermitian = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    return report;
}

void DensityMatrix::require_valid() const {
    const InvariantReport r = invariants();
    if (!r.ok()) {
        throw InvariantViolation("DensityMatrix invariants violated: hermiticity defect " +
                                 num(r.hermiticity_defect) + ", trace error " +
                                 num(r.trace_error) + ", min eigenvalue " +
                                 num(r.min_eigenvalue));
    }
}

Matrix annihilation(const FockSpace& space) {
    const Index n = space.n_max();
    Matrix a = Matrix::Zero(n, n);
    for (Index k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

Matrix creation(const FockSpace& space) { return annihilation(space).adjoint(); }

Matrix number_operator(const FockSpace& space) {
    Vector diag(space.n_max());
    for (Index k = 0; k < space.n_max(); ++k) {
        diag(k) = static_cast<double>(k);
    }
    return diag.asDiagonal();
}

Matrix parity(const FockSpace& space) {
    Vector diag(space.n_max());
    for (Index k = 0; k < space.n_max(); ++k) {
        diag(k) = (k % 2 == 0) ? 1.0 : -1.0;
    }
    return diag.asDiagonal();
}

Matrix pauli(Pauli which) {
    const Complex i(0.0, 1.0);
    Matrix m = Matrix::Zero(2, 2);
    switch (which) {
    case Pauli::x:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case Pauli::y:
        m(0, 1) = -i;
        m(1, 0) = i;
        break;
    case Pauli::z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    case Pauli::plus:
        m(0, 1) = 1.0;
        break;
    case Pauli::minus:
        m(1, 0) = 1.0;
        break;
    }
    return m;
}

Matrix kron(const Matrix& qubit_op, const Matrix& osc_op) {
    if (qubit_op.rows() != 2 || qubit_op.cols() != 2) {
        throw DimensionError("kron: qubit operator must be 2x2");
    }
    if (osc_op.rows() != osc_op.cols() || osc_op.rows() < 1) {
        throw DimensionError("kron: oscillator operator must be square");
    }
    const Index n = osc_op.rows();
    Matrix out(2 * n, 2 * n);
    for (Index s = 0; s < 2; ++s) {
        for (Index r = 0; r < 2; ++r) {
            out.block(s * n, r * n, n, n) = qubit_op(s, r) * osc_op;
        }
    }
    return out;
}

DensityMatrix tensor(const DensityMatrix& qubit, const DensityMatrix& oscillator) {
    if (qubit.basis() != Basis::qubit || oscillator.basis() != Basis::oscillator) {
        throw BasisError("tensor: expected a qubit and an oscillator density matrix");
    }
    return DensityMatrix(kron(qubit.matrix(), oscillator.matrix()), Basis::composite);
}

double coherent_tail_mass(Complex alpha, Index n_max) {
    const double mean = std::norm(alpha);
    if (mean == 0.0) {
        return 0.0;
    }
    // Sum the retained Poisson weights in log space.
    double kept = 0.0;
    const double log_mean = std::log(mean);
    for (Index k = 0; k < n_max; ++k) {
        kept += std::exp(-mean + static_cast<double>(k) * log_mean -
                         std::lgamma(static_cast<double>(k) + 1.0));
    }
    return std::max(0.0, 1.0 - kept);
}

namespace {

void require_coherent_fits(Complex alpha, const FockSpace& space, const char* who) {
    const double tail = coherent_tail_mass(alpha, space.n_max());
    if (tail > kTruncationTolerance) {
        throw TruncationError(std::string(who) + ": |alpha|=" + num(std::abs(alpha)) +
                              " leaves tail mass " + num(tail) + " beyond n_max=" +
                              std::to_string(space.n_max()));
    }
}

} // namespace

PureState coherent_state(Complex alpha, const FockSpace& space) {
    require_coherent_fits(alpha, space, "coherent_state");
    const Index n = space.n_max();
    Vector c(n);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (Index k = 1; k < n; ++k) {
        c(k) = c(k - 1) * alpha / std::sqrt(static_cast<double>(k));
    }
    c /= c.norm();
    return PureState(std::move(c), Basis::oscillator);
}

DensityMatrix thermal_density(double nbar, const FockSpace& space) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw InvalidParameter("thermal_density: nbar must be finite and >= 0");
    }
    const Index n = space.n_max();
    const double ratio = nbar / (nbar + 1.0);
    const double tail = std::pow(ratio, static_cast<double>(n));
    if (tail > kTruncationTolerance) {
        throw TruncationError("thermal_density: geometric tail " + num(tail) +
                              " beyond n_max=" + std::to_string(n));
    }
    Eigen::VectorXd p(n);
    p(0) = 1.0;
    for (Index k = 1; k < n; ++k) {
        p(k) = p(k - 1) * ratio;
    }
    p /= p.sum();
    return DensityMatrix(p.cast<Complex>().asDiagonal(), Basis::oscillator);
}

Matrix displacement(Complex alpha, const FockSpace& space) {
    require_coherent_fits(alpha, space, "displacement");
    const Index n = space.n_max();
    if (alpha == Complex(0.0, 0.0)) {
        return Matrix::Identity(n, n);
    }
    const Matrix a = annihilation(space);
    const Complex i(0.0, 1.0);
    // D = exp(-i K) with K = i(αa† − α*a) Hermitian.
    const Matrix k = i * (alpha * a.adjoint() - std::conj(alpha) * a);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (k + k.adjoint()));
    const Vector phases = (-i * solver.eigenvalues().cast<Complex>()).array().exp();
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.basis() != Basis::composite) {
        throw BasisError("partial_trace: input must be on the composite space");
    }
    const Index n = rho.n_max();
    const Matrix& m = rho.matrix();
    if (keep == Subsystem::oscillator) {
        return DensityMatrix(m.block(0, 0, n, n) + m.block(n, n, n, n), Basis::oscillator);
    }
    Matrix q(2, 2);
    for (Index s = 0; s < 2; ++s) {
        for (Index r = 0; r < 2; ++r) {
            q(s, r) = m.block(s * n, r * n, n, n).trace();
        }
    }
    return DensityMatrix(std::move(q), Basis::qubit);
}

} // namespace tlsho
