// hilbert.hpp — truncated qubit ⊗ oscillator Hilbert space, states and elementary operators
//
// Basis ordering is (spin, Fock) with spin slowest:
//   (↑,0), (↑,1), …, (↑,n_max-1), (↓,0), …, (↓,n_max-1)
// so composite matrices are 2×2 blocks of n_max×n_max oscillator blocks, block 0 = ↑.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tlsho {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Occupation mass allowed beyond the cutoff before TruncationError.
inline constexpr double kTruncationTolerance = 1e-8;

inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPositivityTolerance = 1e-8;
inline constexpr double kNormTolerance = 1e-10;

class FockSpace {
public:
    explicit FockSpace(Index n_max);

    Index n_max() const { return n_max_; }
    Index dim() const { return 2 * n_max_; }

    friend bool operator==(const FockSpace&, const FockSpace&) = default;

private:
    Index n_max_;
};

enum class Basis { composite, qubit, oscillator };
enum class Subsystem { qubit, oscillator };

struct InvariantReport {
    double hermiticity_defect{0.0};
    double trace_error{0.0};
    double min_eigenvalue{0.0};

    bool ok() const {
        return hermiticity_defect <= kHermiticityTolerance && trace_error <= kTraceTolerance &&
               min_eigenvalue >= -kPositivityTolerance;
    }
};

class PureState {
public:
    // Throws InvalidParameter unless the norm is within kNormTolerance of 1.
    PureState(Vector amplitudes, Basis basis);

    const Vector& amplitudes() const { return amplitudes_; }
    Basis basis() const { return basis_; }
    Index dim() const { return amplitudes_.size(); }

private:
    Vector amplitudes_;
    Basis basis_;
};

class DensityMatrix {
public:
    // Checks shape against the basis tag only; physical invariants are
    // inspected with invariants()/require_valid().
    DensityMatrix(Matrix entries, Basis basis);

    static DensityMatrix from_pure(const PureState& psi);

    const Matrix& matrix() const { return entries_; }
    Basis basis() const { return basis_; }
    Index dim() const { return entries_.rows(); }

    // Oscillator cutoff of a composite or oscillator matrix.
    Index n_max() const;

    InvariantReport invariants() const;
    void require_valid() const;

private:
    Matrix entries_;
    Basis basis_;
};

Matrix annihilation(const FockSpace& space);
Matrix creation(const FockSpace& space);
Matrix number_operator(const FockSpace& space);

// Oscillator parity e^{iπ a†a} = diag((-1)^k).
Matrix parity(const FockSpace& space);

enum class Pauli { x, y, z, plus, minus };

// Basis (|↑⟩, |↓⟩) with σ_z|↑⟩ = |↑⟩; σ_- takes |↑⟩ to |↓⟩.
Matrix pauli(Pauli which);

// qubit_op ⊗ osc_op with the qubit as the left (slow) factor.
Matrix kron(const Matrix& qubit_op, const Matrix& osc_op);

DensityMatrix tensor(const DensityMatrix& qubit, const DensityMatrix& oscillator);

// Poisson mass of |α⟩ on Fock levels ≥ n_max.
double coherent_tail_mass(Complex alpha, Index n_max);

PureState coherent_state(Complex alpha, const FockSpace& space);
DensityMatrix thermal_density(double nbar, const FockSpace& space);

// Unitary e^{αa† − α*a} built from the Hermitian eigendecomposition of i(αa† − α*a).
Matrix displacement(Complex alpha, const FockSpace& space);

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

} // namespace tlsho
