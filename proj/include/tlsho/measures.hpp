// measures.hpp — entanglement and mixedness measures

#pragma once

#include "tlsho/hilbert.hpp"

namespace tlsho {

// Eigenvalues of ρ^{PT} below this magnitude count as zero.
inline constexpr double kNegativityZeroCutoff = 1e-10;

struct MeasureSet {
    double negativity{0.0};
    double k_sigma{1.0};
    double k_r{1.0};
    double purity{1.0};
};

// Transpose on the qubit factor: swaps the two off-diagonal oscillator blocks.
Matrix partial_transpose(const DensityMatrix& rho);

// Sum of |negative eigenvalues| of ρ^{PT}, i.e. (‖ρ^{PT}‖₁ − 1)/2 for unit-trace ρ.
double negativity(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// 1 / Tr ρ² of a reduced (qubit or oscillator) state.
double participation_ratio(const DensityMatrix& reduced);

MeasureSet measure_set(const DensityMatrix& rho);

double min_eigenvalue(const Matrix& hermitian);

// ⟨ψ|ρ|ψ⟩
double fidelity(const PureState& psi, const DensityMatrix& rho);
// |⟨ψ|φ⟩|²
double fidelity(const PureState& psi, const PureState& phi);

} // namespace tlsho
