// rates.hpp: Floquet-basis coupling amplitudes and bath-induced transition rates
//
// Channel (alpha <- beta, k): transition from Floquet state beta to alpha assisted by k drive
// quanta. The bath absorbs energy -Delta_{alpha beta,k}, Delta = eps_alpha - eps_beta + k Omega.
// States are indexed 0 (state 1) and 1 (state 2).

#pragma once

#include <vector>

#include "heatfcs/bath.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/linalg.hpp"

namespace heatfcs {

struct CouplingMatrixElements {
    int k_max{0};
    // entries[alpha][beta][k + k_max]
    std::array<std::array<std::vector<cplx>, 2>, 2> entries;

    explicit CouplingMatrixElements(int k_max = 0);
    cplx at(int alpha, int beta, int k) const;
    cplx& at(int alpha, int beta, int k);
};

// S_{ab,k} = (1/tau) int_0^tau <phi_a|S|phi_b> e^{-ik Omega t} dt by the periodic trapezoidal
// rule. Throws TruncationError when the spectral tail beyond k_max carries more than
// 1e-12 of an entry's weight.
CouplingMatrixElements coupling_fourier(const Mat2& coupling, const FloquetSolution& sol,
                                        int k_max);

// Closed-form Rabi-mode amplitudes at drive phase 0 (sign conventions of floquet.hpp).
CouplingMatrixElements sigma_x_elements(double theta);
CouplingMatrixElements sigma_z_elements(double theta);

struct RateChannel {
    int to{0};
    int from{0};
    int harmonic{0};
    double energy{0.0};      // Delta_{to from, harmonic}
    double amplitude2{0.0};  // |S|^2
    double rate{0.0};        // a = 2 pi s(Delta) |S|^2
};

struct RateTable {
    std::vector<RateChannel> channels;
    Eigen::Matrix2d aggregate = Eigen::Matrix2d::Zero();  // A(to, from)
    double eps1{0.0};
    double eps2{0.0};
    double drive_frequency{1.0};

    double rabi_frequency() const { return eps2 - eps1; }
    double period() const;
    double rate(int to, int from) const { return aggregate(to, from); }
    // Sigma = A12 + A21
    double relaxation() const { return aggregate(0, 1) + aggregate(1, 0); }
    // Throws InvariantError on negative rates, inconsistent aggregates or bad energies.
    void validate() const;
};

RateTable partial_rates(const CouplingMatrixElements& elements, const FloquetSolution& sol,
                        const BathParameters& bath);

// A^nu(to, from) = sum_k e^{-i nu Delta} a.
Mat2 aggregate_nu(const RateTable& table, double nu);

// Same sum with the quasienergy part of Delta stripped: sum_k e^{-i nu k Omega} a.
// Every entry is periodic in nu with the drive period.
Mat2 aggregate_harmonic(const RateTable& table, double nu);

} // namespace heatfcs
