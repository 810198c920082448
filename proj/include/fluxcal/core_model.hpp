// core_model.hpp — Transmon flux-to-frequency map, the coil-current crosstalk
// model, and their inverses (frequency targeting and current planning).
//
// Conventions: energies and frequencies in GHz (h = 1), flux in units of the
// flux quantum Phi0, coil currents in mA. The SQUID makes the qubit frequency
//   f(flux) = sqrt(e_j_max * |cos(pi * flux)| * e_c) - e_c
// and each qubit sees the affine flux
//   flux_i = offset_i + sum_j mutuals(i, j) * I_j.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "fluxcal/errors.hpp"
#include "fluxcal/linalg.hpp"

namespace fluxcal {

// Per-qubit transmon energies, GHz.
struct TransmonParams {
    double e_j_max = 0.0; // maximum Josephson energy (flux = 0)
    double e_c = 0.0;     // charging energy, fixed by pad geometry

    // Highest reachable frequency, attained at integer flux.
    double f_max() const { return std::sqrt(e_j_max * e_c) - e_c; }

    void validate() const {
        if (!(e_j_max > 0.0) || !(e_c > 0.0))
            throw InvalidArgument("TransmonParams: energies must be positive");
        if (!(e_j_max > e_c))
            throw InvalidArgument("TransmonParams: e_j_max must exceed e_c (transmon regime)");
    }
};

// Coil-current to SQUID-flux affine map. Rows index qubits, columns coils.
struct FluxMap {
    linalg::Mat mutuals; // Phi0 per mA
    linalg::Vec offsets; // Phi0

    std::size_t n_qubits() const noexcept { return mutuals.rows(); }
    std::size_t n_coils() const noexcept { return mutuals.cols(); }

    void validate() const {
        if (offsets.size() != mutuals.rows())
            throw DimensionMismatch("FluxMap: offsets length " + std::to_string(offsets.size()) +
                                    " != mutuals rows " + std::to_string(mutuals.rows()));
        for (double x : mutuals.data())
            if (!std::isfinite(x)) throw InvalidArgument("FluxMap: non-finite mutual inductance");
        for (double x : offsets)
            if (!std::isfinite(x)) throw InvalidArgument("FluxMap: non-finite flux offset");
    }
};

// One setting of all coil currents, mA.
struct BiasPoint {
    linalg::Vec currents;

    void validate() const {
        for (double x : currents)
            if (!std::isfinite(x)) throw InvalidArgument("BiasPoint: non-finite current");
    }
};

// Qubit transition frequency at the given flux. Total function: near
// half-integer flux it goes raw through zero down to -e_c; callers that need
// a physical cutoff apply it themselves.
inline double transmon_frequency(const TransmonParams& params, double flux_phi0) {
    const double c = std::abs(std::cos(std::numbers::pi * flux_phi0));
    return std::sqrt(params.e_j_max * c * params.e_c) - params.e_c;
}

// Inverse of transmon_frequency on the principal branch, returning a flux in
// [0, 0.5]. Throws TargetUnreachable outside [-e_c, f_max].
inline double flux_for_frequency(const TransmonParams& params, double f_ghz) {
    const double fmax = params.f_max();
    if (!(f_ghz >= -params.e_c) || !(f_ghz <= fmax))
        throw TargetUnreachable("flux_for_frequency: " + std::to_string(f_ghz) +
                                " GHz outside reachable band [" + std::to_string(-params.e_c) +
                                ", " + std::to_string(fmax) + "]");
    const double fe = f_ghz + params.e_c;
    double arg = (fe * fe) / (params.e_j_max * params.e_c);
    arg = std::clamp(arg, 0.0, 1.0); // range was checked; clamp eats rounding spill
    return std::acos(arg) / std::numbers::pi;
}

// Flux seen by every qubit at one bias point: offsets + mutuals * currents.
inline linalg::Vec fluxes_from_currents(const FluxMap& map, const BiasPoint& bias) {
    if (bias.currents.size() != map.n_coils())
        throw DimensionMismatch("fluxes_from_currents: bias has " +
                                std::to_string(bias.currents.size()) + " currents, map expects " +
                                std::to_string(map.n_coils()));
    linalg::Vec flux = linalg::mat_vec(map.mutuals, bias.currents);
    for (std::size_t i = 0; i < flux.size(); ++i) flux[i] += map.offsets[i];
    return flux;
}

// Coil currents that put every qubit at its target frequency. Requires a
// square map; the per-qubit flux sign is chosen to stay closest to the flux
// offset (tie-break toward the positive branch). Targets below 0 GHz are
// treated as unreachable. Throws SingularMatrix when the mutual matrix has a
// 2-norm condition number above 1e12.
inline BiasPoint currents_for_targets(const FluxMap& map,
                                      const std::vector<TransmonParams>& params_per_qubit,
                                      const linalg::Vec& targets_ghz) {
    const std::size_t n = map.n_qubits();
    if (map.n_coils() != n)
        throw DimensionMismatch("currents_for_targets: map must be square, got " +
                                std::to_string(n) + "x" + std::to_string(map.n_coils()));
    if (params_per_qubit.size() != n || targets_ghz.size() != n)
        throw DimensionMismatch("currents_for_targets: need one target and parameter set per qubit");

    const double cond = linalg::cond_2(map.mutuals);
    if (!(cond <= 1e12))
        throw SingularMatrix("currents_for_targets: mutual matrix condition number " +
                             std::to_string(cond) + " exceeds 1e12");

    linalg::Vec rhs(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = targets_ghz[i];
        const double fmax = params_per_qubit[i].f_max();
        if (!(f >= 0.0) || !(f <= fmax))
            throw TargetUnreachable("currents_for_targets: qubit " + std::to_string(i) +
                                        " target " + std::to_string(f) +
                                        " GHz outside usable band [0, " + std::to_string(fmax) + "]",
                                    static_cast<int>(i));
        const double mag = flux_for_frequency(params_per_qubit[i], f);
        const double off = map.offsets[i];
        const double flux = (std::abs(mag - off) <= std::abs(-mag - off)) ? mag : -mag;
        rhs[i] = flux - off;
    }
    return BiasPoint{linalg::solve(map.mutuals, rhs)};
}

} // namespace fluxcal
