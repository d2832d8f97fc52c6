#pragma once

// shared helpers for the test suites

#include "dqlin/eig.hpp"
#include "dqlin/matrix.hpp"
#include "dqlin/rng.hpp"
#include "dqlin/sampling.hpp"

namespace testutil {

using namespace dqlin;

inline Quaternion random_quat(Rng& rng) {
    return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

inline DualQuaternion random_dual_quat(Rng& rng) {
    return {random_quat(rng), random_quat(rng)};
}

inline DQVector random_dq_vector(Index n, Rng& rng) {
    DQVector v(n);
    for (Index i = 0; i < n; ++i) v.set(i, random_dual_quat(rng));
    return v;
}

inline DQMatrix random_dq_matrix(Index rows, Index cols, Rng& rng) {
    DQMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m.set(i, j, random_dual_quat(rng));
    return m;
}

inline DQMatrix random_hermitian(Index n, Rng& rng) {
    return hermitize(random_dq_matrix(n, n, rng));
}

/// Orthonormal set of n unit-2-norm dual quaternion vectors.
inline std::vector<DQVector> random_orthonormal_set(Index n, Rng& rng) {
    std::vector<DQVector> vs;
    for (Index i = 0; i < n; ++i) vs.push_back(random_dq_vector(n, rng));
    std::vector<DQVector> us = extract_orthogonal(vs);
    while (us.size() < static_cast<std::size_t>(n)) {
        vs.push_back(random_dq_vector(n, rng));
        us = extract_orthogonal(vs);
    }
    return us;
}

/// Hermitian matrix with prescribed dual eigenvalues on a random orthonormal
/// eigenbasis.
inline DQMatrix synthesize_hermitian(const std::vector<DualNumber>& values, Rng& rng,
                                     std::vector<DQVector>* basis_out = nullptr) {
    const Index n = static_cast<Index>(values.size());
    const std::vector<DQVector> basis = random_orthonormal_set(n, rng);
    DQMatrix q(n, n);
    for (Index i = 0; i < n; ++i) q = q + values[i] * outer(basis[i], basis[i]);
    if (basis_out) *basis_out = basis;
    return hermitize(q);
}

inline double entry_distance(const DQMatrix& a, const DQMatrix& b) { return fr_norm(a - b); }

inline bool spectra_match(const Spectrum& spec, std::vector<DualNumber> expected, double atol) {
    if (spec.size() != expected.size()) return false;
    std::vector<char> used(expected.size(), 0);
    for (const auto& pair : spec.pairs) {
        bool found = false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!used[i] && approx_eq(pair.value, expected[i], atol)) {
                used[i] = 1;
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace testutil
