#include "dqlin/sampling.hpp"

namespace dqlin {

DualQuaternion random_unit_dq(Rng& rng) {
    Quaternion st;
    double n2 = 0.0;
    do {
        st = {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        n2 = st.norm_squared();
    } while (n2 == 0.0);
    st = (1.0 / std::sqrt(n2)) * st;
    const Quaternion w{0.5 * rng.normal(), 0.5 * rng.normal(), 0.5 * rng.normal(),
                       0.5 * rng.normal()};
    const Quaternion du = w - (st.conj() * w).scalar_part() * st;
    return {st, du};
}

DQVector random_unit_dq_vector(Index n, Rng& rng) {
    DQVector v(n);
    for (Index i = 0; i < n; ++i) v.set(i, random_unit_dq(rng));
    return v;
}

DualQuaternion random_dq(Rng& rng, double scale) {
    return {{scale * rng.normal(), scale * rng.normal(), scale * rng.normal(),
             scale * rng.normal()},
            {scale * rng.normal(), scale * rng.normal(), scale * rng.normal(),
             scale * rng.normal()}};
}

}  // namespace dqlin
