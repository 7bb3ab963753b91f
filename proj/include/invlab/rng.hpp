#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace invlab {

/// xoshiro256** with splitmix64 seeding.
///
/// Bit-exact contract, so other implementations can reproduce a run:
///   - `Rng(seed)` fills the four state words with successive splitmix64
///     outputs starting from state `seed`.
///   - `Rng::stream(seed, id)` is `Rng(seed ^ (0xD1B54A32D192ED03 * (id + 1)))`
///     (wrapping multiply), giving independent streams per purpose.
///   - `uniform()` is `(next() >> 11) * 2^-53`, in [0, 1).
///   - `gaussian()` is Box-Muller on two draws taken in order:
///     u1 = ((next() >> 11) + 1) * 2^-53 in (0, 1], u2 = uniform();
///     r = sqrt(-2 ln u1), returning r cos(2 pi u2) now and r sin(2 pi u2) on
///     the following call.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    static Rng stream(std::uint64_t seed, std::uint64_t id);

    std::uint64_t next();
    double uniform();
    double gaussian();

private:
    std::array<std::uint64_t, 4> s_{};
    std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace invlab
