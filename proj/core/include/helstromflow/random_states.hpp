// random_states.hpp — deterministic random ensembles for the property suites

#pragma once

#include "helstromflow/states.hpp"

#include <cstdint>
#include <initializer_list>

namespace hflow {

// splitmix64 stream. Used instead of <random> engines with library
// distributions because distribution sequences are implementation-defined,
// and the output contracts here are bit-exact.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();          // [0, 1)
    double normal();           // standard normal, Box-Muller
    Complex normal_complex();  // independent standard normal re/im parts

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Order-sensitive mix of the parts through the splitmix64 output function;
// stable across platforms and runs. Used to derive independent substreams
// (one per Monte Carlo sample / property instance).
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

// G G† / Tr(G G†) with G of independent standard complex Gaussian entries.
ComplexMatrix random_density_matrix(Rng& rng, std::size_t dim);
DensityOperator random_density_operator(Rng& rng, std::size_t dim);

// Orthonormalized (modified Gram-Schmidt, two passes) complex Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim);  // (G + G†)/2

} // namespace hflow
