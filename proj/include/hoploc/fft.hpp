#pragma once

#include <cstddef>
#include <span>

#include "hoploc/signal.hpp"

namespace hoploc::fft {

// Smallest 5-smooth size >= n (FFTW handles these efficiently).
std::size_t next_fast_len(std::size_t n);

// Out-of-place complex DFT; in and out must have equal size and must not
// alias. Forward is unnormalized, inverse carries the 1/n factor, so
// inverse(forward(x)) == x. Plans are cached per size and are safe to reuse
// from multiple threads.
void forward(std::span<const cplx> in, std::span<cplx> out);
void inverse(std::span<const cplx> in, std::span<cplx> out);

}  // namespace hoploc::fft
