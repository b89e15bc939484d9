#pragma once

// Row kernels for dense elimination and matrix products over F_p.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The public entry points dispatch at runtime on CPU support and on
// the modulus (the vector path needs p < 2^15 so that c*x + y < 2^31).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "reflcat/ff/field.hpp"

namespace reflcat::ff::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

// Best instruction set available on this CPU.
Isa detected_isa();

// Forces the dispatcher onto a given path (tests and benchmarks). Requesting
// an ISA the CPU lacks is ignored.
void force_isa(Isa isa);
void reset_isa();
Isa active_isa();

inline constexpr std::uint32_t kVectorPrimeLimit = 1u << 15;

// dst[i] = (dst[i] + c * src[i]) mod p; inputs reduced, sizes equal.
void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p);
// v[i] = c * v[i] mod p
void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p);
void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool available();
void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p);
void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p);
}  // namespace avx2

}  // namespace reflcat::ff::kernels
