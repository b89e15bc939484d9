#include "reflcat/ff/kernels.hpp"

namespace reflcat::ff::kernels::scalar {

void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<Residue>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p) {
  for (auto& x : v) x = static_cast<Residue>(static_cast<std::uint64_t>(x) * c % p);
}

}  // namespace reflcat::ff::kernels::scalar
