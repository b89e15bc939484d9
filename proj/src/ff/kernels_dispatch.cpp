#include <atomic>

#include "reflcat/ff/kernels.hpp"

namespace reflcat::ff::kernels {

namespace {

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

bool use_vector(std::uint32_t p) { return active_isa() == Isa::avx2 && p < kVectorPrimeLimit; }

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() { return avx2::available() ? Isa::avx2 : Isa::scalar; }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2::available()) return;
  selected().store(isa);
}

void reset_isa() { selected().store(detected_isa()); }

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p) {
  if (use_vector(p))
    avx2::axpy_mod(dst, src, c, p);
  else
    scalar::axpy_mod(dst, src, c, p);
}

void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p) {
  if (use_vector(p))
    avx2::scale_mod(v, c, p);
  else
    scalar::scale_mod(v, c, p);
}

}  // namespace reflcat::ff::kernels
