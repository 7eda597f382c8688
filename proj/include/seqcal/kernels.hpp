#pragma once

// Word-array kernels behind StateSet. Every kernel has a scalar reference
// implementation; an AVX2 variant is picked at runtime when the CPU has it.
// The two must agree bit for bit (tests/unit/kernels_test.cpp).

#include <cstddef>
#include <cstdint>

namespace seqcal::kernels {

enum class Isa { kScalar, kAvx2 };

struct Table {
  const char* name;
  // dst = a & b, dst = a | b, dst = a & ~b. dst may alias a or b.
  void (*and_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t n);
  void (*or_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t n);
  void (*andnot_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                       std::size_t n);
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  bool (*is_zero)(const std::uint64_t* a, std::size_t n);
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

const Table& scalar();
// nullptr when the build or the running CPU lacks AVX2.
const Table* avx2();

// The table in use. Chosen once from CPU features; SEQCAL_ISA=scalar forces
// the reference path.
const Table& active();
Isa active_isa();
// Returns false (and changes nothing) if the requested ISA is unavailable.
bool select(Isa isa);

}  // namespace seqcal::kernels
