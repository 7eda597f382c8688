#include <atomic>
#include <cstdlib>
#include <cstring>

#include "seqcal/kernels.hpp"

namespace seqcal::kernels {

const Table* avx2_table_unchecked();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table* initial_choice() {
  const char* env = std::getenv("SEQCAL_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar();
  if (const Table* t = avx2()) return t;
  return &scalar();
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{initial_choice()};
  return table;
}

}  // namespace

const Table* avx2() {
  static const Table* t = cpu_has_avx2() ? avx2_table_unchecked() : nullptr;
  return t;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

Isa active_isa() { return &active() == &scalar() ? Isa::kScalar : Isa::kAvx2; }

bool select(Isa isa) {
  const Table* t = isa == Isa::kScalar ? &scalar() : avx2();
  if (t == nullptr) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

}  // namespace seqcal::kernels
