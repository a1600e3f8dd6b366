#include "elicit/parallel.hpp"

#include <atomic>
#include <cstring>

namespace elicit {
namespace {

std::atomic<int> g_thread_cap{-1};  // -1: not yet resolved

int resolve_from_env() {
  const char* env = std::getenv("ELICIT_THREADS");
  if (env && *env) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;
}

}  // namespace

int thread_cap() {
  int cap = g_thread_cap.load(std::memory_order_relaxed);
  if (cap < 0) {
    cap = resolve_from_env();
    g_thread_cap.store(cap, std::memory_order_relaxed);
  }
  return cap;
}

void set_thread_cap(int n) {
  g_thread_cap.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

}  // namespace elicit
