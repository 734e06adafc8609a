#include "gabor/parallel.hpp"

namespace gabor {
namespace {

std::atomic<int> g_threads{0};

}  // namespace

int default_threads() noexcept {
  const int n = g_threads.load();
  if (n > 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_threads(int n) noexcept { g_threads.store(n > 0 ? n : 0); }

}  // namespace gabor
