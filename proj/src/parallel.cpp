#include "tupletfrob/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace tupletfrob {

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("TUPLETFROB_THREADS")) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(cap, cap + std::strlen(cap), value);
    if (ec == std::errc{} && *ptr == '\0' && value > 0) n = std::min(n, value);
  }
  return n;
}

}  // namespace tupletfrob
