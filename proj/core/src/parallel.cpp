#include "turan/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace turan {

int thread_count() {
  if (const char* env = std::getenv("TURAN_THREADS")) {
    int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

int chunk_count(long long total) {
  if (total <= 1) return total == 1 ? 1 : 0;
  return static_cast<int>(std::min<long long>(thread_count(), total));
}

void parallel_chunks(long long total,
                     const std::function<void(long long, long long, int)>& work,
                     int* chunks_used) {
  const int chunks = chunk_count(total);
  if (chunks_used) *chunks_used = chunks;
  if (chunks <= 0) return;
  if (chunks == 1) {
    work(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const long long per = total / chunks, extra = total % chunks;
  long long begin = 0;
  for (int c = 0; c < chunks; ++c) {
    long long len = per + (c < extra ? 1 : 0);
    long long end = begin + len;
    pool.emplace_back([&work, begin, end, c] { work(begin, end, c); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace turan
