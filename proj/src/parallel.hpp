#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace pelljeru::detail {

/// Calls body(begin, end) over disjoint chunks of [0, count). Runs inline when
/// the range is below `serial_below`.
template <typename Body>
void parallel_for(std::size_t count, std::size_t serial_below, Body body) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (count < serial_below || hw == 1) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(hw, count);
  const std::size_t step = (count + chunks - 1) / chunks;
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t begin = 0; begin < count; begin += step) {
    workers.emplace_back([=] { body(begin, std::min(count, begin + step)); });
  }
}

}  // namespace pelljeru::detail
