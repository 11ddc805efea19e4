#pragma once

#include <future>
#include <utility>
#include <vector>

namespace vfilt {

/// Applies fn to every element of inputs, possibly concurrently, and returns
/// the results in input order. Exceptions from fn propagate to the caller.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn&& fn)
    -> std::vector<decltype(fn(inputs.front()))> {
  using Out = decltype(fn(inputs.front()));
  std::vector<Out> results;
  results.reserve(inputs.size());
  if (inputs.size() <= 1) {
    for (const auto& in : inputs) results.push_back(fn(in));
    return results;
  }
  std::vector<std::future<Out>> futures;
  futures.reserve(inputs.size());
  for (const auto& in : inputs)
    futures.push_back(
        std::async(std::launch::async, [&fn, &in] { return fn(in); }));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace vfilt
