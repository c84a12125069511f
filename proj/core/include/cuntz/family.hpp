#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "cuntz/element.hpp"

namespace cuntz {

/// An indexed family n -> A_n (n >= 1) of elements of O_d, such as the CAR
/// generators produced by an embedding. Values are computed on demand and
/// cached; copies share the cache, and lookups are thread-safe.
class GeneratorFamily {
 public:
  using Generator = std::function<Element(std::size_t)>;

  GeneratorFamily(unsigned d, Generator gen)
      : d_(d), state_(std::make_shared<State>(std::move(gen))) {}

  unsigned alphabet() const noexcept { return d_; }

  Element operator()(std::size_t n) const {
    if (n < 1) throw std::out_of_range("generator index must be >= 1");
    {
      std::lock_guard lock(state_->mutex);
      if (auto it = state_->cache.find(n); it != state_->cache.end())
        return it->second;
    }
    Element value = state_->gen(n);
    std::lock_guard lock(state_->mutex);
    return state_->cache.try_emplace(n, std::move(value)).first->second;
  }

  /// Family n -> f(A_n).
  GeneratorFamily transformed(std::function<Element(const Element&)> f) const {
    GeneratorFamily base = *this;
    return GeneratorFamily(d_, [base, f = std::move(f)](std::size_t n) {
      return f(base(n));
    });
  }

 private:
  struct State {
    explicit State(Generator g) : gen(std::move(g)) {}
    Generator gen;
    std::mutex mutex;
    std::map<std::size_t, Element> cache;
  };

  unsigned d_;
  std::shared_ptr<State> state_;
};

}  // namespace cuntz
