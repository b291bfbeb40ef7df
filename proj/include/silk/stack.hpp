#pragma once

#include <pthread.h>

#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace silk {

inline constexpr std::size_t kLargeStack = std::size_t{512} << 20;

// Run f on a thread with a big stack and wait for it. Unrolling the
// exponential schema nests links a few thousand deep.
template <class F>
auto with_large_stack(F&& f, std::size_t bytes = kLargeStack) -> std::invoke_result_t<F&> {
  using R = std::invoke_result_t<F&>;
  struct Box {
    std::remove_reference_t<F>* fn = nullptr;
    std::conditional_t<std::is_void_v<R>, bool, std::optional<R>> result{};
    std::exception_ptr error;
  } box;
  box.fn = &f;

  auto tramp = [](void* arg) -> void* {
    auto* b = static_cast<Box*>(arg);
    try {
      if constexpr (std::is_void_v<R>) {
        (*b->fn)();
      } else {
        b->result.emplace((*b->fn)());
      }
    } catch (...) {
      b->error = std::current_exception();
    }
    return nullptr;
  };

  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  pthread_t th;
  const int rc = pthread_create(&th, &attr, +tramp, &box);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    // No thread available; run inline.
    if constexpr (std::is_void_v<R>) {
      f();
      return;
    } else {
      return f();
    }
  }
  pthread_join(th, nullptr);
  if (box.error) std::rethrow_exception(box.error);
  if constexpr (!std::is_void_v<R>) return std::move(*box.result);
}

}  // namespace silk
