#pragma once

#include <coroutine>
#include <exception>
#include <iterator>
#include <optional>
#include <utility>

namespace schroder {

// Minimal lazy single-pass sequence backed by a coroutine.
template <typename T>
class Generator {
 public:
  struct promise_type {
    std::optional<T> current;
    std::exception_ptr error;

    Generator get_return_object() {
      return Generator(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(T value) {
      current = std::move(value);
      return {};
    }
    void return_void() noexcept {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  using Handle = std::coroutine_handle<promise_type>;

  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Handle h) : handle_(h) { advance(); }

    const T& operator*() const { return *handle_.promise().current; }
    const T* operator->() const { return &*handle_.promise().current; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.handle_ || it.handle_.done();
    }

   private:
    void advance() {
      handle_.resume();
      if (handle_.promise().error) std::rethrow_exception(handle_.promise().error);
    }
    Handle handle_;
  };

  Generator(Generator&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      if (handle_) handle_.destroy();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() {
    if (handle_) handle_.destroy();
  }

  // Single pass: call begin() once.
  iterator begin() { return iterator(handle_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  explicit Generator(Handle h) : handle_(h) {}
  Handle handle_;
};

}  // namespace schroder
