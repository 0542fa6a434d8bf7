#ifndef BOOLINV_INT_MATRIX_HPP_
#define BOOLINV_INT_MATRIX_HPP_

// Square matrices over the integers with overflow-checked arithmetic.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace boolinv {

  class IntMatrix {
  public:
    IntMatrix() = default;

    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    static IntMatrix zero(std::size_t n) {
      return IntMatrix(n);
    }

    static IntMatrix identity(std::size_t n) {
      IntMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t dim() const noexcept {
      return n_;
    }

    std::int64_t& operator()(std::size_t i, std::size_t j) {
      return a_[i * n_ + j];
    }

    std::int64_t operator()(std::size_t i, std::size_t j) const {
      return a_[i * n_ + j];
    }

    bool is_zero() const {
      for (auto x : a_) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    friend IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
      check_dims(a, b);
      IntMatrix out(a.n_);
      for (std::size_t k = 0; k < a.a_.size(); ++k) {
        out.a_[k] = checked_add(a.a_[k], b.a_[k]);
      }
      return out;
    }

    friend IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) {
      check_dims(a, b);
      IntMatrix out(a.n_);
      for (std::size_t k = 0; k < a.a_.size(); ++k) {
        if (__builtin_sub_overflow(a.a_[k], b.a_[k], &out.a_[k])) {
          throw std::overflow_error("matrix entry overflow");
        }
      }
      return out;
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
      check_dims(a, b);
      std::size_t const n = a.n_;
      IntMatrix         out(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const x = a(i, k);
          if (x == 0) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            std::int64_t p;
            if (__builtin_mul_overflow(x, b(k, j), &p)) {
              throw std::overflow_error("matrix entry overflow");
            }
            out(i, j) = checked_add(out(i, j), p);
          }
        }
      }
      return out;
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

    friend bool operator<(IntMatrix const& a, IntMatrix const& b) {
      if (a.n_ != b.n_) {
        return a.n_ < b.n_;
      }
      return a.a_ < b.a_;
    }

    //! Rows separated by ';', entries by ' '.
    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          out += (j ? " " : "") + std::to_string((*this)(i, j));
        }
        if (i + 1 < n_) {
          out += "; ";
        }
      }
      return out;
    }

  private:
    static void check_dims(IntMatrix const& a, IntMatrix const& b) {
      if (a.n_ != b.n_) {
        throw std::invalid_argument("matrix dimensions differ");
      }
    }

    static std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("matrix entry overflow");
      }
      return r;
    }

    std::size_t               n_ = 0;
    std::vector<std::int64_t> a_;
  };

}  // namespace boolinv

#endif  // BOOLINV_INT_MATRIX_HPP_
