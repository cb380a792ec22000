// Reference kernels. Everything else in the project is checked against these.

#include <bit>

#include "kernels_impl.hpp"

namespace conic::kern {

namespace {

using namespace detail;

void mul_batch_scalar(std::uint32_t* out, const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t n, const FieldParams& f) {
  for (std::size_t i = 0; i < n; ++i) out[i] = mul1(a[i], b[i], f);
}

void mul_const_batch_scalar(std::uint32_t* out, std::uint32_t c, const std::uint32_t* b,
                            std::size_t n, const FieldParams& f) {
  for (std::size_t i = 0; i < n; ++i) out[i] = mul1(c, b[i], f);
}

void square_batch_scalar(std::uint32_t* out, const std::uint32_t* a, std::size_t n,
                         const FieldParams& f) {
  for (std::size_t i = 0; i < n; ++i) out[i] = square1(a[i], f);
}

void trace_batch_scalar(std::uint8_t* out, const std::uint32_t* a, std::size_t n,
                        const FieldParams& f) {
  for (std::size_t i = 0; i < n; ++i) out[i] = trace1(a[i], f);
}

void rho_hat_batch_scalar(std::uint32_t* out, std::uint32_t x, std::uint32_t y,
                          const std::uint32_t* z, const std::uint32_t* u, std::size_t n,
                          const FieldParams& f) {
  const std::uint32_t sqx = square1(x, f), sqy = square1(y, f);
  for (std::size_t i = 0; i < n; ++i) out[i] = rho1(sqx, sqy, x, y, z[i], u[i], f);
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t nwords) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",          mul_batch_scalar,     mul_const_batch_scalar,
      square_batch_scalar, trace_batch_scalar, rho_hat_batch_scalar,
      and_popcount_scalar,
  };
  return ops;
}

}  // namespace conic::kern
