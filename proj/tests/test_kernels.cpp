#include <doctest.h>

#include <bit>
#include <string>
#include <vector>

#include "conic/fields.hpp"
#include "conic/geometry.hpp"
#include "conic/kernels.hpp"
#include "conic/rng.hpp"

using conic::BinaryField;
using conic::elem;
namespace kern = conic::kern;

namespace {

// Sizes straddling every vector width plus remainders.
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 64, 65, 1000};

std::vector<std::uint32_t> random_elems(const BinaryField& f, std::size_t n,
                                        conic::SplitMix64& rng) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(f.q()));
  return v;
}

}  // namespace

TEST_CASE("every compiled kernel variant is bit-identical to scalar") {
  const auto variants = kern::available_ops();
  REQUIRE(!variants.empty());
  CHECK(std::string(variants.front()->name) == "scalar");

  for (unsigned m : {2u, 3u, 5u, 7u, 8u, 13u, 16u, 29u, 32u}) {
    const BinaryField f(m);
    const kern::FieldParams fp = kern::params_of(f);
    conic::SplitMix64 rng(0x5EED + m);
    for (std::size_t n : kSizes) {
      const auto a = random_elems(f, n, rng);
      const auto b = random_elems(f, n, rng);
      const elem c = static_cast<elem>(rng.below(f.q()));
      const elem x = static_cast<elem>(rng.below(f.q()));
      const elem y = static_cast<elem>(rng.below(f.q()));

      std::vector<std::uint32_t> ref32(n), got32(n);
      std::vector<std::uint8_t> ref8(n), got8(n);

      const kern::Ops& scalar = kern::scalar_ops();
      for (const kern::Ops* ops : variants) {
        CAPTURE(ops->name);
        CAPTURE(m);
        CAPTURE(n);

        scalar.mul_batch(ref32.data(), a.data(), b.data(), n, fp);
        ops->mul_batch(got32.data(), a.data(), b.data(), n, fp);
        CHECK(ref32 == got32);

        scalar.mul_const_batch(ref32.data(), c, b.data(), n, fp);
        ops->mul_const_batch(got32.data(), c, b.data(), n, fp);
        CHECK(ref32 == got32);

        scalar.square_batch(ref32.data(), a.data(), n, fp);
        ops->square_batch(got32.data(), a.data(), n, fp);
        CHECK(ref32 == got32);

        scalar.trace_batch(ref8.data(), a.data(), n, fp);
        ops->trace_batch(got8.data(), a.data(), n, fp);
        CHECK(ref8 == got8);

        scalar.rho_hat_batch(ref32.data(), x, y, a.data(), b.data(), n, fp);
        ops->rho_hat_batch(got32.data(), x, y, a.data(), b.data(), n, fp);
        CHECK(ref32 == got32);
      }
    }
  }
}

TEST_CASE("and_popcount equals a plain word loop") {
  conic::SplitMix64 rng(17);
  for (std::size_t nwords : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                             std::size_t{5}, std::size_t{13}, std::size_t{128}}) {
    std::vector<std::uint64_t> a(nwords), b(nwords);
    for (auto& w : a) w = rng.next();
    for (auto& w : b) w = rng.next();
    std::uint64_t want = 0;
    for (std::size_t i = 0; i < nwords; ++i) want += std::popcount(a[i] & b[i]);
    for (const kern::Ops* ops : kern::available_ops()) {
      CAPTURE(ops->name);
      CHECK(ops->and_popcount(a.data(), b.data(), nwords) == want);
    }
  }
}

TEST_CASE("scalar kernels agree with the field API") {
  const BinaryField f(5);
  const kern::FieldParams fp = kern::params_of(f);
  const kern::Ops& ops = kern::scalar_ops();
  std::vector<std::uint32_t> xs, ys;
  for (std::uint64_t x = 0; x < f.q(); ++x) {
    for (std::uint64_t y = 0; y < f.q(); ++y) {
      xs.push_back(static_cast<std::uint32_t>(x));
      ys.push_back(static_cast<std::uint32_t>(y));
    }
  }
  std::vector<std::uint32_t> prod(xs.size()), sq(xs.size());
  std::vector<std::uint8_t> tr(xs.size());
  ops.mul_batch(prod.data(), xs.data(), ys.data(), xs.size(), fp);
  ops.square_batch(sq.data(), xs.data(), xs.size(), fp);
  ops.trace_batch(tr.data(), xs.data(), xs.size(), fp);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(prod[i] == f.mul(xs[i], ys[i]));
    CHECK(sq[i] == f.square(xs[i]));
    CHECK(tr[i] == f.trace(xs[i]));
  }

  // rho_hat_batch against the geometry definition.
  std::vector<std::uint32_t> rho(xs.size());
  const elem lx = 1, ly = 3;  // Tr(3) = 1 in GF(32): (1,3) is exterior
  ops.rho_hat_batch(rho.data(), lx, ly, xs.data(), ys.data(), xs.size(), fp);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(rho[i] == conic::rho_hat({lx, ly}, {xs[i], ys[i]}, f));
  }
}

TEST_CASE("active kernel honors the environment override") {
  // active_ops() latches on first use; just sanity-check it is one of the
  // available variants.
  const auto variants = kern::available_ops();
  const kern::Ops& active = kern::active_ops();
  bool found = false;
  for (const kern::Ops* ops : variants) found = found || ops == &active;
  CHECK(found);
}
