// Polynomial multiplication by Kronecker substitution: pack each coefficient
// vector into one big integer at a fixed bit stride, multiply once with GMP,
// and read the product's coefficients back as balanced digits.

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

#include "qcong/laurent_poly.hpp"

namespace qcong::detail {

namespace {

static_assert(sizeof(mp_limb_t) * CHAR_BIT == 64, "limb packing assumes 64-bit limbs");
constexpr std::size_t kLimbBits = 64;

std::size_t max_bits(std::span<const Integer> v) {
  std::size_t b = 1;
  for (const auto& c : v) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

// Sum of |c_i| * 2^(i*stride) over the coefficients with the requested sign.
Integer pack(std::span<const Integer> v, std::size_t stride, int want_sign) {
  const std::size_t words = (v.size() * stride) / kLimbBits + 2;
  std::vector<mp_limb_t> buf(words, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_srcptr c = v[i].get_mpz_t();
    if (mpz_sgn(c) != want_sign) continue;
    const std::size_t n = mpz_size(c);
    const mp_limb_t* limbs = mpz_limbs_read(c);
    const std::size_t bitpos = i * stride;
    const std::size_t word = bitpos / kLimbBits;
    const unsigned shift = static_cast<unsigned>(bitpos % kLimbBits);
    for (std::size_t t = 0; t < n; ++t) {
      buf[word + t] |= limbs[t] << shift;
      if (shift != 0) buf[word + t + 1] |= limbs[t] >> (kLimbBits - shift);
    }
  }
  Integer z;
  mpz_import(z.get_mpz_t(), words, -1, sizeof(mp_limb_t), 0, 0, buf.data());
  return z;
}

Integer pack_signed(std::span<const Integer> v, std::size_t stride) {
  Integer pos = pack(v, stride, 1);
  Integer neg = pack(v, stride, -1);
  return pos - neg;
}

// Reads `stride` bits starting at bit `bitpos` of the limb array.
void extract_field(const mp_limb_t* limbs, std::size_t nlimbs, std::size_t bitpos, std::size_t stride,
                   mpz_ptr out) {
  const std::size_t nw = (stride + kLimbBits - 1) / kLimbBits;
  mp_limb_t* dst = mpz_limbs_write(out, static_cast<mp_size_t>(nw));
  const std::size_t word = bitpos / kLimbBits;
  const unsigned shift = static_cast<unsigned>(bitpos % kLimbBits);
  auto at = [&](std::size_t k) -> mp_limb_t { return k < nlimbs ? limbs[k] : 0; };
  for (std::size_t t = 0; t < nw; ++t) {
    mp_limb_t lo = at(word + t) >> shift;
    if (shift != 0) lo |= at(word + t + 1) << (kLimbBits - shift);
    dst[t] = lo;
  }
  const std::size_t rem = stride % kLimbBits;
  if (rem != 0) dst[nw - 1] &= (mp_limb_t{1} << rem) - 1;
  mp_size_t size = static_cast<mp_size_t>(nw);
  while (size > 0 && dst[size - 1] == 0) --size;
  mpz_limbs_finish(out, size);
}

}  // namespace

std::vector<Integer> convolve_kronecker(std::span<const Integer> f, std::span<const Integer> g) {
  if (f.empty() || g.empty()) return {};
  const std::size_t shortest = std::min(f.size(), g.size());
  // |h_i| < shortest * 2^(bf+bg), so one sign bit on top suffices.
  const std::size_t stride = max_bits(f) + max_bits(g) + std::bit_width(shortest) + 1;

  const Integer packed = pack_signed(f, stride) * pack_signed(g, stride);
  const std::size_t out_len = f.size() + g.size() - 1;
  std::vector<Integer> out(out_len);
  const int sign = sgn(packed);
  if (sign == 0) return out;

  mpz_srcptr mag = packed.get_mpz_t();
  const mp_limb_t* limbs = mpz_limbs_read(mag);
  const std::size_t nlimbs = mpz_size(mag);

  Integer half, full;
  mpz_setbit(half.get_mpz_t(), stride - 1);
  mpz_setbit(full.get_mpz_t(), stride);

  // Balanced digits of |packed|: each digit lies in [-2^(stride-1), 2^(stride-1)).
  bool carry = false;
  for (std::size_t i = 0; i < out_len; ++i) {
    mpz_ptr d = out[i].get_mpz_t();
    extract_field(limbs, nlimbs, i * stride, stride, d);
    if (carry) mpz_add_ui(d, d, 1);
    carry = mpz_cmp(d, half.get_mpz_t()) >= 0;
    if (carry) mpz_sub(d, d, full.get_mpz_t());
    if (sign < 0) mpz_neg(d, d);
  }
  return out;
}

}  // namespace qcong::detail
