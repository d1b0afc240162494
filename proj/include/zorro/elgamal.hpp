// Copyright 2026 The Zorro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZORRO_ELGAMAL_HPP_
#define ZORRO_ELGAMAL_HPP_

#include <cstdint>

#include "zorro/bytes.hpp"
#include "zorro/group.hpp"
#include "zorro/rng.hpp"

namespace zorro {

template <Group G>
struct Keypair {
  typename G::Scalar sk;
  typename G::Element pk;

  static Keypair from_secret(const typename G::Scalar& sk) {
    return Keypair{sk, G::exp_g(sk)};
  }
  static Keypair generate(Rng& rng) {
    return from_secret(random_scalar<G>(rng));
  }
};

// Exponential ElGamal pair (a, b) = (g^r, g^m pk^r). Multiplying ciphertexts
// adds plaintexts; raising to k scales them.
template <Group G>
struct Ciphertext {
  typename G::Element a = G::identity();
  typename G::Element b = G::identity();

  friend Ciphertext operator*(const Ciphertext& x, const Ciphertext& y) {
    return Ciphertext{x.a * y.a, x.b * y.b};
  }
  friend Ciphertext operator/(const Ciphertext& x, const Ciphertext& y) {
    return Ciphertext{x.a / y.a, x.b / y.b};
  }
  Ciphertext pow(const typename G::Scalar& k) const {
    return Ciphertext{a.pow(k), b.pow(k)};
  }
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.put(a).put(b);
    return std::move(w).bytes();
  }
  static Ciphertext read(ByteReader& r) {
    auto a = r.element<G>();
    auto b = r.element<G>();
    return Ciphertext{a, b};
  }
  static Ciphertext decode(ByteView bytes) {
    ByteReader r(bytes);
    Ciphertext c = read(r);
    r.finish();
    return c;
  }
};

template <Group G>
Ciphertext<G> encrypt_exp(const typename G::Scalar& m,
                          const typename G::Scalar& r,
                          const typename G::Element& pk) {
  return Ciphertext<G>{G::exp_g(r), G::exp_g(m) * pk.pow(r)};
}

// Negative plaintexts are embedded as q + m.
template <Group G>
Ciphertext<G> encrypt_exp(std::int64_t m, const typename G::Scalar& r,
                          const typename G::Element& pk) {
  return encrypt_exp<G>(G::scalar(m), r, pk);
}

template <Group G>
Ciphertext<G> hom_mul(const Ciphertext<G>& x, const Ciphertext<G>& y) {
  return x * y;
}

template <Group G>
Ciphertext<G> hom_pow(const Ciphertext<G>& c, const typename G::Scalar& k) {
  return c.pow(k);
}

// Returns g^m; the caller recovers m with a discrete-log search.
template <Group G>
typename G::Element decrypt_point(const Ciphertext<G>& c,
                                  const typename G::Scalar& sk) {
  return c.b / c.a.pow(sk);
}

}  // namespace zorro

#endif  // ZORRO_ELGAMAL_HPP_
