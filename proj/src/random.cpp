// Copyright 2026 The zwtick Authors
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

#include "zwtick/random.hpp"

#include <algorithm>

namespace zwtick {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Generator random_generator(Rng& rng, const TermOptions& o, unsigned width) {
  for (;;) {
    switch (uniform(rng, 0, 7)) {
      case 0:
      case 1: {
        const auto n = static_cast<unsigned>(uniform(rng, 0, 2));
        const auto m = static_cast<unsigned>(uniform(rng, 0, 2));
        return Generator::z(random_scalar(rng), n, m);
      }
      case 2:
      case 3: {
        const auto n = static_cast<unsigned>(uniform(rng, 0, 2));
        const auto m = static_cast<unsigned>(uniform(rng, 0, 2));
        return Generator::w(n, m);
      }
      case 4: return coin(rng, 0.5) ? Generator::fswap() : Generator::swap();
      case 5:
        if (o.allow_tick) return Generator::tick();
        break;
      case 6:
        if (o.allow_cup_cap) return coin(rng, 0.5) ? Generator::cup() : Generator::cap();
        break;
      default:
        if (width > 0) return Generator::id(1);
        break;
    }
  }
}

}  // namespace

Scalar random_scalar(Rng& rng) {
  Scalar out;
  for (int k = 0; k < 4; ++k) {
    if (!coin(rng, 0.5)) continue;
    out += Scalar::rational(uniform(rng, -3, 3), uniform(rng, 1, 2)) * Scalar::omega(k);
  }
  return out;
}

Scalar random_real(Rng& rng) {
  const int q = uniform(rng, 1, 8);
  return Scalar::rational(uniform(rng, -q, q), q);
}

Diagram random_diagram(Rng& rng, const TermOptions& o) {
  const unsigned max_w = std::max(1u, o.max_wires);
  unsigned width = o.inputs.value_or(static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_w))));
  Diagram d = id(width);
  const unsigned count = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(std::max(1u, o.max_generators))));
  for (unsigned placed = 0, attempts = 0; placed < count && attempts < 200; ++attempts) {
    Generator g = random_generator(rng, o, width);
    if (g.inputs > width || width - g.inputs + g.outputs > max_w) continue;
    const unsigned offset = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(width - g.inputs)));
    Diagram layer = tensor_all({id(offset), Diagram(g), id(width - offset - g.inputs)});
    d = Diagram::compose(layer, d);
    width = width - g.inputs + g.outputs;
    ++placed;
  }
  if (o.outputs) {
    // Adjust the output width with single-wire states or effects.
    while (width < *o.outputs) {
      d = Diagram::tensor(d, coin(rng, 0.5) ? ket0() : z_spider(random_scalar(rng), 0, 1));
      ++width;
    }
    while (width > *o.outputs) {
      Diagram effect = coin(rng, 0.5) ? bra1() : (o.allow_tick && coin(rng, 0.5) ? ground() : z_spider(random_scalar(rng), 1, 0));
      d = Diagram::compose(Diagram::tensor(id(width - 1), effect), d);
      --width;
    }
  }
  return d;
}

Diagram random_state(Rng& rng, unsigned wires, unsigned max_generators, bool allow_tick) {
  TermOptions o;
  o.max_generators = max_generators;
  o.max_wires = std::max(3u, wires);
  o.allow_tick = allow_tick;
  o.inputs = 0;
  o.outputs = wires;
  return random_diagram(rng, o);
}

Matrix random_hermitian(Rng& rng, unsigned n, double density) {
  Matrix h(std::size_t{1} << n, std::size_t{1} << n);
  for (std::uint64_t x = 0; x < h.rows(); ++x)
    for (std::uint64_t y = x; y < h.cols(); ++y) {
      if (!coin(rng, density)) continue;
      Scalar v = random_scalar(rng);
      if (x == y) v = (v + v.conj()) * Scalar::rational(1, 2);
      h(x, y) = v;
      h(y, x) = v.conj();
    }
  return h;
}

Matrix random_positive(Rng& rng, unsigned n) {
  Matrix a(std::size_t{1} << n, std::size_t{1} << n);
  for (std::uint64_t r = 0; r < a.rows(); ++r)
    for (std::uint64_t c = 0; c < a.cols(); ++c) a(r, c) = random_scalar(rng);
  return a * a.adjoint();
}

Matrix random_separable(Rng& rng, unsigned a, unsigned b, unsigned terms) {
  Matrix out(std::size_t{1} << (a + b), std::size_t{1} << (a + b));
  for (unsigned t = 0; t < terms; ++t) {
    const Scalar p = Scalar::rational(uniform(rng, 1, 4), 4);
    out = out + kron(random_positive(rng, a), random_positive(rng, b)) * p;
  }
  return out;
}

BlochVector random_bloch(Rng& rng) {
  for (;;) {
    BlochVector v{random_real(rng), random_real(rng), random_real(rng)};
    const Scalar norm = v.rx * v.rx + v.ry * v.ry + v.rz * v.rz;
    if ((Scalar(1) - norm).real_sign() >= 0) return v;
  }
}

Matrix random_vector(Rng& rng, unsigned n) {
  Matrix v(std::size_t{1} << n, 1);
  while (v.is_zero())
    for (std::uint64_t r = 0; r < v.rows(); ++r)
      if (coin(rng, 0.6)) v(r, 0) = random_scalar(rng);
  return v;
}

}  // namespace zwtick
