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

#include "zwtick/normalform.hpp"

#include <algorithm>
#include <sstream>

#include "zwtick/semantics.hpp"

namespace zwtick {

namespace {

bool bit_at(std::uint64_t v, unsigned width, unsigned k) { return (v >> (width - 1 - k)) & 1; }

// (a0, a1..an, e) -> (a0, e, a1..an)
std::vector<unsigned> pair_last_with_first(unsigned n) {
  std::vector<unsigned> perm{0, n + 1};
  for (unsigned k = 1; k <= n; ++k) perm.push_back(k);
  return perm;
}

struct NodeSpec {
  Scalar mu;
  std::uint64_t plain = 0;   // outputs reached by an edge
  std::uint64_t ticked = 0;  // outputs reached by a ticked edge
};

// Every node is a white spider with one leg on the global black node and one
// leg per edge to an output. The global node and the per-output merge nodes
// are unfolded by W fusion into running accumulators, one white node at a
// time: an accumulator holds not . W(d,1) of the legs absorbed so far, i.e.
// |0> for weight 0, |1> for weight 1 and zero otherwise. The global node then
// admits exactly one active white node.
//
// Wire layout of the running state: (global accumulator, output 0..n-1).
Diagram merge(unsigned extra) {
  if (extra == 0) return id(1);
  return Diagram::compose(not_gate(), w_spider(1 + extra, 1));
}

Diagram absorb(unsigned n, const NodeSpec& node) {
  std::vector<Diagram> legs{id(1)};
  std::vector<unsigned> dest{0};  // 0 = global, k+1 = output k
  for (unsigned k = 0; k < n; ++k) {
    if (bit_at(node.plain, n, k)) {
      legs.push_back(id(1));
      dest.push_back(k + 1);
    }
    if (bit_at(node.ticked, n, k)) {
      legs.push_back(tick());
      dest.push_back(k + 1);
    }
  }
  const auto width = static_cast<unsigned>(legs.size());
  Diagram white = Diagram::compose(tensor_all(legs), z_spider(node.mu, 0, width));
  // Incoming wires: accumulators 0..n, then the node legs.
  std::vector<unsigned> perm;
  std::vector<Diagram> merges;
  for (unsigned a = 0; a <= n; ++a) {
    perm.push_back(a);
    unsigned extra = 0;
    for (unsigned l = 0; l < width; ++l)
      if (dest[l] == a) {
        perm.push_back(n + 1 + l);
        ++extra;
      }
    merges.push_back(merge(extra));
  }
  return compose_all({tensor_all(merges), permutation(perm), Diagram::tensor(id(n + 1), white)});
}

Diagram gather(unsigned n, const std::vector<NodeSpec>& nodes, bool with_pairing) {
  if (nodes.empty()) return zero_state(n);
  Diagram state = tensor_power(ket0(), n + 1);
  for (const NodeSpec& node : nodes) state = Diagram::compose(absorb(n, node), state);
  if (with_pairing) {
    Diagram feed = compose_all({Diagram::tensor(merge(1), id(n)), permutation(pair_last_with_first(n)),
                                Diagram::tensor(id(n + 1), pairing_state())});
    state = Diagram::compose(feed, state);
  }
  return Diagram::compose(Diagram::tensor(bra1(), id(n)), state);
}

}  // namespace

std::string bitstring(std::uint64_t v, unsigned width) {
  if (width == 0) return "-";
  std::string s;
  for (unsigned k = 0; k < width; ++k) s.push_back(bit_at(v, width, k) ? '1' : '0');
  return s;
}

Matrix NormalForm::matrix() const {
  Matrix h(std::size_t{1} << n, std::size_t{1} << n);
  for (const NFTerm& t : terms) {
    h(t.x, t.y) = t.lambda;
    h(t.y, t.x) = t.lambda.conj();
  }
  return h;
}

std::string NormalForm::str() const {
  std::ostringstream os;
  os << "n " << n << '\n';
  for (const NFTerm& t : terms) os << bitstring(t.x, n) << ' ' << bitstring(t.y, n) << ' ' << t.lambda.str() << '\n';
  return os.str();
}

NormalForm NormalForm::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tag;
  NormalForm nf;
  if (!(is >> tag >> nf.n) || tag != "n") throw ParseError("expected normal form header 'n <qubits>'", 0);
  if (nf.n > 30) throw ParseError("normal form too wide", 0);
  auto read_bits = [&](const std::string& s) {
    if (nf.n == 0) {
      if (s != "-") throw ParseError("expected '-' for an empty bitstring, got '" + s + "'", 0);
      return std::uint64_t{0};
    }
    if (s.size() != nf.n) throw ParseError("bitstring '" + s + "' does not have length " + std::to_string(nf.n), 0);
    std::uint64_t v = 0;
    for (char c : s) {
      if (c != '0' && c != '1') throw ParseError("bad bitstring '" + s + "'", 0);
      v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
  };
  std::string xs, ys, lam;
  while (is >> xs) {
    if (!(is >> ys >> lam)) throw ParseError("truncated normal form term", text.size());
    NFTerm t{read_bits(xs), read_bits(ys), Scalar::parse(lam)};
    if (t.x > t.y) throw ParseError("term " + xs + " " + ys + " violates x <= y", 0);
    if (t.lambda.is_zero()) throw ParseError("term " + xs + " " + ys + " has a zero coefficient", 0);
    if (t.x == t.y && !t.lambda.is_real()) throw ParseError("diagonal term " + xs + " is not real", 0);
    if (!nf.terms.empty()) {
      const NFTerm& prev = nf.terms.back();
      if (std::tie(prev.x, prev.y) >= std::tie(t.x, t.y))
        throw ParseError("normal form terms must be sorted and unique", 0);
    }
    nf.terms.push_back(std::move(t));
  }
  return nf;
}

NormalForm nf_from_matrix(const Matrix& h) {
  if (h.rows() != h.cols()) throw NotHermitianError("normal form requires a square matrix");
  if (!h.is_hermitian()) throw NotHermitianError("normal form requires a Hermitian matrix");
  NormalForm nf;
  nf.n = h.in_wires();
  for (std::uint64_t x = 0; x < h.rows(); ++x)
    for (std::uint64_t y = x; y < h.cols(); ++y)
      if (!h(x, y).is_zero()) nf.terms.push_back({x, y, h(x, y)});
  return nf;
}

Diagram zero_state(unsigned n) {
  return Diagram::tensor(z_spider(Scalar(-1), 0, 0), tensor_power(ket0(), n));
}

Diagram pairing_state() {
  Diagram effect = Diagram::compose(w_spider(2, 0), Diagram::tensor(id(1), tick()));
  return Diagram::compose(Diagram::tensor(id(1), effect), z_spider(Scalar(1), 0, 3));
}

Diagram nf_to_diagram(const NormalForm& nf, bool reduced) {
  const Scalar half = Scalar::rational(1, 2);
  std::vector<NodeSpec> nodes;
  for (const NFTerm& t : nf.terms) {
    if (reduced) {
      nodes.push_back({t.x == t.y ? t.lambda * half : t.lambda, t.x, t.y});
    } else {
      nodes.push_back({t.lambda * half, t.x, t.y});
      if (t.x != t.y) nodes.push_back({t.lambda.conj() * half, t.y, t.x});
    }
  }
  return gather(nf.n, nodes, true);
}

NormalForm nf_of_diagram(const Diagram& state) {
  if (state.inputs() != 0)
    throw ArityError("normal form of a non-state: " + std::to_string(state.inputs()) + " inputs");
  return nf_from_matrix(state_operator(state));
}

Diagram bend_to_state(const Diagram& d) {
  const unsigned n = d.inputs();
  std::vector<unsigned> perm(2 * n);
  for (unsigned t = 0; t < n; ++t) {
    perm[t] = 2 * t;
    perm[n + t] = 2 * t + 1;
  }
  return compose_all({Diagram::tensor(id(n), d), permutation(perm), tensor_power(cap(), n)});
}

NormalForm canonical_of_map(const Diagram& d) { return nf_of_diagram(bend_to_state(d)); }

bool diagrams_equal(const Diagram& a, const Diagram& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  return canonical_of_map(a) == canonical_of_map(b);
}

Diagram pure_state_from_vector(const Matrix& column) {
  if (column.cols() != 1) throw std::invalid_argument("expected a column vector");
  const unsigned n = column.out_wires();
  std::vector<NodeSpec> nodes;
  for (std::uint64_t b = 0; b < column.rows(); ++b)
    if (!column(b, 0).is_zero()) nodes.push_back({column(b, 0), b, 0});
  if (nodes.empty()) return Diagram::tensor(z_spider(Scalar(-1), 0, 0), tensor_power(ket0(), n));
  return gather(n, nodes, false);
}

Diagram pure_map_from_matrix(const Matrix& m) {
  const unsigned n = m.in_wires();
  const unsigned k = m.out_wires();
  Matrix v(std::size_t{1} << (n + k), 1);
  for (std::uint64_t a = 0; a < m.cols(); ++a)
    for (std::uint64_t o = 0; o < m.rows(); ++o) v((a << k) | o, 0) = m(o, a);
  Diagram s = pure_state_from_vector(v);
  std::vector<unsigned> perm;
  for (unsigned t = 0; t < n; ++t) {
    perm.push_back(t);
    perm.push_back(n + t);
  }
  for (unsigned t = 0; t < k; ++t) perm.push_back(2 * n + t);
  return compose_all({Diagram::tensor(tensor_power(cup(), n), id(k)), permutation(perm), Diagram::tensor(id(n), s)});
}

}  // namespace zwtick
