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

#include "zwtick/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zwtick {

struct Diagram::Node {
  Kind kind;
  Generator gen;
  Diagram a;  // after / left
  Diagram b;  // before / right
  unsigned inputs;
  unsigned outputs;
  bool ticked;
  std::size_t count;
  std::size_t depth;

  Node(Generator g)  // NOLINT
      : kind(Kind::Gen),
        gen(std::move(g)),
        a(nullptr),
        b(nullptr),
        inputs(gen.inputs),
        outputs(gen.outputs),
        ticked(gen.kind == GenKind::Tick),
        count(1),
        depth(1) {}
  Node(Kind k, Diagram x, Diagram y, unsigned in, unsigned out)
      : kind(k),
        a(std::move(x)),
        b(std::move(y)),
        inputs(in),
        outputs(out),
        ticked(a.has_tick() || b.has_tick()),
        count(a.generator_count() + b.generator_count()),
        depth(1 + std::max(a.depth(), b.depth())) {}
};

namespace {

void check_generator(const Generator& g) {
  auto fixed = [&](unsigned n, unsigned m) {
    if (g.inputs != n || g.outputs != m)
      throw ArityError("generator arity must be " + std::to_string(n) + "->" + std::to_string(m));
  };
  switch (g.kind) {
    case GenKind::Fswap:
    case GenKind::Swap: fixed(2, 2); break;
    case GenKind::Tick: fixed(1, 1); break;
    case GenKind::Cup: fixed(2, 0); break;
    case GenKind::Cap: fixed(0, 2); break;
    case GenKind::Id:
      if (g.inputs != g.outputs) throw ArityError("identity must have equal arities");
      break;
    case GenKind::ZSpider:
    case GenKind::WSpider: break;
  }
}

}  // namespace

Diagram::Diagram(Generator g) {
  check_generator(g);
  node_ = std::make_shared<const Node>(std::move(g));
}

Diagram Diagram::compose(const Diagram& after, const Diagram& before) {
  if (before.outputs() != after.inputs())
    throw ArityError("cannot compose: first diagram is " + std::to_string(after.inputs()) + "->" +
                     std::to_string(after.outputs()) + " but is applied after a " +
                     std::to_string(before.inputs()) + "->" + std::to_string(before.outputs()) +
                     " diagram");
  return Diagram(std::make_shared<const Node>(Kind::Compose, after, before, before.inputs(), after.outputs()));
}

Diagram Diagram::tensor(const Diagram& left, const Diagram& right) {
  return Diagram(std::make_shared<const Node>(Kind::Tensor, left, right, left.inputs() + right.inputs(),
                                              left.outputs() + right.outputs()));
}

Diagram::Kind Diagram::kind() const { return node_->kind; }
unsigned Diagram::inputs() const { return node_->inputs; }
unsigned Diagram::outputs() const { return node_->outputs; }
bool Diagram::has_tick() const { return node_->ticked; }
std::size_t Diagram::generator_count() const { return node_->count; }
std::size_t Diagram::depth() const { return node_->depth; }

const Generator& Diagram::generator() const {
  if (node_->kind != Kind::Gen) throw std::logic_error("not a generator");
  return node_->gen;
}
const Diagram& Diagram::first() const {
  if (node_->kind == Kind::Gen) throw std::logic_error("generator has no children");
  return node_->a;
}
const Diagram& Diagram::second() const {
  if (node_->kind == Kind::Gen) throw std::logic_error("generator has no children");
  return node_->b;
}

bool operator==(const Diagram& x, const Diagram& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind() || x.inputs() != y.inputs() || x.outputs() != y.outputs()) return false;
  if (x.kind() == Diagram::Kind::Gen) return x.generator() == y.generator();
  return x.first() == y.first() && x.second() == y.second();
}

Diagram z_spider(const Scalar& r, unsigned n, unsigned m) { return Generator::z(r, n, m); }
Diagram w_spider(unsigned n, unsigned m) { return Generator::w(n, m); }
Diagram fswap() { return Generator::fswap(); }
Diagram tick() { return Generator::tick(); }
Diagram id(unsigned n) { return Generator::id(n); }
Diagram swap() { return Generator::swap(); }
Diagram cup() { return Generator::cup(); }
Diagram cap() { return Generator::cap(); }

Diagram ket0() { return z_spider(Scalar(0), 0, 1); }
Diagram ket1() { return w_spider(0, 1); }
Diagram bra0() { return z_spider(Scalar(0), 1, 0); }
Diagram bra1() { return w_spider(1, 0); }
Diagram not_gate() { return w_spider(1, 1); }
// White node with a ticked self-loop.
Diagram ground() { return Diagram::compose(Diagram::compose(cup(), Diagram::tensor(id(), tick())), z_spider(1, 1, 2)); }
Diagram ticked_cup() { return Diagram::compose(cup(), Diagram::tensor(tick(), id())); }
Diagram ticked_cap() { return dagger(ticked_cup()); }

Diagram operator*(const Diagram& after, const Diagram& before) { return Diagram::compose(after, before); }
Diagram operator^(const Diagram& left, const Diagram& right) { return Diagram::tensor(left, right); }

Diagram compose_all(const std::vector<Diagram>& chain) {
  if (chain.empty()) throw std::invalid_argument("compose_all of an empty chain");
  Diagram out = chain.back();
  for (std::size_t k = chain.size() - 1; k-- > 0;) out = Diagram::compose(chain[k], out);
  return out;
}

Diagram tensor_all(const std::vector<Diagram>& parts) {
  if (parts.empty()) return id(0);
  Diagram out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = Diagram::tensor(out, parts[k]);
  return out;
}

Diagram tensor_power(const Diagram& d, unsigned k) {
  if (k == 0) return id(0);
  Diagram out = d;
  for (unsigned j = 1; j < k; ++j) out = Diagram::tensor(out, d);
  return out;
}

Diagram permutation(const std::vector<unsigned>& perm) {
  const auto n = static_cast<unsigned>(perm.size());
  {
    std::vector<bool> seen(n, false);
    for (unsigned p : perm) {
      if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
      seen[p] = true;
    }
  }
  // Bubble sort the target arrangement; each adjacent transposition is a layer.
  std::vector<unsigned> cur(n);
  for (unsigned j = 0; j < n; ++j) cur[j] = j;
  std::vector<Diagram> layers;  // applied in order
  for (unsigned j = 0; j < n; ++j) {
    auto it = std::find(cur.begin() + j, cur.end(), perm[j]);
    auto pos = static_cast<unsigned>(it - cur.begin());
    while (pos > j) {
      std::swap(cur[pos - 1], cur[pos]);
      std::vector<Diagram> parts;
      if (pos - 1 > 0) parts.push_back(id(pos - 1));
      parts.push_back(swap());
      if (n - pos - 1 > 0) parts.push_back(id(n - pos - 1));
      layers.push_back(tensor_all(parts));
      --pos;
    }
  }
  if (layers.empty()) return id(n);
  std::reverse(layers.begin(), layers.end());
  return compose_all(layers);
}

Diagram dagger(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Compose: return Diagram::compose(dagger(d.second()), dagger(d.first()));
    case Diagram::Kind::Tensor: return Diagram::tensor(dagger(d.first()), dagger(d.second()));
    case Diagram::Kind::Gen: break;
  }
  const Generator& g = d.generator();
  switch (g.kind) {
    case GenKind::ZSpider: return z_spider(g.param.conj(), g.outputs, g.inputs);
    case GenKind::WSpider: return w_spider(g.outputs, g.inputs);
    case GenKind::Cup: return cap();
    case GenKind::Cap: return cup();
    default: return d;
  }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void print_into(const Diagram& d, std::string& out) {
  switch (d.kind()) {
    case Diagram::Kind::Compose:
    case Diagram::Kind::Tensor:
      out += d.kind() == Diagram::Kind::Compose ? "(compose " : "(tensor ";
      print_into(d.first(), out);
      out += ' ';
      print_into(d.second(), out);
      out += ')';
      return;
    case Diagram::Kind::Gen: break;
  }
  const Generator& g = d.generator();
  switch (g.kind) {
    case GenKind::ZSpider:
      out += "(z " + g.param.str() + ' ' + std::to_string(g.inputs) + ' ' + std::to_string(g.outputs) + ')';
      break;
    case GenKind::WSpider: out += "(w " + std::to_string(g.inputs) + ' ' + std::to_string(g.outputs) + ')'; break;
    case GenKind::Id: out += "(id " + std::to_string(g.inputs) + ')'; break;
    case GenKind::Fswap: out += "fswap"; break;
    case GenKind::Swap: out += "swap"; break;
    case GenKind::Cup: out += "cup"; break;
    case GenKind::Cap: out += "cap"; break;
    case GenKind::Tick: out += "tick"; break;
  }
}

struct Token {
  std::string text;
  std::size_t offset;
  std::size_t line;
  std::size_t column;
};

class DiagramParser {
 public:
  explicit DiagramParser(std::string_view text) : text_(text) { tokenize(); }

  Diagram parse() {
    if (tokens_.empty()) throw error("empty diagram", text_.size());
    Diagram d = term();
    if (pos_ < tokens_.size()) throw error("unexpected trailing token '" + tokens_[pos_].text + "'", tokens_[pos_]);
    return d;
  }

 private:
  void tokenize() {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
      } else if (c == ';') {
        while (i < text_.size() && text_[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        ++col;
      } else if (c == '(' || c == ')') {
        tokens_.push_back({std::string(1, c), i, line, col});
        ++i;
        ++col;
      } else {
        std::size_t start = i;
        std::size_t start_col = col;
        while (i < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i])) && text_[i] != '(' &&
               text_[i] != ')' && text_[i] != ';') {
          ++i;
          ++col;
        }
        tokens_.push_back({std::string(text_.substr(start, i - start)), start, line, start_col});
      }
    }
  }

  ParseError error(const std::string& msg, const Token& t) const {
    return ParseError("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg,
                      t.offset);
  }
  ParseError error(const std::string& msg, std::size_t offset) const {
    return ParseError("end of input: " + msg, offset);
  }

  const Token& next() {
    if (pos_ >= tokens_.size()) throw error("unexpected end of input", text_.size());
    return tokens_[pos_++];
  }

  void expect(const std::string& what) {
    const Token& t = next();
    if (t.text != what) throw error("expected '" + what + "', found '" + t.text + "'", t);
  }

  unsigned nat() {
    const Token& t = next();
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw error("expected a natural number, found '" + t.text + "'", t);
    if (t.text.size() > 3) throw error("arity too large", t);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Diagram term() {
    const Token& t = next();
    if (t.text == "(") {
      const Token& head = next();
      Diagram out;
      if (head.text == "compose" || head.text == "tensor") {
        Diagram a = term();
        Diagram b = term();
        try {
          out = head.text == "compose" ? Diagram::compose(a, b) : Diagram::tensor(a, b);
        } catch (const ArityError& e) {
          throw ArityError("line " + std::to_string(head.line) + ", column " + std::to_string(head.column) + ": " +
                           e.what());
        }
      } else if (head.text == "id") {
        out = id(nat());
      } else if (head.text == "z") {
        const Token& s = next();
        Scalar r;
        try {
          r = Scalar::parse(s.text);
        } catch (const ParseError& e) {
          throw error(std::string("bad scalar: ") + e.what(), s);
        }
        unsigned n = nat();
        unsigned m = nat();
        out = z_spider(r, n, m);
      } else if (head.text == "w") {
        unsigned n = nat();
        unsigned m = nat();
        out = w_spider(n, m);
      } else {
        throw error("unknown form '" + head.text + "'", head);
      }
      expect(")");
      return out;
    }
    if (t.text == "fswap") return fswap();
    if (t.text == "swap") return swap();
    if (t.text == "cup") return cup();
    if (t.text == "cap") return cap();
    if (t.text == "tick") return tick();
    if (t.text == "ground") return ground();
    if (t.text == "ket0") return ket0();
    if (t.text == "ket1") return ket1();
    if (t.text == "bra0") return bra0();
    if (t.text == "bra1") return bra1();
    if (t.text == "not") return not_gate();
    if (t.text == "tcup") return ticked_cup();
    if (t.text == "tcap") return ticked_cap();
    throw error("unknown token '" + t.text + "'", t);
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print_diagram(const Diagram& d) {
  std::string out;
  print_into(d, out);
  return out;
}

Diagram parse_diagram(std::string_view text) { return DiagramParser(text).parse(); }

// ---------------------------------------------------------------------------
// GraphViz

namespace {

struct End {
  std::string node;
  bool ticked = false;
};

class DotBuilder {
 public:
  std::vector<End> run(const Diagram& d, std::vector<End> in) {
    switch (d.kind()) {
      case Diagram::Kind::Compose: return run(d.first(), run(d.second(), std::move(in)));
      case Diagram::Kind::Tensor: {
        auto split = in.begin() + d.first().inputs();
        std::vector<End> left(in.begin(), split);
        std::vector<End> right(split, in.end());
        auto out = run(d.first(), std::move(left));
        auto rest = run(d.second(), std::move(right));
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
      case Diagram::Kind::Gen: break;
    }
    const Generator& g = d.generator();
    if (g.kind == GenKind::Id) return in;
    if (g.kind == GenKind::Tick) {
      in[0].ticked = !in[0].ticked;
      return in;
    }
    std::string name = "g" + std::to_string(next_++);
    std::string attrs;
    switch (g.kind) {
      case GenKind::ZSpider: attrs = "label=\"Z(" + g.param.str() + ")\", shape=circle, style=filled, fillcolor=white"; break;
      case GenKind::WSpider: attrs = "label=\"W\", shape=circle, style=filled, fillcolor=black, fontcolor=white"; break;
      case GenKind::Fswap: attrs = "label=\"fswap\", shape=box"; break;
      case GenKind::Swap: attrs = "label=\"swap\", shape=box"; break;
      case GenKind::Cup: attrs = "label=\"cup\", shape=point"; break;
      case GenKind::Cap: attrs = "label=\"cap\", shape=point"; break;
      default: break;
    }
    nodes_ << "  " << name << " [" << attrs << "];\n";
    for (std::size_t k = 0; k < in.size(); ++k) edge(in[k], name, k, true);
    std::vector<End> out(g.outputs, End{name, false});
    return out;
  }

  void edge(const End& from, const std::string& to, std::size_t port, bool to_input) {
    edges_ << "  " << from.node << " -> " << to << " [";
    if (from.ticked) edges_ << "style=dashed, label=\"∤\"";
    if (to_input) edges_ << (from.ticked ? ", " : "") << "headlabel=\"" << port << "\"";
    edges_ << "];\n";
  }

  std::ostringstream nodes_;
  std::ostringstream edges_;
  int next_ = 0;
};

}  // namespace

std::string render_dot(const Diagram& d) {
  DotBuilder b;
  std::vector<End> in;
  for (unsigned k = 0; k < d.inputs(); ++k) {
    std::string name = "in" + std::to_string(k);
    b.nodes_ << "  " << name << " [label=\"in " << k << "\", shape=plaintext];\n";
    in.push_back({name, false});
  }
  auto out = b.run(d, std::move(in));
  for (unsigned k = 0; k < d.outputs(); ++k) {
    std::string name = "out" + std::to_string(k);
    b.nodes_ << "  " << name << " [label=\"out " << k << "\", shape=plaintext];\n";
    b.edge(out[k], name, k, false);
  }
  return "digraph zw {\n  rankdir=BT;\n" + b.nodes_.str() + b.edges_.str() + "}\n";
}

}  // namespace zwtick
