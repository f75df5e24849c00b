// Copyright 2026 The ybcompress Authors
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

#include "ybc/qasm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

namespace ybc {

namespace {

std::string format_angle(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      t.kind = Tok::Ident;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        advance();
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        advance();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          advance();
        }
      }
      t.kind = Tok::Number;
      t.text = std::string(text_.substr(start, pos_ - start));
      const auto res =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
      if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
        throw QasmError(t.line, t.column, "malformed number '" + t.text + "'");
      }
      return t;
    }
    if (c == '"') {
      advance();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') advance();
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        throw QasmError(t.line, t.column, "unterminated string");
      }
      t.kind = Tok::String;
      t.text = std::string(text_.substr(start, pos_ - start));
      advance();
      return t;
    }
    if (std::string_view(";,()[]+-*/").find(c) != std::string_view::npos) {
      advance();
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      return t;
    }
    throw QasmError(t.line, t.column, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  QasmProgram run() {
    while (tok_.kind != Tok::End) statement();
    if (!have_qreg_) throw QasmError(tok_.line, tok_.column, "missing qreg declaration");
    return std::move(prog_);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw QasmError(t.line, t.column, msg);
  }

  Token take() {
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }

  bool at_punct(char c) const { return tok_.kind == Tok::Punct && tok_.text[0] == c; }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(tok_, std::string("expected '") + c + "'");
    take();
  }

  Token expect_ident() {
    if (tok_.kind != Tok::Ident) fail(tok_, "expected identifier");
    return take();
  }

  int expect_index() {
    if (tok_.kind != Tok::Number) fail(tok_, "expected integer index");
    const Token t = take();
    if (t.number != std::floor(t.number) || t.number < 0 || t.number > 1e6) {
      fail(t, "index must be a non-negative integer");
    }
    return static_cast<int>(t.number);
  }

  void statement() {
    const Token head = expect_ident();
    const std::string& kw = head.text;
    if (kw == "OPENQASM") {
      if (tok_.kind != Tok::Number || tok_.text != "2.0") fail(tok_, "only OPENQASM 2.0 is supported");
      take();
    } else if (kw == "include") {
      if (tok_.kind != Tok::String) fail(tok_, "expected file name string");
      take();
    } else if (kw == "qreg") {
      if (have_qreg_) fail(head, "only one qreg is supported");
      reg_ = expect_ident().text;
      expect_punct('[');
      const Token at = tok_;
      prog_.num_qubits = expect_index();
      if (prog_.num_qubits < 2 || prog_.num_qubits > 30) fail(at, "qreg size must be in [2, 30]");
      expect_punct(']');
      have_qreg_ = true;
    } else if (kw == "creg") {
      expect_ident();
      expect_punct('[');
      expect_index();
      expect_punct(']');
    } else if (kw == "barrier") {
      qubit_arg();
      while (at_punct(',')) {
        take();
        qubit_arg();
      }
      if (prog_.segments.empty() || prog_.segments.back() != prog_.gates.size()) {
        prog_.segments.push_back(prog_.gates.size());
      }
    } else if (kw == "rx" || kw == "rz") {
      expect_punct('(');
      const double angle = expr();
      expect_punct(')');
      const int q = qubit_arg();
      push(head, kw == "rx" ? NativeGate::rx(q, angle) : NativeGate::rz(q, angle));
    } else if (kw == "h" || kw == "s") {
      const int q = qubit_arg();
      push(head, kw == "h" ? NativeGate::h(q) : NativeGate::s(q));
    } else if (kw == "cx") {
      const int c = qubit_arg();
      expect_punct(',');
      const Token at = tok_;
      const int t = qubit_arg();
      if (std::abs(c - t) != 1) fail(at, "cx must act on adjacent qubits");
      push(head, NativeGate::cx(c, t));
    } else {
      fail(head, "unknown gate or keyword '" + kw + "'");
    }
    expect_punct(';');
  }

  void push(const Token& head, const NativeGate& g) {
    if (!have_qreg_) fail(head, "gate before qreg declaration");
    if (prog_.gates.empty() && prog_.segments.empty()) prog_.segments.push_back(0);
    prog_.gates.push_back(g);
    prog_.lines.push_back(head.line);
  }

  int qubit_arg() {
    const Token name = expect_ident();
    if (!have_qreg_ || name.text != reg_) fail(name, "unknown register '" + name.text + "'");
    expect_punct('[');
    const Token at = tok_;
    const int q = expect_index();
    if (q >= prog_.num_qubits) fail(at, "qubit index " + std::to_string(q) + " out of range");
    expect_punct(']');
    return q;
  }

  double expr() {
    double v = term();
    while (at_punct('+') || at_punct('-')) {
      const char op = take().text[0];
      const double rhs = term();
      v = op == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = unary();
    while (at_punct('*') || at_punct('/')) {
      const Token op = take();
      const double rhs = unary();
      if (op.text[0] == '/' && rhs == 0.0) fail(op, "division by zero");
      v = op.text[0] == '*' ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (at_punct('-')) {
      take();
      return -unary();
    }
    if (at_punct('+')) {
      take();
      return unary();
    }
    if (tok_.kind == Tok::Number) return take().number;
    if (tok_.kind == Tok::Ident) {
      if (tok_.text == "pi") {
        take();
        return std::numbers::pi;
      }
      fail(tok_, "unknown symbol '" + tok_.text + "'");
    }
    if (at_punct('(')) {
      take();
      const double v = expr();
      expect_punct(')');
      return v;
    }
    fail(tok_, "expected expression");
  }

  Lexer lex_;
  Token tok_;
  QasmProgram prog_;
  std::string reg_;
  bool have_qreg_ = false;
};

}  // namespace

std::string to_qasm(const NativeCircuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                    std::to_string(c.num_qubits) + "];\n";
  auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const auto& block = c.blocks[b];
    if (b > 0) out += "barrier " + q(block.pair) + "," + q(block.pair + 1) + ";\n";
    for (const auto& g : block.gates) {
      const int qubit = block.pair + g.qubit;
      switch (g.kind) {
        case NativeGate::Kind::RX:
        case NativeGate::Kind::RZ:
          out += std::string(to_string(g.kind)) + "(" + format_angle(g.angle) + ") " + q(qubit) +
                 ";\n";
          break;
        case NativeGate::Kind::H:
        case NativeGate::Kind::S:
          out += std::string(to_string(g.kind)) + " " + q(qubit) + ";\n";
          break;
        case NativeGate::Kind::CX:
          out += "cx " + q(qubit) + "," + q(block.pair + g.target) + ";\n";
          break;
      }
    }
  }
  return out;
}

std::string to_qasm(const Circuit& c, double zero_tol) { return to_qasm(lower(c, zero_tol)); }

QasmProgram parse_qasm(std::string_view text) { return Parser(text).run(); }

bool fit_xyz(const Unitary4& u, Angles3& out, double tol) {
  // Bell basis: Phi+, Phi-, Psi+, Psi-. The XYZ propagator is diagonal there
  // with phases (tx - ty + tz, -tx + ty + tz, tx + ty - tz, -tx - ty - tz).
  const double r = 1.0 / std::numbers::sqrt2;
  Unitary4 bell;
  bell << r, r, 0, 0,
          0, 0, r, r,
          0, 0, r, -r,
          r, -r, 0, 0;
  const Unitary4 m = bell.adjoint() * u * bell;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
    if (std::abs(std::abs(m(i, i)) - 1.0) > tol) return false;
  }
  const double a = std::arg(m(0, 0) * std::conj(m(3, 3)));
  const double b = std::arg(m(1, 1) * std::conj(m(3, 3)));
  const double c = std::arg(m(2, 2) * std::conj(m(3, 3)));
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::optional<Angles3> best;
  int best_nonzero = 0;
  double best_sum = 0.0;
  for (int ka = -1; ka <= 1; ++ka) {
    for (int kb = -1; kb <= 1; ++kb) {
      for (int kc = -1; kc <= 1; ++kc) {
        const double aa = a + kTwoPi * ka, bb = b + kTwoPi * kb, cc = c + kTwoPi * kc;
        const Angles3 t{(aa - bb + cc) / 4.0, (bb + cc - aa) / 4.0, (aa + bb - cc) / 4.0};
        const int nonzero = (std::abs(t.theta_x) > kDefaultZeroTol) +
                            (std::abs(t.theta_y) > kDefaultZeroTol) +
                            (std::abs(t.theta_z) > kDefaultZeroTol);
        const double sum = std::abs(t.theta_x) + std::abs(t.theta_y) + std::abs(t.theta_z);
        if (!best || nonzero < best_nonzero ||
            (nonzero == best_nonzero && sum < best_sum - 1e-15)) {
          best = t;
          best_nonzero = nonzero;
          best_sum = sum;
        }
      }
    }
  }
  out = *best;
  return true;
}

Circuit from_qasm(std::string_view text) {
  const QasmProgram prog = parse_qasm(text);
  const int n = prog.num_qubits;
  std::vector<PairGate> pair_gates;

  auto emit = [&](std::size_t begin, std::size_t end, int lo, int hi) {
    const int pair = (hi > lo || lo <= n - 2) ? lo : lo - 1;
    GateSequence local;
    for (std::size_t k = begin; k < end; ++k) {
      NativeGate g = prog.gates[k];
      g.qubit -= pair;
      if (g.is_two_qubit()) g.target -= pair;
      local.push_back(g);
    }
    Angles3 a;
    if (!fit_xyz(evaluate(local), a)) {
      throw QasmError(prog.lines[begin], 1,
                      "gate group on qubits " + std::to_string(pair) + "," +
                          std::to_string(pair + 1) +
                          " is not an exp(i(aXX + bYY + cZZ)) propagator");
    }
    pair_gates.push_back(PairGate::xyz(pair, a));
  };

  for (std::size_t s = 0; s < prog.segments.size(); ++s) {
    const std::size_t seg_end =
        s + 1 < prog.segments.size() ? prog.segments[s + 1] : prog.gates.size();
    std::size_t begin = prog.segments[s];
    int lo = 0, hi = -1;
    for (std::size_t k = begin; k < seg_end; ++k) {
      const NativeGate& g = prog.gates[k];
      const int glo = g.is_two_qubit() ? std::min(g.qubit, g.target) : g.qubit;
      const int ghi = g.is_two_qubit() ? std::max(g.qubit, g.target) : g.qubit;
      if (hi < lo) {
        lo = glo;
        hi = ghi;
        continue;
      }
      const int nlo = std::min(lo, glo), nhi = std::max(hi, ghi);
      if (nhi - nlo <= 1) {
        lo = nlo;
        hi = nhi;
      } else {
        emit(begin, k, lo, hi);
        begin = k;
        lo = glo;
        hi = ghi;
      }
    }
    if (begin < seg_end) emit(begin, seg_end, lo, hi);
  }
  return columnize(Circuit::from_gates(n, pair_gates));
}

}  // namespace ybc
