#pragma once

// Textual surfaces for terms: a small DSL, a JSON encoding, and DOT export.
//
// DSL grammar (whitespace-insensitive):
//
//   term := "z" | "n" | "s"
//         | "pi[" INT "," INT "]" | "id[" INT "]" | "mpi[" INT ";" INT-LIST "]"
//         | "diag[" INT "]" | "tw[" INT "," INT "]"
//         | "comp(" term "," term ")" | "rec(" term "," term ")"
//         | "br(" term "," term ")" | "prod(" term "," term ")"
//         | "bprod(" term "," term ")" | "bcomp(" term "," term ")"
//
// comp(f,g) reads "f then g", i.e. the function g . f. Parsing type-checks
// eagerly, so ill-typed input throws ArityMismatch/BadIndex right away.
// print is canonical (no spaces) and parse(print(t)) == t.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "term.hpp"

namespace pralg {

// ---------------------------------------------------------------------------
// print

inline std::string print(const Term& t) {
  std::string out;
  auto num = [](int v) { return std::to_string(v); };
  auto go = [&](auto&& self, const Term& u) -> void {
    switch (u.op()) {
      case Op::Zero: out += "z"; return;
      case Op::Null: out += "n"; return;
      case Op::Succ: out += "s"; return;
      case Op::Proj: out += "pi[" + num(u.k()) + "," + num(u.index()) + "]"; return;
      case Op::MProj: {
        if (is_identity(u)) { out += "id[" + num(u.k()) + "]"; return; }
        out += "mpi[" + num(u.k()) + ";";
        for (std::size_t j = 0; j < u.xs().size(); ++j) {
          if (j) out += ",";
          out += num(u.xs()[j]);
        }
        out += "]";
        return;
      }
      case Op::Diag: out += "diag[" + num(u.k()) + "]"; return;
      case Op::Twist: out += "tw[" + num(u.tw_a()) + "," + num(u.tw_b()) + "]"; return;
      case Op::Comp: out += "comp("; break;
      case Op::Rec: out += "rec("; break;
      case Op::Brack: out += "br("; break;
      case Op::Prod: out += "prod("; break;
      case Op::BProd: out += "bprod("; break;
      case Op::BComp: out += "bcomp("; break;
    }
    self(self, u.left());
    out += ",";
    self(self, u.right());
    out += ")";
  };
  go(go, t);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print(t); }

// ---------------------------------------------------------------------------
// parse

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Term run() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after term");
    return t;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(line_, col_, what); }

  void advance() {
    if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                s_[pos_] == '\r'))
      advance();
  }
  char peek() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    advance();
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { advance(); return true; }
    return false;
  }
  int integer() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      advance();
    }
    return static_cast<int>(v);
  }
  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z') {
      w += s_[pos_];
      advance();
    }
    if (w.empty()) fail("expected a term");
    return w;
  }

  std::pair<Term, Term> pair_args() {
    expect('(');
    Term l = term();
    expect(',');
    Term r = term();
    expect(')');
    return {l, r};
  }

  Term term() {
    std::string w = word();
    if (w == "z") return zero();
    if (w == "n") return nul();
    if (w == "s") return succ();
    if (w == "pi") {
      expect('[');
      int k = integer();
      expect(',');
      int i = integer();
      expect(']');
      return proj(k, i);
    }
    if (w == "id") {
      expect('[');
      int k = integer();
      expect(']');
      return identity(k);
    }
    if (w == "mpi") {
      expect('[');
      int k = integer();
      expect(';');
      std::vector<int> xs;
      if (!try_eat(']')) {
        xs.push_back(integer());
        while (try_eat(',')) xs.push_back(integer());
        expect(']');
      }
      return mproj(k, std::move(xs));
    }
    if (w == "diag") {
      expect('[');
      int k = integer();
      expect(']');
      return diag(k);
    }
    if (w == "tw") {
      expect('[');
      int a = integer();
      expect(',');
      int b = integer();
      expect(']');
      return twist(a, b);
    }
    if (w == "comp") { auto [l, r] = pair_args(); return comp(l, r); }
    if (w == "rec") { auto [l, r] = pair_args(); return rec(l, r); }
    if (w == "br") { auto [l, r] = pair_args(); return brack(l, r); }
    if (w == "prod") { auto [l, r] = pair_args(); return prod(l, r); }
    if (w == "bprod") { auto [l, r] = pair_args(); return bprod(l, r); }
    if (w == "bcomp") { auto [l, r] = pair_args(); return bcomp(l, r); }
    fail("unknown term head '" + w + "'");
  }
};

}  // namespace detail

inline Term parse(const std::string& text) { return detail::Parser(text).run(); }

// ---------------------------------------------------------------------------
// JSON
//
// One object per node with an "op" discriminator; arities are recomputed on
// load, never trusted from the file. The identity wiring mpi[k;1..k] is
// written as {"op":"id","k":k}.

inline nlohmann::json term_to_json(const Term& t) {
  using nlohmann::json;
  switch (t.op()) {
    case Op::Zero: return json{{"op", "z"}};
    case Op::Null: return json{{"op", "n"}};
    case Op::Succ: return json{{"op", "s"}};
    case Op::Proj: return json{{"op", "pi"}, {"k", t.k()}, {"i", t.index()}};
    case Op::MProj:
      if (is_identity(t)) return json{{"op", "id"}, {"k", t.k()}};
      return json{{"op", "mpi"}, {"k", t.k()}, {"xs", t.xs()}};
    case Op::Diag: return json{{"op", "diag"}, {"k", t.k()}};
    case Op::Twist: return json{{"op", "tw"}, {"a", t.tw_a()}, {"b", t.tw_b()}};
    case Op::Comp: case Op::Rec: case Op::Brack:
    case Op::Prod: case Op::BProd: case Op::BComp: {
      const char* name = t.op() == Op::Comp    ? "comp"
                         : t.op() == Op::Rec   ? "rec"
                         : t.op() == Op::Brack ? "br"
                         : t.op() == Op::Prod  ? "prod"
                         : t.op() == Op::BProd ? "bprod"
                                               : "bcomp";
      return json{{"op", name}, {"l", term_to_json(t.left())}, {"r", term_to_json(t.right())}};
    }
  }
  throw Error("term_to_json: unreachable");
}

namespace detail {

inline int json_int(const nlohmann::json& j, const char* field, const std::string& path) {
  if (!j.contains(field))
    throw SchemaError(path + ": missing field '" + field + "'");
  const auto& v = j.at(field);
  if (!v.is_number_integer())
    throw SchemaError(path + "." + field + ": expected an integer");
  return v.get<int>();
}

inline Term term_from_json_at(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  if (!j.contains("op")) throw SchemaError(path + ": missing field 'op'");
  if (!j.at("op").is_string()) throw SchemaError(path + ".op: expected a string");
  const std::string op = j.at("op").get<std::string>();
  if (op == "z") return zero();
  if (op == "n") return nul();
  if (op == "s") return succ();
  if (op == "pi") return proj(json_int(j, "k", path), json_int(j, "i", path));
  if (op == "id") return identity(json_int(j, "k", path));
  if (op == "mpi") {
    if (!j.contains("xs") || !j.at("xs").is_array())
      throw SchemaError(path + ".xs: expected an array");
    std::vector<int> xs;
    for (std::size_t idx = 0; idx < j.at("xs").size(); ++idx) {
      const auto& v = j.at("xs")[idx];
      if (!v.is_number_integer())
        throw SchemaError(path + ".xs[" + std::to_string(idx) + "]: expected an integer");
      xs.push_back(v.get<int>());
    }
    return mproj(json_int(j, "k", path), std::move(xs));
  }
  if (op == "diag") return diag(json_int(j, "k", path));
  if (op == "tw") return twist(json_int(j, "a", path), json_int(j, "b", path));
  const bool binary = op == "comp" || op == "rec" || op == "br" || op == "prod" ||
                      op == "bprod" || op == "bcomp";
  if (!binary) throw SchemaError(path + ".op: unknown op '" + op + "'");
  if (!j.contains("l") || !j.contains("r"))
    throw SchemaError(path + ": binary op needs fields 'l' and 'r'");
  Term l = term_from_json_at(j.at("l"), path + ".l");
  Term r = term_from_json_at(j.at("r"), path + ".r");
  if (op == "comp") return comp(l, r);
  if (op == "rec") return rec(l, r);
  if (op == "br") return brack(l, r);
  if (op == "prod") return prod(l, r);
  if (op == "bprod") return bprod(l, r);
  return bcomp(l, r);
}

}  // namespace detail

inline Term term_from_json(const nlohmann::json& j) {
  return detail::term_from_json_at(j, "$");
}

inline std::string to_json(const Term& t) { return term_to_json(t).dump(); }

inline Term from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("$: not valid JSON");
  return term_from_json(j);
}

// ---------------------------------------------------------------------------
// DOT export: a rooted binary tree, leaves as boxes, operations as circles,
// every node annotated with its arity "src -> dst".

namespace detail {

inline std::string dot_symbol(const Term& t) {
  switch (t.op()) {
    case Op::Comp: return "C";
    case Op::Rec: return "R";
    case Op::Brack: return "B";
    case Op::Prod: return "P";
    case Op::BProd: return "BP";
    case Op::BComp: return "BC";
    default: return print(t);
  }
}

}  // namespace detail

inline std::string to_dot(const Term& t) {
  std::ostringstream nodes, edges;
  int next_id = 0;
  auto go = [&](auto&& self, const Term& u) -> int {
    const int id = next_id++;
    nodes << "  n" << id << " [label=\"" << detail::dot_symbol(u) << " : " << u.src().k
          << " -> " << u.dst().k << "\", shape=" << (u.has_children() ? "circle" : "box")
          << "];\n";
    if (u.has_children()) {
      int l = self(self, u.left());
      int r = self(self, u.right());
      edges << "  n" << id << " -> n" << l << ";\n";
      edges << "  n" << id << " -> n" << r << ";\n";
    }
    return id;
  };
  go(go, t);
  return "digraph term {\n" + nodes.str() + edges.str() + "}\n";
}

}  // namespace pralg
