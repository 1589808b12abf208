#pragma once

// Symbolic expression kernel: the only gateway from text input to the exact
// algebra stack.  Trees are immutable and shared; canonicalization performs
// constant folding, a total ordering of commutative operands, and power
// collection -- nothing stronger, so canonical forms are stable and
// structural equality is meaningful.

#include <geogal/interval.hpp>
#include <geogal/ratfun.hpp>

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gg {

enum class Var : uint8_t { X = 0, Y = 1, Z = 2 };

inline char var_name(Var v) { return v == Var::X ? 'x' : (v == Var::Y ? 'y' : 'z'); }

enum class FunKind : uint8_t { Sin, Cos, Exp };

inline const char* fun_name(FunKind f) {
  switch (f) {
    case FunKind::Sin: return "sin";
    case FunKind::Cos: return "cos";
    default: return "exp";
  }
}

struct ParseError : std::runtime_error {
  ParseError(size_t off, const std::string& msg)
      : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
  size_t offset;
};

struct NotRational : std::runtime_error {
  NotRational() : std::runtime_error("expression contains sin/cos/exp nodes") {}
};

struct WrongVariable : std::runtime_error {
  explicit WrongVariable(Var v)
      : std::runtime_error(std::string("unexpected free variable '") + var_name(v) + "'") {}
};

constexpr long kMaxExponent = 1 << 16;

class Expr {
 public:
  enum class Kind : uint8_t { Num, Sym, Fun, Pow, Mul, Add };

  struct Node;
  using Ptr = std::shared_ptr<const Node>;

  struct Node {
    Kind kind;
    Rat num;                 // Num
    Var sym = Var::X;        // Sym
    FunKind fun = FunKind::Sin;  // Fun
    long exponent = 0;       // Pow
    std::vector<Expr> kids;  // Fun(1), Pow(1 = base), Mul, Add
  };

  Expr() : Expr(number(Rat(0))) {}

  static Expr number(const Rat& a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Num;
    n->num = a;
    return Expr(std::move(n));
  }
  static Expr number(long a) { return number(Rat(a)); }
  static Expr symbol(Var v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sym;
    n->sym = v;
    return Expr(std::move(n));
  }
  static Expr fun(FunKind f, const Expr& arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Fun;
    n->fun = f;
    n->kids = {arg};
    return Expr(std::move(n)).canonical();
  }
  static Expr add(std::vector<Expr> terms) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Add;
    n->kids = std::move(terms);
    return Expr(std::move(n)).canonical();
  }
  static Expr mul(std::vector<Expr> factors) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mul;
    n->kids = std::move(factors);
    return Expr(std::move(n)).canonical();
  }
  static Expr pow(const Expr& base, long k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = k;
    n->kids = {base};
    return Expr(std::move(n)).canonical();
  }

  friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) { return add({a, mul({number(-1), b})}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return mul({a, pow(b, -1)}); }
  Expr operator-() const { return mul({number(-1), *this}); }

  Kind kind() const { return node_->kind; }
  const Rat& num_value() const { return node_->num; }
  Var sym_value() const { return node_->sym; }
  FunKind fun_kind() const { return node_->fun; }
  long exponent() const { return node_->exponent; }
  const std::vector<Expr>& kids() const { return node_->kids; }

  bool is_number() const { return node_->kind == Kind::Num; }
  bool is_zero() const { return is_number() && node_->num == 0; }
  bool is_one() const { return is_number() && node_->num == 1; }

  static int compare(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return 0;
    auto ra = static_cast<int>(a.kind()), rb = static_cast<int>(b.kind());
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a.kind()) {
      case Kind::Num: return a.num_value() < b.num_value() ? -1 : (a.num_value() == b.num_value() ? 0 : 1);
      case Kind::Sym: {
        auto sa = static_cast<int>(a.sym_value()), sb = static_cast<int>(b.sym_value());
        return sa < sb ? -1 : (sa == sb ? 0 : 1);
      }
      case Kind::Fun: {
        auto fa = static_cast<int>(a.fun_kind()), fb = static_cast<int>(b.fun_kind());
        if (fa != fb) return fa < fb ? -1 : 1;
        return compare(a.kids()[0], b.kids()[0]);
      }
      case Kind::Pow: {
        int c = compare(a.kids()[0], b.kids()[0]);
        if (c != 0) return c;
        return a.exponent() < b.exponent() ? -1 : (a.exponent() == b.exponent() ? 0 : 1);
      }
      case Kind::Mul:
      case Kind::Add: {
        size_t n = std::min(a.kids().size(), b.kids().size());
        for (size_t i = 0; i < n; ++i) {
          int c = compare(a.kids()[i], b.kids()[i]);
          if (c != 0) return c;
        }
        if (a.kids().size() != b.kids().size()) return a.kids().size() < b.kids().size() ? -1 : 1;
        return 0;
      }
    }
    return 0;
  }

  friend bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Expr& a, const Expr& b) { return compare(a, b) != 0; }

  std::string to_string() const;

 private:
  explicit Expr(Ptr p) : node_(std::move(p)) {}

  static void check_exponent(long k) {
    if (k > kMaxExponent || k < -kMaxExponent)
      throw std::domain_error("integer exponent exceeds 2^16");
  }

  // Canonical form construction. Applies to a freshly built node whose
  // children are already canonical.
  Expr canonical() const {
    switch (node_->kind) {
      case Kind::Num:
      case Kind::Sym:
      case Kind::Fun:
        return *this;
      case Kind::Pow: {
        const Expr& base = node_->kids[0];
        long k = node_->exponent;
        check_exponent(k);
        if (k == 0) return number(Rat(1));
        if (k == 1) return base;
        if (base.is_number()) {
          if (base.num_value() == 0 && k < 0)
            throw std::domain_error("division by zero in constant folding");
          return number(rat_pow(base.num_value(), k));
        }
        if (base.kind() == Kind::Pow) {
          long kk = base.exponent() * k;
          check_exponent(kk);
          return pow(base.kids()[0], kk);
        }
        if (base.kind() == Kind::Mul) {
          std::vector<Expr> fs;
          for (const Expr& f : base.kids()) fs.push_back(pow(f, k));
          return mul(std::move(fs));
        }
        return *this;
      }
      case Kind::Mul: {
        Rat coeff(1);
        std::vector<Expr> flat;
        std::function<void(const Expr&)> absorb = [&](const Expr& e) {
          if (e.kind() == Kind::Mul) {
            for (const Expr& k : e.kids()) absorb(k);
          } else if (e.is_number()) {
            coeff *= e.num_value();
          } else {
            flat.push_back(e);
          }
        };
        for (const Expr& k : node_->kids) absorb(k);
        if (coeff == 0) return number(Rat(0));
        // power collection: merge equal bases
        std::vector<std::pair<Expr, long>> powers;
        for (const Expr& f : flat) {
          Expr base = f;
          long k = 1;
          if (f.kind() == Kind::Pow) {
            base = f.kids()[0];
            k = f.exponent();
          }
          bool merged = false;
          for (auto& [b, e] : powers)
            if (b == base) {
              e += k;
              check_exponent(e);
              merged = true;
              break;
            }
          if (!merged) powers.emplace_back(base, k);
        }
        std::vector<Expr> out;
        for (auto& [b, e] : powers) {
          if (e == 0) continue;
          out.push_back(e == 1 ? b : pow(b, e));
        }
        std::sort(out.begin(), out.end(), [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
        if (out.empty()) return number(coeff);
        // fold a numeric coefficient into a lone sum, so scalar multiples of
        // sums have one canonical shape
        if (coeff != 1 && out.size() == 1 && out[0].kind() == Kind::Add) {
          std::vector<Expr> terms;
          for (const Expr& t : out[0].kids()) terms.push_back(mul({number(coeff), t}));
          return add(std::move(terms));
        }
        if (coeff != 1) out.insert(out.begin(), number(coeff));
        if (out.size() == 1) return out[0];
        auto n = std::make_shared<Node>();
        n->kind = Kind::Mul;
        n->kids = std::move(out);
        return Expr(std::move(n));
      }
      case Kind::Add: {
        Rat cst(0);
        std::vector<Expr> flat;
        std::function<void(const Expr&)> absorb = [&](const Expr& e) {
          if (e.kind() == Kind::Add) {
            for (const Expr& k : e.kids()) absorb(k);
          } else if (e.is_number()) {
            cst += e.num_value();
          } else {
            flat.push_back(e);
          }
        };
        for (const Expr& k : node_->kids) absorb(k);
        std::sort(flat.begin(), flat.end(), [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
        if (cst != 0) flat.insert(flat.begin(), number(cst));
        if (flat.empty()) return number(Rat(0));
        if (flat.size() == 1) return flat[0];
        auto n = std::make_shared<Node>();
        n->kind = Kind::Add;
        n->kids = std::move(flat);
        return Expr(std::move(n));
      }
    }
    return *this;
  }

  Ptr node_;
};

inline Expr canonicalize(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Num:
    case Expr::Kind::Sym:
      return e;
    case Expr::Kind::Fun:
      return Expr::fun(e.fun_kind(), canonicalize(e.kids()[0]));
    case Expr::Kind::Pow:
      return Expr::pow(canonicalize(e.kids()[0]), e.exponent());
    case Expr::Kind::Mul: {
      std::vector<Expr> ks;
      for (const Expr& k : e.kids()) ks.push_back(canonicalize(k));
      return Expr::mul(std::move(ks));
    }
    case Expr::Kind::Add: {
      std::vector<Expr> ks;
      for (const Expr& k : e.kids()) ks.push_back(canonicalize(k));
      return Expr::add(std::move(ks));
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// differentiation

inline Expr differentiate(const Expr& e, Var v) {
  switch (e.kind()) {
    case Expr::Kind::Num:
      return Expr::number(0L);
    case Expr::Kind::Sym:
      return Expr::number(e.sym_value() == v ? 1L : 0L);
    case Expr::Kind::Add: {
      std::vector<Expr> ts;
      for (const Expr& k : e.kids()) ts.push_back(differentiate(k, v));
      return Expr::add(std::move(ts));
    }
    case Expr::Kind::Mul: {
      std::vector<Expr> terms;
      const auto& ks = e.kids();
      for (size_t i = 0; i < ks.size(); ++i) {
        Expr d = differentiate(ks[i], v);
        if (d.is_zero()) continue;
        std::vector<Expr> fs;
        for (size_t j = 0; j < ks.size(); ++j) fs.push_back(i == j ? d : ks[j]);
        terms.push_back(Expr::mul(std::move(fs)));
      }
      return Expr::add(std::move(terms));
    }
    case Expr::Kind::Pow: {
      Expr d = differentiate(e.kids()[0], v);
      if (d.is_zero()) return Expr::number(0L);
      return Expr::mul(
          {Expr::number(Rat(e.exponent())), Expr::pow(e.kids()[0], e.exponent() - 1), d});
    }
    case Expr::Kind::Fun: {
      Expr d = differentiate(e.kids()[0], v);
      if (d.is_zero()) return Expr::number(0L);
      switch (e.fun_kind()) {
        case FunKind::Sin: return Expr::mul({Expr::fun(FunKind::Cos, e.kids()[0]), d});
        case FunKind::Cos:
          return Expr::mul({Expr::number(-1L), Expr::fun(FunKind::Sin, e.kids()[0]), d});
        case FunKind::Exp: return Expr::mul({e, d});
      }
    }
  }
  return Expr::number(0L);
}

// ---------------------------------------------------------------------------
// substitution

inline Expr substitute(const Expr& e, Var v, const Expr& value) {
  switch (e.kind()) {
    case Expr::Kind::Num:
      return e;
    case Expr::Kind::Sym:
      return e.sym_value() == v ? value : e;
    case Expr::Kind::Fun:
      return Expr::fun(e.fun_kind(), substitute(e.kids()[0], v, value));
    case Expr::Kind::Pow:
      return Expr::pow(substitute(e.kids()[0], v, value), e.exponent());
    case Expr::Kind::Mul: {
      std::vector<Expr> ks;
      for (const Expr& k : e.kids()) ks.push_back(substitute(k, v, value));
      return Expr::mul(std::move(ks));
    }
    case Expr::Kind::Add: {
      std::vector<Expr> ks;
      for (const Expr& k : e.kids()) ks.push_back(substitute(k, v, value));
      return Expr::add(std::move(ks));
    }
  }
  return e;
}

inline bool depends_on(const Expr& e, Var v) {
  switch (e.kind()) {
    case Expr::Kind::Num: return false;
    case Expr::Kind::Sym: return e.sym_value() == v;
    default:
      for (const Expr& k : e.kids())
        if (depends_on(k, v)) return true;
      return false;
  }
}

inline bool has_fun_node(const Expr& e) {
  if (e.kind() == Expr::Kind::Fun) return true;
  for (const Expr& k : e.kids())
    if (has_fun_node(k)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// lowering to a rational function of one variable

inline RatFun to_ratfun(const Expr& e, Var v) {
  const char name = var_name(v);
  switch (e.kind()) {
    case Expr::Kind::Num:
      return RatFun::constant(e.num_value(), name);
    case Expr::Kind::Sym:
      if (e.sym_value() != v) throw WrongVariable(e.sym_value());
      return RatFun::identity(name);
    case Expr::Kind::Fun:
      throw NotRational();
    case Expr::Kind::Pow:
      return to_ratfun(e.kids()[0], v).pow(e.exponent());
    case Expr::Kind::Mul: {
      RatFun acc = RatFun::constant(Rat(1), name);
      for (const Expr& k : e.kids()) acc *= to_ratfun(k, v);
      return acc;
    }
    case Expr::Kind::Add: {
      RatFun acc(name);
      for (const Expr& k : e.kids()) acc += to_ratfun(k, v);
      return acc;
    }
  }
  return RatFun(name);
}

// ---------------------------------------------------------------------------
// rigorous interval evaluation

using Bindings = std::map<Var, CIv>;

inline CIv eval_interval(const Expr& e, const Bindings& env, long prec) {
  switch (e.kind()) {
    case Expr::Kind::Num:
      return CIv(e.num_value());
    case Expr::Kind::Sym: {
      auto it = env.find(e.sym_value());
      if (it == env.end())
        throw std::invalid_argument(std::string("unbound variable '") + var_name(e.sym_value()) + "'");
      return it->second;
    }
    case Expr::Kind::Fun: {
      CIv a = eval_interval(e.kids()[0], env, prec + 8);
      switch (e.fun_kind()) {
        case FunKind::Sin: return civ_sin(a, prec);
        case FunKind::Cos: return civ_cos(a, prec);
        case FunKind::Exp: return civ_exp(a, prec);
      }
      return CIv();
    }
    case Expr::Kind::Pow: {
      CIv b = eval_interval(e.kids()[0], env, prec + 8);
      return civ_pow(b, e.exponent()).round_out(prec + 4);
    }
    case Expr::Kind::Mul: {
      CIv acc(Rat(1));
      for (const Expr& k : e.kids()) acc = (acc * eval_interval(k, env, prec + 8)).round_out(prec + 4);
      return acc;
    }
    case Expr::Kind::Add: {
      CIv acc(Rat(0));
      for (const Expr& k : e.kids()) acc = (acc + eval_interval(k, env, prec + 8)).round_out(prec + 4);
      return acc;
    }
  }
  return CIv();
}

// plain double evaluation (numeric oracle paths)
inline double eval_double(const Expr& e, double x, double y, double z) {
  switch (e.kind()) {
    case Expr::Kind::Num:
      return rat_to_double(e.num_value());
    case Expr::Kind::Sym:
      return e.sym_value() == Var::X ? x : (e.sym_value() == Var::Y ? y : z);
    case Expr::Kind::Fun: {
      double a = eval_double(e.kids()[0], x, y, z);
      switch (e.fun_kind()) {
        case FunKind::Sin: return std::sin(a);
        case FunKind::Cos: return std::cos(a);
        case FunKind::Exp: return std::exp(a);
      }
      return 0;
    }
    case Expr::Kind::Pow: {
      double b = eval_double(e.kids()[0], x, y, z);
      long k = e.exponent();
      double r = 1.0, base = k < 0 ? 1.0 / b : b;
      unsigned long n = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
      while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
      }
      return r;
    }
    case Expr::Kind::Mul: {
      double acc = 1;
      for (const Expr& k : e.kids()) acc *= eval_double(k, x, y, z);
      return acc;
    }
    case Expr::Kind::Add: {
      double acc = 0;
      for (const Expr& k : e.kids()) acc += eval_double(k, x, y, z);
      return acc;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// parser (grammar in the project README)

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr acc = parse_term();
    while (true) {
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    while (true) {
      if (accept('*')) {
        acc = acc * parse_factor();
      } else if (accept('/')) {
        Expr d = parse_factor();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Expr parse_factor() {
    Expr base = parse_base();
    if (accept('^')) {
      long k = parse_integer_token();
      return Expr::pow(base, k);
    }
    return base;
  }

  long parse_integer_token() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected integer exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) throw ParseError(start, "integer exponent exceeds 2^16");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Expr parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -parse_base();
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v(0);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return Expr::number(Rat(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      std::string id;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        id += text_[pos_];
        ++pos_;
      }
      if (id == "x") return Expr::symbol(Var::X);
      if (id == "y") return Expr::symbol(Var::Y);
      if (id == "z") return Expr::symbol(Var::Z);
      FunKind f;
      if (id == "sin") {
        f = FunKind::Sin;
      } else if (id == "cos") {
        f = FunKind::Cos;
      } else if (id == "exp") {
        f = FunKind::Exp;
      } else {
        throw ParseError(start, "unknown identifier '" + id + "'");
      }
      if (!accept('(')) fail("expected '(' after function name");
      Expr arg = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return Expr::fun(f, arg);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

// ---------------------------------------------------------------------------
// canonical printing; parse(to_string(e)) == e for canonical e

namespace detail {

inline std::string print_expr(const Expr& e, bool factor_ctx);

inline std::string print_pow(const Expr& e) {
  const Expr& b = e.kids()[0];
  std::string bs;
  if (b.kind() == Expr::Kind::Sym || b.kind() == Expr::Kind::Fun)
    bs = print_expr(b, false);
  else
    bs = "(" + print_expr(b, false) + ")";
  return bs + "^" + std::to_string(e.exponent());
}

// Splits a canonical term into (negative?, body-without-sign).
inline std::pair<bool, std::string> print_term(const Expr& e) {
  if (e.kind() == Expr::Kind::Num) {
    Rat a = e.num_value();
    bool neg = a < 0;
    Rat mag = rat_abs(a);
    std::string s = mag.get_num().get_str();
    if (mag.get_den() != 1) s += "/" + mag.get_den().get_str();
    return {neg, s};
  }
  if (e.kind() == Expr::Kind::Mul) {
    const auto& ks = e.kids();
    bool neg = false;
    std::vector<std::string> parts;
    for (size_t i = 0; i < ks.size(); ++i) {
      if (i == 0 && ks[i].kind() == Expr::Kind::Num) {
        Rat c = ks[i].num_value();
        neg = c < 0;
        Rat mag = rat_abs(c);
        if (mag != 1) {
          std::string s = mag.get_num().get_str();
          if (mag.get_den() != 1) s += "/" + mag.get_den().get_str();
          parts.push_back(s);
        }
        continue;
      }
      parts.push_back(print_expr(ks[i], true));
    }
    std::string body;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) body += "*";
      body += parts[i];
    }
    return {neg, body};
  }
  return {false, print_expr(e, true)};
}

inline std::string print_expr(const Expr& e, bool factor_ctx) {
  switch (e.kind()) {
    case Expr::Kind::Num: {
      auto [neg, body] = print_term(e);
      if (!neg) return body;
      return factor_ctx ? "(-" + body + ")" : "-" + body;
    }
    case Expr::Kind::Sym:
      return std::string(1, var_name(e.sym_value()));
    case Expr::Kind::Fun:
      return std::string(fun_name(e.fun_kind())) + "(" + print_expr(e.kids()[0], false) + ")";
    case Expr::Kind::Pow:
      return print_pow(e);
    case Expr::Kind::Mul: {
      auto [neg, body] = print_term(e);
      if (!neg) return factor_ctx ? body : body;
      // a leading '-' must not capture a following '^': parenthesize a lone
      // power, and parenthesize the whole product in factor context
      if (e.kids().size() == 2 && e.kids()[0].kind() == Expr::Kind::Num &&
          rat_abs(e.kids()[0].num_value()) == 1 && e.kids()[1].kind() == Expr::Kind::Pow)
        body = "(" + body + ")";
      std::string s = "-" + body;
      return factor_ctx ? "(" + s + ")" : s;
    }
    case Expr::Kind::Add: {
      std::string out;
      const auto& ks = e.kids();
      for (size_t i = 0; i < ks.size(); ++i) {
        auto [neg, body] = print_term(ks[i]);
        if (i == 0) {
          if (neg) {
            if (ks[i].kind() == Expr::Kind::Mul && ks[i].kids().size() == 2 &&
                ks[i].kids()[0].kind() == Expr::Kind::Num &&
                rat_abs(ks[i].kids()[0].num_value()) == 1 &&
                ks[i].kids()[1].kind() == Expr::Kind::Pow)
              body = "(" + body + ")";
            out += "-";
          }
          out += body;
        } else {
          out += neg ? "-" : "+";
          out += body;
        }
      }
      return factor_ctx ? "(" + out + ")" : out;
    }
  }
  return "";
}

}  // namespace detail

inline std::string Expr::to_string() const { return detail::print_expr(*this, false); }

}  // namespace gg
