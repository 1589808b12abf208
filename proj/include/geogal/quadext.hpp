#pragma once

// Values of the form a + b*sqrt(s) with rational a, b and an integer radicand
// (negative s encodes a complex value).  Radicands are reduced by pulling out
// square factors opportunistically; all comparisons between different
// radicands go through exact product-is-a-square tests, so partial reduction
// never affects correctness.

#include <geogal/rat.hpp>

#include <map>
#include <string>

namespace gg {

struct QuadExt {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(s); 0 when the value is rational
  Int s;  // radicand, square-free up to huge prime squares; 0 when b == 0

  static QuadExt rational(const Rat& v) { return {v, Rat(0), Int(0)}; }

  // a + b*sqrt(rho) for rational rho
  static QuadExt make(const Rat& a, const Rat& b, const Rat& rho) {
    if (b == 0 || rho == 0) return rational(a);
    Int n = rho.get_num() * rho.get_den();
    SquareSplit sp = int_square_split(n);
    if (sp.inside == 1) return rational(a + b * make_rat(sp.outside, rho.get_den()));
    return {a, b * make_rat(sp.outside, rho.get_den()), sp.inside};
  }

  bool is_rational() const { return b == 0; }
  bool is_real() const { return b == 0 || s > 0; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a != y.a) return false;
    if (x.b == 0 && y.b == 0) return true;
    if ((x.b == 0) != (y.b == 0)) return false;
    // b_x sqrt(s_x) == b_y sqrt(s_y): need s_x s_y square and coefficients to match
    Int prod = x.s * y.s;
    if (!int_is_square(prod)) return false;
    Int c = int_sqrt(prod);
    // sqrt(s_x) = (c/|s_y|) sqrt(s_y)
    return x.b * make_rat(c, abs(y.s)) == y.b;
  }

  std::string to_string() const {
    if (is_rational()) return rat_to_string(a);
    std::string radical = (s < 0 ? "i*sqrt(" + Int(-s).get_str() + ")" : "sqrt(" + s.get_str() + ")");
    std::string out;
    if (a != 0) out += rat_to_string(a);
    if (b == 1) {
      out += (out.empty() ? "" : " + ") + radical;
    } else if (b == -1) {
      out += (out.empty() ? "-" : " - ") + radical;
    } else if (b > 0) {
      out += (out.empty() ? "" : " + ") + rat_to_string(b) + "*" + radical;
    } else {
      out += (out.empty() ? rat_to_string(b) : " - " + rat_to_string(-b)) + "*" + radical;
    }
    return out;
  }
};

// Exact finite sums  q + sum_i c_i sqrt(s_i)  with radical classes merged via
// product-is-a-square tests.  Supports the "does this combination cancel to a
// non-negative integer" decision in the reducible-case search.
class RadicalSum {
 public:
  RadicalSum() = default;
  explicit RadicalSum(const Rat& q) : rational_(q) {}

  void add_rational(const Rat& q) { rational_ += q; }

  void add(const QuadExt& v) {
    rational_ += v.a;
    if (v.b == 0) return;
    add_radical(v.b, v.s);
  }

  void sub(const QuadExt& v) {
    rational_ -= v.a;
    if (v.b == 0) return;
    add_radical(-v.b, v.s);
  }

  const Rat& rational_part() const { return rational_; }

  bool is_rational() const {
    for (const auto& [key, coeff] : radicals_)
      if (coeff != 0) return false;
    return true;
  }

  // exact test: value is an integer >= 0
  bool is_nonnegative_integer() const {
    return is_rational() && rat_is_integer(rational_) && rational_ >= 0;
  }

 private:
  void add_radical(const Rat& coeff, const Int& s) {
    for (auto& [key, c] : radicals_) {
      Int prod = key * s;
      if (int_is_square(prod)) {
        Int conv = int_sqrt(prod);
        // sqrt(s) = (conv/|key|) sqrt(key)
        c += coeff * make_rat(conv, abs(key));
        return;
      }
    }
    radicals_.emplace_back(s, coeff);
  }

  Rat rational_;
  std::vector<std::pair<Int, Rat>> radicals_;
};

}  // namespace gg
