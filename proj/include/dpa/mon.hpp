#pragma once
#include "dpa/coeff.hpp"
#include "dpa/comb.hpp"
#include "dpa/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace dpa {

// ---------------------------------------------------------------------------
// Operad ids. ShiftCom/DerCom/ShiftLie/DerLie are the products P.D built from
// the shift/derivation laws; Pois = Com.Lie from the Leibniz law.
// ---------------------------------------------------------------------------
enum class Opid { Com, Lie, As, D, ShiftCom, DerCom, ShiftLie, DerLie, Pois };

enum class LawKind { None, Shift, Der, Pois };

inline bool is_product(Opid op) {
  return op == Opid::ShiftCom || op == Opid::DerCom || op == Opid::ShiftLie ||
         op == Opid::DerLie || op == Opid::Pois;
}
inline Opid top_of(Opid op) {
  switch (op) {
  case Opid::ShiftCom:
  case Opid::DerCom:
  case Opid::Pois: return Opid::Com;
  case Opid::ShiftLie:
  case Opid::DerLie: return Opid::Lie;
  default: fail("not a product operad");
  }
}
inline Opid bottom_of(Opid op) {
  return op == Opid::Pois ? Opid::Lie : Opid::D;
}
inline LawKind law_of(Opid op) {
  switch (op) {
  case Opid::ShiftCom:
  case Opid::ShiftLie: return LawKind::Shift;
  case Opid::DerCom:
  case Opid::DerLie: return LawKind::Der;
  case Opid::Pois: return LawKind::Pois;
  default: return LawKind::None;
  }
}
// the product operad with the given top and law
inline Opid product_op(LawKind law, Opid top) {
  if (law == LawKind::Pois) {
    require(top == Opid::Com, "pois law has Com on top");
    return Opid::Pois;
  }
  if (law == LawKind::Shift) return top == Opid::Com ? Opid::ShiftCom : Opid::ShiftLie;
  if (law == LawKind::Der) return top == Opid::Com ? Opid::DerCom : Opid::DerLie;
  fail("no product for trivial law");
}
inline std::string opid_str(Opid op) {
  switch (op) {
  case Opid::Com: return "Com";
  case Opid::Lie: return "Lie";
  case Opid::As: return "As";
  case Opid::D: return "D";
  case Opid::ShiftCom: return "Shift_Com";
  case Opid::DerCom: return "Der_Com";
  case Opid::ShiftLie: return "Shift_Lie";
  case Opid::DerLie: return "Der_Lie";
  case Opid::Pois: return "Pois";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial with explicit leaf labels (label sets need not be 1..n).
//   Com            : seq = sorted labels
//   Lie            : seq = left-comb label sequence, seq[0] minimal
//   As             : seq = label order
//   D              : dexp = {(label, exponent)}
//   ShiftCom/DerCom: seq = sorted labels, dexp aligned per label
//   ShiftLie/DerLie: seq = comb, dexp sorted by label
//   Pois           : factors = normalized combs sorted by min label
// ---------------------------------------------------------------------------
struct Mon {
  Opid op = Opid::Com;
  std::vector<long long> seq;
  std::vector<std::pair<long long, long long>> dexp;
  std::vector<std::vector<long long>> factors;

  auto operator<=>(const Mon &) const = default;

  std::vector<long long> labels() const {
    std::vector<long long> out;
    switch (op) {
    case Opid::Com:
    case Opid::As:
    case Opid::Lie:
    case Opid::ShiftLie:
    case Opid::DerLie: out = seq; break;
    case Opid::D:
    case Opid::ShiftCom:
    case Opid::DerCom:
      for (auto &[l, e] : dexp) out.push_back(l);
      if (op != Opid::D) out = seq;
      break;
    case Opid::Pois:
      for (auto &f : factors) out.insert(out.end(), f.begin(), f.end());
      break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  int arity() const { return (int)labels().size(); }

  long long exp_of(long long label) const {
    for (auto &[l, e] : dexp)
      if (l == label) return e;
    fail("label has no exponent");
  }

  std::string str() const;
};

// ---------------------------------------------------------------------------
// Element: finite formal sum of monomials of one operad; characteristic
// carried explicitly so the zero element stays typed.
// ---------------------------------------------------------------------------
struct El {
  int chr = 0;
  std::map<Mon, Coeff> t;

  El() = default;
  explicit El(int chr_) : chr(chr_) {}
  El(int chr_, const Mon &m) : chr(chr_) { t.emplace(m, Coeff::one(chr_)); }
  El(const Mon &m, Coeff c) : chr(c.chr()) { add(m, c); }

  bool is_zero() const { return t.empty(); }
  void add(const Mon &m, const Coeff &c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  El &operator+=(const El &o) {
    require(t.empty() || o.t.empty() || chr == o.chr, "mixed characteristics");
    for (auto &[m, c] : o.t) add(m, c);
    return *this;
  }
  El &operator-=(const El &o) {
    for (auto &[m, c] : o.t) add(m, -c);
    return *this;
  }
  friend El operator+(El a, const El &b) { return a += b; }
  friend El operator-(El a, const El &b) { return a -= b; }
  friend El operator*(const Coeff &c, El a) {
    El out(a.chr);
    for (auto &[m, k] : a.t) out.add(m, c * k);
    return out;
  }
  bool operator==(const El &o) const { return t == o.t; }

  std::string str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[m, c] : t) {
      if (!first) os << " + ";
      first = false;
      if (!c.is_one()) os << "(" << c.str() << ")*";
      os << m.str();
    }
    return os.str();
  }
};

// map over monomials, extending f linearly
inline El el_map(const El &x, const std::function<El(const Mon &)> &f) {
  El out(x.chr);
  for (auto &[m, c] : x.t) out += c * f(m);
  return out;
}

// ---------------------------------------------------------------------------
// Lie normal form on combs. A comb (l1,...,lk) denotes [[..[l1;l2]..];lk];
// normal combs have l1 minimal. Integer coefficients, converted by callers.
// ---------------------------------------------------------------------------
using IntComb = std::map<std::vector<long long>, long long>;

inline void icadd(IntComb &m, const std::vector<long long> &k, long long v) {
  if (v == 0) return;
  auto it = m.find(k);
  if (it == m.end())
    m.emplace(k, v);
  else if ((it->second += v) == 0)
    m.erase(it);
}

IntComb nf_merge(const std::vector<long long> &a, const std::vector<long long> &b);

// [A; z] for normal comb A and single new label z
inline IntComb nf_append(const std::vector<long long> &a, long long z) {
  IntComb out;
  if (a.size() == 1) {
    if (a[0] < z)
      icadd(out, {a[0], z}, 1);
    else
      icadd(out, {z, a[0]}, -1);
    return out;
  }
  if (z > a[0]) { // still normal after appending
    std::vector<long long> c = a;
    c.push_back(z);
    icadd(out, c, 1);
    return out;
  }
  // z is the new minimum: [A;z] = -[z;A]; with the minimum on the left every
  // later append is plain, so the recursion terminates
  for (auto &[c, v] : nf_merge({z}, a)) icadd(out, c, -v);
  return out;
}

// [A; B] for normal combs A, B with disjoint labels
inline IntComb nf_merge(const std::vector<long long> &a, const std::vector<long long> &b) {
  if (b.size() == 1) return nf_append(a, b[0]);
  // [A;[B';bm]] = [[A;B'];bm] - [[A;bm];B']
  std::vector<long long> bp(b.begin(), b.end() - 1);
  long long bm = b.back();
  IntComb out;
  for (auto &[c, v] : nf_merge(a, bp))
    for (auto &[d, w] : nf_append(c, bm)) icadd(out, d, v * w);
  for (auto &[c, v] : nf_append(a, bm))
    for (auto &[d, w] : nf_merge(c, bp)) icadd(out, d, -v * w);
  return out;
}

// normalize an arbitrary left-comb label sequence (e.g. after relabeling)
inline IntComb nf_comb(const std::vector<long long> &raw) {
  require(!raw.empty(), "empty comb");
  IntComb acc;
  acc.emplace(std::vector<long long>{raw[0]}, 1);
  for (size_t i = 1; i < raw.size(); ++i) {
    IntComb next;
    for (auto &[c, v] : acc)
      for (auto &[d, w] : nf_append(c, raw[i])) icadd(next, d, v * w);
    acc = std::move(next);
  }
  return acc;
}

// evaluate a left-comb tree whose leaves are Lie elements (disjoint labels)
inline El lie_eval_comb(int chr, const std::vector<El> &leaves) {
  require(!leaves.empty(), "empty comb");
  auto bracket = [&](const El &x, const El &y) {
    El out(chr);
    for (auto &[mx, cx] : x.t)
      for (auto &[my, cy] : y.t)
        for (auto &[c, v] : nf_merge(mx.seq, my.seq)) {
          Mon m;
          m.op = Opid::Lie;
          m.seq = c;
          out.add(m, cx * cy * Coeff::integer(chr, v));
        }
    return out;
  };
  El acc = leaves[0];
  for (size_t i = 1; i < leaves.size(); ++i) acc = bracket(acc, leaves[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Constructors (normalizing).
// ---------------------------------------------------------------------------
inline Mon mk_com(std::vector<long long> labels) {
  std::sort(labels.begin(), labels.end());
  Mon m;
  m.op = Opid::Com;
  m.seq = std::move(labels);
  return m;
}
inline Mon mk_as(std::vector<long long> order) {
  Mon m;
  m.op = Opid::As;
  m.seq = std::move(order);
  return m;
}
inline Mon mk_d(long long label, long long e) {
  require(e >= 0, "negative exponent");
  Mon m;
  m.op = Opid::D;
  m.dexp = {{label, e}};
  return m;
}
inline El mk_lie(int chr, const std::vector<long long> &raw) {
  El out(chr);
  for (auto &[c, v] : nf_comb(raw)) {
    Mon m;
    m.op = Opid::Lie;
    m.seq = c;
    out.add(m, Coeff::integer(chr, v));
  }
  return out;
}
// Pois monomial from raw factor combs (singletons for bare letters)
inline El mk_pois(int chr, const std::vector<std::vector<long long>> &raw_factors) {
  El acc(chr);
  Mon empty;
  empty.op = Opid::Pois;
  acc.add(empty, Coeff::one(chr));
  for (auto &f : raw_factors) {
    El next(chr);
    for (auto &[m, c] : acc.t)
      for (auto &[comb, v] : nf_comb(f)) {
        Mon mm = m;
        mm.factors.push_back(comb);
        std::sort(mm.factors.begin(), mm.factors.end(),
                  [](auto &a, auto &b) { return *std::min_element(a.begin(), a.end()) <
                                                *std::min_element(b.begin(), b.end()); });
        next.add(mm, c * Coeff::integer(chr, v));
      }
    acc = std::move(next);
  }
  return acc;
}
// product monomial over D: top monomial plus one d-exponent per label
inline Mon mk_pd(Opid op, const Mon &top, std::map<long long, long long> exps) {
  require(bottom_of(op) == Opid::D, "not a P.D product");
  Mon m;
  m.op = op;
  m.seq = top.seq;
  for (long long l : top.labels()) {
    auto it = exps.find(l);
    m.dexp.push_back({l, it == exps.end() ? 0 : it->second});
  }
  return m;
}

inline Mon unit_mon(Opid op, long long label) {
  switch (op) {
  case Opid::Com: return mk_com({label});
  case Opid::As: return mk_as({label});
  case Opid::D: return mk_d(label, 0);
  case Opid::Lie: {
    Mon m;
    m.op = Opid::Lie;
    m.seq = {label};
    return m;
  }
  case Opid::Pois: {
    Mon m;
    m.op = Opid::Pois;
    m.factors = {{label}};
    return m;
  }
  default: {
    Mon m = unit_mon(top_of(op), label);
    m.op = op;
    m.dexp = {{label, 0}};
    return m;
  }
  }
}

// views of a product monomial
inline Mon pd_top(const Mon &m) {
  Mon t;
  t.op = top_of(m.op);
  t.seq = m.seq;
  return t;
}
inline Mon pois_top(const Mon &m) { // Com monomial on 1..#factors
  std::vector<long long> pos(m.factors.size());
  std::iota(pos.begin(), pos.end(), 1);
  return mk_com(pos);
}

// ---------------------------------------------------------------------------
// Relabeling (the symmetric action up to inversion conventions).
// ---------------------------------------------------------------------------
inline El relabel(int chr, const Mon &m, const std::function<long long(long long)> &f) {
  switch (m.op) {
  case Opid::Com: {
    std::vector<long long> l;
    for (long long x : m.seq) l.push_back(f(x));
    return El(chr, mk_com(l));
  }
  case Opid::As: {
    std::vector<long long> l;
    for (long long x : m.seq) l.push_back(f(x));
    return El(chr, mk_as(l));
  }
  case Opid::D: return El(chr, mk_d(f(m.dexp[0].first), m.dexp[0].second));
  case Opid::Lie: {
    std::vector<long long> l;
    for (long long x : m.seq) l.push_back(f(x));
    return mk_lie(chr, l);
  }
  case Opid::ShiftCom:
  case Opid::DerCom: {
    Mon top = pd_top(m);
    std::vector<long long> l;
    for (long long x : top.seq) l.push_back(f(x));
    std::map<long long, long long> exps;
    for (auto &[lab, e] : m.dexp) exps[f(lab)] = e;
    return El(chr, mk_pd(m.op, mk_com(l), exps));
  }
  case Opid::ShiftLie:
  case Opid::DerLie: {
    std::vector<long long> l;
    for (long long x : m.seq) l.push_back(f(x));
    std::map<long long, long long> exps;
    for (auto &[lab, e] : m.dexp) exps[f(lab)] = e;
    El lies = mk_lie(chr, l);
    El out(chr);
    for (auto &[lm, c] : lies.t) {
      Mon mm = lm;
      mm.op = m.op;
      for (auto &[lab, e] : exps) mm.dexp.push_back({lab, e});
      out.add(mm, c);
    }
    return out;
  }
  case Opid::Pois: {
    std::vector<std::vector<long long>> fs;
    for (auto &fac : m.factors) {
      std::vector<long long> g;
      for (long long x : fac) g.push_back(f(x));
      fs.push_back(g);
    }
    return mk_pois(chr, fs);
  }
  }
  fail("unreachable");
}

inline El relabel(const El &x, const std::function<long long(long long)> &f) {
  return el_map(x, [&](const Mon &m) { return relabel(x.chr, m, f); });
}

// right action x.sigma (satisfies (x.s).t = x.(s t)); labels must lie in [n]
inline El act_right(const El &x, const Perm &s) {
  Perm si = s.inverse();
  return relabel(x, [&](long long l) { return si(l); });
}
// left action sigma.x = x.sigma^{-1}
inline El act_left(const Perm &s, const El &x) {
  return relabel(x, [&](long long l) { return s(l); });
}

inline bool invariants_under(const El &x, const Composition &r) {
  if (x.is_zero()) return true;
  long long n = r.sum();
  long long at = 0;
  for (long long ri : r.parts) {
    for (long long k = 1; k < ri; ++k) {
      Perm tr = Perm::transposition(n, at + k, at + k + 1);
      if (!(act_right(x, tr) == x)) return false;
    }
    at += ri;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Composition (labeled): substitute y into the leaf of x labeled l. Caller
// guarantees the label sets of x (minus l) and y are disjoint.
// ---------------------------------------------------------------------------
El compose_at(int chr, const Mon &x, long long l, const Mon &y);

inline El compose_at(const El &x, long long l, const El &y) {
  El out(x.chr);
  for (auto &[mx, cx] : x.t)
    for (auto &[my, cy] : y.t) out += (cx * cy) * compose_at(x.chr, mx, l, my);
  return out;
}

// Leibniz bracket of two Pois monomials: sum over picking one factor of each
inline El pois_bracket(int chr, const Mon &a, const Mon &b) {
  El out(chr);
  for (size_t i = 0; i < a.factors.size(); ++i)
    for (size_t j = 0; j < b.factors.size(); ++j)
      for (auto &[comb, v] : nf_merge(a.factors[i], b.factors[j])) {
        std::vector<std::vector<long long>> fs;
        for (size_t k = 0; k < a.factors.size(); ++k)
          if (k != i) fs.push_back(a.factors[k]);
        for (size_t k = 0; k < b.factors.size(); ++k)
          if (k != j) fs.push_back(b.factors[k]);
        fs.push_back(comb);
        out += Coeff::integer(chr, v) * mk_pois(chr, fs);
      }
  return out;
}

// product of Pois elements (disjoint labels)
inline El pois_mul(const El &a, const El &b) {
  El out(a.chr);
  for (auto &[ma, ca] : a.t)
    for (auto &[mb, cb] : b.t) {
      std::vector<std::vector<long long>> fs = ma.factors;
      fs.insert(fs.end(), mb.factors.begin(), mb.factors.end());
      out += (ca * cb) * mk_pois(a.chr, fs);
    }
  return out;
}

// evaluate a Lie comb whose leaves are Pois elements; this is the Leibniz
// distributive law in action
inline El pois_eval_comb(int chr, const std::vector<El> &leaves) {
  El acc = leaves[0];
  for (size_t i = 1; i < leaves.size(); ++i) {
    El next(chr);
    for (auto &[ma, ca] : acc.t)
      for (auto &[mb, cb] : leaves[i].t) next += (ca * cb) * pois_bracket(chr, ma, mb);
    acc = std::move(next);
  }
  return acc;
}

// push d^e through a product monomial m of P.D, merging exponents
inline El pd_push(int chr, long long e, const Mon &m) {
  LawKind law = law_of(m.op);
  El out(chr);
  std::vector<long long> labs;
  for (auto &[l, ex] : m.dexp) labs.push_back(l);
  if (law == LawKind::Shift) {
    Mon mm = m;
    for (auto &[l, ex] : mm.dexp) ex += e;
    out.add(mm, Coeff::one(chr));
  } else { // Der: multinomial expansion over the slots
    for (auto &q : compositions_of(e, (int)labs.size())) {
      Coeff c = multinomial(chr, e, q);
      if (c.is_zero()) continue;
      Mon mm = m;
      for (size_t i = 0; i < mm.dexp.size(); ++i) mm.dexp[i].second += q[i];
      out.add(mm, c);
    }
  }
  return out;
}

inline El compose_at(int chr, const Mon &x, long long l, const Mon &y) {
  require(x.op == y.op, "operad mismatch");
  switch (x.op) {
  case Opid::Com: {
    std::vector<long long> labs;
    for (long long v : x.seq)
      if (v != l) labs.push_back(v);
    require(labs.size() + 1 == x.seq.size(), "label not present");
    labs.insert(labs.end(), y.seq.begin(), y.seq.end());
    return El(chr, mk_com(labs));
  }
  case Opid::As: {
    std::vector<long long> out;
    bool found = false;
    for (long long v : x.seq) {
      if (v == l) {
        out.insert(out.end(), y.seq.begin(), y.seq.end());
        found = true;
      } else {
        out.push_back(v);
      }
    }
    require(found, "label not present");
    return El(chr, mk_as(out));
  }
  case Opid::D: {
    require(x.dexp[0].first == l, "label not present");
    return El(chr, mk_d(y.dexp[0].first, x.dexp[0].second + y.dexp[0].second));
  }
  case Opid::Lie: {
    std::vector<El> leaves;
    for (long long v : x.seq) {
      if (v == l) {
        El e(chr);
        Mon m;
        m.op = Opid::Lie;
        m.seq = y.seq;
        e.add(m, Coeff::one(chr));
        leaves.push_back(e);
      } else {
        El e(chr);
        Mon m;
        m.op = Opid::Lie;
        m.seq = {v};
        e.add(m, Coeff::one(chr));
        leaves.push_back(e);
      }
    }
    return lie_eval_comb(chr, leaves);
  }
  case Opid::ShiftCom:
  case Opid::DerCom:
  case Opid::ShiftLie:
  case Opid::DerLie: {
    long long e = x.exp_of(l);
    El pushed = pd_push(chr, e, y); // P.D elements with y's top
    El out(chr);
    Mon xtop; // x's top as plain P monomial
    xtop.op = top_of(x.op);
    xtop.seq = x.seq;
    for (auto &[my, cy] : pushed.t) {
      Mon ytop;
      ytop.op = top_of(x.op);
      ytop.seq = my.seq;
      El tops = compose_at(chr, xtop, l, ytop);
      for (auto &[mt, ct] : tops.t) {
        std::map<long long, long long> exps;
        for (auto &[lab, ex] : x.dexp)
          if (lab != l) exps[lab] = ex;
        for (auto &[lab, ex] : my.dexp) exps[lab] = ex;
        out.add(mk_pd(x.op, mt, exps), cy * ct);
      }
    }
    return out;
  }
  case Opid::Pois: {
    // factor of x containing l; other factors pass through
    std::vector<std::vector<long long>> rest;
    std::vector<long long> host;
    for (auto &f : x.factors) {
      if (std::find(f.begin(), f.end(), l) != f.end())
        host = f;
      else
        rest.push_back(f);
    }
    require(!host.empty(), "label not present");
    El yel(chr);
    yel.add(y, Coeff::one(chr));
    if (host.size() == 1) return pois_mul(mk_pois(chr, rest), yel);
    std::vector<El> leaves;
    for (long long v : host)
      leaves.push_back(v == l ? yel : El(chr, unit_mon(Opid::Pois, v)));
    return pois_mul(mk_pois(chr, rest), pois_eval_comb(chr, leaves));
  }
  }
  fail("unreachable");
}

// Standard-labeled partial composition x o_i y for x in P(n), y in P(m):
// slots of y become i..i+m-1, later slots of x shift up by m-1.
inline El operad_compose(const El &x, int i, const El &y) {
  require(!x.is_zero() && !y.is_zero(), "compose with zero");
  int n = x.t.begin()->first.arity(), m = y.t.begin()->first.arity();
  require(1 <= i && i <= n, "index out of range");
  // slot i goes to the reserved label 0 so that m = 0 cannot collide labels
  El xs = relabel(x, [&](long long l) { return l == i ? 0 : l > i ? l + m - 1 : l; });
  El ys = relabel(y, [&](long long l) { return l + i - 1; });
  // x's slot is replaced; ys occupies labels i..i+m-1
  El out(x.chr);
  for (auto &[mx, cx] : xs.t)
    for (auto &[my, cy] : ys.t) out += (cx * cy) * compose_at(x.chr, mx, 0, my);
  return out;
}

inline std::string Mon::str() const {
  std::ostringstream os;
  auto put_comb = [&](const std::vector<long long> &c) {
    if (c.size() == 1) {
      os << "x" << c[0];
      return;
    }
    for (size_t i = 1; i < c.size(); ++i) os << '[';
    os << "x" << c[0];
    for (size_t i = 1; i < c.size(); ++i) os << ";x" << c[i] << ']';
  };
  switch (op) {
  case Opid::Com: {
    os << "X{";
    for (size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
    os << "}";
    break;
  }
  case Opid::As: {
    os << "(";
    for (size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << "x" << seq[i];
    os << ")";
    break;
  }
  case Opid::D: {
    os << "d^" << dexp[0].second << "{" << dexp[0].first << "}";
    break;
  }
  case Opid::Lie: put_comb(seq); break;
  case Opid::ShiftCom:
  case Opid::DerCom: {
    os << "(X;";
    for (size_t i = 0; i < dexp.size(); ++i)
      os << (i ? "," : "") << "d^" << dexp[i].second << "{" << dexp[i].first << "}";
    os << ")";
    break;
  }
  case Opid::ShiftLie:
  case Opid::DerLie: {
    os << "(";
    put_comb(seq);
    os << ";";
    for (size_t i = 0; i < dexp.size(); ++i)
      os << (i ? "," : "") << "d^" << dexp[i].second << "{" << dexp[i].first << "}";
    os << ")";
    break;
  }
  case Opid::Pois: {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      put_comb(factors[i]);
    }
    break;
  }
  }
  return os.str();
}

} // namespace dpa
