#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dualcount/series.hpp"

namespace dualcount {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

LinearForm normalized(LinearForm f) {
  f.constant = mod4(f.constant);
  for (auto it = f.coeff.begin(); it != f.coeff.end();) {
    it->second = mod4(it->second);
    it = it->second == 0 ? f.coeff.erase(it) : std::next(it);
  }
  return f;
}

std::shared_ptr<GenNode> node(GenNode::Kind kind) {
  auto n = std::make_shared<GenNode>();
  n->kind = kind;
  return n;
}

bool is_one(const GaussRational& c) { return c.re == 1 && c.im == 0; }

/// Exponent k with c = i^k when c is a fourth root of unity.
std::optional<int> unit_exponent(const GaussRational& c) {
  for (int k = 0; k < 4; ++k)
    if (GaussRational(1).rotated(k) == c) return k;
  return std::nullopt;
}

/// 1 + c·i^L·q^k with c a unit becomes the pole (1 - i^{L + log(-c)} q^k)^{+1}.
std::optional<GenExpr> as_binomial(const std::vector<GenExpr>& terms) {
  if (terms.size() != 2) return std::nullopt;
  const GenExpr& one = terms[0]->kind == GenNode::Kind::Const ? terms[0] : terms[1];
  const GenExpr& mono = terms[0]->kind == GenNode::Kind::Const ? terms[1] : terms[0];
  if (one->kind != GenNode::Kind::Const || !is_one(one->value)) return std::nullopt;
  GaussRational c = 1;
  LinearForm u;
  int k = 0;
  auto absorb = [&](const GenExpr& f) {
    switch (f->kind) {
      case GenNode::Kind::Const: c *= f->value; return true;
      case GenNode::Kind::UnitPow: u = u + f->unit; return true;
      case GenNode::Kind::QPow: k += f->k; return true;
      default: return false;
    }
  };
  if (mono->kind == GenNode::Kind::Product) {
    for (auto& f : mono->children)
      if (!absorb(f)) return std::nullopt;
  } else if (!absorb(mono)) {
    return std::nullopt;
  }
  if (k < 1) return std::nullopt;
  const auto log_c = unit_exponent(-c);
  if (!log_c) return std::nullopt;
  return gen::pole(u + LinearForm::of(*log_c), k, -1);
}

}  // namespace

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r = *this;
  r.constant += o.constant;
  for (auto& [p, c] : o.coeff) r.coeff[p] += c;
  return normalized(r);
}

LinearForm LinearForm::scaled(int k) const {
  LinearForm r = *this;
  r.constant *= k;
  for (auto& [p, c] : r.coeff) c *= k;
  return normalized(r);
}

int LinearForm::evaluate(const std::map<std::string, int>& env) const {
  int v = constant;
  for (auto& [p, c] : coeff) {
    const auto it = env.find(p);
    if (it == env.end()) throw std::invalid_argument("unbound parameter " + p);
    v += c * it->second;
  }
  return mod4(v);
}

namespace gen {

GenExpr constant(GaussRational c) {
  auto n = node(GenNode::Kind::Const);
  n->value = std::move(c);
  return n;
}

GenExpr unit_pow(LinearForm u) {
  u = normalized(u);
  if (u.is_constant()) return constant(GaussRational(1).rotated(u.constant));
  auto n = node(GenNode::Kind::UnitPow);
  n->unit = std::move(u);
  return n;
}

GenExpr q_pow(int k) {
  if (k < 0) throw std::invalid_argument("negative power of q");
  if (k == 0) return constant(1);
  auto n = node(GenNode::Kind::QPow);
  n->k = k;
  return n;
}

GenExpr pole(LinearForm u, int k, int e) {
  if (k < 1) throw std::invalid_argument("pole factor (1 - u q^k) needs k >= 1");
  if (e == 0) return constant(1);
  auto n = node(GenNode::Kind::Pole);
  n->unit = normalized(std::move(u));
  n->k = k;
  n->e = e;
  return n;
}

GenExpr sum(std::vector<GenExpr> terms) {
  std::vector<GenExpr> flat;
  GaussRational c;
  for (auto& t : terms) {
    if (t->kind == GenNode::Kind::Sum) {
      for (auto& s : t->children) {
        if (s->kind == GenNode::Kind::Const) c += s->value;
        else flat.push_back(s);
      }
    } else if (t->kind == GenNode::Kind::Const) {
      c += t->value;
    } else {
      flat.push_back(t);
    }
  }
  if (!c.is_zero()) flat.push_back(constant(c));
  if (flat.empty()) return constant(0);
  if (flat.size() == 1) return flat[0];
  if (auto b = as_binomial(flat)) return *b;
  auto n = node(GenNode::Kind::Sum);
  n->children = std::move(flat);
  return n;
}

GenExpr product(std::vector<GenExpr> factors) {
  GaussRational c = 1;
  LinearForm u;
  int qk = 0;
  std::vector<std::shared_ptr<GenNode>> poles;
  std::vector<GenExpr> rest;
  std::vector<GenExpr> pending(factors.rbegin(), factors.rend());
  while (!pending.empty()) {
    GenExpr f = pending.back();
    pending.pop_back();
    switch (f->kind) {
      case GenNode::Kind::Product:
        for (auto it = f->children.rbegin(); it != f->children.rend(); ++it) pending.push_back(*it);
        break;
      case GenNode::Kind::Const: c *= f->value; break;
      case GenNode::Kind::UnitPow: u = u + f->unit; break;
      case GenNode::Kind::QPow: qk += f->k; break;
      case GenNode::Kind::Pole: {
        auto same = std::find_if(poles.begin(), poles.end(), [&](auto& p) { return p->k == f->k && p->unit == f->unit; });
        if (same != poles.end()) (*same)->e += f->e;
        else poles.push_back(std::make_shared<GenNode>(*f));
        break;
      }
      default: rest.push_back(f);
    }
  }
  if (c.is_zero()) return constant(0);
  if (u.is_constant()) {
    c = c.rotated(u.constant);
    u = {};
  }
  std::vector<GenExpr> out;
  if (!is_one(c)) out.push_back(constant(c));
  if (!u.is_constant()) out.push_back(unit_pow(u));
  if (qk > 0) out.push_back(q_pow(qk));
  for (auto& p : poles)
    if (p->e != 0) out.push_back(p);
  out.insert(out.end(), rest.begin(), rest.end());
  if (out.empty()) return constant(c);
  if (out.size() == 1) return out[0];
  auto n = node(GenNode::Kind::Product);
  n->children = std::move(out);
  return n;
}

GenExpr avg(std::string param, int range, GenExpr body) {
  if (range < 1) throw std::invalid_argument("averaging range must be positive");
  if (param == "q" || param == "i" || param == "avg") throw std::invalid_argument("reserved parameter name " + param);
  auto n = node(GenNode::Kind::Avg);
  n->param = std::move(param);
  n->range = range;
  n->children = {std::move(body)};
  return n;
}

GenExpr substitute_q(const GenExpr& e, const LinearForm& u) {
  switch (e->kind) {
    case GenNode::Kind::Const:
    case GenNode::Kind::UnitPow: return e;
    case GenNode::Kind::QPow: return product({unit_pow(u.scaled(e->k)), e});
    case GenNode::Kind::Pole: return pole(e->unit + u.scaled(e->k), e->k, e->e);
    case GenNode::Kind::Sum:
    case GenNode::Kind::Product: {
      std::vector<GenExpr> parts;
      for (auto& c : e->children) parts.push_back(substitute_q(c, u));
      return e->kind == GenNode::Kind::Sum ? sum(std::move(parts)) : product(std::move(parts));
    }
    case GenNode::Kind::Avg:
      if (u.coeff.count(e->param)) throw std::invalid_argument("substitution captures averaged parameter " + e->param);
      return avg(e->param, e->range, substitute_q(e->children[0], u));
  }
  return e;
}

std::optional<GenExpr> reciprocal(const GenExpr& e) {
  switch (e->kind) {
    case GenNode::Kind::Const: {
      auto inv = e->value.inverse();
      if (!inv) return std::nullopt;
      return constant(*inv);
    }
    case GenNode::Kind::UnitPow: return unit_pow(e->unit.scaled(-1));
    case GenNode::Kind::Pole: return pole(e->unit, e->k, -e->e);
    case GenNode::Kind::Product: {
      std::vector<GenExpr> parts;
      for (auto& c : e->children) {
        auto r = reciprocal(c);
        if (!r) return std::nullopt;
        parts.push_back(*r);
      }
      return product(std::move(parts));
    }
    default: return std::nullopt;
  }
}

}  // namespace gen

bool structurally_equal(const GenExpr& a, const GenExpr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case GenNode::Kind::Const: return a->value == b->value;
    case GenNode::Kind::UnitPow: return a->unit == b->unit;
    case GenNode::Kind::QPow: return a->k == b->k;
    case GenNode::Kind::Pole: return a->unit == b->unit && a->k == b->k && a->e == b->e;
    case GenNode::Kind::Avg:
      if (a->param != b->param || a->range != b->range) return false;
      [[fallthrough]];
    case GenNode::Kind::Sum:
    case GenNode::Kind::Product:
      if (a->children.size() != b->children.size()) return false;
      for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!structurally_equal(a->children[i], b->children[i])) return false;
      return true;
  }
  return false;
}

namespace {

std::string form_text(const LinearForm& f) {
  std::vector<std::string> parts;
  for (auto& [p, c] : f.coeff) parts.push_back((c == 1 ? "" : std::to_string(c)) + p);
  if (f.constant != 0 || parts.empty()) parts.push_back(std::to_string(f.constant));
  if (parts.size() == 1 && (f.coeff.empty() || f.coeff.begin()->second == 1)) return parts[0];
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i];
  return s + ")";
}

std::string unit_text(const LinearForm& f) {
  bool even = f.constant % 2 == 0;
  for (auto& [p, c] : f.coeff) even = even && c % 2 == 0;
  if (!even) return "i^" + form_text(f);
  LinearForm half{f.constant / 2, {}};
  for (auto& [p, c] : f.coeff) half.coeff[p] = c / 2;
  return "(-1)^" + form_text(half);
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::string const_text(const GaussRational& c) {
  if (c.im == 0) return rational_text(c.re);
  if (c.re == 0) return "(" + rational_text(c.im) + " i^1)";
  return "(" + rational_text(c.re) + " + " + rational_text(c.im) + " i^1)";
}

std::string q_text(int k) { return k == 1 ? "q" : "q^" + std::to_string(k); }

void print(std::ostream& os, const GenExpr& e, bool as_factor);

void print_pole(std::ostream& os, const GenExpr& e) {
  os << "(1";
  if (e->unit.is_constant()) {
    switch (e->unit.constant) {
      case 0: os << "-" << q_text(e->k); break;
      case 2: os << "+" << q_text(e->k); break;
      default: os << "-i^" << e->unit.constant << " " << q_text(e->k);
    }
  } else {
    os << "-" << unit_text(e->unit) << " " << q_text(e->k);
  }
  os << ")";
  if (e->e != -1) os << "^" << -e->e;
}

void print(std::ostream& os, const GenExpr& e, bool as_factor) {
  switch (e->kind) {
    case GenNode::Kind::Const: os << const_text(e->value); break;
    case GenNode::Kind::UnitPow: os << unit_text(e->unit); break;
    case GenNode::Kind::QPow: os << q_text(e->k); break;
    case GenNode::Kind::Pole: print_pole(os, e); break;
    case GenNode::Kind::Sum:
      if (as_factor) os << "(";
      for (std::size_t i = 0; i < e->children.size(); ++i) {
        if (i) os << " + ";
        print(os, e->children[i], e->children[i]->kind == GenNode::Kind::Avg);
      }
      if (as_factor) os << ")";
      break;
    case GenNode::Kind::Product:
      for (std::size_t i = 0; i < e->children.size(); ++i) {
        if (i) os << " ";
        print(os, e->children[i], true);
      }
      break;
    case GenNode::Kind::Avg:
      if (as_factor) os << "(";
      os << "avg(" << e->param << " in 0.." << e->range - 1 << ") ";
      print(os, e->children[0], false);
      if (as_factor) os << ")";
      break;
  }
}

}  // namespace

std::string to_string(const GenExpr& e) {
  std::ostringstream os;
  print(os, e, false);
  return os.str();
}

}  // namespace dualcount
