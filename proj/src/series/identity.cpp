#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dualcount/series.hpp"

namespace dualcount {

std::string to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::KF1: return "KF1";
    case IdentityKind::KF2: return "KF2";
    case IdentityKind::KF3: return "KF3";
    case IdentityKind::KF4: return "KF4";
    case IdentityKind::PropA: return "PropA";
    case IdentityKind::PropX: return "PropX";
    case IdentityKind::PropY: return "PropY";
  }
  return "?";
}

IdentityKind parse_identity(std::string_view text) {
  for (auto k : {IdentityKind::KF1, IdentityKind::KF2, IdentityKind::KF3, IdentityKind::KF4, IdentityKind::PropA,
                 IdentityKind::PropX, IdentityKind::PropY})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown identity '" + std::string(text) + "'");
}

IdentityParams parse_identity_params(std::string_view text) {
  IdentityParams out;
  if (text.empty()) return out;
  std::string group;
  std::istringstream groups{std::string(text)};
  while (std::getline(groups, group, ';')) {
    std::vector<int> values;
    std::istringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
      if (b == std::string::npos) continue;
      const std::string t = item.substr(b, e - b + 1);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size()) throw std::invalid_argument("bad parameter '" + t + "'");
      values.push_back(v);
    }
    out.push_back(std::move(values));
  }
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

std::string to_string(const IdentityParams& p) {
  std::string s;
  for (std::size_t g = 0; g < p.size(); ++g) {
    if (g) s += ";";
    for (std::size_t i = 0; i < p[g].size(); ++i) s += (i ? "," : "") + std::to_string(p[g][i]);
  }
  return s;
}

namespace {

[[noreturn]] void violated(const std::string& what) { throw std::invalid_argument("side condition violated: " + what); }

LinearForm var(const std::string& p, int c) { return LinearForm{0, {{p, c}}}.scaled(1); }

/// (1 - u q^m)^{-e}; the exponent must be a positive integer for the expression to be a power series.
GenExpr P(int m, LinearForm u = {}, int e = 1) {
  if (m < 1) violated("pole exponent " + std::to_string(m) + " is not positive");
  return gen::pole(std::move(u), m, e);
}

const std::vector<int>& group(const IdentityParams& p, std::size_t g, const char* name) {
  static const std::vector<int> empty;
  if (g >= p.size()) {
    if (std::string(name).rfind("v", 0) == 0) return empty;
    violated(std::string("missing parameter group ") + name);
  }
  return p[g];
}

int single(const IdentityParams& p, std::size_t g, const char* name) {
  const auto& v = group(p, g, name);
  if (v.size() != 1) violated(std::string(name) + " must be a single value");
  return v[0];
}

void positive(const std::vector<int>& v, const char* name) {
  for (int x : v)
    if (x < 1) violated(std::string(name) + " entries must be positive");
}

/// Exactly `l` values, or one value repeated `l` times.
std::vector<int> broadcast(const std::vector<int>& v, int l, const char* name) {
  if (l < 0) violated("negative length for " + std::string(name));
  if (static_cast<int>(v.size()) == l) return v;
  if (v.size() == 1) return std::vector<int>(l, v[0]);
  if (l == 0 && v.empty()) return {};
  violated(std::string(name) + " needs " + std::to_string(l) + " values or a single broadcast value");
}

GenExpr poles_2v(const std::vector<int>& v, LinearForm u = {}) {
  std::vector<GenExpr> f;
  for (int x : v) f.push_back(P(2 * x, u));
  return gen::product(std::move(f));
}

/// (1/2)Σ_a (-1)^a F̃((-1)^a q), optionally inside further averages over t-parameters.
GenExpr alternating_average(const GenExpr& tilde, const std::vector<std::pair<std::string, int>>& inner) {
  GenExpr body = gen::product({gen::unit_pow(var("a", 2)), gen::substitute_q(tilde, var("a", 2))});
  for (auto it = inner.rbegin(); it != inner.rend(); ++it) body = gen::avg(it->first, it->second, body);
  return gen::avg("a", 2, body);
}

IdentitySides kf1(const IdentityParams& p) {
  const int s = single(p, 0, "s");
  const auto& k = group(p, 1, "k");
  const int l = single(p, 2, "l");
  const auto v = broadcast(group(p, 3, "v"), l, "v");
  if (s != 1 && s != 2 && s != 4) violated("s must be 1, 2 or 4");
  if (static_cast<int>(k.size()) != s) violated("KF1 needs s values of k");
  positive(k, "k");
  positive(v, "v");
  std::vector<GenExpr> f{poles_2v(v)}, ft{poles_2v(v)};
  if (s == 2) {
    if (k[0] == k[1]) violated("k1 != k2");
    f.push_back(P(2 * k[1] - 2 * k[0]));
    ft.push_back(P(4 * k[1] - 4 * k[0]));
  } else if (s == 4) {
    if (k[0] + k[1] != k[2] + k[3]) violated("k1 + k2 = k3 + k4");
    if (std::min(k[0], k[1]) == std::min(k[2], k[3]) && std::max(k[0], k[1]) == std::max(k[2], k[3]))
      violated("{k1, k2} != {k3, k4}");
    f.push_back(P(2 * k[0] + 2 * k[1] - 2));
    f.push_back(P(2 * k[2] - 2 * k[0]));
    f.push_back(P(2 * k[3] - 2 * k[0]));
    ft.push_back(P(4 * k[0] + 4 * k[1] - 4));
    ft.push_back(P(4 * k[2] - 4 * k[0]));
    ft.push_back(P(4 * k[3] - 4 * k[0]));
  }
  for (int kr : k) {
    f.push_back(P(4 * kr - 2));
    ft.push_back(P(2 * kr - 1));
  }
  return {gen::product({gen::q_pow(2 * k[0] - 1), gen::product(f)}), alternating_average(gen::product(ft), {})};
}

IdentitySides kf2(const IdentityParams& p) {
  const int s = single(p, 0, "s");
  const auto& k = group(p, 1, "k");
  const auto& ls = group(p, 2, "l0,l1");
  if (s != 2 && s != 4) violated("s must be 2 or 4");
  if (static_cast<int>(k.size()) != s / 2) violated("KF2 needs s/2 values of k");
  if (ls.size() != 2 || ls[0] < 0 || ls[1] < 0) violated("l0,l1 must be two non-negative values");
  positive(k, "k");
  const auto& vs = group(p, 3, "v");
  std::vector<int> v0, v1;
  if (static_cast<int>(vs.size()) == ls[0] + ls[1]) {
    v0.assign(vs.begin(), vs.begin() + ls[0]);
    v1.assign(vs.begin() + ls[0], vs.end());
  } else if (vs.size() == 2) {
    v0.assign(ls[0], vs[0]);
    v1.assign(ls[1], vs[1]);
  } else {
    violated("v needs l0 + l1 values or one broadcast value per class");
  }
  positive(v0, "v");
  positive(v1, "v");
  const LinearForm t = var("b", 2);
  std::vector<GenExpr> f{poles_2v(v0), poles_2v(v1)}, ft{poles_2v(v0), poles_2v(v1, t)};
  if (s == 4) {
    if (k[0] == k[1]) violated("k1 != k2");
    f.push_back(P(2 * k[0] + 2 * k[1] - 2));
    f.push_back(P(2 * k[1] - 2 * k[0]));
    ft.push_back(P(4 * k[0] + 4 * k[1] - 4));
    ft.push_back(P(4 * k[1] - 4 * k[0]));
  }
  for (int kr : k) {
    f.push_back(P(4 * kr - 2, {}, 2));
    ft.push_back(P(2 * kr - 1));
    ft.push_back(P(2 * kr - 1, t));
  }
  return {gen::product({gen::q_pow(2 * k[0] - 1), gen::product(f)}),
          alternating_average(gen::product(ft), {{"b", 2}})};
}

IdentitySides kf3(const IdentityParams& p) {
  const int k = single(p, 0, "k");
  const auto& ls = group(p, 1, "l00,l01,l10,l11");
  const auto& vs = group(p, 2, "v");
  if (k < 1) violated("k must be positive");
  if (ls.size() != 4) violated("KF3 needs four class lengths");
  std::vector<std::vector<int>> v(4);
  std::size_t next = 0;
  for (int c = 0; c < 4; ++c) {
    if (ls[c] < 0) violated("class lengths must be non-negative");
    if (ls[c] == 0) continue;
    if (next >= vs.size()) violated("one v value is needed per non-empty class");
    v[c].assign(ls[c], vs[next++]);
    positive(v[c], "v");
  }
  if (next != vs.size()) violated("too many v values");
  std::vector<GenExpr> f{P(4 * k - 2, {}, 5)}, ft{P(8 * k - 4)};
  for (int c = 0; c < 4; ++c) {
    const int p1 = c / 2, p0 = c % 2;
    const LinearForm t = var("b1", 2 * p1) + var("b0", 2 * p0);
    f.push_back(poles_2v(v[c]));
    ft.push_back(P(2 * k - 1, t));
    ft.push_back(poles_2v(v[c], t));
  }
  return {gen::product({gen::q_pow(2 * k - 1), gen::product(f)}),
          alternating_average(gen::product(ft), {{"b0", 2}, {"b1", 2}})};
}

IdentitySides kf4(const IdentityParams& p) {
  const auto& k = group(p, 0, "k1,k2");
  const int l = single(p, 1, "l");
  const auto v = broadcast(group(p, 2, "v"), l, "v");
  if (k.size() != 2) violated("KF4 needs k1,k2");
  if (k[0] == k[1]) violated("k1 != k2");
  positive(k, "k");
  positive(v, "v");
  const int k1 = k[0], k2 = k[1];
  const GenExpr vs = poles_2v(v);
  const GenExpr f = gen::product({P(2 * k1 + 2 * k2 - 2), P(2 * k2 - 2 * k1, {}, 2), P(4 * k1 - 2, {}, 2),
                                  P(4 * k2 - 2, {}, 2), vs});
  const GenExpr f0 = gen::product({P(2 * k1 + 2 * k2 - 2), P(4 * k2 - 4 * k1), P(8 * k1 - 4), P(8 * k2 - 4), vs});
  const LinearForm t = var("b", 1), t_inv = var("b", -1);
  const GenExpr ft = gen::product({P(4 * k1 + 4 * k2 - 4), P(4 * k2 - 4 * k1), P(2 * k2 - 2 * k1, t), P(2 * k1 - 1),
                                   P(2 * k1 - 1, t), P(2 * k2 - 1), P(2 * k2 - 1, t_inv), vs});
  const GenExpr lhs =
      gen::product({gen::constant(GaussRational(mpq_class(1, 2))), gen::q_pow(2 * k1 - 1), gen::sum({f, f0})});
  return {lhs, alternating_average(ft, {{"b", 4}})};
}

void no_params(const IdentityParams& p) {
  for (auto& g : p)
    if (!g.empty()) violated("this identity takes no parameters");
}

// Rational-function form: Σ num_j / Π (1 - i^u q^k)^{den_j[(u,k)]}.
struct Term {
  PolyGauss num;
  std::map<std::pair<int, int>, int> den;
};

using Env = std::map<std::string, int>;

std::vector<Term> terms_of(const GenExpr& e, Env& env);

void times(std::vector<Term>& acc, const std::vector<Term>& rhs) {
  std::vector<Term> out;
  out.reserve(acc.size() * rhs.size());
  for (auto& a : acc)
    for (auto& b : rhs) {
      Term t{a.num * b.num, a.den};
      for (auto& [key, m] : b.den) t.den[key] += m;
      if (!t.num.coefficients().empty()) out.push_back(std::move(t));
    }
  acc = std::move(out);
}

std::vector<Term> terms_of(const GenExpr& e, Env& env) {
  switch (e->kind) {
    case GenNode::Kind::Const: return {Term{PolyGauss::constant(e->value), {}}};
    case GenNode::Kind::UnitPow: return {Term{PolyGauss::constant(GaussRational(1).rotated(e->unit.evaluate(env))), {}}};
    case GenNode::Kind::QPow: {
      PolyGauss p = PolyGauss::constant(1);
      p.shift(e->k);
      return {Term{p, {}}};
    }
    case GenNode::Kind::Pole: {
      const int u = e->unit.evaluate(env);
      Term t{PolyGauss::constant(1), {}};
      if (e->e > 0) t.den[{u, e->k}] = e->e;
      else t.num.multiply_binomial(u, e->k, -e->e);
      return {t};
    }
    case GenNode::Kind::Sum: {
      std::vector<Term> out;
      for (auto& c : e->children) {
        auto part = terms_of(c, env);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case GenNode::Kind::Product: {
      std::vector<Term> acc{Term{PolyGauss::constant(1), {}}};
      for (auto& c : e->children) times(acc, terms_of(c, env));
      return acc;
    }
    case GenNode::Kind::Avg: {
      std::vector<Term> out;
      const GaussRational w(mpq_class(1, e->range));
      for (int v = 0; v < e->range; ++v) {
        env[e->param] = v;
        for (auto& t : terms_of(e->children[0], env)) {
          t.num *= w;
          out.push_back(std::move(t));
        }
      }
      env.erase(e->param);
      return out;
    }
  }
  return {};
}

PolyGauss cleared(const std::vector<Term>& terms, const std::map<std::pair<int, int>, int>& common) {
  PolyGauss total;
  for (auto& t : terms) {
    PolyGauss p = t.num;
    for (auto& [key, m] : common) {
      const auto it = t.den.find(key);
      p.multiply_binomial(key.first, key.second, m - (it == t.den.end() ? 0 : it->second));
    }
    total += p;
  }
  return total;
}

}  // namespace

IdentitySides identity_sides(IdentityKind id, const IdentityParams& params) {
  switch (id) {
    case IdentityKind::KF1: return kf1(params);
    case IdentityKind::KF2: return kf2(params);
    case IdentityKind::KF3: return kf3(params);
    case IdentityKind::KF4: return kf4(params);
    case IdentityKind::PropA:
      no_params(params);
      return {gen::product({gen::q_pow(1), builtin_genfun(RefinedCase::Y00_Sp)}), builtin_genfun(RefinedCase::Y00_Spin)};
    case IdentityKind::PropX:
      no_params(params);
      return {gen::product({gen::q_pow(1), builtin_genfun(RefinedCase::Y01_Sp)}), builtin_genfun(RefinedCase::Y01_Spin)};
    case IdentityKind::PropY:
      no_params(params);
      return {builtin_genfun(RefinedCase::Y11_Spin), gen::constant(0)};
  }
  throw std::invalid_argument("unknown identity");
}

ProofReport prove_identity(IdentityKind id, const IdentityParams& params) {
  const IdentitySides sides = identity_sides(id, params);
  ProofReport r{id, params, "cleared", 0, false};
  Env env;
  const auto lhs = terms_of(sides.lhs, env);
  const auto rhs = terms_of(sides.rhs, env);
  std::map<std::pair<int, int>, int> common;
  for (const auto* side : {&lhs, &rhs})
    for (auto& t : *side)
      for (auto& [key, m] : t.den) common[key] = std::max(common[key], m);
  long degree = 0;
  for (auto& [key, m] : common) degree += static_cast<long>(key.second) * m;
  if (degree > kMaxClearedDegree) {
    r.method = "series";
    r.degree_or_order = kFallbackSeriesOrder;
    r.verdict = expand(sides.lhs, kFallbackSeriesOrder) == expand(sides.rhs, kFallbackSeriesOrder);
    return r;
  }
  const PolyGauss a = cleared(lhs, common), b = cleared(rhs, common);
  r.degree_or_order = std::max(a.degree(), b.degree());
  r.verdict = a == b;
  return r;
}

}  // namespace dualcount
