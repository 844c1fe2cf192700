#include <cstdlib>
#include <stdexcept>

#include "dualcount/series.hpp"

namespace dualcount {

namespace {

using Env = std::map<std::string, int>;

GaussSeries expand_in(const GenExpr& e, int order, Env& env);

void multiply_factor(GaussSeries& acc, const GenExpr& f, int order, Env& env) {
  switch (f->kind) {
    case GenNode::Kind::Const: acc *= f->value; break;
    case GenNode::Kind::UnitPow: acc *= GaussRational(1).rotated(f->unit.evaluate(env)); break;
    case GenNode::Kind::QPow: acc.shift(f->k); break;
    case GenNode::Kind::Pole: acc.multiply_pole(f->unit.evaluate(env), f->k, f->e); break;
    default: acc = acc * expand_in(f, order, env);
  }
}

GaussSeries expand_in(const GenExpr& e, int order, Env& env) {
  switch (e->kind) {
    case GenNode::Kind::Sum: {
      GaussSeries out(order);
      for (auto& t : e->children) out += expand_in(t, order, env);
      return out;
    }
    case GenNode::Kind::Product: {
      GaussSeries out = GaussSeries::constant(order, 1);
      // Cheap factors first so that generic products see as few terms as possible.
      for (auto& f : e->children)
        if (f->kind != GenNode::Kind::Sum && f->kind != GenNode::Kind::Avg) multiply_factor(out, f, order, env);
      for (auto& f : e->children)
        if (f->kind == GenNode::Kind::Sum || f->kind == GenNode::Kind::Avg) multiply_factor(out, f, order, env);
      return out;
    }
    case GenNode::Kind::Avg: {
      GaussSeries out(order);
      if (env.count(e->param)) throw std::invalid_argument("nested average rebinds parameter " + e->param);
      for (int v = 0; v < e->range; ++v) {
        env[e->param] = v;
        out += expand_in(e->children[0], order, env);
      }
      env.erase(e->param);
      out *= GaussRational(mpq_class(1, e->range));
      return out;
    }
    default: {
      GaussSeries out = GaussSeries::constant(order, 1);
      multiply_factor(out, e, order, env);
      return out;
    }
  }
}

}  // namespace

int default_series_order() { return 64; }

int max_series_order() {
  if (const char* env = std::getenv("DUALCOUNT_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 100000) return static_cast<int>(v);
  }
  return default_series_order();
}

GaussSeries expand(const GenExpr& e, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  Env env;
  return expand_in(e, order, env);
}

GaussRational coeff(const GenExpr& e, int k) {
  if (k < 0) return {};
  if (k > max_series_order())
    throw std::out_of_range("coefficient index " + std::to_string(k) + " exceeds the configured maximum order " +
                            std::to_string(max_series_order()));
  return expand(e, k)[k];
}

}  // namespace dualcount
