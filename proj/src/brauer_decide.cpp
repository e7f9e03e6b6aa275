// Relation group, exclusion rules and rendering of the surviving conditions.
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "brauer_internal.hpp"
#include "json.hpp"
#include "tits/intlinalg.hpp"

namespace tits {

using namespace detail;

namespace {

std::set<std::int64_t> prime_support(std::int64_t m) {
  std::set<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      out.insert(p);
      m /= p;
    }
  if (m > 1) out.insert(m);
  return out;
}

IntVec generator(const CartanType& t) {
  IntVec unit(static_cast<std::size_t>(t.rank), 0);
  unit[0] = 1;
  return cocenter_of(t).project(unit);
}

// Z-module (direct sum over keys of the block cocenters) modulo relations.
class RelationGroup {
 public:
  RelationGroup(const KernelShape& shape, std::vector<int> alias) : shape_(shape), alias_(std::move(alias)) {
    for (const auto& b : shape_.blocks) reg(base_key(b.id));
  }

  BrauerKey canon(BrauerKey k) const {
    k.block = alias_[static_cast<std::size_t>(k.block)];
    return k;
  }
  BrauerKey base_key(int block) const {
    const auto& s = shape_.blocks[static_cast<std::size_t>(alias_[static_cast<std::size_t>(block)])].stabilizer;
    return BrauerKey{alias_[static_cast<std::size_t>(block)], s, s, s, false};
  }
  void reg(const BrauerKey& raw) {
    const BrauerKey k = canon(raw);
    if (offset_.count(k)) return;
    offset_[k] = dim_;
    dim_ += factors(k).size();
  }
  void reg_all(const std::vector<BrauerExpression>& rels) {
    for (const auto& e : rels)
      for (const auto& t : e.terms) reg(t.key);
  }
  const IntVec& factors(const BrauerKey& k) const {
    return cocenter_of(shape_.blocks[static_cast<std::size_t>(k.block)].type).invariant_factors();
  }
  IntVec vec(const BrauerKey& raw, const IntVec& cls) const {
    const BrauerKey k = canon(raw);
    IntVec v(dim_, 0);
    const std::size_t off = offset_.at(k);
    for (std::size_t j = 0; j < cls.size(); ++j) v[off + j] = cls[j];
    return v;
  }
  IntVec vec(const BrauerExpression& e) const {
    IntVec v(dim_, 0);
    for (const auto& t : e.terms) {
      const IntVec w = vec(t.key, t.cls);
      for (std::size_t j = 0; j < dim_; ++j) v[j] += w[j];
    }
    return v;
  }
  Lattice lattice(const std::vector<const BrauerExpression*>& rels) const {
    Lattice l(dim_);
    for (const auto& [k, off] : offset_) {
      const IntVec& f = factors(k);
      for (std::size_t j = 0; j < f.size(); ++j) {
        IntVec v(dim_, 0);
        v[off + j] = f[j];
        l.add(v);
      }
    }
    for (const auto* e : rels) l.add(vec(*e));
    return l;
  }
  bool key_zero(const Lattice& l, const BrauerKey& k) const {
    const IntVec& f = factors(canon(k));
    for (std::size_t j = 0; j < f.size(); ++j) {
      IntVec cls(f.size(), 0);
      cls[j] = 1;
      if (!l.contains(vec(k, cls))) return false;
    }
    return true;
  }
  std::size_t dim() const { return dim_; }

 private:
  const KernelShape& shape_;
  std::vector<int> alias_;
  std::map<BrauerKey, std::size_t> offset_;
  std::size_t dim_ = 0;
};

// Consequences used for deduction only: corestriction of a relation living on
// a larger field, and deg * x = 0 from res(x) = 0.
std::vector<BrauerExpression> derived_relations(const KernelShape& shape, const std::vector<BrauerExpression>& rels) {
  std::vector<BrauerExpression> out;
  for (const auto& e : rels) {
    if (e.terms.empty()) continue;
    const BrauerKey& k = e.terms.front().key;
    bool single_key = !k.conjugate;
    for (const auto& t : e.terms) single_key = single_key && t.key == k;
    if (!single_key) continue;
    const KernelBlock& b = shape.blocks[static_cast<std::size_t>(k.block)];
    const auto& cg = cocenter_of(b.type);
    IntVec y(cg.invariant_factors().size(), 0);
    for (const auto& t : e.terms) y = add(cg, y, t.cls);
    BrauerExpression d;
    d.source = "derived from " + e.source;
    d.base = b.stabilizer;
    d.derived = true;
    const BrauerKey base{k.block, b.stabilizer, b.stabilizer, b.stabilizer, false};
    if (k.atom == k.res && k.res == k.cores && k.atom.size() < b.stabilizer.size()) {
      std::vector<std::vector<Perm>> cosets;
      IntVec sum(y.size(), 0);
      for (const auto& g : b.stabilizer) {
        std::vector<Perm> coset;
        for (const auto& a : k.atom) coset.push_back(compose(g, a));
        std::sort(coset.begin(), coset.end());
        if (std::find(cosets.begin(), cosets.end(), coset) != cosets.end()) continue;
        cosets.push_back(coset);
        sum = add(cg, sum, act_class(b, g, 0, y).second);
      }
      d.terms.push_back({base, sum});
      out.push_back(std::move(d));
    } else if (e.terms.size() == 1 && b.a_type() && k.atom == b.stabilizer && k.res == k.cores &&
               k.res.size() < k.atom.size()) {
      d.terms.push_back({base, scale(cg, y, static_cast<std::int64_t>(k.atom.size() / k.res.size()))});
      out.push_back(std::move(d));
    }
  }
  return out;
}

struct Renderer {
  const KernelShape& shape;
  const DynkinDiagram& diagram;
  const std::vector<int>& alias;
  const std::vector<std::string>& names;

  const KernelBlock& block(const BrauerKey& k) const {
    return shape.blocks[static_cast<std::size_t>(alias[static_cast<std::size_t>(k.block)])];
  }
  std::string field(const Subgroup& s) const { return field_name(shape.index.gamma, diagram, s); }
  bool plain(const BrauerKey& k) const {
    const auto& s = block(k).stabilizer;
    return !k.conjugate && k.atom == s && k.res == s && k.cores == s;
  }
  std::int64_t coefficient(const BrauerKey& k, const IntVec& cls) const {
    const auto& b = block(k);
    const auto& cg = cocenter_of(b.type);
    const IntVec g = generator(b.type);
    for (std::int64_t m = 0; m < b.a_degree(); ++m)
      if (scale(cg, g, m) == cg.reduce(cls)) return m;
    throw std::logic_error("class outside the cyclic cocenter");
  }
  int galois_min(const BrauerKey& k, const IntVec& cls) const {
    const auto& b = block(k);
    const auto& cg = cocenter_of(b.type);
    int best = minuscule_index(b.type, cls);
    for (const auto& x : {cls, cg.negate(cls)})
      for (const auto& g : b.stabilizer) best = std::min(best, minuscule_index(b.type, act_class(b, g, 0, x).second));
    return best;
  }
  std::string wrap(const BrauerKey& k, std::string inner) const {
    if (k.conjugate) inner += "^sigma";
    if (k.res != k.atom) inner = "res_{" + field(k.res) + "}" + inner;
    if (k.cores != k.res) inner = "cores_{" + field(k.res) + "/" + field(k.cores) + "}" + inner;
    return inner;
  }
  std::string name(const BrauerKey& k) const { return names[static_cast<std::size_t>(alias[static_cast<std::size_t>(k.block)])]; }

  // Empty string for a zero term.
  std::string term(const BrauerKey& k, const IntVec& cls, bool conjugates) const {
    const auto& b = block(k);
    if (cocenter_of(b.type).is_zero(cls)) return "";
    if (b.a_type()) {
      const std::int64_t m = coefficient(k, cls);
      return (m == 1 ? "" : std::to_string(m)) + wrap(k, "[" + name(k) + "]");
    }
    const int idx = conjugates ? galois_min(k, cls) : minuscule_index(b.type, cls);
    std::string sym = "beta_" + name(k);
    if (!k.conjugate && k.atom != b.stabilizer) sym = "beta_{" + name(k) + "_" + field(k.atom) + "}";
    return wrap(k, sym + "(omega_" + std::to_string(idx) + ")");
  }

  std::vector<std::pair<BrauerKey, IntVec>> collect(const BrauerExpression& e) const {
    std::vector<std::pair<BrauerKey, IntVec>> out;
    for (const auto& t : e.terms) {
      BrauerKey k = t.key;
      k.block = alias[static_cast<std::size_t>(k.block)];
      const auto& cg = cocenter_of(block(k).type);
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == k; });
      if (it == out.end())
        out.emplace_back(k, cg.reduce(t.cls));
      else
        it->second = add(cg, it->second, t.cls);
    }
    std::erase_if(out, [&](const auto& p) { return cocenter_of(block(p.first).type).is_zero(p.second); });
    return out;
  }

  std::string raw(const BrauerExpression& e) const {
    std::string s;
    for (const auto& [k, cls] : collect(e)) s += (s.empty() ? "" : "+") + term(k, cls, false);
    return (s.empty() ? "0" : s) + "=0";
  }

  std::string condition(const BrauerExpression& e) const {
    auto terms = collect(e);
    if (terms.empty()) return "";
    if (terms.size() == 1) {
      const auto& [k, cls] = terms.front();
      const auto& b = block(k);
      if (!b.a_type()) return term(k, cls, true) + "=0";
      const std::int64_t g = std::gcd(coefficient(k, cls), static_cast<std::int64_t>(b.a_degree()));
      const IntVec unit = scale(cocenter_of(b.type), generator(b.type), g);
      std::string s = term(k, unit, false) + "=0";
      if (g > 1 && plain(k)) s += " (exp " + name(k) + " ≤ " + std::to_string(g) + ")";
      return s;
    }
    auto e_term = std::find_if(terms.begin(), terms.end(), [&](const auto& p) {
      return plain(p.first) && block(p.first).a_type() && name(p.first) == "E";
    });
    if (e_term != terms.end()) {
      const std::int64_t d = block(e_term->first).a_degree();
      const std::int64_t c = coefficient(e_term->first, e_term->second);
      if (c == 1 || c == d - 1) {
        // replacing E by its opposite if needed, others = -c[E] reads -others = [E]
        std::string lhs;
        for (const auto& [k, cls] : terms) {
          if (k == e_term->first) continue;
          lhs += (lhs.empty() ? "" : "+") + term(k, cocenter_of(block(k).type).negate(cls), false);
        }
        return lhs + "=[E]";
      }
    }
    std::string s;
    for (const auto& [k, cls] : terms) s += (s.empty() ? "" : "+") + term(k, cls, false);
    return s + "=0";
  }
};

bool classical(const TitsIndex& idx) {
  const Kind k = idx.type.kind;
  if (k == Kind::D && idx.type.rank == 4 && idx.gamma_order() > 2) return false;
  return k == Kind::A || k == Kind::B || k == Kind::C || k == Kind::D;
}

std::vector<std::string> assign_names(const KernelShape& shape, const std::vector<int>& alias) {
  const auto& blocks = shape.blocks;
  std::vector<std::string> names(blocks.size());
  std::map<std::string, std::vector<std::size_t>> groups;
  bool has_h = false;
  for (const auto& b : blocks) has_h = has_h || !b.a_type();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (alias[i] != static_cast<int>(i)) continue;
    const auto& b = blocks[i];
    std::string stem;
    if (!b.a_type())
      stem = "H";
    else if (classical(shape.index))
      stem = b.spacing ? "E" : "A";
    else
      stem = has_h ? "E" : "A";
    groups[stem].push_back(i);
  }
  for (const auto& [stem, members] : groups)
    for (std::size_t j = 0; j < members.size(); ++j)
      names[members[j]] = members.size() == 1 ? stem : stem + std::to_string(j + 1);
  for (std::size_t i = 0; i < blocks.size(); ++i) names[i] = names[static_cast<std::size_t>(alias[i])];
  return names;
}

std::string describe_block(const KernelBlock& b, const std::string& name) {
  std::ostringstream os;
  os << name << ": " << b.type.name();
  if (b.components.size() > 1) os << " x" << b.components.size();
  os << " on";
  for (const auto& c : b.components) os << " " << format_set(c.vertices);
  os << " over " << b.base;
  if (b.twisted) os << " (twisted)";
  return os.str();
}

}  // namespace

std::string render_expression(const KernelShape& shape, const BrauerExpression& e) {
  std::vector<int> alias(shape.blocks.size());
  std::iota(alias.begin(), alias.end(), 0);
  const auto names = assign_names(shape, alias);
  const DynkinDiagram d = build(shape.index.type.kind, shape.index.type.rank);
  return Renderer{shape, d, alias, names}.raw(e);
}

Verdict decide(const TitsIndex& index) {
  Verdict v;
  v.label = index.label;
  const KernelShape shape = kernel_shape(index);
  const DynkinDiagram diagram = build(index.type.kind, index.type.rank);
  const std::size_t nb = shape.blocks.size();
  std::vector<int> alias(nb);
  std::iota(alias.begin(), alias.end(), 0);

  std::vector<BrauerExpression> rels = orbit_relations(shape);
  for (auto& e : order_relations(shape)) rels.push_back(std::move(e));
  const std::vector<BrauerExpression> derived = derived_relations(shape, rels);

  auto build_group = [&](const std::vector<int>& al) {
    RelationGroup q(shape, al);
    q.reg_all(rels);
    q.reg_all(derived);
    return q;
  };
  auto pointers = [&](const std::vector<bool>& keep) {
    std::vector<const BrauerExpression*> out;
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (keep[i]) out.push_back(&rels[i]);
    for (const auto& e : derived) out.push_back(&e);
    return out;
  };
  const std::vector<bool> all(rels.size(), true);

  {
    const auto names = assign_names(shape, alias);
    for (std::size_t i = 0; i < nb; ++i) v.trace.push_back("block " + describe_block(shape.blocks[i], names[i]));
    Renderer r{shape, diagram, alias, names};
    for (const auto& e : rels) v.trace.push_back(e.source + " over " + r.field(e.base) + ": " + r.raw(e));
  }

  // Identify isomorphic untwisted A-atoms of equal degree.
  for (bool changed = true; changed;) {
    changed = false;
    RelationGroup q = build_group(alias);
    const Lattice l = q.lattice(pointers(all));
    for (std::size_t a = 0; a < nb && !changed; ++a)
      for (std::size_t b = a + 1; b < nb && !changed; ++b) {
        const auto& ba = shape.blocks[a];
        const auto& bb = shape.blocks[b];
        if (alias[a] != static_cast<int>(a) || alias[b] != static_cast<int>(b)) continue;
        if (!ba.a_type() || !bb.a_type() || ba.type != bb.type || ba.stabilizer != bb.stabilizer) continue;
        if (classical(index) && !(ba.spacing && bb.spacing)) continue;
        const IntVec g = generator(ba.type);
        IntVec diff = q.vec(q.base_key(static_cast<int>(a)), g);
        const IntVec other = q.vec(q.base_key(static_cast<int>(b)), g);
        for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= other[j];
        if (!l.contains(diff)) continue;
        for (auto& x : alias)
          if (x == static_cast<int>(b)) x = static_cast<int>(a);
        changed = true;
      }
  }
  const auto names = assign_names(shape, alias);
  Renderer render{shape, diagram, alias, names};
  RelationGroup q = build_group(alias);
  const Lattice full = q.lattice(pointers(all));

  auto exclude = [&](const std::string& rule, const std::string& why) {
    v.excluded = true;
    v.rule = rule;
    v.trace.push_back(rule + ": " + why);
    return v;
  };

  // R1: exponent and index share their prime divisors.
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& b = shape.blocks[i];
    if (alias[i] != static_cast<int>(i) || !b.a_type() || b.a_degree() < 2) continue;
    const IntVec g = generator(b.type);
    std::int64_t e = 1;
    while (!full.contains(q.vec(q.base_key(static_cast<int>(i)), scale(cocenter_of(b.type), g, e)))) ++e;
    const std::string n = names[i];
    const std::int64_t d = b.a_degree();
    if (e == 1)
      return exclude("R1", "the relations force [" + n + "]=0 although deg " + n + "=" + std::to_string(d) +
                               " > 1, hence [" + n + "]=0, a contradiction");
    if (prime_support(e) != prime_support(d))
      return exclude("R1", "[" + n + "] has order " + std::to_string(e) + " in the relation group and deg " + n + "=" +
                               std::to_string(d) + ". Hence exp " + n + "=" + std::to_string(e) +
                               ", whose prime divisors differ from those of ind " + n);
  }

  // R2: an anisotropic symplectic kernel has a nontrivial Tits class.
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& b = shape.blocks[i];
    const bool symplectic = (b.type.kind == Kind::C && b.type.rank >= 2) || (b.type.kind == Kind::B && b.type.rank == 2);
    if (!symplectic || b.twisted) continue;
    if (q.key_zero(full, q.base_key(static_cast<int>(i))))
      return exclude("R2", "the relations force beta_" + names[i] + "=0 on the " + b.type.name() + " block " +
                               names[i] + ", in contradiction with the symplectic criterion (an anisotropic "
                               "symplectic kernel needs a nonsplit Tits algebra)");
  }

  // R5: a spacing algebra is Brauer equivalent to the algebra of omega_1,
  // whose degree is n+1 (type A) or 2n (types C, D).
  const Kind ak = index.type.kind;
  if (ak == Kind::A || ak == Kind::C || ak == Kind::D) {
    const std::int64_t deg = ak == Kind::A ? index.type.rank + 1 : 2 * index.type.rank;
    for (std::size_t i = 0; i < nb; ++i) {
      const auto& b = shape.blocks[i];
      if (b.spacing && deg % b.a_degree() != 0)
        return exclude("R5", "spacing degree " + std::to_string(b.a_degree()) + " does not divide " +
                                 std::to_string(deg));
    }
  }

  std::set<BrauerKey> zero;
  std::vector<std::string> conditions;
  if (!shape.circled.empty())
    for (std::size_t i = 0; i < nb; ++i) {
      const auto& b = shape.blocks[i];
      if (alias[i] != static_cast<int>(i) || b.a_type() || b.twisted) continue;
      if (cocenter_of(b.type).is_trivial()) continue;
      if (q.key_zero(full, q.base_key(static_cast<int>(i)))) {
        conditions.push_back("beta_" + names[i] + "=0");
        zero.insert(q.base_key(static_cast<int>(i)));
      }
    }

  std::vector<bool> keep(rels.size(), true);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    bool on_zero = true;
    for (const auto& t : rels[i].terms) on_zero = on_zero && zero.count(q.canon(t.key));
    if (on_zero) keep[i] = false;
  }
  // Drop relations implied by the others, latest first.
  for (std::size_t i = rels.size(); i-- > 0;) {
    if (!keep[i]) continue;
    keep[i] = false;
    const Lattice rest = q.lattice(pointers(keep));
    if (!rest.contains(q.vec(rels[i]))) keep[i] = true;
  }

  if (classical(index) && !shape.circled.empty() && !index.gamma.is_trivial())
    for (std::size_t i = 0; i < nb; ++i) {
      const auto& b = shape.blocks[i];
      if (b.twisted && b.components.size() == 1) conditions.push_back("base(" + names[i] + ", O)=R'");
    }
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (keep[i]) {
      const std::string c = render.condition(rels[i]);
      if (!c.empty()) conditions.push_back(c);
    }
  std::sort(conditions.begin(), conditions.end());
  conditions.erase(std::unique(conditions.begin(), conditions.end()), conditions.end());
  v.conditions = conditions;
  v.trace.push_back(conditions.empty() ? "no conditions" : "conditions kept: " + std::to_string(conditions.size()));
  return v;
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["verdict"] = excluded ? "excluded" : "conditions";
  j["conditions"] = conditions;
  j["trace"] = trace;
  return j.dump(2);
}

std::vector<std::pair<TitsIndex, Verdict>> classified_verdicts(Kind kind, int rank, const StarAction& gamma) {
  std::vector<std::pair<TitsIndex, Verdict>> out;
  for (const auto& idx : closed_form(kind, rank, gamma).entries) out.emplace_back(idx, decide(idx));
  return out;
}

std::vector<std::pair<TitsIndex, Verdict>> enumerated_verdicts(Kind kind, int rank, const StarAction& gamma) {
  std::vector<std::pair<TitsIndex, Verdict>> out;
  for (const auto& idx : enumerate(kind, rank, gamma).entries) out.emplace_back(idx, decide(idx));
  return out;
}

}  // namespace tits
