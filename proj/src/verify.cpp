#include "tits/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tits/brauer.hpp"
#include "tits/candim.hpp"
#include "tits/intlinalg.hpp"

namespace tits {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  SuiteResult& r;
  Clock::time_point start = Clock::now();
  ~Timer() { r.seconds = std::chrono::duration<double>(Clock::now() - start).count(); }
};

void fail(SuiteResult& r, const std::string& msg) {
  r.passed = false;
  r.details.insert(r.details.begin() + static_cast<long>(std::count_if(r.details.begin(), r.details.end(),
                                                                       [](const std::string& s) { return s.rfind("FAIL", 0) == 0; })),
                   "FAIL " + msg);
}

void note(SuiteResult& r, const std::string& msg) { r.details.push_back(msg); }

std::vector<CartanType> all_types(int max_rank) {
  std::vector<CartanType> out;
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D, Kind::E, Kind::F, Kind::G})
    for (int n = 1; n <= max_rank; ++n)
      if (is_valid_type(k, n)) out.push_back({k, n});
  return out;
}

std::vector<StarAction> gammas(const CartanType& t) {
  return subgroups_up_to_conjugacy(automorphisms(build(t.kind, t.rank)));
}

std::string prefix(const CartanType& t, const StarAction& g) {
  return std::to_string(g.order()) + t.name();
}

Weight omega_sum(int rank, std::initializer_list<std::pair<int, int>> terms) {
  Weight w{IntVec(static_cast<std::size_t>(rank), 0)};
  for (auto [k, c] : terms) w.coords[static_cast<std::size_t>(k - 1)] += c;
  return w;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return nlohmann::json::parse(in);
}

const Verdict* find_verdict(const std::vector<std::pair<TitsIndex, Verdict>>& rows, const VertexSet& circled) {
  for (const auto& [idx, v] : rows)
    if (idx.circled == circled) return &v;
  return nullptr;
}

bool contains(const std::vector<std::string>& xs, const std::string& s) {
  return std::find(xs.begin(), xs.end(), s) != xs.end();
}

bool trace_mentions(const Verdict& v, const std::string& phrase) {
  return std::any_of(v.trace.begin(), v.trace.end(), [&](const std::string& l) { return l.find(phrase) != std::string::npos; });
}

}  // namespace

SuiteResult suite_catalog_equivalence() {
  SuiteResult r;
  r.name = "enumerate matches closed form";
  Timer timer{r};
  int cases = 0;
  for (const auto& t : all_types(12))
    for (const auto& g : gammas(t)) {
      ++cases;
      const auto a = enumerate(t.kind, t.rank, g).circled_sets();
      const auto b = closed_form(t.kind, t.rank, g).circled_sets();
      const std::set<VertexSet> sa(a.begin(), a.end()), sb(b.begin(), b.end());
      for (const auto& s : sa)
        if (!sb.count(s)) fail(r, prefix(t, g) + " " + format_set(s) + " enumerated but not in closed form");
      for (const auto& s : sb)
        if (!sa.count(s)) fail(r, prefix(t, g) + " " + format_set(s) + " in closed form but not enumerated");
    }
  note(r, std::to_string(cases) + " (type, Gamma) pairs compared");
  return r;
}

SuiteResult suite_cartan_identities() {
  SuiteResult r;
  r.name = "simple roots in the fundamental weight basis";
  Timer timer{r};
  auto check = [&](Kind k, int n, int i, const Weight& want) {
    const Weight got = alpha_in_omega(k, n, i);
    if (got != want) fail(r, CartanType{k, n}.name() + " alpha_" + std::to_string(i));
  };
  for (int n = 3; n <= 12; ++n)
    for (int i = 2; i < n; ++i) check(Kind::A, n, i, omega_sum(n, {{i, 2}, {i - 1, -1}, {i + 1, -1}}));
  for (int n = 3; n <= 12; ++n) {
    check(Kind::B, n, n - 1, omega_sum(n, {{n - 1, 2}, {n - 2, -1}, {n, -2}}));
    check(Kind::B, n, n, omega_sum(n, {{n, 2}, {n - 1, -1}}));
    check(Kind::C, n, n, omega_sum(n, {{n, 2}, {n - 1, -2}}));
    check(Kind::C, n, n - 1, omega_sum(n, {{n - 1, 2}, {n - 2, -1}, {n, -1}}));
  }
  for (int n = 5; n <= 12; ++n) {
    check(Kind::D, n, n, omega_sum(n, {{n, 2}, {n - 2, -1}}));
    check(Kind::D, n, n - 1, omega_sum(n, {{n - 1, 2}, {n - 2, -1}}));
    check(Kind::D, n, n - 2, omega_sum(n, {{n - 2, 2}, {n - 3, -1}, {n - 1, -1}, {n, -1}}));
  }
  check(Kind::D, 4, 2, omega_sum(4, {{2, 2}, {1, -1}, {3, -1}, {4, -1}}));
  check(Kind::E, 6, 2, omega_sum(6, {{2, 2}, {4, -1}}));
  check(Kind::E, 6, 4, omega_sum(6, {{4, 2}, {2, -1}, {3, -1}, {5, -1}}));
  check(Kind::E, 7, 3, omega_sum(7, {{3, 2}, {1, -1}, {4, -1}}));
  check(Kind::E, 7, 7, omega_sum(7, {{7, 2}, {6, -1}}));
  check(Kind::E, 8, 8, omega_sum(8, {{8, 2}, {7, -1}}));
  check(Kind::E, 8, 1, omega_sum(8, {{1, 2}, {3, -1}}));
  check(Kind::F, 4, 1, omega_sum(4, {{1, 2}, {2, -1}}));
  check(Kind::F, 4, 2, omega_sum(4, {{2, 2}, {1, -1}, {3, -2}}));
  check(Kind::F, 4, 3, omega_sum(4, {{3, 2}, {2, -1}, {4, -1}}));
  check(Kind::F, 4, 4, omega_sum(4, {{4, 2}, {3, -1}}));
  check(Kind::G, 2, 1, omega_sum(2, {{1, 2}, {2, -1}}));
  check(Kind::G, 2, 2, omega_sum(2, {{2, 2}, {1, -3}}));
  return r;
}

SuiteResult suite_exclusions() {
  SuiteResult r;
  r.name = "exceptional exclusions";
  Timer timer{r};
  struct Expected {
    CartanType type;
    std::size_t gamma;
    VertexSet circled;
    std::string phrase;
  };
  const std::vector<Expected> expected = {
      {{Kind::E, 6}, 1, {2}, "Hence exp A=3"},
      {{Kind::E, 7}, 1, {1, 3}, "Hence exp A=2"},
      {{Kind::F, 4}, 1, {1}, "in contradiction with the symplectic criterion"},
      {{Kind::F, 4}, 1, {1, 4}, "in contradiction with the symplectic criterion"},
      {{Kind::G, 2}, 1, {2}, "hence [A]=0, a contradiction"},
  };
  std::set<std::string> want;
  for (const auto& e : expected) want.insert(std::to_string(e.gamma) + e.type.name() + format_set(e.circled));

  std::set<std::string> got;
  std::map<std::string, std::vector<std::pair<TitsIndex, Verdict>>> cache;
  const std::vector<std::pair<CartanType, std::size_t>> ambients = {
      {{Kind::E, 6}, 1}, {{Kind::E, 6}, 2}, {{Kind::E, 7}, 1}, {{Kind::E, 8}, 1},
      {{Kind::F, 4}, 1}, {{Kind::G, 2}, 1}, {{Kind::D, 4}, 3}, {{Kind::D, 4}, 6}};
  for (const auto& [t, order] : ambients) {
    const auto rows = classified_verdicts(t.kind, t.rank, standard_gamma(t.kind, t.rank, order));
    for (const auto& [idx, v] : rows)
      if (v.excluded) got.insert(std::to_string(order) + t.name() + format_set(idx.circled));
    cache[std::to_string(order) + t.name()] = rows;
  }
  for (const auto& s : want)
    if (!got.count(s)) fail(r, s + " should be excluded");
  for (const auto& s : got)
    if (!want.count(s)) fail(r, s + " excluded unexpectedly");
  for (const auto& e : expected) {
    const auto* v = find_verdict(cache[std::to_string(e.gamma) + e.type.name()], e.circled);
    if (v && v->excluded && !trace_mentions(*v, e.phrase))
      fail(r, v->label + " trace lacks \"" + e.phrase + "\"");
  }

  // admissible indices outside the closed-form list
  const auto extra = enumerated_verdicts(Kind::F, 4, standard_gamma(Kind::F, 4, 1));
  if (const auto* v = find_verdict(extra, {1, 2}))
    note(r, "enumeration-only F4 {1, 2}: " + std::string(v->excluded ? "excluded (" + v->rule + ")" : "survives"));
  return r;
}

SuiteResult suite_goldens(const std::string& golden_dir) {
  SuiteResult r;
  r.name = "golden conditions";
  Timer timer{r};
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(golden_dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(r, "no golden files in " + golden_dir);
  int rows_checked = 0;
  for (const auto& path : files) {
    const auto g = read_json(path.string());
    const std::string file = path.filename().string();
    std::map<std::string, std::pair<VertexSet, std::vector<std::string>>> produced;
    for (const auto& inst : g.at("instances")) {
      const Kind k = parse_kind(inst.at("type").get<std::string>());
      const int n = inst.at("rank").get<int>();
      const auto order = inst.at("gamma").get<std::size_t>();
      for (const auto& [idx, v] : classified_verdicts(k, n, standard_gamma(k, n, order))) {
        if (v.excluded) continue;
        if (produced.count(v.label)) fail(r, file + ": duplicate label " + v.label);
        produced[v.label] = {presentation_circled(idx), v.conditions};
      }
    }
    const auto& rows = g.at("rows");
    for (const auto& [label, row] : rows.items()) {
      ++rows_checked;
      auto it = produced.find(label);
      if (it == produced.end()) {
        fail(r, file + ": " + label + " missing");
        continue;
      }
      const auto circled = row.at("circled").get<VertexSet>();
      const auto conditions = row.at("conditions").get<std::vector<std::string>>();
      if (it->second.first != circled)
        fail(r, file + ": " + label + " circled " + format_set(it->second.first) + " != " + format_set(circled));
      for (const auto& c : conditions)
        if (!contains(it->second.second, c)) fail(r, file + ": " + label + " lacks \"" + c + "\"");
      for (const auto& c : it->second.second)
        if (!contains(conditions, c)) fail(r, file + ": " + label + " has extra \"" + c + "\"");
    }
    for (const auto& [label, unused] : produced)
      if (!rows.contains(label)) fail(r, file + ": unexpected survivor " + label);
  }
  note(r, std::to_string(rows_checked) + " rows in " + std::to_string(files.size()) + " files");
  return r;
}

SuiteResult suite_labels() {
  SuiteResult r;
  r.name = "index labels";
  Timer timer{r};
  const std::vector<std::tuple<CartanType, std::size_t, std::vector<std::string>>> expected = {
      {{Kind::E, 6}, 1, {"1E6_0_78", "1E6_2_16", "1E6_2_28", "1E6_6_0"}},
      {{Kind::E, 6}, 2, {"2E6_0_78", "2E6_1_29", "2E6_1_35", "2E6_2_16a", "2E6_2_16b", "2E6_4_2"}},
      {{Kind::E, 7}, 1, {"E7_0_133", "E7_1_48", "E7_1_66", "E7_1_78", "E7_2_31", "E7_3_28", "E7_4_9", "E7_7_0"}},
      {{Kind::E, 8}, 1, {"E8_0_248", "E8_1_133", "E8_1_91", "E8_2_66", "E8_2_78", "E8_4_28", "E8_8_0"}},
      {{Kind::F, 4}, 1, {"F4_0_52", "F4_1_21", "F4_4_0"}},
      {{Kind::G, 2}, 1, {"G2_0_14", "G2_2_0"}},
      {{Kind::D, 4}, 3, {"3D4_0_28", "3D4_1_9", "3D4_2_2"}},
  };
  for (const auto& [t, order, labels] : expected) {
    const auto g = standard_gamma(t.kind, t.rank, order);
    std::set<std::string> got;
    for (const auto& [idx, v] : classified_verdicts(t.kind, t.rank, g)) {
      if (v.excluded) continue;
      got.insert(v.label);
      if (idx.label != v.label || tits_label(idx) != v.label) fail(r, v.label + " label is not stable");
      const auto rel = relative_system(idx);
      VertexSet all;
      for (int k = 1; k <= t.rank; ++k) all.push_back(k);
      const auto anisotropic = subsystem_root_count(t.kind, t.rank, set_difference(all, idx.circled));
      const std::string tail = v.label.substr(v.label.rfind('_') + 1);
      const auto dim = anisotropic + static_cast<std::size_t>(t.rank - rel.relative_rank);
      if (std::to_string(dim) != tail.substr(0, tail.find_first_not_of("0123456789")))
        fail(r, v.label + " dimension " + std::to_string(dim));
    }
    const std::set<std::string> want(labels.begin(), labels.end());
    if (got != want)
      for (const auto& l : want)
        if (!got.count(l)) fail(r, l + " not produced");
    for (const auto& l : got)
      if (!want.count(l)) fail(r, "unexpected label " + l);
  }
  return r;
}

SuiteResult suite_classical_refinement() {
  SuiteResult r;
  r.name = "classical refinements";
  Timer timer{r};
  auto verdict = [&](Kind k, int n, std::size_t order, const VertexSet& circled) -> std::optional<Verdict> {
    const auto rows = classified_verdicts(k, n, standard_gamma(k, n, order));
    for (const auto& [idx, v] : rows)
      if (presentation_circled(idx) == circled) return v;
    fail(r, std::to_string(order) + CartanType{k, n}.name() + " " + format_set(circled) + " not in the catalog");
    return std::nullopt;
  };
  auto expect = [&](const std::string& what, bool ok) {
    if (!ok) fail(r, what);
  };
  if (auto v = verdict(Kind::B, 5, 1, {2, 4})) expect("B5 d=2 excluded", v->excluded);
  if (auto v = verdict(Kind::C, 6, 1, {3, 6})) expect("C6 d=3 excluded", v->excluded);
  if (auto v = verdict(Kind::C, 6, 1, {4})) expect("C6 d=4 kept", !v->excluded);
  if (auto v = verdict(Kind::D, 7, 1, {2, 4}))
    expect("1D7 {2, 4} gives 2[A]=[E]", !v->excluded && contains(v->conditions, "2[A]=[E]"));
  if (auto v = verdict(Kind::D, 6, 1, {2, 4}))
    expect("1D6 {2, 4} gives [A1]+[A2]=[E]", !v->excluded && contains(v->conditions, "[A1]+[A2]=[E]"));

  // d = 1: the raw orbit relation at the last circled vertex is -2[A] in the
  // cocenter of A1 x D3, i.e. 2[A] with [E] = 0.
  const auto idx = make_index(Kind::D, 7, standard_gamma(Kind::D, 7, 1), {1, 2, 3, 4});
  const auto shape = kernel_shape(idx);
  bool found = false;
  for (const auto& e : orbit_relations(shape))
    if (e.source == "orbit {4}") {
      found = true;
      const std::string raw = render_expression(shape, e);
      note(r, "1D7 {1, 2, 3, 4} orbit {4}: " + raw);
      expect("orbit {4} relation of 1D7 {1, 2, 3, 4} is 2[A]=0", e.terms.size() == 1 && raw == "2[A]=0");
    }
  expect("orbit {4} relation of 1D7 {1, 2, 3, 4} exists", found);
  return r;
}

SuiteResult suite_candim(const std::string& dir) {
  SuiteResult r;
  r.name = "canonical dimension table";
  Timer timer{r};
  const auto table = CandimTable::load(dir + "/candim.json");
  if (table.rows().size() != 24) fail(r, std::to_string(table.rows().size()) + " rows instead of 24");
  const auto again = CandimTable::parse(table.to_json());
  if (again.to_json() != table.to_json()) fail(r, "JSON round trip differs");

  const std::vector<std::tuple<std::string, int, std::optional<int>>> spot = {
      {"E7_1_78", 2, 3}, {"E7_1_66", 2, 9}, {"G2_0_14", 3, std::nullopt}, {"E8_8_0", 5, 0}};
  for (const auto& [label, p, want] : spot) {
    std::optional<int> got;
    try {
      got = table.max_candim(label, p);
    } catch (const std::out_of_range&) {
      fail(r, label + " missing");
      continue;
    }
    if (got != want) fail(r, label + " at p=" + std::to_string(p));
  }
  for (const std::string type : {"1E6", "E7", "E8", "F4", "G2"}) {
    const auto rep = verify_distinguishing(table, type);
    for (const auto& [a, b] : rep.failures) fail(r, type + ": " + a + " and " + b + " not distinguished");
    note(r, type + ": " + std::to_string(rep.witnesses.size()) + " pairs distinguished");
  }
  return r;
}

SuiteResult suite_properties(std::uint64_t seed, int random_triples) {
  SuiteResult r;
  r.name = "structural properties";
  Timer timer{r};
  for (const auto& t : all_types(12)) {
    const auto& rs = root_system(t.kind, t.rank);
    // w0 sends the highest root to its negative and has length |Phi+|
    const auto word = longest_element_word(t.kind, t.rank);
    if (word.size() != rs.positive_roots.size()) fail(r, t.name() + " longest word length");
    auto w0_root = [&](IntVec x) {
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect_root(rs.cartan, x, *it);
      return x;
    };
    auto w0_weight = [&](IntVec x) {
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect_weight(rs.cartan, x, *it);
      return x;
    };
    for (const auto& a : rs.positive_roots) {
      const IntVec b = w0_root(a);
      if (std::any_of(b.begin(), b.end(), [](std::int64_t c) { return c > 0; })) fail(r, t.name() + " w0 keeps a positive root");
    }
    IntVec theta = w0_root(rs.highest_root);
    for (auto& c : theta) c = -c;
    if (theta != rs.highest_root) fail(r, t.name() + " w0(theta) != -theta");
    IntVec generic(static_cast<std::size_t>(t.rank));
    for (int k = 0; k < t.rank; ++k) generic[static_cast<std::size_t>(k)] = 2 * k + 1;
    if (w0_weight(w0_weight(generic)) != generic) fail(r, t.name() + " w0 is not an involution");

    const auto cg = cocenter(t.kind, t.rank);
    if (static_cast<std::size_t>(std::llabs(determinant(rs.cartan))) != cg.order())
      fail(r, t.name() + " cocenter order");

    // every nonzero class has exactly one minuscule fundamental weight
    std::map<IntVec, int> minuscule;
    std::set<IntVec> classes;
    for (int k = 1; k <= t.rank; ++k) {
      Weight w{IntVec(static_cast<std::size_t>(t.rank), 0)};
      w.coords[static_cast<std::size_t>(k - 1)] = 1;
      const IntVec x = cg.project(w);
      if (cg.is_zero(x)) continue;
      classes.insert(x);
      const Weight m = minuscule_representative(x, t.kind, t.rank);
      if (cg.project(m) != x) fail(r, t.name() + " minuscule representative of omega_" + std::to_string(k));
      if (m == w) ++minuscule[x];
    }
    for (const auto& x : classes)
      if (minuscule[x] != 1) fail(r, t.name() + " class without a unique minuscule weight");

    for (const auto& g : gammas(t))
      for (const auto& idx : closed_form(t.kind, t.rank, g).entries) {
        const auto rel = relative_system(idx);
        if (rel.relative_rank != static_cast<int>(orbits(idx.gamma, idx.circled).blocks.size()))
          fail(r, idx.label + " relative rank");
      }
  }

  std::mt19937_64 rng(seed);
  const auto types = all_types(12);
  for (int trial = 0; trial < random_triples; ++trial) {
    const auto& t = types[rng() % types.size()];
    const auto gs = gammas(t);
    const auto& g = gs[rng() % gs.size()];
    const auto aut = automorphisms(build(t.kind, t.rank));
    const auto& phi = aut[rng() % aut.size()];
    // random Gamma-invariant subset: union of random orbits
    VertexSet all;
    for (int k = 1; k <= t.rank; ++k) all.push_back(k);
    VertexSet j;
    for (const auto& o : orbits(g, all).blocks)
      if (rng() % 2) j = set_union(j, o);
    const bool a = is_admissible(t.kind, t.rank, g, j).admissible;
    const bool b = is_admissible(t.kind, t.rank, conjugate_action(g, phi), permute_set(phi, j)).admissible;
    if (a != b) fail(r, prefix(t, g) + " " + format_set(j) + " admissibility not equivariant");
  }
  note(r, std::to_string(random_triples) + " random (type, Gamma, J) triples");
  return r;
}

std::string format_result(int number, const SuiteResult& r) {
  std::ostringstream out;
  out << "criterion " << number << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << " (" << r.seconds << " s)";
  return out.str();
}

}  // namespace tits
