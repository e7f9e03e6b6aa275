// Command line front end: catalog, check and verify.
#include <cctype>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tits/brauer.hpp"
#include "tits/candim.hpp"
#include "tits/verify.hpp"

using namespace tits;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CartanType parse_type(const std::string& type, int rank) {
  if (type.empty()) throw UsageError("--type is required");
  CartanType t{parse_kind(type.substr(0, 1)), rank};
  if (type.size() > 1) {
    const std::string digits = type.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError("bad type " + type);
    t.rank = std::stoi(digits);
  }
  if (t.rank <= 0) throw UsageError("--rank is required for " + type);
  if (!is_valid_type(t.kind, t.rank)) throw UsageError(t.name() + " is not a valid type");
  return t;
}

StarAction parse_gamma(const CartanType& t, std::size_t order) {
  try {
    return standard_gamma(t.kind, t.rank, order);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

VertexSet parse_circled(const std::string& s, int rank) {
  VertexSet out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex " + item);
    }
    if (v < 1 || v > rank) throw UsageError("vertex " + item + " out of range");
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json verdict_json(const TitsIndex& idx, const Verdict& v) {
  json j = json::parse(v.to_json());
  j["circled"] = presentation_circled(idx);
  j["gamma"] = idx.gamma_order();
  j["type"] = idx.type.name();
  return j;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

void print_rows(const std::vector<std::pair<TitsIndex, Verdict>>& rows, const std::string& format, bool traces) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& [idx, v] : rows) arr.push_back(verdict_json(idx, v));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  if (format == "md") {
    for (const auto& [idx, v] : rows) {
      std::cout << "### " << v.label << "\n\n```\n"
                << render_ascii(build(idx.type.kind, idx.type.rank), presentation_circled(idx),
                                orbits(idx.gamma, presentation_circled(idx)).blocks)
                << "\n```\n\n";
      std::cout << "- circled: " << format_set(presentation_circled(idx)) << "\n";
      std::cout << "- verdict: " << (v.excluded ? "excluded" : "conditions") << "\n";
      for (const auto& c : v.conditions) std::cout << "- `" << c << "`\n";
      if (traces)
        for (const auto& l : v.trace) std::cout << "  - " << l << "\n";
      std::cout << "\n";
    }
    return;
  }
  for (const auto& [idx, v] : rows) {
    std::cout << v.label << "  " << format_set(presentation_circled(idx)) << "  "
              << (v.excluded ? "EXCLUDED" : join(v.conditions, "; ")) << "\n";
    if (traces)
      for (const auto& l : v.trace) std::cout << "    " << l << "\n";
  }
}

int run_verify(const std::string& golden, const std::string& data, const std::string& suites, const std::string& format) {
  std::set<std::string> wanted;
  std::stringstream ss(suites);
  std::string s;
  while (std::getline(ss, s, ',')) wanted.insert(s);
  static const std::set<std::string> known = {"all", "enumeration", "goldens", "labels", "candim", "exclusions"};
  for (const auto& w : wanted)
    if (!known.count(w)) throw UsageError("unknown suite " + w);
  auto on = [&](const std::string& name) { return wanted.count("all") || wanted.count(name); };

  std::vector<SuiteResult> results;
  if (on("enumeration")) results.push_back(suite_catalog_equivalence());
  if (on("exclusions")) results.push_back(suite_exclusions());
  if (on("goldens")) results.push_back(suite_goldens(golden));
  if (on("labels")) results.push_back(suite_labels());
  if (on("candim")) results.push_back(suite_candim(data));

  bool ok = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"details", r.details}, {"seconds", r.seconds}});
      ok = ok && r.passed;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n";
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
      ok = ok && r.passed;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tits indices, their Brauer conditions and canonical dimensions"};
  app.require_subcommand(1);

  std::string type, format = "text", circled, golden, data = data_dir(), suites = "all", source = "closed";
  int rank = 0;
  std::size_t gamma = 1;
  bool traces = false, all = false;

  auto add_type = [&](CLI::App* c) {
    c->add_option("--type", type, "Cartan type, e.g. E7 or E (with --rank)")->required();
    c->add_option("--rank", rank, "rank when --type is a bare letter");
    c->add_option("--gamma", gamma, "order of the star action")->capture_default_str();
  };
  const std::vector<std::string> formats = {"json", "md", "text"};

  auto* catalog = app.add_subcommand("catalog", "list the indices of one type with their verdicts");
  add_type(catalog);
  catalog->add_option("--source", source, "closed (classification list) or enumerate")
      ->check(CLI::IsMember({"closed", "enumerate"}));
  catalog->add_flag("--all", all, "include excluded indices");
  catalog->add_flag("--trace", traces, "print deduction traces");
  catalog->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* check = app.add_subcommand("check", "admissibility and verdict of one index");
  add_type(check);
  check->add_option("--circled", circled, "comma separated circled vertices")->required();
  check->add_flag("--trace", traces, "print the deduction trace");
  check->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--golden", golden, "directory of golden condition files (default: <data>/goldens)");
  verify->add_option("--data", data, "data directory (default: TITS_DATA_DIR or the source tree)");
  verify->add_option("--suite", suites, "comma separated: all, enumeration, exclusions, goldens, labels, candim");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(golden.empty() ? data + "/goldens" : golden, data, suites, format);

    const CartanType t = parse_type(type, rank);
    const StarAction g = parse_gamma(t, gamma);

    if (*catalog) {
      auto rows = source == "closed" ? classified_verdicts(t.kind, t.rank, g) : enumerated_verdicts(t.kind, t.rank, g);
      if (!all) std::erase_if(rows, [](const auto& row) { return row.second.excluded; });
      print_rows(rows, format, traces);
      return 0;
    }

    const VertexSet j = parse_circled(circled, t.rank);
    if (!is_invariant(g, j)) throw UsageError(format_set(j) + " is not invariant under the star action");
    const auto report = is_admissible(t.kind, t.rank, g, j);
    if (!report.admissible) {
      if (format == "json") {
        json out = {{"admissible", false}, {"circled", j}, {"type", t.name()}, {"gamma", gamma}};
        json w = json::array();
        for (const auto& x : report.witnesses)
          w.push_back({{"orbit", x.orbit}, {"test_vertices", x.test_vertices}, {"invariant", x.invariant}});
        out["witnesses"] = w;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << format_set(j) << " is not admissible for " << gamma << t.name() << "\n";
        for (const auto& x : report.witnesses)
          if (!x.invariant)
            std::cout << "    orbit " << format_set(x.orbit) << " is moved by the opposition of "
                      << format_set(x.test_vertices) << "\n";
      }
      return 1;
    }
    const TitsIndex idx = make_index(t.kind, t.rank, g, j);
    const Verdict v = decide(idx);
    if (format == "json") {
      json out = verdict_json(idx, v);
      out["admissible"] = true;
      std::cout << out.dump(2) << "\n";
    } else {
      print_rows({{idx, v}}, format, traces || format == "text");
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
