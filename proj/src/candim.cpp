#include "tits/candim.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tits {

CandimTable CandimTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

CandimTable CandimTable::parse(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CandimTable t;
  t.source_ = j.value("source", "");
  for (const auto& [label, row] : j.at("rows").items()) {
    CandimRow r;
    r.cell = row.value("cell", "");
    r.all_primes_zero = row.value("all_primes_zero", false);
    for (const auto& v : row.at("values")) r.values.push_back({v.at("p").get<int>(), v.at("value").get<int>()});
    t.rows_[label] = std::move(r);
  }
  return t;
}

std::optional<int> CandimTable::max_candim(const std::string& label, int p) const {
  const CandimRow& r = rows_.at(label);
  if (r.all_primes_zero) return 0;
  for (const auto& v : r.values)
    if (v.p == p) return v.value;
  return std::nullopt;
}

std::vector<std::string> CandimTable::labels_of(const std::string& type) const {
  std::vector<std::string> out;
  for (const auto& [label, row] : rows_)
    if (label.rfind(type + "_", 0) == 0) out.push_back(label);
  return out;
}

std::string CandimTable::to_json() const {
  nlohmann::json j;
  j["source"] = source_;
  j["rows"] = nlohmann::json::object();
  for (const auto& [label, r] : rows_) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : r.values) vals.push_back({{"p", v.p}, {"value", v.value}});
    j["rows"][label] = {{"cell", r.cell}, {"all_primes_zero", r.all_primes_zero}, {"values", vals}};
  }
  return j.dump(2);
}

DistinguishReport verify_distinguishing(const CandimTable& table, const std::string& type) {
  DistinguishReport rep;
  const auto labels = table.labels_of(type);
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      std::set<int> primes;
      for (const auto* l : {&labels[a], &labels[b]})
        for (const auto& v : table.rows().at(*l).values) primes.insert(v.p);
      int both = 0, one = 0;
      for (int p : primes) {
        const auto x = table.max_candim(labels[a], p);
        const auto y = table.max_candim(labels[b], p);
        if (x && y && *x != *y && !both) both = p;
        if (x.has_value() != y.has_value() && (x.value_or(0) + y.value_or(0)) > 0 && !one) one = p;
      }
      if (both || one)
        rep.witnesses.push_back({labels[a], labels[b], both ? both : one});
      else {
        rep.ok = false;
        rep.failures.emplace_back(labels[a], labels[b]);
      }
    }
  return rep;
}

std::string data_dir() {
  if (const char* env = std::getenv("TITS_DATA_DIR"); env && *env) return env;
  return TITS_DEFAULT_DATA_DIR;
}

}  // namespace tits
