#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tits {

struct CandimValue {
  int p = 0;
  int value = 0;
};

struct CandimRow {
  std::string cell;  // table cell as printed
  bool all_primes_zero = false;
  std::vector<CandimValue> values;
};

/// Maximal canonical p-dimensions of the variety of maximal parabolics, keyed
/// by index label. Unlisted primes are reported as missing, not as zero.
class CandimTable {
 public:
  static CandimTable load(const std::string& path);
  static CandimTable parse(const std::string& json_text);

  const std::map<std::string, CandimRow>& rows() const { return rows_; }

  /// Throws std::out_of_range for an unknown label.
  std::optional<int> max_candim(const std::string& label, int p) const;

  /// Labels belonging to one type prefix ("1E6", "E7", "E8", "F4", "G2").
  std::vector<std::string> labels_of(const std::string& type) const;

  std::string to_json() const;

 private:
  std::map<std::string, CandimRow> rows_;
  std::string source_;
};

struct DistinguishWitness {
  std::string first, second;
  int p = 0;
};

struct DistinguishReport {
  bool ok = true;
  std::vector<DistinguishWitness> witnesses;
  std::vector<std::pair<std::string, std::string>> failures;
};

/// For every pair of labels of the type, a prime at which the maxima differ.
/// Primes listed for both rows are tried first; otherwise a prime listed
/// (nonzero) for exactly one row is accepted.
DistinguishReport verify_distinguishing(const CandimTable& table, const std::string& type);

/// TITS_DATA_DIR if set, else the data directory of the source tree.
std::string data_dir();

}  // namespace tits
