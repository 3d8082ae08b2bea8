#pragma once

// Result cache, series serialisation and plot-script generation used by
// the command-line front end.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sixj/asymptotics.hpp"
#include "sixj/labels.hpp"
#include "sixj/recoupling.hpp"

namespace sixj {

/// 17 significant digits, enough for an exact double round trip.
std::string format_double(double x);

struct CacheRecord {
  LabelSextuple labels;  // canonical under the 24 relabelings
  int sign = 0;
  std::string radicand_num;
  std::string radicand_den;

  static CacheRecord from_value(const LabelSextuple& labels, const ExactValue& v);
  ExactValue to_value() const;  // sign and radicand only

  std::string to_json_line() const;
  /// nullopt for a malformed (e.g. half-written) line.
  static std::optional<CacheRecord> parse(const std::string& line);
};

/// Append-only JSONL store of exact 6j values keyed by canonical sextuple.
/// A truncated final line (concurrent writer) is ignored on load.
class SixjCache {
 public:
  SixjCache() = default;
  explicit SixjCache(std::filesystem::path path);

  /// Reads every complete record; a missing file is an empty cache.
  void load();

  std::optional<ExactValue> lookup(const LabelSextuple& labels) const;

  /// Cache hit or fresh computation.  Safe to call from many threads;
  /// new results are held until flush().
  ExactValue get_or_compute(const LabelSextuple& labels);

  /// Appends pending records in canonical order.  Returns false on I/O failure.
  bool flush();

  /// Recomputes roughly `fraction` of the hit records (fixed seed, at least
  /// one if any hit) and returns the labels whose record disagrees.
  std::vector<LabelSextuple> spot_check(double fraction, unsigned seed = 20240611u) const;

  std::size_t size() const { return records_.size(); }
  std::size_t hits() const;

 private:
  std::filesystem::path path_;
  std::map<LabelSextuple, CacheRecord> records_;
  std::map<LabelSextuple, CacheRecord> pending_;
  std::map<LabelSextuple, bool> hit_keys_;
  mutable std::mutex mutex_;
};

inline constexpr const char* kSeriesCsvHeader = "k,exact,pr_theorem,pr_original,abs_err_theorem,abs_err_original";

void write_series_csv(std::ostream& out, const std::vector<AsymptoticSample>& rows);
void write_series_jsonl(std::ostream& out, const std::vector<AsymptoticSample>& rows);

/// Throws std::runtime_error on a malformed file.
std::vector<AsymptoticSample> read_series_csv(std::istream& in);

/// Self-contained matplotlib script drawing the exact column against the
/// envelope +-sqrt(2 / (3 pi V k^3)) of `labels`.
std::string plot_script(const std::string& csv_path, const LabelSextuple& labels, double volume);

}  // namespace sixj
