#include "sixj/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "sixj/regge.hpp"

namespace sixj {

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

CacheRecord CacheRecord::from_value(const LabelSextuple& labels, const ExactValue& v) {
  return {canonical_form(labels), v.sign, v.radicand.get_num().get_str(), v.radicand.get_den().get_str()};
}

ExactValue CacheRecord::to_value() const {
  ExactValue v;
  v.sign = sign;
  v.radicand = mpq_class(mpz_class(radicand_num), mpz_class(radicand_den));
  v.radicand.canonicalize();
  return v;
}

std::string CacheRecord::to_json_line() const {
  nlohmann::ordered_json j;
  j["labels"] = labels.v;
  j["sign"] = sign;
  j["radicand_num"] = radicand_num;
  j["radicand_den"] = radicand_den;
  return j.dump();
}

std::optional<CacheRecord> CacheRecord::parse(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    CacheRecord r;
    const auto labels = j.at("labels").get<std::vector<std::int64_t>>();
    if (labels.size() != 6) return std::nullopt;
    for (int i = 0; i < 6; ++i) r.labels[i] = labels[static_cast<std::size_t>(i)];
    r.sign = j.at("sign").get<int>();
    r.radicand_num = j.at("radicand_num").get<std::string>();
    r.radicand_den = j.at("radicand_den").get<std::string>();
    mpz_class check;
    if (check.set_str(r.radicand_num, 10) != 0 || check.set_str(r.radicand_den, 10) != 0) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SixjCache::SixjCache(std::filesystem::path path) : path_(std::move(path)) {}

void SixjCache::load() {
  std::lock_guard lock(mutex_);
  records_.clear();
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (auto r = CacheRecord::parse(line)) records_.insert_or_assign(r->labels, *r);
  }
}

std::optional<ExactValue> SixjCache::lookup(const LabelSextuple& labels) const {
  std::lock_guard lock(mutex_);
  const auto key = canonical_form(labels);
  if (auto it = records_.find(key); it != records_.end()) return it->second.to_value();
  if (auto it = pending_.find(key); it != pending_.end()) return it->second.to_value();
  return std::nullopt;
}

ExactValue SixjCache::get_or_compute(const LabelSextuple& labels) {
  const auto key = canonical_form(labels);
  {
    std::lock_guard lock(mutex_);
    if (auto it = records_.find(key); it != records_.end()) {
      hit_keys_[key] = true;
      return it->second.to_value();
    }
  }
  const auto value = sixj_exact(labels);
  std::lock_guard lock(mutex_);
  pending_.insert_or_assign(key, CacheRecord::from_value(labels, value));
  return value;
}

bool SixjCache::flush() {
  std::lock_guard lock(mutex_);
  if (pending_.empty()) return true;
  // finish a torn last line so the first new record starts cleanly
  bool needs_newline = false;
  if (std::ifstream tail(path_, std::ios::binary | std::ios::ate); tail && tail.tellg() > 0) {
    tail.seekg(-1, std::ios::end);
    needs_newline = tail.get() != '\n';
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) return false;
  if (needs_newline) out << '\n';
  for (const auto& [key, rec] : pending_) out << rec.to_json_line() << '\n';
  out.flush();
  if (!out) return false;
  records_.merge(pending_);
  pending_.clear();
  return true;
}

std::size_t SixjCache::hits() const {
  std::lock_guard lock(mutex_);
  return hit_keys_.size();
}

std::vector<LabelSextuple> SixjCache::spot_check(double fraction, unsigned seed) const {
  std::vector<CacheRecord> sample;
  {
    std::lock_guard lock(mutex_);
    std::mt19937 rng(seed);
    std::bernoulli_distribution pick(fraction);
    for (const auto& [key, used] : hit_keys_)
      if (pick(rng)) sample.push_back(records_.at(key));
    if (sample.empty() && !hit_keys_.empty()) sample.push_back(records_.at(hit_keys_.begin()->first));
  }
  std::vector<LabelSextuple> bad;
  for (const auto& rec : sample)
    if (!sixj_exact(rec.labels).same_value(rec.to_value())) bad.push_back(rec.labels);
  return bad;
}

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

std::string json_opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string("null"); }

std::optional<double> parse_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("malformed number '" + s + "'");
  return v;
}

}  // namespace

void write_series_csv(std::ostream& out, const std::vector<AsymptoticSample>& rows) {
  out << kSeriesCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.k << ',' << format_double(r.exact) << ',' << opt(r.pr_theorem) << ',' << opt(r.pr_original) << ','
        << opt(r.abs_err_theorem) << ',' << opt(r.abs_err_original) << '\n';
}

void write_series_jsonl(std::ostream& out, const std::vector<AsymptoticSample>& rows) {
  for (const auto& r : rows)
    out << "{\"k\":" << r.k << ",\"exact\":" << format_double(r.exact) << ",\"pr_theorem\":" << json_opt(r.pr_theorem)
        << ",\"pr_original\":" << json_opt(r.pr_original) << ",\"abs_err_theorem\":" << json_opt(r.abs_err_theorem)
        << ",\"abs_err_original\":" << json_opt(r.abs_err_original) << "}\n";
}

std::vector<AsymptoticSample> read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSeriesCsvHeader) throw std::runtime_error("missing series CSV header");
  std::vector<AsymptoticSample> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 6) throw std::runtime_error("series CSV row must have 6 fields: " + line);
    AsymptoticSample s;
    s.k = std::stoll(fields[0]);
    const auto exact = parse_field(fields[1]);
    if (!exact) throw std::runtime_error("series CSV row without exact value");
    s.exact = *exact;
    s.pr_theorem = parse_field(fields[2]);
    s.pr_original = parse_field(fields[3]);
    s.abs_err_theorem = parse_field(fields[4]);
    s.abs_err_original = parse_field(fields[5]);
    rows.push_back(s);
  }
  return rows;
}

std::string plot_script(const std::string& csv_path, const LabelSextuple& labels, double volume) {
  return fmt::format(
      R"PY(#!/usr/bin/env python3
# Exact 6j values for labels k*({labels}) against the envelope
# +-sqrt(2/(3*pi*V*k^3)), V = {volume}.
import csv
import math

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

CSV_PATH = {path}
VOLUME = {volume}

ks, exact, theorem = [], [], []
with open(CSV_PATH, newline="") as fh:
    for row in csv.DictReader(fh):
        ks.append(int(row["k"]))
        exact.append(float(row["exact"]))
        theorem.append(float(row["pr_theorem"]) if row["pr_theorem"] else math.nan)

envelope = [math.sqrt(2.0 / (3.0 * math.pi * VOLUME * k ** 3)) for k in ks]

fig, ax = plt.subplots(figsize=(8, 4.5))
ax.plot(ks, envelope, color="0.6", lw=1, label="envelope")
ax.plot(ks, [-e for e in envelope], color="0.6", lw=1)
ax.plot(ks, theorem, color="tab:orange", lw=1, label="asymptotic formula")
ax.plot(ks, exact, "o", ms=3, color="tab:blue", label="exact")
ax.set_xlabel("k")
ax.set_ylabel("6j symbol")
ax.set_title("labels k*({labels})")
ax.legend()
fig.tight_layout()
fig.savefig(CSV_PATH.rsplit(".", 1)[0] + ".png", dpi=150)
)PY",
      fmt::arg("labels", to_string(labels)), fmt::arg("volume", format_double(volume)),
      fmt::arg("path", nlohmann::json(csv_path).dump()));
}

}  // namespace sixj
