#include "wscs/weighted_string.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wscs {

WeightedString WeightedString::from_rows(const std::string& alphabet,
                                         std::vector<std::vector<double>> rows,
                                         int scale_bits) {
  if (alphabet.empty()) throw ParseError("alphabet must be non-empty");
  WeightedString w;
  w.alphabet_ = alphabet;
  w.scale_bits_ = scale_bits;
  w.symbol_index_.fill(-1);
  for (size_t ci = 0; ci < alphabet.size(); ++ci) {
    unsigned char uc = static_cast<unsigned char>(alphabet[ci]);
    if (w.symbol_index_[uc] >= 0) throw ParseError("duplicate alphabet symbol");
    w.symbol_index_[uc] = static_cast<int>(ci);
  }
  for (size_t pos = 0; pos < rows.size(); ++pos) {
    const auto& row = rows[pos];
    if (row.size() != alphabet.size())
      throw ParseError("row " + std::to_string(pos + 1) + " has wrong width");
    double sum = 0.0;
    for (double p : row) {
      if (std::isnan(p) || p < 0.0)
        throw ParseError("negative probability in row " + std::to_string(pos + 1));
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      throw ParseError("row " + std::to_string(pos + 1) + " sums to " +
                       std::to_string(sum) + ", not 1");
    std::vector<LogProb> qrow;
    qrow.reserve(row.size());
    for (double p : row) qrow.push_back(LogProb::from_probability(std::min(p, 1.0), scale_bits));
    w.rows_.push_back(std::move(qrow));
  }
  w.source_rows_ = std::move(rows);
  return w;
}

WeightedString WeightedString::from_quantized_rows(const std::string& alphabet,
                                                   std::vector<std::vector<LogProb>> rows,
                                                   std::vector<std::vector<double>> source_rows,
                                                   int scale_bits) {
  if (rows.size() != source_rows.size()) throw ParseError("row count mismatch");
  for (const auto& row : rows)
    if (row.size() != alphabet.size()) throw ParseError("quantized row has wrong width");
  WeightedString w = from_rows(alphabet, std::move(source_rows), scale_bits);
  w.rows_ = std::move(rows);
  return w;
}

WeightedString WeightedString::parse_json(const std::string& text, int scale_bits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("alphabet") || !doc.contains("rows"))
    throw ParseError("instance document needs \"alphabet\" and \"rows\"");
  std::string alphabet;
  for (const auto& sym : doc["alphabet"]) {
    if (!sym.is_string() || sym.get<std::string>().size() != 1)
      throw ParseError("alphabet symbols must be single characters");
    alphabet += sym.get<std::string>();
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["rows"]) {
    std::vector<double> r;
    for (const auto& p : row) {
      if (!p.is_number()) throw ParseError("probabilities must be numbers");
      r.push_back(p.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return from_rows(alphabet, std::move(rows), scale_bits);
}

WeightedString WeightedString::load_json_file(const std::string& path, int scale_bits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), scale_bits);
}

std::string WeightedString::to_json() const {
  nlohmann::json doc;
  auto alphabet = nlohmann::json::array();
  for (char c : alphabet_) alphabet.push_back(std::string(1, c));
  doc["alphabet"] = alphabet;
  auto rows = nlohmann::json::array();
  for (const auto& row : source_rows_) rows.push_back(row);
  doc["rows"] = rows;
  return doc.dump();
}

WeightedString WeightedString::reversed() const {
  WeightedString w = *this;
  std::reverse(w.rows_.begin(), w.rows_.end());
  std::reverse(w.source_rows_.begin(), w.source_rows_.end());
  return w;
}

LogProb match_probability(std::string_view s, const WeightedString& w) {
  if (static_cast<int>(s.size()) != w.length())
    throw std::invalid_argument("string length does not match weighted string");
  LogProb p = LogProb::one();
  for (int i = 0; i < w.length(); ++i) {
    int ci = w.symbol_index(s[static_cast<size_t>(i)]);
    if (ci < 0) throw std::invalid_argument("symbol not in alphabet");
    p *= w.prob(i, ci);
  }
  return p;
}

std::string heavy_string(const WeightedString& w) {
  std::string h;
  h.reserve(static_cast<size_t>(w.length()));
  for (int i = 0; i < w.length(); ++i) {
    int best = 0;
    for (int ci = 1; ci < w.sigma(); ++ci)
      if (w.prob(i, ci) > w.prob(i, best)) best = ci;
    h += w.symbol(best);
  }
  return h;
}

}  // namespace wscs
