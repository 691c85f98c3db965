#include "useq/cache_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace useq {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// `num/den` in lowest terms with den >= 1, or a bare integer.
Rational parse_canonical_rational(const std::string& text,
                                  const std::string& where) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den < 1)
      throw CacheError(where + ": denominator must be positive in \"" + text +
                       "\"");
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1)
      throw CacheError(where + ": \"" + text + "\" is not in lowest terms");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw CacheError(where + ": bad rational \"" + text + "\"");
  }
}

using IntTable = std::map<long, std::pair<Integer, std::size_t>>;
using RatTable = std::map<long, std::pair<Rational, std::size_t>>;

template <typename Table>
void require_dense(const Table& table, const std::string& path,
                   const char* tag, long step) {
  long expected = 0;
  for (const auto& [index, unused] : table) {
    (void)unused;
    if (index != expected)
      throw CacheError(path + ": " + tag + ": missing index " +
                       std::to_string(expected));
    expected += step;
  }
}

}  // namespace

void save_cache(SequenceCache& cache, const std::string& path, long max_u,
                long max_euler, long max_bernoulli) {
  std::vector<Integer> u = cache.u_snapshot();
  std::vector<Integer> e = cache.euler_snapshot();
  std::vector<Rational> b = cache.bernoulli_snapshot();
  const auto trim = [](auto& values, long bound, long step) {
    if (bound < 0) return;
    const auto keep = static_cast<std::size_t>(bound / step + 1);
    if (values.size() > keep) values.resize(keep);
  };
  trim(u, max_u, 2);
  trim(e, max_euler, 2);
  trim(b, max_bernoulli, 1);

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CacheError("cannot open \"" + path + "\" for writing");
  for (std::size_t j = 0; j < u.size(); ++j)
    out << "U " << 2 * j << ' ' << u[j] << '\n';
  for (std::size_t j = 0; j < e.size(); ++j)
    out << "E " << 2 * j << ' ' << e[j] << '\n';
  for (std::size_t j = 0; j < b.size(); ++j)
    out << "B " << j << ' ' << b[j].get_num() << '/' << b[j].get_den() << '\n';
  out.flush();
  if (!out) throw CacheError("write to \"" + path + "\" failed");
}

void load_cache(SequenceCache& cache, const std::string& path,
                double sample_fraction) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw CacheError("read from \"" + path + "\" failed");
  const std::string text = buffer.str();

  const auto where = [&path](std::size_t line_no) {
    return path + ":" + std::to_string(line_no);
  };

  IntTable u_table, e_table;
  RatTable b_table;
  std::set<std::pair<char, long>> seen;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag, index_text, value_text;
    if (!(fields >> tag)) continue;  // blank line
    if (!(fields >> index_text >> value_text))
      throw CacheError(where(line_no) + ": expected \"<tag> <index> <value>\"");
    std::string extra;
    if (fields >> extra)
      throw CacheError(where(line_no) + ": trailing content \"" + extra +
                       "\"");
    if (tag != "U" && tag != "E" && tag != "B")
      throw CacheError(where(line_no) + ": unknown tag \"" + tag + "\"");

    long index = 0;
    try {
      const Integer parsed = parse_integer(index_text);
      if (parsed < 0 || !fits_long(parsed))
        throw std::invalid_argument("out of range");
      index = to_long(parsed);
    } catch (const std::invalid_argument&) {
      throw CacheError(where(line_no) + ": bad index \"" + index_text + "\"");
    }
    if (!seen.insert({tag[0], index}).second)
      throw CacheError(where(line_no) + ": duplicate " + tag + " " +
                       std::to_string(index));

    if (tag == "B") {
      b_table.emplace(index,
                      std::pair{parse_canonical_rational(
                                    value_text, where(line_no)),
                                line_no});
      continue;
    }
    Integer value;
    try {
      value = parse_integer(value_text);
    } catch (const std::invalid_argument&) {
      throw CacheError(where(line_no) + ": bad integer \"" + value_text +
                       "\"");
    }
    if (index % 2 == 1) {
      // Odd entries of both integer sequences are identically zero; accept
      // the redundant record but never store it.
      if (value != 0)
        throw CacheError(where(line_no) + ": " + tag + " " +
                         std::to_string(index) +
                         " is an odd index and must be 0, got " +
                         to_string(value));
      continue;
    }
    (tag == "U" ? u_table : e_table)
        .emplace(index, std::pair{std::move(value), line_no});
  }

  require_dense(u_table, path, "U", 2);
  require_dense(e_table, path, "E", 2);
  require_dense(b_table, path, "B", 1);

  struct Sample {
    char tag;
    long index;
  };
  std::vector<Sample> records;
  records.reserve(u_table.size() + e_table.size() + b_table.size());
  for (const auto& [index, unused] : u_table) records.push_back({'U', index});
  for (const auto& [index, unused] : e_table) records.push_back({'E', index});
  for (const auto& [index, unused] : b_table) records.push_back({'B', index});

  if (sample_fraction > 0.0 && !records.empty()) {
    auto count = static_cast<std::size_t>(
        std::ceil(sample_fraction * static_cast<double>(records.size())));
    count = std::clamp<std::size_t>(count, 1, records.size());
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    // Seeding from the bytes makes the sample a pure function of the file.
    std::mt19937_64 rng(fnv1a(text));
    std::shuffle(order.begin(), order.end(), rng);

    SequenceCache scratch;
    for (std::size_t i = 0; i < count; ++i) {
      const Sample& rec = records[order[i]];
      std::string stored, recomputed;
      std::size_t rec_line = 0;
      if (rec.tag == 'B') {
        const auto& [value, ln] = b_table.at(rec.index);
        const Rational fresh = scratch.bernoulli_number(rec.index);
        if (value == fresh) continue;
        stored = to_string(value);
        recomputed = to_string(fresh);
        rec_line = ln;
      } else {
        const auto& [value, ln] =
            (rec.tag == 'U' ? u_table : e_table).at(rec.index);
        const Integer fresh = rec.tag == 'U' ? scratch.u_number(rec.index)
                                             : scratch.euler_number(rec.index);
        if (value == fresh) continue;
        stored = to_string(value);
        recomputed = to_string(fresh);
        rec_line = ln;
      }
      throw CacheError(where(rec_line) + ": " + rec.tag + " " +
                       std::to_string(rec.index) + " = " + stored +
                       " does not match recomputed value " + recomputed);
    }
  }

  std::vector<Integer> u_values;
  u_values.reserve(u_table.size());
  for (auto& [index, entry] : u_table) u_values.push_back(std::move(entry.first));
  std::vector<Integer> e_values;
  e_values.reserve(e_table.size());
  for (auto& [index, entry] : e_table) e_values.push_back(std::move(entry.first));
  std::vector<Rational> b_values;
  b_values.reserve(b_table.size());
  for (auto& [index, entry] : b_table) b_values.push_back(std::move(entry.first));
  cache.restore_u(std::move(u_values));
  cache.restore_euler(std::move(e_values));
  cache.restore_bernoulli(std::move(b_values));
}

}  // namespace useq
