#include "witten/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace witten {

namespace {

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path record_path(const std::filesystem::path& dir, SetKind kind,
                                  const std::string& phi, std::uint64_t content_hash) {
  return dir / (std::string(set_kind_name(kind)) + "-" + phi + "-" + hash_hex(content_hash) + ".txt");
}

}  // namespace

std::uint64_t matrix_content_hash(const IntMatrix& m) {
  // FNV-1a over a canonical serialization.
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) os << ";" << to_string(m(i, j));
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<InvariantSet> cache_load(const std::filesystem::path& dir, SetKind kind,
                                       const std::string& phi, std::uint64_t content_hash) {
  std::ifstream in(record_path(dir, kind, phi, content_hash));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "witten-cache 1") return std::nullopt;

  InvariantSet set;
  set.kind = kind;
  bool have_values = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string field;
    ls >> field;
    if (field == "kind") {
      std::string k;
      ls >> k;
      if (k != set_kind_name(kind)) return std::nullopt;
    } else if (field == "phi") {
      ls >> set.phi;
      if (set.phi != phi) return std::nullopt;
    } else if (field == "mhash") {
      std::string h;
      ls >> h;
      if (h != hash_hex(content_hash)) return std::nullopt;
    } else if (field == "budget_spent") {
      if (!(ls >> set.budget_spent)) return std::nullopt;
    } else if (field == "values") {
      std::string v;
      while (ls >> v) {
        try {
          set.values.push_back(rat_from_string(v));
        } catch (const std::exception&) {
          return std::nullopt;
        }
      }
      have_values = true;
    } else if (!field.empty()) {
      return std::nullopt;
    }
  }
  if (!have_values || set.phi != phi) return std::nullopt;
  if (!std::is_sorted(set.values.begin(), set.values.end())) return std::nullopt;
  return set;
}

void cache_store(const std::filesystem::path& dir, const InvariantSet& set,
                 std::uint64_t content_hash) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  std::ofstream out(record_path(dir, set.kind, set.phi, content_hash), std::ios::trunc);
  if (!out) return;
  out << "witten-cache 1\n";
  out << "kind " << set_kind_name(set.kind) << "\n";
  out << "phi " << set.phi << "\n";
  out << "mhash " << hash_hex(content_hash) << "\n";
  out << "budget_spent " << set.budget_spent << "\n";
  out << "values";
  for (const Rat& v : set.values) out << " " << to_string(v);
  out << "\n";
}

}  // namespace witten
