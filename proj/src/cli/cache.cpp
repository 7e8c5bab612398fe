#include "cisupport/cli/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace cisupport {

namespace {

constexpr const char* kHeader = "cisupport-cache v1";

void write_poly(std::ostream& out, const PolyRing& Q, const Poly& f) {
  out << f.size();
  for (const auto& t : f.terms()) {
    out << ' ' << t.c;
    for (int v = 0; v < Q.nvars(); ++v) out << (v ? '.' : ' ') << t.m.exp[v];
  }
  out << '\n';
}

Poly read_poly(std::istream& in, const PolyRing& Q) {
  std::size_t n = 0;
  if (!(in >> n)) throw std::runtime_error("truncated polynomial");
  std::vector<Term> terms;
  std::vector<int> e(static_cast<std::size_t>(Q.nvars()));
  for (std::size_t k = 0; k < n; ++k) {
    Coef c = 0;
    if (!(in >> c) || c == 0 || c >= Q.field().size()) throw std::runtime_error("bad coefficient");
    for (int v = 0; v < Q.nvars(); ++v) {
      if (v) {
        char dot = 0;
        if (!(in >> dot) || dot != '.') throw std::runtime_error("bad exponent separator");
      }
      if (!(in >> e[v]) || e[v] < 0) throw std::runtime_error("bad exponent");
    }
    terms.push_back(Term{c, Q.monomial(e)});
  }
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (grevlex_cmp(terms[k - 1].m, terms[k].m) <= 0) throw std::runtime_error("terms out of order");
  return Poly(std::move(terms));
}

void write_ints(std::ostream& out, const std::vector<int>& v) {
  out << v.size();
  for (int x : v) out << ' ' << x;
  out << '\n';
}

std::vector<int> read_ints(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n) || n > (1u << 20)) throw std::runtime_error("bad count");
  std::vector<int> v(n);
  for (auto& x : v)
    if (!(in >> x)) throw std::runtime_error("truncated list");
  return v;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string serialize_resolution(const FreeResolution& F) {
  const PolyRing& Q = F.ring->poly();
  std::ostringstream out;
  out << "length " << F.length << "\nminimal " << F.minimal << "\nfinite " << F.finite << "\nf0 ";
  write_ints(out, F.f0_degrees);
  out << "maps " << F.d.size() << '\n';
  for (const auto& m : F.d) {
    write_ints(out, m.row_degrees());
    write_ints(out, m.col_degrees());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) write_poly(out, Q, m.at(i, j));
  }
  out << "end\n";
  return out.str();
}

FreeResolution deserialize_resolution(const std::string& payload, const QuotientRingPtr& ring) {
  const PolyRing& Q = ring->poly();
  std::istringstream in(payload);
  FreeResolution F;
  F.ring = ring;
  std::string tag;
  auto expect = [&](const char* t) {
    if (!(in >> tag) || tag != t) throw std::runtime_error(std::string("expected '") + t + "'");
  };
  expect("length");
  in >> F.length;
  expect("minimal");
  in >> F.minimal;
  expect("finite");
  in >> F.finite;
  expect("f0");
  F.f0_degrees = read_ints(in);
  expect("maps");
  std::size_t n = 0;
  if (!(in >> n) || n > 100000) throw std::runtime_error("bad map count");
  for (std::size_t k = 0; k < n; ++k) {
    auto rd = read_ints(in);
    auto cd = read_ints(in);
    PolyMatrix m(rd, cd);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = read_poly(in, Q);
    F.d.push_back(std::move(m));
  }
  expect("end");
  if (!in) throw std::runtime_error("truncated payload");
  return F;
}

FileCache::FileCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path FileCache::path_for(const std::string& key) const { return dir_ / (sha256_hex(key) + ".res"); }

std::optional<FreeResolution> FileCache::load(const std::string& key, const QuotientRingPtr& ring) {
  if (!ring->poly().field().is_prime_field()) return std::nullopt;
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    auto nl1 = text.find('\n');
    auto nl2 = nl1 == std::string::npos ? nl1 : text.find('\n', nl1 + 1);
    if (nl2 == std::string::npos || text.substr(0, nl1) != kHeader) throw std::runtime_error("bad header");
    const std::string hash = text.substr(nl1 + 1, nl2 - nl1 - 1);
    const std::string payload = text.substr(nl2 + 1);
    if (sha256_hex(payload) != hash) throw std::runtime_error("hash mismatch");
    auto nl3 = payload.find('\n');
    if (nl3 == std::string::npos || payload.substr(0, nl3) != "key " + key) throw std::runtime_error("key mismatch");
    FreeResolution F = deserialize_resolution(payload.substr(nl3 + 1), ring);
    ++hits_;
    return F;
  } catch (const std::exception& e) {
    ++corrupt_;
    ++misses_;
    std::cerr << "warning: discarding corrupt cache entry " << path.filename().string() << " (" << e.what() << ")\n";
    return std::nullopt;
  }
}

void FileCache::save(const std::string& key, const FreeResolution& F) {
  if (!F.ring->poly().field().is_prime_field()) return;
  const std::string payload = "key " + key + "\n" + serialize_resolution(F);
  const std::string text = std::string(kHeader) + "\n" + sha256_hex(payload) + "\n" + payload;
  const auto path = path_for(key);
  std::ostringstream tmpname;
  tmpname << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << ++counter_;
  const auto tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace cisupport
