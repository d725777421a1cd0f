#include "eca/env_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eca/errors.hpp"

namespace eca {

namespace {
constexpr std::array<char, 8> kMagic = {'E', 'C', 'A', 'E', 'N', 'V', '1', '\0'};

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw FormatError("truncated binary header");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (std::uint32_t(b[3]) << 24);
}
}  // namespace

void write_text(std::ostream& out, const Environment& env, std::optional<int> wolfram_code) {
  out << env.n() << ' ' << env.m();
  if (wolfram_code) out << " rule=" << *wolfram_code;
  out << '\n';
  for (const auto& row : env.rows()) out << row.to_string() << '\n';
}

LoadedEnvironment read_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("missing header line");
  std::istringstream hs(header);
  Index n = 0, m = 0;
  if (!(hs >> n >> m) || n < 3 || m < 1) throw FormatError("header must read 'n m rule=<code>'");
  LoadedEnvironment result;
  std::string tok;
  while (hs >> tok) {
    if (tok.rfind("rule=", 0) == 0) result.wolfram_code = std::stoi(tok.substr(5));
  }
  std::vector<Configuration> rows;
  rows.reserve(m);
  std::string line;
  for (Index t = 0; t < m; ++t) {
    if (!std::getline(in, line)) throw FormatError("fewer rows than declared");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<Index>(line.size()) != n) throw FormatError("row length differs from n");
    rows.push_back(Configuration::from_string(line));
  }
  result.env = Environment(std::move(rows));
  return result;
}

void write_binary(std::ostream& out, const Environment& env) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, static_cast<std::uint32_t>(env.n()));
  put_u32(out, static_cast<std::uint32_t>(env.m()));
  const Index bytes = (env.n() + 7) / 8;
  std::vector<char> buf(bytes);
  for (const auto& row : env.rows()) {
    for (Index b = 0; b < bytes; ++b) buf[b] = static_cast<char>(row.words()[b / 8] >> (8 * (b % 8)));
    out.write(buf.data(), bytes);
  }
}

LoadedEnvironment read_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), 8) || magic != kMagic) throw FormatError("bad binary magic");
  const Index n = get_u32(in);
  const Index m = get_u32(in);
  if (n < 3 || m < 1) throw FormatError("bad binary dimensions");
  const Index bytes = (n + 7) / 8;
  std::vector<unsigned char> buf(bytes);
  std::vector<Configuration> rows;
  rows.reserve(m);
  for (Index t = 0; t < m; ++t) {
    if (!in.read(reinterpret_cast<char*>(buf.data()), bytes)) throw FormatError("truncated binary rows");
    Configuration c(n);
    for (Index b = 0; b < bytes; ++b) c.words()[b / 8] |= std::uint64_t(buf[b]) << (8 * (b % 8));
    c.trim();
    rows.push_back(std::move(c));
  }
  return {Environment(std::move(rows)), std::nullopt};
}

LoadedEnvironment load_environment(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::array<char, 8> magic{};
  in.read(magic.data(), 8);
  const bool binary = in.gcount() == 8 && magic == kMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_binary(in) : read_text(in);
}

void save_environment(const std::string& path, const Environment& env, std::optional<int> wolfram_code,
                      bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  if (binary)
    write_binary(out, env);
  else
    write_text(out, env, wolfram_code);
}

}  // namespace eca
