#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "eca/environment.hpp"

namespace eca {

struct LoadedEnvironment {
  Environment env;
  std::optional<int> wolfram_code;
};

// "n m rule=<code>" then m lines of '0'/'1'
void write_text(std::ostream& out, const Environment& env, std::optional<int> wolfram_code);
LoadedEnvironment read_text(std::istream& in);

// magic "ECAENV1\0", u32 n, u32 m (little endian), then rows packed
// least-significant-bit first, each row padded to a byte boundary
void write_binary(std::ostream& out, const Environment& env);
LoadedEnvironment read_binary(std::istream& in);

// picks the format by sniffing the magic
LoadedEnvironment load_environment(const std::string& path);
void save_environment(const std::string& path, const Environment& env, std::optional<int> wolfram_code,
                      bool binary);

}  // namespace eca
