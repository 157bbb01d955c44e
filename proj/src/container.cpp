#include "oad/container.hpp"

#include <bit>
#include <cstdint>
#include <fstream>

#include "oad/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "container I/O assumes a little-endian host");

namespace oad {

void write_container_header(std::ostream& out, const nlohmann::json& header) {
  const std::string text = header.dump();
  const std::uint32_t len = static_cast<std::uint32_t>(text.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

nlohmann::json read_container_header(std::istream& in, const std::string& context) {
  std::uint32_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof(len));
  if (!in)
    throw DataError(context + ": truncated before header length (byte 0)");
  if (len == 0 || len > (1u << 24))
    throw DataError(context + ": implausible header length " + std::to_string(len));
  std::string text(len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(len));
  if (!in)
    throw DataError(context + ": truncated header at byte " +
                    std::to_string(4 + in.gcount()));
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(context + ": malformed JSON header: " + e.what());
  }
}

void read_exact(std::istream& in, void* dst, std::size_t bytes, const std::string& context) {
  in.read(static_cast<char*>(dst), static_cast<std::streamsize>(bytes));
  if (static_cast<std::size_t>(in.gcount()) != bytes) {
    const auto got = static_cast<std::size_t>(in.gcount());
    throw DataError(context + ": truncated payload, wanted " + std::to_string(bytes) +
                    " bytes, got " + std::to_string(got));
  }
}

void expect_eof(std::istream& in, const std::string& context) {
  char probe;
  in.read(&probe, 1);
  if (in.gcount() != 0)
    throw DataError(context + ": trailing bytes past the declared payload");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  return out;
}

std::uint64_t header_u64(const nlohmann::json& h, const char* key, const std::string& context) {
  if (!h.contains(key) || !h[key].is_number_unsigned())
    throw DataError(context + ": header field '" + key +
                    "' missing or not an unsigned integer");
  return h[key].get<std::uint64_t>();
}

std::string header_str(const nlohmann::json& h, const char* key, const std::string& context) {
  if (!h.contains(key) || !h[key].is_string())
    throw DataError(context + ": header field '" + key + "' missing or not a string");
  return h[key].get<std::string>();
}

}  // namespace oad
