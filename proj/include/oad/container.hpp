#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace oad {

// Binary container layout shared by every file the engine reads or writes:
// a 4-byte little-endian header length, the UTF-8 JSON header, then the raw
// payload. All numeric payloads are little-endian.

// Writes header-length + header; payload written by the caller afterwards.
void write_container_header(std::ostream& out, const nlohmann::json& header);

// Reads and parses the header, leaving the stream at the payload start.
// `context` names the file for error messages.
nlohmann::json read_container_header(std::istream& in, const std::string& context);

// Reads exactly `bytes`; throws DataError with the failing byte offset.
void read_exact(std::istream& in, void* dst, std::size_t bytes, const std::string& context);

// Throws DataError if any payload bytes remain past the expected end.
void expect_eof(std::istream& in, const std::string& context);

std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

// Fetch a required header field, with type checks folded into the error.
std::uint64_t header_u64(const nlohmann::json& h, const char* key, const std::string& context);
std::string header_str(const nlohmann::json& h, const char* key, const std::string& context);

}  // namespace oad
