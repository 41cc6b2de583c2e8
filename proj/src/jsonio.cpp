#include "maasx/jsonio.hpp"

#include <fstream>
#include <system_error>

namespace maasx {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::storage_failure, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) raise(Errc::storage_failure, "read failed for " + path.string());
  return bytes;
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::storage_failure, "cannot open " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) raise(Errc::storage_failure, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) raise(Errc::storage_failure, "rename failed for " + path.string() + ": " + ec.message());
}

}  // namespace maasx
