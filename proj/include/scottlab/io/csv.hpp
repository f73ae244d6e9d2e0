#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace scottlab::io {

/// UTF-8 CSV with a header row and fixed column order.  Doubles are printed
/// with "%.17g" so reruns are byte-identical.
class CsvWriter {
  public:
    CsvWriter(std::filesystem::path path, std::vector<std::string> header);
    void row(const std::vector<double>& values);
    void close();  // flush + rename into place
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    std::string buffer_;
    std::size_t columns_;
    bool closed_ = false;
};

std::string format_double(double v);

}  // namespace scottlab::io
