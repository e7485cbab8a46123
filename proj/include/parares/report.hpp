#pragma once

// Deterministic artifact writers: CSV tables and plain-text reports. All
// floating point values are written with 17 significant digits so that two
// runs of the same scenario produce byte-identical files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace parares {

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

class ReportWriter {
 public:
  explicit ReportWriter(const std::filesystem::path& dir) : dir_(dir) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }

  void write_csv(const std::string& name,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) const {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << fmt17(row[i]);
      out << "\n";
    }
  }

  void line(const std::string& s) { lines_.push_back(s); }
  void kv(const std::string& key, double v) { line(key + " = " + fmt17(v)); }
  void kv(const std::string& key, const std::string& v) {
    line(key + " = " + v);
  }
  void check(const std::string& what, bool ok) {
    line(std::string(ok ? "PASS" : "FAIL") + "  " + what);
    if (!ok) failed_ = true;
  }
  bool any_failed() const { return failed_; }

  void flush(const std::string& name = "report.txt") const {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    for (const auto& s : lines_) out << s << "\n";
  }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> lines_;
  bool failed_ = false;
};

inline std::vector<std::vector<double>> vector_rows(
    const Eigen::VectorXd& index_like, const Eigen::MatrixXd& cols) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(index_like.size()));
  for (Eigen::Index i = 0; i < index_like.size(); ++i) {
    std::vector<double> row;
    row.push_back(index_like[i]);
    for (Eigen::Index j = 0; j < cols.cols(); ++j) row.push_back(cols(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace parares
