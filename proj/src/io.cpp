#include "icx/io.hpp"

#include <fstream>
#include <sstream>

namespace icx {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::Io, "cannot write " + path.string());
  out << content;
  if (!out) raise(ErrorKind::Io, "write failed for " + path.string());
}

Mat load_mat(const std::filesystem::path& path) {
  return mat_from_text(read_file(path));
}

void save_mat(const std::filesystem::path& path, const Mat& m) {
  write_file(path, to_text(m));
}

FittingMatrix load_fitting(const std::filesystem::path& path) {
  return fitting_from_text(read_file(path));
}

void save_fitting(const std::filesystem::path& path, const FittingMatrix& f) {
  write_file(path, to_text(f));
}

XPattern load_xpattern(const std::filesystem::path& path) {
  return xpattern_from_text(read_file(path));
}

void save_xpattern(const std::filesystem::path& path, const XPattern& x) {
  write_file(path, to_text(x));
}

ICProblem load_problem_json(const std::filesystem::path& path) {
  return problem_from_json(read_file(path));
}

void save_problem_json(const std::filesystem::path& path, const ICProblem& p) {
  write_file(path, to_json(p));
}

}  // namespace icx
