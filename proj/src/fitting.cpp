#include "icx/fitting.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace icx {

void FittingMatrix::validate() const {
  for (int i = 0; i < rows_; ++i) {
    int ones = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) == PatternEntry::One) ++ones;
    if (ones != 1)
      raise(ErrorKind::RowOneCount, "row " + std::to_string(i + 1) + " contains " +
                                        std::to_string(ones) + " ones, expected 1");
  }
  for (int j = 0; j < cols_; ++j) {
    bool covered = false;
    for (int i = 0; i < rows_ && !covered; ++i)
      covered = at(i, j) == PatternEntry::One;
    if (!covered)
      raise(ErrorKind::ColumnUncovered,
            "column " + std::to_string(j + 1) + " is never demanded");
  }
}

int FittingMatrix::demand_col(int row) const {
  for (int j = 0; j < cols_; ++j)
    if (at(row, j) == PatternEntry::One) return j;
  raise(ErrorKind::RowOneCount, "row " + std::to_string(row + 1) + " has no 1");
}

void ICProblem::validate() const {
  if (message_count < 1)
    raise(ErrorKind::InvalidProblem, "message count must be positive");
  std::vector<bool> demanded(message_count, false);
  for (size_t t = 0; t < receivers.size(); ++t) {
    const Receiver& r = receivers[t];
    if (r.demand < 1 || r.demand > message_count)
      raise(ErrorKind::InvalidProblem,
            "receiver " + std::to_string(t + 1) + " demand out of range");
    for (int s : r.side) {
      if (s < 1 || s > message_count)
        raise(ErrorKind::InvalidProblem,
              "receiver " + std::to_string(t + 1) + " side index out of range");
      if (s == r.demand)
        raise(ErrorKind::InvalidProblem, "receiver " + std::to_string(t + 1) +
                                             " has its demand as side information");
    }
    demanded[r.demand - 1] = true;
  }
  for (int k = 0; k < message_count; ++k)
    if (!demanded[k])
      raise(ErrorKind::InvalidProblem,
            "message " + std::to_string(k + 1) + " is never demanded");
}

ICProblem to_problem(const FittingMatrix& f, Field field) {
  f.validate();
  ICProblem p{f.cols(), field, {}};
  p.receivers.reserve(f.rows());
  for (int i = 0; i < f.rows(); ++i) {
    Receiver r;
    r.demand = f.demand_col(i) + 1;
    for (int j = 0; j < f.cols(); ++j)
      if (f.at(i, j) == PatternEntry::Star) r.side.push_back(j + 1);
    p.receivers.push_back(std::move(r));
  }
  return p;
}

FittingMatrix from_problem(const ICProblem& p) {
  p.validate();
  if (p.receivers.empty())
    raise(ErrorKind::InvalidProblem, "problem has no receivers");
  FittingMatrix f(static_cast<int>(p.receivers.size()), p.message_count);
  for (size_t t = 0; t < p.receivers.size(); ++t) {
    const Receiver& r = p.receivers[t];
    f.set(static_cast<int>(t), r.demand - 1, PatternEntry::One);
    for (int s : r.side)
      f.set(static_cast<int>(t), s - 1, PatternEntry::Star);
  }
  return f;
}

XPattern x_relax(const FittingMatrix& f) {
  XPattern x(f.rows(), f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (f.at(i, j) != PatternEntry::Zero) x.set(i, j, PatternEntry::Star);
  return x;
}

XPattern x_relax(const XPattern& x) { return x; }

bool fits(const Mat& m, const FittingMatrix& f) {
  if (m.rows() != f.rows() || m.cols() != f.cols())
    raise(ErrorKind::DimensionMismatch, "matrix shape does not match pattern");
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      PatternEntry e = f.at(i, j);
      if (e == PatternEntry::Zero && m(i, j) != 0) return false;
      if (e == PatternEntry::One && m(i, j) != 1) return false;
    }
  return true;
}

bool fits_x(const Mat& m, const XPattern& x) {
  if (m.rows() != x.rows() || m.cols() != x.cols())
    raise(ErrorKind::DimensionMismatch, "matrix shape does not match pattern");
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x.at(i, j) == PatternEntry::Zero && m(i, j) != 0) return false;
  return true;
}

namespace {

char entry_char(PatternEntry e) {
  switch (e) {
    case PatternEntry::Zero: return '0';
    case PatternEntry::One: return '1';
    case PatternEntry::Star: return 'X';
  }
  return '?';
}

PatternEntry entry_from_token(const std::string& tok) {
  if (tok == "0") return PatternEntry::Zero;
  if (tok == "1") return PatternEntry::One;
  if (tok == "X") return PatternEntry::Star;
  raise(ErrorKind::Parse, "pattern token must be 0, 1 or X, got \"" + tok + "\"");
}

std::vector<PatternEntry> parse_grid(const std::string& text, int& rows,
                                     int& cols) {
  std::istringstream is(text);
  if (!(is >> rows >> cols))
    raise(ErrorKind::Parse, "pattern header must be \"rows cols\"");
  if (rows < 1 || cols < 1)
    raise(ErrorKind::Parse, "pattern dimensions must be positive");
  std::vector<PatternEntry> grid;
  grid.reserve(static_cast<size_t>(rows) * cols);
  std::string tok;
  for (long long n = static_cast<long long>(rows) * cols; n > 0; --n) {
    if (!(is >> tok)) raise(ErrorKind::Parse, "pattern body ended early");
    grid.push_back(entry_from_token(tok));
  }
  if (is >> tok) raise(ErrorKind::Parse, "trailing data after pattern body");
  return grid;
}

std::string grid_to_text(int rows, int cols,
                         const std::function<PatternEntry(int, int)>& at) {
  std::ostringstream os;
  os << rows << ' ' << cols << '\n';
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ' ';
      os << entry_char(at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_text(const FittingMatrix& f) {
  return grid_to_text(f.rows(), f.cols(),
                      [&](int i, int j) { return f.at(i, j); });
}

std::string to_text(const XPattern& x) {
  return grid_to_text(x.rows(), x.cols(),
                      [&](int i, int j) { return x.at(i, j); });
}

FittingMatrix fitting_from_text(const std::string& text) {
  int rows, cols;
  std::vector<PatternEntry> grid = parse_grid(text, rows, cols);
  return FittingMatrix(rows, cols, std::move(grid));
}

XPattern xpattern_from_text(const std::string& text) {
  int rows, cols;
  std::vector<PatternEntry> grid = parse_grid(text, rows, cols);
  return XPattern(rows, cols, std::move(grid));
}

std::string to_json(const ICProblem& p) {
  nlohmann::ordered_json j;
  j["K"] = p.message_count;
  j["p"] = p.field.modulus();
  j["receivers"] = nlohmann::ordered_json::array();
  for (const Receiver& r : p.receivers)
    j["receivers"].push_back({{"demand", r.demand}, {"side", r.side}});
  return j.dump(2) + "\n";
}

ICProblem problem_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, std::string("bad problem JSON: ") + e.what());
  }
  try {
    ICProblem p{j.at("K").get<int>(), Field(j.at("p").get<int>()), {}};
    for (const auto& jr : j.at("receivers")) {
      Receiver r;
      r.demand = jr.at("demand").get<int>();
      r.side = jr.at("side").get<std::vector<int>>();
      std::sort(r.side.begin(), r.side.end());
      r.side.erase(std::unique(r.side.begin(), r.side.end()), r.side.end());
      p.receivers.push_back(std::move(r));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, std::string("bad problem JSON: ") + e.what());
  }
}

}  // namespace icx
