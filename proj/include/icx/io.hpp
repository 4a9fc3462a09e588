#pragma once

#include <filesystem>
#include <string>

#include "icx/fitting.hpp"

namespace icx {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

Mat load_mat(const std::filesystem::path& path);
void save_mat(const std::filesystem::path& path, const Mat& m);

FittingMatrix load_fitting(const std::filesystem::path& path);
void save_fitting(const std::filesystem::path& path, const FittingMatrix& f);

XPattern load_xpattern(const std::filesystem::path& path);
void save_xpattern(const std::filesystem::path& path, const XPattern& x);

ICProblem load_problem_json(const std::filesystem::path& path);
void save_problem_json(const std::filesystem::path& path, const ICProblem& p);

}  // namespace icx
