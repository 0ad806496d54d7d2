#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tima {

/// Shortest decimal string that round-trips the double. Locale-independent.
std::string format_double(double v);

/// FNV-1a over a byte string; used to bind models to the inputs they were
/// trained on.
std::uint64_t fnv1a(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::vector<std::string> split(std::string_view s, char sep);

/// Headerless comma-separated matrix, one row per line.
void write_matrix_csv(std::ostream& out, const Eigen::Ref<const Eigen::MatrixXd>& m);
Eigen::MatrixXd read_matrix_csv(std::istream& in, const std::string& origin);

}  // namespace tima
