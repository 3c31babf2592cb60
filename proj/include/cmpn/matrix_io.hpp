#pragma once

#include <iosfwd>
#include <optional>

#include "cmpn/matrix.hpp"

namespace cmpn {

/// Line-oriented exact matrix file:
///   field <Q|GF:p>
///   size <rows> <cols>
///   block <t>            (optional)
///   <rows lines of space-separated element strings>
/// Element strings use the field's text grammar; no floats anywhere.
struct MatrixFile {
    Matrix matrix;
    std::optional<std::size_t> block_size;
};

MatrixFile read_matrix_file(std::istream& in);
MatrixFile load_matrix_file(const std::string& path);

void write_matrix_file(std::ostream& out, const Matrix& m,
                       std::optional<std::size_t> block_size = std::nullopt);
void save_matrix_file(const std::string& path, const Matrix& m,
                      std::optional<std::size_t> block_size = std::nullopt);

} // namespace cmpn
