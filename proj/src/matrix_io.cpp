#include "cmpn/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace cmpn {

namespace {

std::string next_content_line(std::istream& in)
{
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return line;
    }
    throw ParseError("unexpected end of matrix file");
}

} // namespace

MatrixFile read_matrix_file(std::istream& in)
{
    std::istringstream header(next_content_line(in));
    std::string keyword, tag;
    if (!(header >> keyword >> tag) || keyword != "field")
        throw ParseError("matrix file must start with 'field <tag>'");
    FieldSpec spec = FieldSpec::from_tag(tag);

    std::istringstream size_line(next_content_line(in));
    std::size_t rows = 0, cols = 0;
    if (!(size_line >> keyword >> rows >> cols) || keyword != "size" || rows == 0 || cols == 0)
        throw ParseError("expected 'size <rows> <cols>'");

    std::optional<std::size_t> block_size;
    std::string line = next_content_line(in);
    {
        std::istringstream probe(line);
        std::string k;
        std::size_t t = 0;
        if (probe >> k && k == "block") {
            if (!(probe >> t) || t == 0)
                throw ParseError("expected 'block <t>'");
            block_size = t;
            line = next_content_line(in);
        }
    }

    Matrix m(rows, cols, spec);
    for (std::size_t i = 0; i < rows; ++i) {
        std::istringstream row(line);
        for (std::size_t j = 0; j < cols; ++j) {
            std::string cell;
            if (!(row >> cell))
                throw ParseError("row " + std::to_string(i) + " has fewer than " +
                                 std::to_string(cols) + " entries");
            m.set(i, j, FieldElement::parse(cell, spec));
        }
        std::string extra;
        if (row >> extra)
            throw ParseError("row " + std::to_string(i) + " has trailing entries");
        if (i + 1 < rows)
            line = next_content_line(in);
    }
    if (block_size && m.rows() % *block_size != 0)
        throw ParseError("declared block size does not divide the row count");
    return {std::move(m), block_size};
}

MatrixFile load_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return read_matrix_file(in);
}

void write_matrix_file(std::ostream& out, const Matrix& m, std::optional<std::size_t> block_size)
{
    out << "field " << m.spec().tag() << '\n';
    out << "size " << m.rows() << ' ' << m.cols() << '\n';
    if (block_size)
        out << "block " << *block_size << '\n';
    out << m.str();
}

void save_matrix_file(const std::string& path, const Matrix& m,
                      std::optional<std::size_t> block_size)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    write_matrix_file(out, m, block_size);
}

} // namespace cmpn
