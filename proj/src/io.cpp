#include "dqlin/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dqlin/errors.hpp"

namespace dqlin {

void write_matrix(std::ostream& os, const DQMatrix& q) {
    os << "# dqmatrix " << q.rows() << " " << q.cols() << "\n";
    char buf[256];
    for (Index i = 0; i < q.rows(); ++i)
        for (Index j = 0; j < q.cols(); ++j) {
            std::snprintf(buf, sizeof buf,
                          "%lld %lld  %.17g %.17g  %.17g %.17g  %.17g %.17g  %.17g %.17g\n",
                          static_cast<long long>(i + 1), static_cast<long long>(j + 1),
                          q.b1()(i, j).real(), q.b1()(i, j).imag(), q.b2()(i, j).real(),
                          q.b2()(i, j).imag(), q.b3()(i, j).real(), q.b3()(i, j).imag(),
                          q.b4()(i, j).real(), q.b4()(i, j).imag());
            os << buf;
        }
}

void save_matrix(const DQMatrix& q, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("save_matrix: cannot open " + path);
    write_matrix(out, q);
}

DQMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_matrix: cannot open " + path, 0);
    std::string line;
    int line_no = 0;
    long long rows = 0, cols = 0;

    if (!std::getline(in, line)) throw ParseError("load_matrix: empty file", 0);
    ++line_no;
    if (std::sscanf(line.c_str(), "# dqmatrix %lld %lld", &rows, &cols) != 2 || rows < 1 ||
        cols < 1)
        throw ParseError("load_matrix: malformed header", line_no);

    DQMatrix q(rows, cols);
    Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic> seen(rows, cols);
    seen.setZero();
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        long long i = 0, j = 0;
        double c[8];
        std::istringstream ss(line);
        ss >> i >> j;
        for (double& v : c) ss >> v;
        if (!ss || i < 1 || i > rows || j < 1 || j > cols)
            throw ParseError("load_matrix: malformed entry line", line_no);
        q.b1()(i - 1, j - 1) = {c[0], c[1]};
        q.b2()(i - 1, j - 1) = {c[2], c[3]};
        q.b3()(i - 1, j - 1) = {c[4], c[5]};
        q.b4()(i - 1, j - 1) = {c[6], c[7]};
        seen(i - 1, j - 1) = 1;
    }
    if (!seen.all()) throw ParseError("load_matrix: missing entries", line_no);
    return q;
}

}  // namespace dqlin
