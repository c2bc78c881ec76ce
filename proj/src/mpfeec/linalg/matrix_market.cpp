// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/matrix_market.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

void write_matrix_market(std::ostream &os, const SparseMatrix &m) {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  const auto &offs = m.row_offsets();
  const auto &cols = m.col_indices();
  const auto &vals = m.values();
  char buf[80];
  for (index_t r = 0; r < m.rows(); ++r) {
    for (index_t k = offs[r]; k < offs[r + 1]; ++k) {
      std::snprintf(buf, sizeof(buf), "%lld %lld %.17g\n",
                    static_cast<long long>(r + 1),
                    static_cast<long long>(cols[k] + 1), vals[k]);
      os << buf;
    }
  }
}

void write_matrix_market(const std::string &path, const SparseMatrix &m) {
  std::ofstream os(path);
  MPFEEC_REQUIRE(os.good(), "cannot open file for writing: " + path);
  write_matrix_market(os, m);
}

void write_matrix_market(const std::string &path, const DenseMatrix &m) {
  TripletBuffer buf(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0.0) buf.add(i, j, m(i, j));
  write_matrix_market(path, buf.build());
}

SparseMatrix read_matrix_market(std::istream &is) {
  std::string line;
  MPFEEC_REQUIRE(std::getline(is, line), "matrix market: empty stream");
  MPFEEC_REQUIRE(line.rfind("%%MatrixMarket", 0) == 0,
                 "matrix market: missing header");
  MPFEEC_REQUIRE(line.find("coordinate") != std::string::npos &&
                     line.find("real") != std::string::npos,
                 "matrix market: only coordinate real supported");
  const bool symmetric = line.find("symmetric") != std::string::npos;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream hdr(line);
  long long rows = 0, cols = 0, nnz = 0;
  hdr >> rows >> cols >> nnz;
  MPFEEC_REQUIRE(rows > 0 && cols > 0 && nnz >= 0, "matrix market: bad sizes");
  std::vector<index_t> ti, tj;
  std::vector<double> tv;
  for (long long k = 0; k < nnz; ++k) {
    long long i = 0, j = 0;
    double v = 0.0;
    is >> i >> j >> v;
    MPFEEC_REQUIRE(is.good() || is.eof(), "matrix market: truncated data");
    ti.push_back(i - 1);
    tj.push_back(j - 1);
    tv.push_back(v);
    if (symmetric && i != j) {
      ti.push_back(j - 1);
      tj.push_back(i - 1);
      tv.push_back(v);
    }
  }
  return SparseMatrix::from_triplets(rows, cols, ti, tj, tv);
}

SparseMatrix read_matrix_market(const std::string &path) {
  std::ifstream is(path);
  MPFEEC_REQUIRE(is.good(), "cannot open file for reading: " + path);
  return read_matrix_market(is);
}

} // namespace mpfeec
