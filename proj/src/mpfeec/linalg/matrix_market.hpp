// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_MATRIX_MARKET_HPP
#define MPFEEC_LINALG_MATRIX_MARKET_HPP

#include <iosfwd>
#include <string>

#include "mpfeec/linalg/csr.hpp"
#include "mpfeec/linalg/dense.hpp"

namespace mpfeec {

/// Matrix Market coordinate format (real general), 1-based indices.
void write_matrix_market(std::ostream &os, const SparseMatrix &m);
void write_matrix_market(const std::string &path, const SparseMatrix &m);
void write_matrix_market(const std::string &path, const DenseMatrix &m);
SparseMatrix read_matrix_market(std::istream &is);
SparseMatrix read_matrix_market(const std::string &path);

} // namespace mpfeec

#endif
