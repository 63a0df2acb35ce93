#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "iwasawa/catalog.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace iwasawa;

inline const CatalogEntry& entry(const std::string& label) {
  static std::map<std::string, CatalogEntry> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, catalog_entry(label)).first;
  return it->second;
}

/// Real 2n x 2n form [[Re, -Im], [Im, Re]] of a complex matrix.
inline QMatrix realify(const CMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = m(i, j).re();
      out(i + n, j + n) = m(i, j).re();
      out(i, j + n) = -m(i, j).im();
      out(i + n, j) = m(i, j).im();
    }
  return out;
}

inline oracle::CMat to_eigen(const CMatrix& m) {
  oracle::CMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return out;
}

/// Matrix in the realization of a vector given in g's basis coordinates.
inline oracle::CMat realize(const CatalogEntry& e, const QVec& v) {
  oracle::CMat out = oracle::CMat::Zero(static_cast<Eigen::Index>(e.matrix_size), static_cast<Eigen::Index>(e.matrix_size));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out += v[i].get_d() * to_eigen(e.realization[i]);
  return out;
}

inline std::vector<oracle::CMat> realize_all(const CatalogEntry& e, const std::vector<QVec>& vs) {
  std::vector<oracle::CMat> out;
  for (const auto& v : vs) out.push_back(realize(e, v));
  return out;
}

/// Random positive definite metric with condition number kept moderate.
inline Eigen::MatrixXd random_metric(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) + u(rng);
  return a.transpose() * a + 0.2 * Eigen::MatrixXd::Identity(n, n);
}

inline std::vector<LieAlgebra> generated_algebras() {
  std::vector<LieAlgebra> out{heisenberg(), real_hyperbolic(1), real_hyperbolic(2), real_hyperbolic(3)};
  for (const auto& l : catalog_labels()) {
    out.push_back(entry(l).g);
    out.push_back(iwasawa_of(entry(l)));
  }
  return out;
}

}  // namespace fixtures
