#include "oracles.hpp"

#include <vector>

namespace preriesz::testing {

std::size_t oracle_rows(const LMatrix& a) { return a.rows() + 3 * a.tail().period() + 2; }

std::size_t oracle_cols(const LMatrix& a) { return a.cols() + 4 * a.tail().period() + 2; }

namespace {

// Image coordinates 0..rows of the finitely supported vector g (coordinates 0..cols).
std::vector<Scalar> apply(const LMatrix& a, const std::vector<Scalar>& g, std::size_t rows) {
  std::vector<Scalar> out(rows + 1);
  for (std::size_t i = 0; i <= rows; ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g[j].is_zero()) out[i] += a.entry(i, j) * g[j];
    }
  }
  return out;
}

std::optional<std::size_t> outside_K(const std::vector<Scalar>& w) {
  if (w[0].sign() < 0) return 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if ((w[0] + w[i]).sign() < 0) return i;
  }
  return std::nullopt;
}

std::string describe(const std::vector<Scalar>& g, std::size_t coord) {
  std::string s = "generator (";
  for (std::size_t j = 0; j < g.size(); ++j) s += (j ? "," : "") + g[j].str();
  return s + ") fails at coordinate " + std::to_string(coord);
}

}  // namespace

std::optional<std::string> oracle_positive_violation(const LMatrix& a) {
  const std::size_t rows = oracle_rows(a);
  const std::size_t cols = oracle_cols(a);
  std::vector<std::vector<Scalar>> gens;
  for (std::size_t j = 1; j <= cols; ++j) {
    std::vector<Scalar> g(cols + 1);
    g[j] = 1;
    gens.push_back(g);
    g[0] = 1;
    gens.push_back(g);
    g[j] = -1;
    gens.push_back(g);
  }
  for (const auto& g : gens) {
    if (auto bad = outside_K(apply(a, g, rows))) return describe(g, *bad);
  }
  // Coordinate i of an image only sees the columns where row 0 or row i is
  // nonzero, so e₀ − Σ_{j∈S} e_j is enumerated over subsets of those.
  for (std::size_t i = 0; i <= rows; ++i) {
    std::vector<std::size_t> touched;
    for (std::size_t j = 1; j <= cols; ++j) {
      if (!a.entry(0, j).is_zero() || !a.entry(i, j).is_zero()) touched.push_back(j);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << touched.size()); ++mask) {
      std::vector<Scalar> g(cols + 1);
      g[0] = 1;
      for (std::size_t b = 0; b < touched.size(); ++b) {
        if (mask >> b & 1) g[touched[b]] = -1;
      }
      Scalar w0;
      Scalar wi;
      for (std::size_t j = 0; j <= cols; ++j) {
        w0 += a.entry(0, j) * g[j];
        wi += a.entry(i, j) * g[j];
      }
      if (w0.sign() < 0) return describe(g, 0);
      if (i > 0 && (w0 + wi).sign() < 0) return describe(g, i);
    }
  }
  return std::nullopt;
}

Scalar dense_F_entry(const LMatrix& a, std::size_t i, std::size_t j) {
  if (j > 0) return a.entry(0, j) + a.entry(i, j);
  Scalar s = a.entry(0, 0) + a.entry(i, 0);
  // Row 0 lives in the window; row i reaches at most one tail block past its diagonal.
  const std::size_t last = a.cols() + (i > a.rows() ? i - a.rows() : 0) + 2 * a.tail().period() + 1;
  for (std::size_t k = 1; k <= last; ++k) s -= a.entry(0, k) + a.entry(i, k);
  return s;
}

std::optional<std::string> dense_F_mismatch(const LMatrix& a, const CoverMatrix& b, std::size_t rows,
                                            std::size_t cols) {
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 0; j <= cols; ++j) {
      const Scalar want = dense_F_entry(a, i, j);
      const Scalar got = b.entry(i, j);
      if (want != got) {
        return "(" + std::to_string(i) + ", " + std::to_string(j) + "): want " + want.str() + ", got " + got.str();
      }
    }
  }
  return std::nullopt;
}

Scalar truncated_weighted_sum(const ZSeq& z, std::size_t terms) {
  Scalar sum;
  Scalar weight(1);
  for (std::size_t k = 1; k <= terms; ++k) {
    weight /= Scalar(2);
    sum += z.at(-static_cast<std::int64_t>(k)) * weight;
  }
  return sum;
}

}  // namespace preriesz::testing
