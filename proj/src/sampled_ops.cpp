#include "ellsurf/sampled_ops.hpp"

#include "ellsurf/errors.hpp"
#include "ellsurf/simd/kernels.hpp"

namespace ellsurf {

int OpWord::order() const {
  int o = 0;
  for (const auto& f : factors) o += f.order();
  return o;
}

DiffOp realize(const OpWord& word) {
  if (word.factors.empty()) throw Error(ErrorKind::DomainError, "empty word");
  DiffOp acc = word.factors.back();
  for (auto it = word.factors.rbegin() + 1; it != word.factors.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

CoeffSamples sample_op(const DiffOp& op, std::span<const cplx> points) {
  CoeffSamples out(static_cast<std::size_t>(op.order() + 1), std::vector<cplx>(points.size()));
  for (int k = 0; k <= op.order(); ++k) op.coeff(k).eval_batch(points, out[static_cast<std::size_t>(k)], op.p, op.q);
  return out;
}

CoeffSamples sample_word(const OpWord& word, std::span<const cplx> points) {
  if (word.factors.empty()) throw Error(ErrorKind::DomainError, "empty word");
  const std::size_t n = points.size();
  CoeffSamples acc = sample_op(word.factors.front(), points);
  std::vector<cplx> shifted(n), vals(n);
  for (std::size_t i = 1; i < word.factors.size(); ++i) {
    const DiffOp& g = word.factors[i];
    const int oa = static_cast<int>(acc.size()) - 1;
    CoeffSamples out(static_cast<std::size_t>(oa + g.order() + 1), std::vector<cplx>(n));
    cplx qk{1.0, 0.0};
    for (int k = 0; k <= oa; ++k, qk *= g.q) {
      for (std::size_t j = 0; j < n; ++j) shifted[j] = qk * points[j];
      for (int l = 0; l <= g.order(); ++l) {
        const ThetaSum& c = g.coeff(l);
        if (c.is_zero()) continue;
        c.eval_batch(shifted, vals, g.p, g.q);
        simd::mul_acc(acc[static_cast<std::size_t>(k)], vals, out[static_cast<std::size_t>(k + l)]);
      }
    }
    acc = std::move(out);
  }
  return acc;
}

void write_row(const CoeffSamples& s, int order, MatrixXc& m, Eigen::Index row) {
  const auto n = m.cols() / (order + 1);
  for (int k = 0; k <= order; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool have = k < static_cast<int>(s.size());
      m(row, k * n + j) = have ? s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] : cplx{};
    }
  }
}

MatrixXc sample_rows(std::span<const OpWord> words, std::span<const cplx> points, int order) {
  const auto n = static_cast<Eigen::Index>(points.size());
  MatrixXc m(static_cast<Eigen::Index>(words.size()), n * (order + 1));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto s = sample_word(words[i], points);
    if (static_cast<int>(s.size()) > order + 1) {
      for (std::size_t k = static_cast<std::size_t>(order) + 1; k < s.size(); ++k)
        for (const auto& v : s[k])
          if (std::abs(v) > 0.0) throw Error(ErrorKind::DomainError, "word exceeds the sampled order");
    }
    write_row(s, order, m, static_cast<Eigen::Index>(i));
  }
  return m;
}

}  // namespace ellsurf
