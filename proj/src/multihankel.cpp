#include "lrg/multihankel.hpp"

namespace lrg {

MultiHankel build_hankel(TableOracle& t, const std::vector<Monomial>& rows,
                         const std::vector<Monomial>& cols) {
  MultiHankel h;
  h.rows = rows;
  h.cols = cols;
  h.entries.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    h.entries[i].reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      h.entries[i].push_back(t.query(rows[i] * cols[j]));
  }
  return h;
}

bool is_full_rank(FieldCtx& ctx, const MultiHankel& h) {
  if (h.rows.size() != h.cols.size()) throw Error(1, "rank test needs a square matrix");
  std::size_t n = h.rows.size();
  auto a = h.entries;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && ctx.is_zero(a[piv][col])) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ctx.is_zero(a[r][col])) continue;
      Scalar f = ctx.div(a[r][col], a[col][col]);
      for (std::size_t c = col; c < n; ++c)
        a[r][c] = ctx.sub(a[r][c], ctx.mul(f, a[col][c]));
    }
  }
  return true;
}

std::vector<Scalar> solve_relation(FieldCtx& ctx, TableOracle& t,
                                   const std::vector<Monomial>& S, const Monomial& target) {
  HankelEliminator elim(ctx, t);
  for (const auto& s : S)
    if (!elim.try_extend(s)) throw Error(1, "singular H_(S,S) in solve_relation");
  return elim.solve_for(target);
}

bool check_relation_row(FieldCtx& ctx, TableOracle& t, const std::vector<Monomial>& S,
                        const std::vector<Scalar>& alpha, const Monomial& target) {
  Scalar acc = t.query(target * target);
  for (std::size_t i = 0; i < S.size(); ++i)
    acc = ctx.add(acc, ctx.mul(alpha[i], t.query(target * S[i])));
  return ctx.is_zero(acc);
}

std::vector<Scalar> HankelEliminator::column_for(const Monomial& t) {
  std::vector<Scalar> c;
  c.reserve(s_.size());
  for (const auto& s : s_) c.push_back(table_.query(s * t));
  return c;
}

// forward substitution with the unit lower factor: L z = c
std::vector<Scalar> HankelEliminator::forward(const std::vector<Scalar>& c) {
  std::vector<Scalar> z(c);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      z[i] = ctx_.sub(z[i], ctx_.mul(lower_[i][j], z[j]));
  return z;
}

// back substitution with the unit upper factor: L^T alpha = v
std::vector<Scalar> HankelEliminator::back_unit(std::vector<Scalar> v) {
  std::size_t n = v.size();
  std::vector<Scalar> alpha(n);
  for (std::size_t i = n; i-- > 0;) {
    Scalar a = std::move(v[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      a = ctx_.sub(a, ctx_.mul(lower_[j][i], alpha[j]));
    alpha[i] = std::move(a);
  }
  return alpha;
}

bool HankelEliminator::try_extend(const Monomial& t) {
  // bordered L D L^T step: H is symmetric, so the new row equals the new
  // column and one forward solve covers both
  std::vector<Scalar> c = column_for(t);
  Scalar corner = table_.query(t * t);
  std::vector<Scalar> z = forward(c);
  std::vector<Scalar> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) w[i] = ctx_.div(z[i], diag_[i]);
  Scalar pivot = corner;
  for (std::size_t i = 0; i < z.size(); ++i)
    pivot = ctx_.sub(pivot, ctx_.mul(z[i], w[i]));
  if (ctx_.is_zero(pivot)) {
    // rank defect: H alpha = -c, reuse the forward solve
    for (auto& v : w) v = ctx_.neg(v);
    last_alpha_ = back_unit(std::move(w));
    return false;
  }
  s_.push_back(t);
  lower_.push_back(std::move(w));
  diag_.push_back(std::move(pivot));
  return true;
}

std::vector<Scalar> HankelEliminator::solve_for(const Monomial& target) {
  std::vector<Scalar> z = forward(column_for(target));
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = ctx_.neg(ctx_.div(z[i], diag_[i]));
  return back_unit(std::move(z));
}

}  // namespace lrg
