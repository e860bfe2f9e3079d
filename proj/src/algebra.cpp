#include "argen/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace argen {

void Quiver::validate() const {
  if (num_vertices <= 0)
    throw std::invalid_argument("quiver: needs at least one vertex");
  std::vector<std::string> labels;
  for (const Arrow& a : arrows) {
    if (a.src < 0 || a.src >= num_vertices || a.tgt < 0 ||
        a.tgt >= num_vertices)
      throw std::invalid_argument("quiver: arrow '" + a.label +
                                  "' has endpoint out of range");
    if (a.label.empty())
      throw std::invalid_argument("quiver: empty arrow label");
    labels.push_back(a.label);
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("quiver: duplicate arrow label");
}

int Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return -1;
}

namespace {

// Source/target of a word; throws on incomposable words.
std::pair<int, int> word_endpoints(const Quiver& q, const Word& w) {
  if (w.empty()) throw std::invalid_argument("word_endpoints: empty word");
  int src = q.arrows[w[0]].src;
  int at = src;
  for (int a : w) {
    if (q.arrows[a].src != at)
      throw std::invalid_argument("relation path is not composable");
    at = q.arrows[a].tgt;
  }
  return {src, at};
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::build(Quiver q,
                                              std::vector<Relation> rels,
                                              int bound, std::uint32_t p) {
  q.validate();
  if (bound < 1) throw std::invalid_argument("algebra: bound must be >= 1");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->quiver_ = std::move(q);
  alg->relations_ = std::move(rels);
  alg->bound_ = bound;
  alg->field_ = PrimeField(p);
  alg->compute_basis();
  return alg;
}

void Algebra::compute_basis() {
  const int n = quiver_.num_vertices;
  const int na = static_cast<int>(quiver_.arrows.size());

  // All free paths of length < L, ordered by (length, word).
  for (int v = 0; v < n; ++v) paths_.push_back(Path{v, v, {}});
  std::size_t level_begin = 0;
  for (int len = 1; len < bound_; ++len) {
    std::size_t level_end = paths_.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      if (static_cast<int>(paths_[i].length()) != len - 1) continue;
      for (int a = 0; a < na; ++a) {
        if (quiver_.arrows[a].src != paths_[i].tgt) continue;
        Path ext = paths_[i];
        ext.word.push_back(a);
        ext.tgt = quiver_.arrows[a].tgt;
        paths_.push_back(std::move(ext));
      }
    }
    level_begin = level_end;
  }
  std::stable_sort(paths_.begin(), paths_.end(),
                   [](const Path& a, const Path& b) {
                     if (a.length() != b.length()) return a.length() < b.length();
                     if (a.src != b.src) return a.src < b.src;
                     return a.word < b.word;
                   });
  for (std::size_t i = 0; i < paths_.size(); ++i)
    path_index_[{paths_[i].src, paths_[i].word}] = static_cast<int>(i);

  const std::size_t np = paths_.size();

  // Validate relations: composable and parallel terms.
  for (const Relation& r : relations_) {
    if (r.terms.empty())
      throw std::invalid_argument("relation with no terms");
    std::pair<int, int> ends{-1, -1};
    for (const RelTerm& t : r.terms) {
      if (t.word.empty())
        throw std::invalid_argument("relation contains an empty path");
      auto e = word_endpoints(quiver_, t.word);
      if (ends.first == -1)
        ends = e;
      else if (e != ends)
        throw std::invalid_argument(
            "non-parallel relation: paths do not share source and target");
    }
  }

  // Degree-truncated ideal: rows are padded relations u*r*v with terms of
  // length >= L dropped.
  std::vector<std::vector<std::uint32_t>> rows;
  for (const Relation& r : relations_) {
    auto ends = word_endpoints(quiver_, r.terms[0].word);
    for (const Path& u : paths_) {
      if (u.tgt != ends.first) continue;
      for (const Path& v : paths_) {
        if (v.src != ends.second) continue;
        std::vector<std::uint32_t> row(np, 0);
        bool nonzero = false;
        for (const RelTerm& t : r.terms) {
          Word w = u.word;
          w.insert(w.end(), t.word.begin(), t.word.end());
          w.insert(w.end(), v.word.begin(), v.word.end());
          if (static_cast<int>(w.size()) >= bound_) continue;
          int idx = path_index_.at({u.src, w});
          row[idx] = field_.add(row[idx], field_.residue(t.coef));
          nonzero = true;
        }
        if (!nonzero) continue;
        bool allzero = true;
        for (auto c : row)
          if (c) {
            allzero = false;
            break;
          }
        if (!allzero) rows.push_back(std::move(row));
      }
    }
  }

  // Eliminate with pivots preferring long paths, so short paths survive as
  // basis classes.
  std::vector<std::size_t> colorder(np);
  for (std::size_t i = 0; i < np; ++i) colorder[i] = np - 1 - i;
  std::vector<int> pivot_of_row;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::uint32_t>> red;
  for (auto& row : rows) {
    // Reduce against existing rows.
    for (std::size_t k = 0; k < red.size(); ++k) {
      std::uint32_t c = row[pivot_cols[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < np; ++j)
        row[j] = field_.sub(row[j], field_.mul(c, red[k][j]));
    }
    std::size_t pc = np;
    for (std::size_t oc : colorder) {
      if (row[oc] != 0) {
        pc = oc;
        break;
      }
    }
    if (pc == np) continue;  // dependent row
    std::uint32_t s = field_.inv(row[pc]);
    for (std::size_t j = 0; j < np; ++j) row[j] = field_.mul(row[j], s);
    for (std::size_t k = 0; k < red.size(); ++k) {
      std::uint32_t c = red[k][pc];
      if (c == 0) continue;
      for (std::size_t j = 0; j < np; ++j)
        red[k][j] = field_.sub(red[k][j], field_.mul(c, row[j]));
    }
    pivot_cols.push_back(pc);
    red.push_back(std::move(row));
  }

  std::vector<bool> is_pivot(np, false);
  for (auto pc : pivot_cols) is_pivot[pc] = true;

  path_to_basis_.assign(np, -1);
  idem_.assign(n, -1);
  for (std::size_t i = 0; i < np; ++i) {
    if (is_pivot[i]) continue;
    path_to_basis_[i] = static_cast<int>(basis_.size());
    basis_.push_back(paths_[i]);
  }
  for (std::size_t i = 0; i < np; ++i) {
    if (paths_[i].length() == 0) {
      if (is_pivot[i])
        throw std::invalid_argument(
            "inconsistent relations: idempotent e" +
            std::to_string(paths_[i].src + 1) + " forced to zero");
      idem_[paths_[i].src] = path_to_basis_[i];
    }
  }

  // Normal forms for the pivot paths: p = -sum(other coords).
  for (std::size_t k = 0; k < red.size(); ++k) {
    std::vector<std::pair<int, std::uint32_t>> nf;
    for (std::size_t j = 0; j < np; ++j) {
      if (j == pivot_cols[k] || red[k][j] == 0) continue;
      nf.emplace_back(static_cast<int>(j), field_.neg(red[k][j]));
    }
    ideal_rows_[static_cast<int>(pivot_cols[k])] = std::move(nf);
  }

  from_.assign(n, {});
  from_to_.assign(static_cast<std::size_t>(n) * n, {});
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    from_[basis_[b].src].push_back(static_cast<int>(b));
    from_to_[basis_[b].src * n + basis_[b].tgt].push_back(static_cast<int>(b));
  }

  table_.assign(basis_.size() * basis_.size(), {});
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (basis_[i].tgt != basis_[j].src) continue;
      Word w = basis_[i].word;
      w.insert(w.end(), basis_[j].word.begin(), basis_[j].word.end());
      table_[i * basis_.size() + j] = reduce_word(basis_[i].src, w);
    }
  }
}

BasisCombo Algebra::reduce_word(int src, const Word& w) const {
  if (static_cast<int>(w.size()) >= bound_) return {};
  auto it = path_index_.find({src, w});
  if (it == path_index_.end())
    throw std::invalid_argument("reduce_word: word is not a path from vertex " +
                                std::to_string(src + 1));
  int idx = it->second;
  if (path_to_basis_[idx] >= 0) return {{path_to_basis_[idx], 1}};
  // Pivot path: substitute its normal form (already supported on non-pivots).
  BasisCombo combo;
  for (const auto& [q, c] : ideal_rows_.at(idx)) {
    combo.emplace_back(path_to_basis_[q], c);
  }
  return combo;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  if (opposite_) return opposite_;
  if (auto b = opposite_back_.lock()) return b;
  Quiver oq;
  oq.num_vertices = quiver_.num_vertices;
  for (const Arrow& a : quiver_.arrows)
    oq.arrows.push_back(Arrow{a.label, a.tgt, a.src});
  std::vector<Relation> orels;
  for (const Relation& r : relations_) {
    Relation orel;
    for (const RelTerm& t : r.terms) {
      RelTerm ot{t.coef, Word(t.word.rbegin(), t.word.rend())};
      orel.terms.push_back(std::move(ot));
    }
    orels.push_back(std::move(orel));
  }
  opposite_ = Algebra::build(std::move(oq), std::move(orels), bound_,
                             field_.prime());
  opposite_->opposite_back_ = shared_from_this();
  return opposite_;
}

std::string Algebra::path_name(const Path& p) const {
  if (p.word.empty()) return "e" + std::to_string(p.src + 1);
  std::string s;
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (i) s += "*";
    s += quiver_.arrows[p.word[i]].label;
  }
  return s;
}

}  // namespace argen
