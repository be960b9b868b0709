#include "klyachko/characters/character_table.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "klyachko/characters/modular_linalg.hpp"
#include "klyachko/error.hpp"
#include "klyachko/parallel.hpp"

namespace klyachko {

std::vector<std::uint64_t> class_structure_constants(const GroupTable& table, unsigned threads) {
  if (!table.has_classes()) throw Error(ErrorCode::InvalidArgument, "classes not computed");
  const std::size_t n_cls = table.class_count();
  const std::size_t order = table.order();
  const auto& f = table.field();
  const auto& classes = table.classes();
  const unsigned workers = worker_count(threads, order);
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(n_cls * n_cls * n_cls, 0));

  // Pairs (x, y) with xy = z are (u^{-1}, uz) for u in G, and the class of
  // u^{-1} is the inverse class of u.
  parallel_chunks(order, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& acc = partial[w];
    for (std::size_t ui = begin; ui < end; ++ui) {
      const MatrixGF u = table.element(ui);
      const std::size_t j = classes[table.class_of(ui)].inverse_class;
      for (std::size_t k = 0; k < n_cls; ++k) {
        const MatrixGF uz = multiply(f, u, classes[k].representative);
        const auto idx = table.index_of(uz);
        const std::size_t i = table.class_of(*idx);
        ++acc[(j * n_cls + i) * n_cls + k];
      }
    }
  });
  std::vector<std::uint64_t> a(n_cls * n_cls * n_cls, 0);
  for (const auto& p : partial)
    for (std::size_t t = 0; t < a.size(); ++t) a[t] += p[t];
  return a;
}

Residue inner_product(const GroupTable& table, const ModularArena& arena, const ClassFunction& a,
                      const ClassFunction& b) {
  if (a.ell != arena.ell() || b.ell != arena.ell()) {
    throw Error(ErrorCode::ArenaMismatch, "class functions from different arenas");
  }
  const auto& classes = table.classes();
  if (a.values.size() != classes.size() || b.values.size() != classes.size()) {
    throw Error(ErrorCode::SizeMismatch, "class function length differs from class count");
  }
  Residue sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Residue term = arena.mul(a.values[c], b.values[classes[c].inverse_class]);
    sum = arena.add(sum, arena.mul(arena.from_int(static_cast<long long>(classes[c].size)), term));
  }
  return arena.mul(sum, arena.inv(arena.from_int(static_cast<long long>(table.order()))));
}

namespace {

// chi(1) from the normalized eigenvector w (w at the identity class = 1):
// chi(1)^2 * sum_k w_k w_{k*} / |C_k| = |G|.
std::uint64_t degree_from_eigenvector(const GroupTable& table, const ModularArena& z,
                                      const std::vector<Residue>& w) {
  const auto& classes = table.classes();
  Residue s = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Residue t = z.mul(w[k], w[classes[k].inverse_class]);
    s = z.add(s, z.mul(t, z.inv(z.from_int(static_cast<long long>(classes[k].size)))));
  }
  if (s == 0) throw Error(ErrorCode::InvariantViolation, "degenerate eigenvector");
  const Residue d2 = z.mul(z.from_int(static_cast<long long>(table.order())), z.inv(s));
  for (std::uint64_t d = 1; d * d <= table.order(); ++d) {
    if (z.from_int(static_cast<long long>(d * d)) == d2) return d;
  }
  throw Error(ErrorCode::InvariantViolation, "character degree does not lift to an integer");
}

}  // namespace

CharacterTable character_table(const GroupTable& table, const ModularArena& arena,
                               const CharacterTableOptions& options) {
  if (arena.group_order() != table.order() || table.exponent() == 0 ||
      arena.root_order() % table.exponent() != 0) {
    throw Error(ErrorCode::ArenaMismatch, "arena was not built for this group");
  }
  if (arena.ell() <= 2 * table.order()) throw Error(ErrorCode::ArenaTooSmall, "ell <= 2|G|");
  const std::size_t n_cls = table.class_count();
  const auto constants = class_structure_constants(table, options.threads);
  const std::size_t id = table.identity_class();

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Residue> pick(1, arena.ell() - 1);

  CharacterTable result;
  result.seed = options.seed;
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    result.attempts = attempt;
    std::vector<Residue> coeff(n_cls);
    for (auto& c : coeff) c = pick(rng);

    // M_{ik} = sum_j c_j a_{jik}
    ModMatrix m(n_cls);
    for (std::size_t j = 0; j < n_cls; ++j) {
      for (std::size_t i = 0; i < n_cls; ++i) {
        for (std::size_t k = 0; k < n_cls; ++k) {
          const auto count = constants[(j * n_cls + i) * n_cls + k];
          if (count == 0) continue;
          m(i, k) = arena.add(m(i, k), arena.mul(coeff[j], arena.from_int(static_cast<long long>(count))));
        }
      }
    }
    const auto roots = distinct_roots(arena, characteristic_polynomial(arena, m), rng);
    if (!roots || roots->size() != n_cls) continue;

    std::vector<ClassFunction> chars;
    std::vector<std::uint64_t> degrees;
    bool ok = true;
    for (Residue lambda : *roots) {
      ModMatrix shifted = m;
      for (std::size_t i = 0; i < n_cls; ++i) shifted(i, i) = arena.sub(shifted(i, i), lambda);
      auto basis = kernel(arena, shifted);
      if (basis.size() != 1 || basis[0][id] == 0) {
        ok = false;
        break;
      }
      std::vector<Residue> w = basis[0];
      const Residue scale = arena.inv(w[id]);
      for (auto& x : w) x = arena.mul(x, scale);
      const std::uint64_t d = degree_from_eigenvector(table, arena, w);
      ClassFunction chi{arena.ell(), std::vector<Residue>(n_cls)};
      const Residue dd = arena.from_int(static_cast<long long>(d));
      for (std::size_t k = 0; k < n_cls; ++k) {
        const Residue size_inv =
            arena.inv(arena.from_int(static_cast<long long>(table.classes()[k].size)));
        chi.values[k] = arena.mul(arena.mul(w[k], dd), size_inv);
      }
      chars.push_back(std::move(chi));
      degrees.push_back(d);
    }
    if (!ok) continue;

    std::vector<std::size_t> order(n_cls);
    for (std::size_t i = 0; i < n_cls; ++i) order[i] = i;
    auto is_trivial = [&](std::size_t i) {
      return std::all_of(chars[i].values.begin(), chars[i].values.end(),
                         [](Residue v) { return v == 1; });
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
      const bool ta = is_trivial(a);
      const bool tb = is_trivial(b);
      if (ta != tb) return ta;
      return chars[a].values < chars[b].values;
    });
    for (auto i : order) {
      result.characters.push_back(chars[i]);
      result.degrees.push_back(degrees[i]);
    }

    if (!check_orthogonality(table, arena, result).all()) {
      throw Error(ErrorCode::InvariantViolation, "character table fails orthogonality");
    }
    return result;
  }
  throw Error(ErrorCode::EigenSplitFailure,
              "eigenvalues not separated after " + std::to_string(options.max_attempts) + " attempts");
}

OrthogonalityReport check_orthogonality(const GroupTable& table, const ModularArena& arena,
                                        const CharacterTable& chars) {
  OrthogonalityReport report;
  const std::size_t n_cls = table.class_count();
  const auto& classes = table.classes();
  if (chars.characters.size() != n_cls) return report;

  report.rows = true;
  for (std::size_t i = 0; i < n_cls && report.rows; ++i) {
    for (std::size_t j = 0; j < n_cls; ++j) {
      const Residue ip = inner_product(table, arena, chars.characters[i], chars.characters[j]);
      if (ip != (i == j ? 1U : 0U)) {
        report.rows = false;
        break;
      }
    }
  }

  report.columns = true;
  for (std::size_t g = 0; g < n_cls && report.columns; ++g) {
    for (std::size_t h = 0; h < n_cls; ++h) {
      Residue s = 0;
      for (const auto& chi : chars.characters) {
        s = arena.add(s, arena.mul(chi.values[g], chi.values[classes[h].inverse_class]));
      }
      const Residue expected =
          g == h ? arena.from_int(static_cast<long long>(table.order() / classes[g].size)) : 0;
      if (s != expected) {
        report.columns = false;
        break;
      }
    }
  }

  std::uint64_t sum = 0;
  const std::size_t id = table.identity_class();
  for (std::size_t i = 0; i < n_cls; ++i) {
    sum += chars.degrees[i] * chars.degrees[i];
    if (arena.from_int(static_cast<long long>(chars.degrees[i])) != chars.characters[i].values[id]) {
      return report;
    }
  }
  report.degrees = sum == table.order();
  return report;
}

}  // namespace klyachko
