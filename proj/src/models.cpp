#include "mprod/models.hpp"

#include "mprod/program.hpp"

namespace mprod {

  namespace {

    struct CompiledIdentity {
      TermProgram lhs;
      TermProgram rhs;
      std::size_t vars;
    };

    class ModelSearch {
     public:
      ModelSearch(Signature const&                                sig,
                  std::vector<Identity> const&                    base,
                  std::size_t                                     n,
                  std::function<bool(FiniteAlgebra const&)> const& visit)
          : sig_(sig), n_(n), visit_(visit) {
        for (auto const& id : base) {
          if (id.is_trivial()) {
            continue;
          }
          auto vars = id.variables();
          ids_.push_back({TermProgram(id.lhs(), vars),
                          TermProgram(id.rhs(), vars),
                          vars.size()});
        }
        for (OpIndex op = 0; op < sig.size(); ++op) {
          std::size_t cells = 1;
          for (unsigned i = 0; i < sig.arity(op); ++i) {
            cells *= n;
          }
          tables_.emplace_back(cells, kUndefined);
          for (std::size_t c = 0; c < cells; ++c) {
            cells_.push_back({op, c});
          }
        }
      }

      bool run() {
        return dfs(0);
      }

     private:
      Element lookup(OpIndex op, std::span<Element const> args) const {
        std::size_t idx = 0;
        for (auto a : args) {
          idx = idx * n_ + a;
        }
        return tables_[op][idx];
      }

      bool consistent() {
        auto look = [this](OpIndex op, std::span<Element const> args) {
          return lookup(op, args);
        };
        for (auto const& ci : ids_) {
          bool ok = for_each_tuple(n_, ci.vars, [&](std::span<Element const> vals) {
            Element l = ci.lhs.run_with(look, vals, stack_);
            if (l == kUndefined) {
              return true;
            }
            Element r = ci.rhs.run_with(look, vals, stack_);
            return r == kUndefined || l == r;
          });
          if (!ok) {
            return false;
          }
        }
        return true;
      }

      bool dfs(std::size_t pos) {
        if (pos == cells_.size()) {
          FiniteAlgebra A("model", sig_, n_, tables_);
          return visit_(A);
        }
        auto [op, cell] = cells_[pos];
        for (Element v = 0; v < n_; ++v) {
          tables_[op][cell] = v;
          if (consistent() && !dfs(pos + 1)) {
            return false;
          }
        }
        tables_[op][cell] = kUndefined;
        return true;
      }

      Signature const&                                sig_;
      std::size_t                                     n_;
      std::function<bool(FiniteAlgebra const&)> const& visit_;
      std::vector<CompiledIdentity>                   ids_;
      std::vector<std::vector<Element>>               tables_;
      std::vector<std::pair<OpIndex, std::size_t>>    cells_;
      std::vector<Element>                            stack_;
    };

  }  // namespace

  bool enumerate_models(Signature const&                                sig,
                        std::vector<Identity> const&                    base,
                        std::size_t                                     size,
                        std::function<bool(FiniteAlgebra const&)> const& visit) {
    if (size == 0) {
      return true;
    }
    ModelSearch search(sig, base, size, visit);
    return search.run();
  }

  std::vector<FiniteAlgebra> all_models(Signature const&             sig,
                                        std::vector<Identity> const& base,
                                        std::size_t                  size) {
    std::vector<FiniteAlgebra> out;
    enumerate_models(sig, base, size, [&](FiniteAlgebra const& A) {
      out.push_back(A);
      return true;
    });
    return out;
  }

  std::optional<Countermodel> countermodel_search(VarietySpec const& V,
                                                  Identity const&    id,
                                                  std::size_t        max_size) {
    std::optional<Countermodel> found;
    for (std::size_t n = 1; n <= max_size && !found; ++n) {
      enumerate_models(V.signature(), V.base(), n, [&](FiniteAlgebra const& A) {
        auto check = satisfies_identity(A, id);
        if (check.holds) {
          return true;
        }
        std::vector<std::vector<Element>> tables;
        for (OpIndex op = 0; op < A.signature().size(); ++op) {
          auto t = A.table(op);
          tables.emplace_back(t.begin(), t.end());
        }
        found = Countermodel{
            FiniteAlgebra(V.name() + "-model" + std::to_string(n),
                          A.signature(),
                          n,
                          std::move(tables)),
            *check.witness};
        return false;
      });
    }
    return found;
  }

}  // namespace mprod
