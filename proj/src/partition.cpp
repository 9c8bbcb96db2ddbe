#include "mprod/partition.hpp"

#include <algorithm>
#include <map>

#include "mprod/error.hpp"

namespace mprod {

  DisjointSet::DisjointSet(std::size_t n) : parent_(n) {
    for (Element i = 0; i < n; ++i) {
      parent_[i] = i;
    }
  }

  Element DisjointSet::find(Element x) {
    Element root = x;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[x] != root) {
      Element next = parent_[x];
      parent_[x]   = root;
      x            = next;
    }
    return root;
  }

  bool DisjointSet::unite(Element a, Element b) {
    Element ra = find(a);
    Element rb = find(b);
    if (ra == rb) {
      return false;
    }
    if (rb < ra) {
      std::swap(ra, rb);
    }
    parent_[rb] = ra;
    return true;
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<Element> rep(n);
    for (Element i = 0; i < n; ++i) {
      rep[i] = i;
    }
    return Partition(std::move(rep));
  }

  Partition Partition::total(std::size_t n) {
    return Partition(std::vector<Element>(n, 0));
  }

  Partition Partition::from_blocks(std::size_t                              n,
                                   std::vector<std::vector<Element>> const& blocks) {
    std::vector<bool> seen(n, false);
    DisjointSet       ds(n);
    for (auto const& b : blocks) {
      if (b.empty()) {
        throw Error("partition block is empty");
      }
      for (auto e : b) {
        if (e >= n) {
          throw Error("partition element out of range");
        }
        if (seen[e]) {
          throw Error("partition blocks are not disjoint");
        }
        seen[e] = true;
        ds.unite(b.front(), e);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error("partition blocks do not cover the universe");
    }
    return from(ds);
  }

  Partition Partition::from_labels(std::vector<Element> const& labels) {
    std::map<Element, Element> first;
    std::vector<Element>       rep(labels.size());
    for (Element i = 0; i < labels.size(); ++i) {
      rep[i] = first.try_emplace(labels[i], i).first->second;
    }
    return Partition(std::move(rep));
  }

  Partition Partition::from(DisjointSet& ds) {
    std::vector<Element> rep(ds.size());
    for (Element i = 0; i < ds.size(); ++i) {
      rep[i] = ds.find(i);
    }
    return Partition(std::move(rep));
  }

  std::size_t Partition::num_blocks() const noexcept {
    std::size_t n = 0;
    for (Element i = 0; i < rep_.size(); ++i) {
      n += rep_[i] == i;
    }
    return n;
  }

  std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> out;
    auto                              idx = block_indices();
    for (Element i = 0; i < rep_.size(); ++i) {
      if (idx[i] == out.size()) {
        out.emplace_back();
      }
      out[idx[i]].push_back(i);
    }
    return out;
  }

  std::size_t Partition::block_index(Element x) const {
    return block_indices().at(x);
  }

  std::vector<std::size_t> Partition::block_indices() const {
    std::vector<std::size_t> idx(rep_.size());
    std::size_t              next = 0;
    for (Element i = 0; i < rep_.size(); ++i) {
      idx[i] = rep_[i] == i ? next++ : idx[rep_[i]];
    }
    return idx;
  }

  bool Partition::refines(Partition const& that) const {
    if (that.rep_.size() != rep_.size()) {
      throw Error("partition size mismatch");
    }
    for (Element i = 0; i < rep_.size(); ++i) {
      if (that.rep_[i] != that.rep_[rep_[i]]) {
        return false;
      }
    }
    return true;
  }

  Partition join(Partition const& p, Partition const& q) {
    if (p.universe_size() != q.universe_size()) {
      throw Error("partition size mismatch");
    }
    DisjointSet ds(p.universe_size());
    for (Element i = 0; i < p.universe_size(); ++i) {
      ds.unite(i, p.representative(i));
      ds.unite(i, q.representative(i));
    }
    return Partition::from(ds);
  }

  Partition meet(Partition const& p, Partition const& q) {
    if (p.universe_size() != q.universe_size()) {
      throw Error("partition size mismatch");
    }
    std::map<std::pair<Element, Element>, Element> first;
    std::vector<Element>                           labels(p.universe_size());
    for (Element i = 0; i < p.universe_size(); ++i) {
      labels[i] = first.try_emplace({p.representative(i), q.representative(i)}, i)
                      .first->second;
    }
    return Partition::from_labels(labels);
  }

  std::string block_to_string(std::vector<Element> const& block,
                              FiniteAlgebra const*        A) {
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += A != nullptr ? A->element_name(block[i]) : std::to_string(block[i]);
    }
    return out + "}";
  }

  std::string to_string(Partition const& p, FiniteAlgebra const* A) {
    std::string out = "{";
    auto        bs  = p.blocks();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += block_to_string(bs[i], A);
    }
    return out + "}";
  }

}  // namespace mprod
