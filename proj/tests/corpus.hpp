// Small-graph corpora shared by the test suites.

#ifndef ZDG_TESTS_CORPUS_HPP_
#define ZDG_TESTS_CORPUS_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <zdg/graph.hpp>

namespace zdg::testing {

  //! Every connected labelled graph on exactly n vertices, in order of the
  //! edge bitmask over the pairs (0,1), (0,2), ..., (n-2,n-1).
  inline std::vector<Graph> connected_labelled_graphs(std::size_t n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        pairs.emplace_back(u, v);
      }
    }
    std::vector<Graph> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << pairs.size());
         ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) {
          edges.push_back(pairs[i]);
        }
      }
      auto g = Graph::from_edge_list(n, edges);
      if (is_connected(g)) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  //! One representative per isomorphism class of connected graphs on n
  //! vertices (the first labelled graph of its class).
  inline std::vector<Graph> connected_unlabelled_graphs(std::size_t n) {
    std::map<std::vector<std::size_t>, std::vector<Graph>> buckets;
    std::vector<Graph>                                     out;
    for (auto& g : connected_labelled_graphs(n)) {
      std::vector<std::size_t> degrees;
      for (std::size_t v = 0; v < n; ++v) {
        degrees.push_back(g.degree(v));
      }
      std::sort(degrees.begin(), degrees.end());
      auto& bucket = buckets[degrees];
      bool  seen   = false;
      for (auto const& h : bucket) {
        if (is_isomorphic(g, h)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        bucket.push_back(g);
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  inline std::vector<Graph> connected_unlabelled_graphs_up_to(std::size_t n) {
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= n; ++k) {
      auto part = connected_unlabelled_graphs(k);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  inline std::vector<Graph> connected_labelled_graphs_up_to(std::size_t n) {
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= n; ++k) {
      auto part = connected_labelled_graphs(k);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

}  // namespace zdg::testing

#endif  // ZDG_TESTS_CORPUS_HPP_
