// Copyright 2026 The Lemma Forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lemma_forge/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lemma_forge/exact.hpp"
#include "parallel.hpp"

namespace lemma_forge {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// a * b with 0 * inf = 0.
double product(double a, double b) { return (a == 0 || b == 0) ? 0.0 : a * b; }

template <typename T>
std::vector<T> sum_over_deps(const ProofGraph& graph, const NodeMask& named) {
  std::vector<T> d(graph.size());
  for (LemmaIndex i = 1; i <= graph.size(); ++i) {
    if (named[i - 1] || graph.axiom(i)) {
      d[i - 1] = 1;
      continue;
    }
    T sum = 0;
    for (LemmaIndex j : graph.deps(i)) sum += d[j - 1];
    d[i - 1] = sum;
  }
  return d;
}

template <typename T>
std::vector<T> sum_over_uses(const ProofGraph& graph, const NodeMask& named) {
  std::vector<T> u(graph.size());
  for (auto i = static_cast<LemmaIndex>(graph.size()); i >= 1; --i) {
    if (named[i - 1]) {
      u[i - 1] = 1;
      continue;
    }
    T sum = 0;
    for (LemmaIndex j : graph.uses(i)) sum += u[j - 1];
    u[i - 1] = sum;
  }
  return u;
}

void check_mask(const ProofGraph& graph, const NodeMask& named) {
  if (named.size() != graph.size()) {
    throw std::invalid_argument("named mask size does not match graph");
  }
}

}  // namespace

void MetricParams::validate() const {
  if (!(r >= 0.0 && r <= 2.0)) {
    throw std::invalid_argument("q1r exponent must lie in [0, 2]");
  }
  if (!(damping > 0.0 && damping < 1.0)) {
    throw std::invalid_argument("damping factor must lie in (0, 1)");
  }
  if (!(pr_tolerance > 0.0)) {
    throw std::invalid_argument("PageRank tolerance must be positive");
  }
  if (pr_max_iters < 1) {
    throw std::invalid_argument("PageRank iteration cap must be positive");
  }
}

Metric parse_metric(std::string_view text, MetricParams& params) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower.starts_with("q1r:")) {
    const std::string arg = lower.substr(4);
    double r = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), r);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size() ||
        !(r >= 0.0 && r <= 2.0)) {
      throw std::invalid_argument("bad q1r exponent in '" + std::string(text) +
                                  "'");
    }
    params.r = r;
    return Metric::kQ1r;
  }
  static constexpr std::pair<std::string_view, Metric> kNames[] = {
      {"q1", Metric::kQ1},   {"q2", Metric::kQ2},   {"q3", Metric::kQ3},
      {"eq1", Metric::kEQ1}, {"eq2", Metric::kEQ2}, {"pr1", Metric::kPR1},
      {"pr2", Metric::kPR2}, {"pr3", Metric::kPR3}, {"pr4", Metric::kPR4},
      {"pr5", Metric::kPR5}};
  for (const auto& [name, metric] : kNames) {
    if (lower == name) return metric;
  }
  throw std::invalid_argument("unknown metric '" + std::string(text) + "'");
}

std::string metric_name(Metric metric, const MetricParams& params) {
  switch (metric) {
    case Metric::kQ1: return "q1";
    case Metric::kQ1r: {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, params.r);
      return "q1r:" + std::string(buf, res.ptr);
    }
    case Metric::kQ2: return "q2";
    case Metric::kQ3: return "q3";
    case Metric::kEQ1: return "eq1";
    case Metric::kEQ2: return "eq2";
    case Metric::kPR1: return "pr1";
    case Metric::kPR2: return "pr2";
    case Metric::kPR3: return "pr3";
    case Metric::kPR4: return "pr4";
    case Metric::kPR5: return "pr5";
  }
  return "?";
}

bool is_pagerank(Metric metric) {
  switch (metric) {
    case Metric::kPR1:
    case Metric::kPR2:
    case Metric::kPR3:
    case Metric::kPR4:
    case Metric::kPR5:
      return true;
    default:
      return false;
  }
}

bool uses_dependencies(Metric metric) {
  return !is_pagerank(metric) && metric != Metric::kEQ2;
}

bool uses_uses(Metric metric) {
  switch (metric) {
    case Metric::kQ1:
    case Metric::kQ1r:
    case Metric::kQ2:
    case Metric::kQ3:
      return true;
    default:
      return false;
  }
}

bool uses_chain(Metric metric) { return metric == Metric::kEQ2; }

ScoreVector compute_D(const ProofGraph& graph, const NodeMask& named) {
  check_mask(graph, named);
  return {"D", sum_over_deps<double>(graph, named)};
}

ScoreVector compute_U(const ProofGraph& graph, const NodeMask& named) {
  check_mask(graph, named);
  return {"U", sum_over_uses<double>(graph, named)};
}

ScoreVector compute_L(const ProofGraph& graph, const NodeMask& named) {
  check_mask(graph, named);
  std::vector<double> l(graph.size());
  for (LemmaIndex i = 1; i <= graph.size(); ++i) {
    if (named[i - 1] || graph.axiom(i)) {
      l[i - 1] = 1;
      continue;
    }
    double longest = 0;
    for (LemmaIndex j : graph.deps(i)) longest = std::max(longest, 1 + l[j - 1]);
    l[i - 1] = longest;
  }
  return {"L", std::move(l)};
}

std::vector<BigCount> compute_D_exact(const ProofGraph& graph,
                                      const NodeMask& named) {
  check_mask(graph, named);
  return sum_over_deps<BigCount>(graph, named);
}

std::vector<BigCount> compute_U_exact(const ProofGraph& graph,
                                      const NodeMask& named) {
  check_mask(graph, named);
  return sum_over_uses<BigCount>(graph, named);
}

double quality_score(Metric metric, double u, double d, double l,
                     std::uint32_t size, double r) {
  const double s = size;
  switch (metric) {
    case Metric::kQ1:
      return product(u, d) / s;
    case Metric::kQ1r:
      return product(std::pow(u, r), std::pow(d, 2.0 - r)) / s;
    case Metric::kQ2:
      return product(u, d) / (s * s);
    case Metric::kQ3: {
      // U*D / 1.1^S in log space; 1.1^S overflows for S above ~7400.
      static const double kLog11 = std::log(1.1);
      const double p = product(u, d);
      if (p == 0) return 0.0;
      if (std::isinf(u) || std::isinf(d)) return kInf;
      const double log_p = std::isfinite(p) ? std::log(p)
                                            : std::log(u) + std::log(d);
      return std::exp(log_p - s * kLog11);
    }
    case Metric::kEQ1:
      return d / s;
    case Metric::kEQ2:
      return l / s;
    default:
      throw std::invalid_argument("not a Q/EQ metric");
  }
}

ScoreVector quality(const ProofGraph& graph, const ScoreVector& D,
                    const ScoreVector& U, const ScoreVector& L, Metric metric,
                    const MetricParams& params) {
  if (is_pagerank(metric)) {
    throw std::invalid_argument("quality() does not compute PageRank metrics");
  }
  const std::size_t n = graph.size();
  auto need = [n](bool used, const ScoreVector& v, const char* what) {
    if (used && v.size() != n) {
      throw std::invalid_argument(std::string(what) +
                                  " vector does not match graph");
    }
  };
  need(uses_dependencies(metric), D, "D");
  need(uses_uses(metric), U, "U");
  need(uses_chain(metric), L, "L");

  ScoreVector out{metric_name(metric, params), std::vector<double>(n)};
  for (LemmaIndex i = 1; i <= n; ++i) {
    out.values[i - 1] = quality_score(
        metric, uses_uses(metric) ? U.at(i) : 0.0,
        uses_dependencies(metric) ? D.at(i) : 0.0,
        uses_chain(metric) ? L.at(i) : 0.0, graph.symbol_size(i), params.r);
  }
  return out;
}

ScoreVector pagerank(const ProofGraph& graph, const MetricParams& params,
                     RankDirection direction) {
  params.validate();
  const std::size_t n = graph.size();
  if (n == 0) throw std::invalid_argument("PageRank of an empty graph");
  const bool forward = direction == RankDirection::kForward;
  const double f = params.damping;
  const unsigned threads = params.threads;

  // Forward: j passes rank to each member of d(j), so i collects from u(i).
  // Reverse: j passes rank to each member of u(j), so i collects from d(i).
  auto out_links = [&](LemmaIndex j) {
    return forward ? graph.deps(j) : graph.uses(j);
  };
  auto in_links = [&](LemmaIndex i) {
    return forward ? graph.uses(i) : graph.deps(i);
  };

  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  std::vector<double> share(n);
  for (int iter = 0; iter < params.pr_max_iters; ++iter) {
    internal::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) {
        const auto degree = out_links(static_cast<LemmaIndex>(k + 1)).size();
        share[k] = degree == 0 ? 0.0 : rank[k] / static_cast<double>(degree);
      }
    });
    const double dangling = internal::blocked_sum(n, threads, [&](std::size_t k) {
      return out_links(static_cast<LemmaIndex>(k + 1)).empty() ? rank[k] : 0.0;
    });
    const double base = (1.0 - f) / static_cast<double>(n) +
                        f * dangling / static_cast<double>(n);
    internal::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) {
        double sum = 0.0;
        for (LemmaIndex j : in_links(static_cast<LemmaIndex>(k + 1))) {
          sum += share[j - 1];
        }
        next[k] = base + f * sum;
      }
    });
    const double change = internal::blocked_sum(
        n, threads, [&](std::size_t k) { return std::abs(next[k] - rank[k]); });
    rank.swap(next);
    if (change < params.pr_tolerance) break;
  }
  return {forward ? "pr1" : "pr3", std::move(rank)};
}

ScoreVector pr_quality(const ProofGraph& graph, const MetricParams& params,
                       Metric metric) {
  auto per_size = [&](ScoreVector v) {
    for (LemmaIndex i = 1; i <= graph.size(); ++i) {
      v.values[i - 1] /= graph.symbol_size(i);
    }
    return v;
  };
  ScoreVector out;
  switch (metric) {
    case Metric::kPR1:
      out = pagerank(graph, params, RankDirection::kForward);
      break;
    case Metric::kPR2:
      out = per_size(pagerank(graph, params, RankDirection::kForward));
      break;
    case Metric::kPR3:
      out = pagerank(graph, params, RankDirection::kReverse);
      break;
    case Metric::kPR4:
      out = per_size(pagerank(graph, params, RankDirection::kReverse));
      break;
    case Metric::kPR5: {
      out = pagerank(graph, params, RankDirection::kForward);
      const auto reverse = pagerank(graph, params, RankDirection::kReverse);
      for (std::size_t k = 0; k < out.size(); ++k) {
        out.values[k] += reverse.values[k];
      }
      out = per_size(std::move(out));
      break;
    }
    default:
      throw std::invalid_argument("not a PageRank metric");
  }
  out.metric_id = metric_name(metric, params);
  return out;
}

ScoreVector compute_metric(const ProofGraph& graph, const NodeMask& named,
                           Metric metric, const MetricParams& params) {
  params.validate();
  if (is_pagerank(metric)) return pr_quality(graph, params, metric);
  ScoreVector d, u, l;
  if (uses_dependencies(metric)) d = compute_D(graph, named);
  if (uses_uses(metric)) u = compute_U(graph, named);
  if (uses_chain(metric)) l = compute_L(graph, named);
  return quality(graph, d, u, l, metric, params);
}

}  // namespace lemma_forge
