#include "qcube/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qcube {

namespace {

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  double val;
};

SparseOperator from_triplets(int num_sites, std::vector<Triplet> trips) {
  SparseOperator op;
  op.num_sites = num_sites;
  op.dim = std::size_t{1} << num_sites;
  std::sort(trips.begin(), trips.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  op.row_ptr.assign(op.dim + 1, 0);
  op.col.reserve(trips.size());
  op.val.reserve(trips.size());
  for (const Triplet& t : trips) {
    ++op.row_ptr[t.row + 1];
    op.col.push_back(t.col);
    op.val.push_back(t.val);
  }
  for (std::size_t r = 0; r < op.dim; ++r) op.row_ptr[r + 1] += op.row_ptr[r];
  return op;
}

void check_sites(int num_sites) {
  if (num_sites < 1 || num_sites > kMaxSites)
    throw std::invalid_argument("operator builder: N out of range");
}

// Exponent of q in the k^{1/2}/k^{-1/2} sandwich around site i: half the
// signed weight of the leading bits minus half that of the trailing bits.
double sandwich_exponent(std::uint32_t x, int num_sites, int site) {
  const std::uint32_t lead_mask =
      site > 1 ? (((1u << (site - 1)) - 1u) << (num_sites - site + 1)) : 0u;
  const std::uint32_t trail_mask = (1u << (num_sites - site)) - 1u;
  const int lead_ones = std::popcount(x & lead_mask);
  const int trail_ones = std::popcount(x & trail_mask);
  const int lead_signed = (site - 1) - 2 * lead_ones;
  const int trail_signed = (num_sites - site) - 2 * trail_ones;
  return 0.5 * (lead_signed - trail_signed);
}

}  // namespace

double SparseOperator::entry(std::uint32_t row, std::uint32_t column) const {
  for (std::size_t k = row_ptr[row]; k < row_ptr[row + 1]; ++k)
    if (col[k] == column) return val[k];
  return 0.0;
}

void SparseOperator::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != dim || y.size() != dim)
    throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
  for (std::size_t r = 0; r < dim; ++r) {
    double sum = 0.0;
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) sum += val[k] * x[col[k]];
    y[r] = sum;
  }
}

SparseOperator coproduct_power(Generator g, int num_sites, DeformationParameter q) {
  check_sites(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  const double qq = q.value();
  std::vector<Triplet> trips;

  if (g == Generator::QSigmaZ) {
    trips.reserve(dim);
    for (std::uint32_t x = 0; x < dim; ++x) {
      const int signed_weight = num_sites - 2 * std::popcount(x);
      trips.push_back({x, x, std::pow(qq, signed_weight)});
    }
    return from_triplets(num_sites, trips);
  }

  const bool lowering = (g == Generator::SigmaMinus);
  trips.reserve(dim * static_cast<std::size_t>(num_sites) / 2);
  for (std::uint32_t x = 0; x < dim; ++x) {
    for (int site = 1; site <= num_sites; ++site) {
      const std::uint32_t bit = 1u << (num_sites - site);
      const bool occupied = (x & bit) != 0;
      // sigma^- flips 0 -> 1, sigma^+ flips 1 -> 0.
      if (occupied == lowering) continue;
      const std::uint32_t y = x ^ bit;
      trips.push_back({y, x, std::pow(qq, sandwich_exponent(x, num_sites, site))});
    }
  }
  return from_triplets(num_sites, trips);
}

SparseOperator build_Aq(int num_sites, DeformationParameter q) {
  check_sites(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  const double qq = q.value();

  // Explicit tensor sum: one entry per (vertex, site) pair.
  std::vector<Triplet> trips;
  trips.reserve(dim * static_cast<std::size_t>(num_sites));
  for (std::uint32_t x = 0; x < dim; ++x) {
    for (int site = 1; site <= num_sites; ++site) {
      const std::uint32_t bit = 1u << (num_sites - site);
      const std::uint32_t trail_mask = bit - 1u;
      const int trail_ones = std::popcount(x & trail_mask);
      const int exponent = site - num_sites + 2 * trail_ones;
      trips.push_back({x ^ bit, x, std::pow(qq, exponent)});
    }
  }
  SparseOperator aq = from_triplets(num_sites, trips);

  // Cross-check against the twisted-primitive product form.
  if (aq_construction_residual(num_sites, q) > 1e-12)
    throw std::logic_error("build_Aq: tensor-sum and coproduct constructions disagree");
  return aq;
}

double aq_construction_residual(int num_sites, DeformationParameter q) {
  check_sites(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  const double qq = q.value();
  const SparseOperator xminus = coproduct_power(Generator::SigmaMinus, num_sites, q);
  const SparseOperator xplus = coproduct_power(Generator::SigmaPlus, num_sites, q);
  const double sq = std::sqrt(qq);
  double residual = 0.0;
  for (std::uint32_t x = 0; x < dim; ++x) {
    for (int site = 1; site <= num_sites; ++site) {
      const std::uint32_t bit = 1u << (num_sites - site);
      const std::uint32_t y = x ^ bit;
      const int trail_ones = std::popcount(x & (bit - 1u));
      const double sum_form = std::pow(qq, site - num_sites + 2 * trail_ones);
      // K^{-1/2} is diagonal and acts on the column index.
      const double product_form =
          (sq * xminus.entry(x, y) + (1.0 / sq) * xplus.entry(x, y)) *
          std::pow(qq, -0.5 * (num_sites - 2 * std::popcount(y)));
      residual = std::max(residual, std::abs(product_form - sum_form));
    }
  }
  return residual;
}

void apply_Aq(int num_sites, DeformationParameter q, std::span<const double> x,
              std::span<double> y) {
  check_sites(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  if (x.size() != dim || y.size() != dim)
    throw std::invalid_argument("apply_Aq: dimension mismatch");
  const double qq = q.value();
  std::fill(y.begin(), y.end(), 0.0);
  for (std::uint32_t v = 0; v < dim; ++v) {
    const double amp = x[v];
    if (amp == 0.0) continue;
    for (int site = 1; site <= num_sites; ++site) {
      const std::uint32_t bit = 1u << (num_sites - site);
      const std::uint32_t trail_mask = bit - 1u;
      const int exponent = site - num_sites + 2 * std::popcount(v & trail_mask);
      y[v ^ bit] += std::pow(qq, exponent) * amp;
    }
  }
}

double edge_weight(const BitString& x, const BitString& y, DeformationParameter q) {
  if (hamming_distance(x, y) != 1)
    throw std::invalid_argument("edge_weight: vertices must be adjacent");
  const std::uint32_t diff = x.index ^ y.index;
  const int site = x.length - std::countr_zero(diff);
  const std::uint32_t trail_mask = (1u << (x.length - site)) - 1u;
  const int trail_ones = std::popcount(x.index & trail_mask);
  return std::pow(q.value(), site - x.length + 2 * trail_ones);
}

SparseOperator build_A(int num_sites) { return build_Aq(num_sites, DeformationParameter(1.0)); }

SparseOperator build_Astar(int num_sites) {
  check_sites(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  std::vector<Triplet> trips;
  trips.reserve(dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    trips.push_back({x, x, static_cast<double>(num_sites - 2 * std::popcount(x))});
  }
  return from_triplets(num_sites, trips);
}

namespace {

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", w);
  return buf;
}

std::string vertex_label(std::uint32_t idx, int num_sites) {
  return BitString(num_sites, idx).to_string();
}

}  // namespace

void export_graph(const SparseOperator& op, GraphFormat format, double q, std::ostream& os) {
  // Upper triangle (including the diagonal) covers each undirected edge once.
  struct Edge {
    std::uint32_t u, v;
    double w;
  };
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < op.dim; ++r)
    for (std::size_t k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k)
      if (op.col[k] >= r) edges.push_back({r, op.col[k], op.val[k]});

  switch (format) {
    case GraphFormat::Dot:
      os << "graph qcube {\n";
      for (const Edge& e : edges) {
        os << "  \"" << vertex_label(e.u, op.num_sites) << "\" -- \""
           << vertex_label(e.v, op.num_sites) << "\" [weight=" << format_weight(e.w) << "];\n";
      }
      os << "}\n";
      break;
    case GraphFormat::Json: {
      os << "{\"n\":" << op.num_sites << ",\"q\":" << format_weight(q) << ",\"vertices\":[";
      for (std::uint32_t v = 0; v < op.dim; ++v) {
        if (v) os << ",";
        os << "\"" << vertex_label(v, op.num_sites) << "\"";
      }
      os << "],\"edges\":[";
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ",";
        os << "{\"u\":\"" << vertex_label(edges[i].u, op.num_sites) << "\",\"v\":\""
           << vertex_label(edges[i].v, op.num_sites) << "\",\"w\":" << format_weight(edges[i].w)
           << "}";
      }
      os << "]}\n";
      break;
    }
    case GraphFormat::Csv:
      os << "u,v,w\n";
      for (const Edge& e : edges) {
        os << vertex_label(e.u, op.num_sites) << "," << vertex_label(e.v, op.num_sites) << ","
           << format_weight(e.w) << "\n";
      }
      break;
    default:
      throw std::invalid_argument("export_graph: unknown format");
  }
}

}  // namespace qcube
