#include "stir/stp.hpp"

#include <stdexcept>

namespace stir {

namespace {

// A value strictly inside a non-empty convex window, midpoints preferred.
Rat pick_inside(const ConvexSet& w) {
  if (w.is_empty()) throw std::logic_error("pick_inside: empty window");
  const Bound& lo = w.lo();
  const Bound& hi = w.hi();
  if (lo.kind == Bound::Finite && hi.kind == Bound::Finite) {
    if (lo.value == hi.value) return lo.value;  // both closed, or w were empty
    return (lo.value + hi.value) / 2;
  }
  if (hi.kind == Bound::Finite) return hi.value - 1;
  if (lo.kind == Bound::Finite) return lo.value + 1;
  return Rat(0);
}

}  // namespace

void StpNetwork::add_variable(const EndpointVar& v) {
  if (index_.count(v))
    throw std::invalid_argument("duplicate endpoint variable " + v.str());
  std::size_t n = vars_.size();
  // Grow the row-major matrix in place: new column per old row, new full row.
  std::vector<ConvexSet> grown((n + 1) * (n + 1), ConvexSet::universal());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grown[i * (n + 1) + j] = matrix_[i * n + j];
  matrix_ = std::move(grown);
  index_[v] = n;
  vars_.push_back(v);
  cell(n, n) = ConvexSet::singleton(Rat(0));
  closed_ = false;
}

bool StpNetwork::has_variable(const EndpointVar& v) const { return index_.count(v) > 0; }

void StpNetwork::add_edge(const EndpointVar& u, const EndpointVar& v, const ConvexSet& s) {
  std::size_t i = index_of(u), j = index_of(v);
  cell(i, j) = intersect(cell(i, j), s);
  cell(j, i) = intersect(cell(j, i), negate(s));
  closed_ = false;
}

void StpNetwork::add_interval(const std::string& id) {
  EndpointVar b = EndpointVar::begin(id), e = EndpointVar::end(id);
  if (has_variable(b) || has_variable(e))
    throw std::invalid_argument("duplicate interval " + id);
  add_variable(b);
  add_variable(e);
  add_edge(b, e, ConvexSet::positive());
  interval_order_.push_back(id);
}

bool StpNetwork::has_interval(const std::string& id) const {
  return has_variable(EndpointVar::begin(id));
}

void StpNetwork::add_role(const std::string& i, const std::string& j, const EndpointRole& r) {
  EndpointVar ib = EndpointVar::begin(i), ie = EndpointVar::end(i);
  EndpointVar jb = EndpointVar::begin(j), je = EndpointVar::end(j);
  add_edge(ib, jb, r.rbb);
  add_edge(ib, je, r.rbe);
  add_edge(ie, jb, r.reb);
  add_edge(ie, je, r.ree);
}

bool StpNetwork::closure() {
  std::size_t n = vars_.size();
  consistent_ = true;
  for (std::size_t k = 0; k < n && consistent_; ++k)
    for (std::size_t i = 0; i < n && consistent_; ++i) {
      if (cell(i, k).is_empty()) {
        consistent_ = false;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const ConvexSet& kj = cell(k, j);
        if (kj.is_empty()) {
          consistent_ = false;
          break;
        }
        ConvexSet tightened = intersect(cell(i, j), sum(cell(i, k), kj));
        if (tightened.is_empty()) {
          consistent_ = false;
          cell(i, j) = std::move(tightened);
          break;
        }
        cell(i, j) = std::move(tightened);
      }
    }
  if (consistent_)
    for (std::size_t i = 0; i < n * n; ++i)
      if (matrix_[i].is_empty()) consistent_ = false;
  closed_ = true;
  return consistent_;
}

bool StpNetwork::consistent() const {
  if (!closed_) throw std::logic_error("consistent() before closure()");
  return consistent_;
}

const ConvexSet& StpNetwork::edge(const EndpointVar& u, const EndpointVar& v) const {
  return cell(index_of(u), index_of(v));
}

std::vector<std::string> StpNetwork::intervals() const { return interval_order_; }

std::map<EndpointVar, Rat> StpNetwork::extract_solution() const {
  if (!closed_ || !consistent_)
    throw std::logic_error("extract_solution requires a closed consistent network");
  std::size_t n = vars_.size();
  std::map<EndpointVar, Rat> out;
  std::vector<Rat> fixed(n);
  for (std::size_t v = 0; v < n; ++v) {
    ConvexSet window = ConvexSet::universal();
    for (std::size_t u = 0; u < v; ++u)
      window = intersect(window, sum(ConvexSet::singleton(fixed[u]), cell(u, v)));
    fixed[v] = pick_inside(window);
    out[vars_[v]] = fixed[v];
  }
  return out;
}

std::set<PartitionRelation> StpNetwork::classify_pair(const std::string& i,
                                                      const std::string& j) const {
  if (!closed_ || !consistent_)
    throw std::logic_error("classify_pair requires a closed consistent network");
  EndpointRole m = pair_role(i, j);
  std::set<PartitionRelation> out;
  for (PartitionRelation p : {PartitionRelation::Precedes, PartitionRelation::Intersects,
                              PartitionRelation::Follows}) {
    EndpointRole pr = partition_role(p);
    if (!intersect(m.rbb, pr.rbb).is_empty() && !intersect(m.rbe, pr.rbe).is_empty() &&
        !intersect(m.reb, pr.reb).is_empty() && !intersect(m.ree, pr.ree).is_empty())
      out.insert(p);
  }
  return out;
}

EndpointRole StpNetwork::pair_role(const std::string& i, const std::string& j) const {
  EndpointVar ib = EndpointVar::begin(i), ie = EndpointVar::end(i);
  EndpointVar jb = EndpointVar::begin(j), je = EndpointVar::end(j);
  return {edge(ib, jb), edge(ib, je), edge(ie, jb), edge(ie, je)};
}

std::size_t StpNetwork::index_of(const EndpointVar& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::invalid_argument("unknown variable " + v.str());
  return it->second;
}

}  // namespace stir
