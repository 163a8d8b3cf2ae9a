#include "cbgon/scan.hpp"

#include "cbgon/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cbgon {

namespace {

struct TaskResult {
  std::optional<std::size_t> best;
  std::vector<std::size_t> witness;
  std::uint64_t visited = 0;
};

class SubsetSearch {
 public:
  SubsetSearch(const Matrix& rows, std::uint64_t budget, std::atomic<std::uint64_t>& spent)
      : rows_(rows), budget_(budget), spent_(spent) {}

  TaskResult run(std::size_t first) {
    TaskResult out;
    result_ = &out;
    chosen_ = {first};
    RowSpace space(rows_.field(), rows_.cols());
    visit(out);
    if (!space.insert(rows_.row(first))) {
      out.best = 1;
      out.witness = chosen_;
      return out;
    }
    extend(space, first + 1);
    return out;
  }

 private:
  void visit(TaskResult& out) {
    ++out.visited;
    if (spent_.fetch_add(1) + 1 > budget_) {
      throw Error(ErrorCode::BudgetExceeded, "subset search exceeded its budget of " +
                                                 std::to_string(budget_) + " subsets");
    }
  }

  void extend(const RowSpace& space, std::size_t from) {
    TaskResult& out = *result_;
    for (std::size_t j = from; j < rows_.rows(); ++j) {
      const std::size_t size = chosen_.size() + 1;
      if (out.best && size >= *out.best) return;
      visit(out);
      RowSpace next = space;
      chosen_.push_back(j);
      if (!next.insert(rows_.row(j))) {
        out.best = size;
        out.witness = chosen_;
      } else {
        extend(next, j + 1);
      }
      chosen_.pop_back();
    }
  }

  const Matrix& rows_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& spent_;
  TaskResult* result_ = nullptr;
  std::vector<std::size_t> chosen_;
};

}  // namespace

long long cbconj_twist(const std::vector<unsigned>& degrees) {
  long long k = 0;
  for (std::size_t i = 2; i < degrees.size(); ++i) k += degrees[i];
  return k - static_cast<long long>(degrees.size()) - 1;
}

ScanResult cbconj_scan(const FiniteSubscheme& z, const std::vector<unsigned>& degrees, unsigned e,
                       const ScanOptions& options) {
  const std::size_t n = z.ambient_dim();
  if (degrees.size() != n || n < 2) {
    throw Error(ErrorCode::InvalidArgument, "expected n = " + std::to_string(n) + " degrees for a zero-dimensional CI in P^n");
  }
  if (degrees.front() < 1 || !std::is_sorted(degrees.begin(), degrees.end())) {
    throw Error(ErrorCode::DegreeOrderViolation, "degrees must satisfy 1 <= d_1 <= ... <= d_n");
  }
  if (e > degrees[1] - 1) {
    throw Error(ErrorCode::RangeViolation,
                "e = " + std::to_string(e) + " outside [0, d_2 - 1] = [0, " + std::to_string(degrees[1] - 1) + "]");
  }
  if (!z.is_reduced()) throw Error(ErrorCode::NonReducedSubscheme, "the scan searches reduced point sets");
  if (z.size() > options.max_points) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(z.size()) + " points exceed the subset budget of " +
                                               std::to_string(options.max_points));
  }

  ScanResult r;
  r.degrees = degrees;
  r.e = e;
  r.k = cbconj_twist(degrees);
  r.m = r.k + e + 2;
  r.bound = e + 1ULL;
  for (std::size_t i = 2; i < degrees.size(); ++i) r.bound *= degrees[i];

  const Matrix rows = evaluation_rows(z, r.m);
  const std::size_t count = z.size();
  std::vector<TaskResult> results(count);
  std::atomic<std::uint64_t> spent{0};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    SubsetSearch search(rows, options.node_budget, spent);
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        results[i] = search.run(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& t : results) {
    r.subsets_visited += t.visited;
    if (t.best && (!r.min_failing_degree || *t.best < *r.min_failing_degree)) {
      r.min_failing_degree = t.best;
      r.witness = t.witness;
    }
  }
  r.pass = !r.min_failing_degree || *r.min_failing_degree >= r.bound;
  return r;
}

}  // namespace cbgon
