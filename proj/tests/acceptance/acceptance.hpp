#ifndef RINGCOVER_ACCEPTANCE_HPP
#define RINGCOVER_ACCEPTANCE_HPP

// Acceptance checks shared by the acceptance test binary and `ringcover selftest`.

#include <string>
#include <vector>

namespace ringcover::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Failure is listed in kKnownFailures; does not fail the run.
  bool known = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  /// Skip the N = 10^8 time/memory run.
  bool skip_large = false;
};

inline constexpr int kCriteria = 7;

Result run(int id, const Options& opts = {});

/// "[PASS] 3 title: detail (1.2 s)"
std::string format(const Result& r);

/// Runs every criterion, printing each line as it completes. Returns true
/// when every failure is a known one.
bool run_all(const Options& opts, std::vector<Result>* out = nullptr);

}  // namespace ringcover::acceptance

#endif  // RINGCOVER_ACCEPTANCE_HPP
