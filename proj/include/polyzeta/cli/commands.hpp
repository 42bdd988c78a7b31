#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "polyzeta/errors.hpp"
#include "polyzeta/poly/even_polynomial.hpp"
#include "polyzeta/report/report.hpp"

namespace polyzeta {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

// Bad flag values or preconditions; maps to kExitUsage.
class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct GlobalOptions {
  bool no_timestamp = false;
  std::optional<std::string> out;  // stdout when empty
  int jobs = 0;                    // 0: number of processors
};

enum class GenFormat { Json, Csv };

// Coefficient dump of build(family, n), n in [1, 64].
int cmd_gen(Family family, int n, GenFormat format, const GlobalOptions& g, std::ostream& out);

// suite: structural | roots | integral | all.
int cmd_verify(const std::string& suite, int n_max, int digits, bool force, const GlobalOptions& g, std::ostream& out);

// Isolating intervals of the adapted polynomial plus interlacing with n-1.
int cmd_roots(Family family, int n, int width_bits, bool force, const GlobalOptions& g, std::ostream& out);

// The documents the commands emit, exposed for tests.
nlohmann::ordered_json gen_document(Family family, int n);
std::string gen_csv(Family family, int n);
ReportDocument verify_document(const std::string& suite, int n_max, int digits, bool force);
ReportDocument roots_document(Family family, int n, int width_bits, bool force);

}  // namespace polyzeta
