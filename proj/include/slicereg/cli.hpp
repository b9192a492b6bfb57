#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicereg::cli {

enum class OutputFormat { automatic, json, csv };

/// Tolerances and quadrature settings shared by every subcommand.
struct Config {
  double coeff_tol = 1e-12;    ///< trimming of input coefficients
  double boundary_tol = 1e-9;  ///< relative boundary tolerance for U sets
  double zero_tol = 1e-10;     ///< shared zero threshold for multiplicities
  double fd_step = 1e-5;       ///< central-difference step
  std::size_t nodes = 256;     ///< quadrature / sampling node count M
  OutputFormat format = OutputFormat::automatic;

  /// Throws io::ParseError naming the first invalid setting.
  void validate() const;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out` only when the subcommand succeeds; diagnostics go to `err`.
/// SLICEREG_TOL, when set, replaces the default zero tolerance.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

} // namespace slicereg::cli
