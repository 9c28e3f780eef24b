#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace radbound {

/// Invalid argument or parameter outside a family's admissible range.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A functional or bound that does not exist for the given potential
/// (divergent integral, unsupported family, ...).
class InapplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested eigenstate is not supported by the potential.
class StateAbsentError : public std::runtime_error {
public:
    StateAbsentError(int requested_nr, int ell, int zero_energy_count)
        : std::runtime_error(make_message(requested_nr, ell, zero_energy_count)),
          zero_energy_count_(zero_energy_count)
    {
    }

    int zero_energy_count() const noexcept { return zero_energy_count_; }

private:
    static std::string make_message(int nr, int ell, int count)
    {
        std::ostringstream os;
        os << "state absent: n_r=" << nr << ", ell=" << ell << " requested but the potential supports "
           << count << " bound state(s) at this ell";
        return os.str();
    }

    int zero_energy_count_;
};

/// Iterative solver failed; carries the bracket history for diagnosis.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<std::pair<double, double>> history = {})
        : std::runtime_error(what), history_(std::move(history))
    {
    }

    const std::vector<std::pair<double, double>>& bracket_history() const noexcept
    {
        return history_;
    }

private:
    std::vector<std::pair<double, double>> history_;
};

/// Root of a defining equation does not exist (classical radius below the
/// bottom of the well, no halo threshold, ...).
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace radbound
