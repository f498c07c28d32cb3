#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circtc {

enum class errc {
    empty_generator_set,
    generator_out_of_range,
    duplicate_generator,
    k_out_of_range,
    not_a_subset,
    odd_order,
    even_order,
    i_out_of_range,
    not_one_factorizable,
    search_budget_exceeded,
    not_a_unit,
    not_a_generator,
    odd_cycle_length,
    precondition_failed,
    verification_failed,
    rainbow_property_failed,
    missing_assignment,
    unknown_edge,
    improper_coloring,
    instance_too_large,
    budget_exceeded,
    fixture_missing,
    mismatch_found,
    io_failure,
    parse_error,
};

std::string_view to_string(errc code) noexcept;

/// Base exception for every failure raised by the library. The code is
/// stable and machine-readable; the message is for humans.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace circtc
