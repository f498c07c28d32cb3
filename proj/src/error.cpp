#include "circtc/error.hpp"

namespace circtc {

std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::empty_generator_set: return "EmptyGeneratorSet";
    case errc::generator_out_of_range: return "GeneratorOutOfRange";
    case errc::duplicate_generator: return "DuplicateGenerator";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::not_a_subset: return "NotASubset";
    case errc::odd_order: return "OddOrder";
    case errc::even_order: return "EvenOrder";
    case errc::i_out_of_range: return "IOutOfRange";
    case errc::not_one_factorizable: return "NotOneFactorizable";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_a_generator: return "NotAGenerator";
    case errc::odd_cycle_length: return "OddCycleLength";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::verification_failed: return "VerificationFailed";
    case errc::rainbow_property_failed: return "RainbowPropertyFailed";
    case errc::missing_assignment: return "MissingAssignment";
    case errc::unknown_edge: return "UnknownEdge";
    case errc::improper_coloring: return "ImproperColoring";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::fixture_missing: return "FixtureMissing";
    case errc::mismatch_found: return "MismatchFound";
    case errc::io_failure: return "IoFailure";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

} // namespace circtc
