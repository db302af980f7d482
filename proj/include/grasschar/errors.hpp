#pragma once

#include <stdexcept>
#include <string>

namespace grasschar {

// Exit-code categories used by the CLI:
//   2 = input/catalog error, 3 = unknown entity, 4 = contract violation.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unknown_entity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact
struct incompatible_monomials : contract_error {
    using contract_error::contract_error;
};
struct division_by_zero : contract_error {
    using contract_error::contract_error;
};

// symfun
struct odd_rank_no_euler : contract_error {
    using contract_error::contract_error;
};
struct not_expressible : contract_error {
    using contract_error::contract_error;
};

// charring
struct not_top_degree : contract_error {
    using contract_error::contract_error;
};
struct star_undefined : contract_error {
    using contract_error::contract_error;
};

// volumes
struct invalid_descriptor : input_error {
    using input_error::input_error;
};

// duality
struct singular_gram : contract_error {
    using contract_error::contract_error;
};
struct underdetermined_pairing : contract_error {
    using contract_error::contract_error;
};
struct singular_pairing : contract_error {
    using contract_error::contract_error;
};

// catalog
struct unknown_manifold : unknown_entity_error {
    using unknown_entity_error::unknown_entity_error;
};
struct no_data_for_degree : unknown_entity_error {
    using unknown_entity_error::unknown_entity_error;
};
struct unknown_relation : unknown_entity_error {
    using unknown_entity_error::unknown_entity_error;
};
struct infeasible_gysin : contract_error {
    using contract_error::contract_error;
};
struct unsupported_target : unknown_entity_error {
    using unknown_entity_error::unknown_entity_error;
};
struct catalog_error : input_error {
    using input_error::input_error;
};
struct parse_error : input_error {
    using input_error::input_error;
};

} // namespace grasschar
