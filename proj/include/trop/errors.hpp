#pragma once

#include <stdexcept>
#include <string>

namespace trop {

enum class errc {
    duplicate_ray,
    non_closed_under_faces,
    inconsistent_intersection,
    unknown_cone,
    unknown_ray,
    non_primitive_ray,
    not_interior,
    outside_domain,
    domain_mismatch,
    unbalanced_fundamental_class,
    invalid_cell,
    not_pure,
    not_combinatorially_principal,
    structurally_invalid,
    not_certified,
    non_generic_sample,
    out_of_range,
    invalid_marks,
    bad_exponents,
    schema_error,
    precondition,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw error(code, detail); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_ray: return "DuplicateRay";
        case errc::non_closed_under_faces: return "NonClosedUnderFaces";
        case errc::inconsistent_intersection: return "InconsistentIntersection";
        case errc::unknown_cone: return "UnknownCone";
        case errc::unknown_ray: return "UnknownRay";
        case errc::non_primitive_ray: return "NonPrimitiveRay";
        case errc::not_interior: return "NotInterior";
        case errc::outside_domain: return "OutsideDomain";
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::unbalanced_fundamental_class: return "UnbalancedFundamentalClass";
        case errc::invalid_cell: return "InvalidCell";
        case errc::not_pure: return "NotPure";
        case errc::not_combinatorially_principal: return "NotCombinatoriallyPrincipal";
        case errc::structurally_invalid: return "StructurallyInvalid";
        case errc::not_certified: return "NotCertified";
        case errc::non_generic_sample: return "NonGenericSample";
        case errc::out_of_range: return "OutOfRange";
        case errc::invalid_marks: return "InvalidMarks";
        case errc::bad_exponents: return "BadExponents";
        case errc::schema_error: return "SchemaError";
        case errc::precondition: return "PreconditionViolated";
    }
    return "UnknownError";
}

} // namespace trop
